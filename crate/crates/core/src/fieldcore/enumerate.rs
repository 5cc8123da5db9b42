//! Canonical enumeration of monic polynomials.

use super::field::FieldCtx;
use super::poly::Poly;

/// Iterator over monic polynomials of one degree in integer-encoding order.
pub struct MonicIter<'a> {
    ctx: &'a FieldCtx,
    degree: usize,
    next: u128,
    end: u128,
}

impl Iterator for MonicIter<'_> {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        if self.next >= self.end {
            return None;
        }
        let p = self.ctx.monic_from_index(self.next, self.degree);
        self.next += 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for MonicIter<'_> {}

impl FieldCtx {
    /// Number of monic polynomials of degree `d`, i.e. q^d.
    pub fn monic_count(&self, d: usize) -> u128 {
        (self.q() as u128).pow(d as u32)
    }

    pub fn monic_iter(&self, d: usize) -> MonicIter<'_> {
        MonicIter { ctx: self, degree: d, next: 0, end: self.monic_count(d) }
    }

    /// All monic polynomials of degree `d`, optionally only those coprime to `modulus`.
    pub fn monic_enum(&self, d: usize, coprime_to: Option<&Poly>) -> Vec<Poly> {
        match coprime_to {
            None => self.monic_iter(d).collect(),
            Some(m) => self.monic_iter(d).filter(|f| self.poly_coprime(f, m)).collect(),
        }
    }

    /// Monic irreducibles of degree `d`, canonical order.
    pub fn irreducibles(&self, d: usize) -> Vec<Poly> {
        self.monic_iter(d).filter(|f| self.poly_is_irreducible(f)).collect()
    }
}
