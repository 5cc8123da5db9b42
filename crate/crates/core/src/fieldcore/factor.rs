//! Factorization in F_q[t]: square-free decomposition, distinct-degree splitting,
//! then Cantor–Zassenhaus equal-degree splitting driven by a seeded RNG.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Elem, FieldCtx};
use super::poly::Poly;
use crate::error::{Error, Result};

/// `unit * prod(f^e)` with monic irreducible `f`, sorted by (degree, integer encoding).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Elem,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self, ctx: &FieldCtx) -> Poly {
        let mut acc = Poly::constant(self.unit);
        for (f, e) in &self.factors {
            acc = ctx.poly_mul(&acc, &ctx.poly_pow(f, *e as u64));
        }
        acc
    }

    /// All monic divisors, sorted by (degree, integer encoding).
    pub fn divisors(&self, ctx: &FieldCtx) -> Vec<Poly> {
        let mut divs = vec![Poly::one()];
        for (f, e) in &self.factors {
            let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
            for d in &divs {
                let mut cur = d.clone();
                next.push(cur.clone());
                for _ in 0..*e {
                    cur = ctx.poly_mul(&cur, f);
                    next.push(cur.clone());
                }
            }
            divs = next;
        }
        divs.sort_by_key(|d| (d.degree(), ctx.poly_index(d)));
        divs
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldCtx {
    /// t^(q^k) mod f.
    fn frob_power_of_t(&self, k: usize, f: &Poly) -> Result<Poly> {
        let mut h = self.poly_rem(&Poly::t(), f)?;
        for _ in 0..k {
            h = self.poly_frob_mod(&h, f)?;
        }
        Ok(h)
    }

    /// Rabin's irreducibility test.
    pub fn poly_is_irreducible(&self, f: &Poly) -> bool {
        let n = match f.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let f = self.poly_monic(f);
        let t = Poly::t();
        let full = self.frob_power_of_t(n, &f).unwrap();
        if full != self.poly_rem(&t, &f).unwrap() {
            return false;
        }
        prime_divisors(n).into_iter().all(|r| {
            let h = self.frob_power_of_t(n / r, &f).unwrap();
            self.poly_coprime(&self.poly_sub(&h, &t), &f)
        })
    }

    /// Factor a nonzero polynomial into monic irreducibles.
    pub fn poly_factor(&self, a: &Poly) -> Result<Factorization> {
        if a.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let unit = a.leading();
        let monic = self.poly_monic(a);
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed());
        let mut factors: Vec<(Poly, u32)> = Vec::new();
        for (sqfree, mult) in self.squarefree_decomposition(&monic)? {
            for (g, d) in self.distinct_degree(&sqfree)? {
                for f in self.equal_degree(&g, d, &mut rng)? {
                    factors.push((f, mult));
                }
            }
        }
        // square-free layers are pairwise coprime, so no factor repeats
        factors.sort_by_key(|(f, _)| (f.degree(), self.poly_index(f)));
        Ok(Factorization { unit, factors })
    }

    /// Square-free decomposition of a monic polynomial: pairs (s_i, i) with
    /// a = prod s_i^i, each s_i square-free and pairwise coprime.
    pub fn squarefree_decomposition(&self, a: &Poly) -> Result<Vec<(Poly, u32)>> {
        let mut out = Vec::new();
        if a.is_constant() {
            return Ok(out);
        }
        let da = self.poly_derivative(a);
        if da.is_zero() {
            // a is a p-th power
            let root = self.poly_pth_root(a);
            for (s, i) in self.squarefree_decomposition(&root)? {
                out.push((s, i * self.p()));
            }
            return Ok(out);
        }
        let mut c = self.poly_gcd(a, &da)?;
        let mut w = self.poly_div_exact(a, &c)?;
        let mut i = 1u32;
        while !w.is_one() {
            let y = self.poly_gcd(&w, &c)?;
            let z = self.poly_div_exact(&w, &y)?;
            if !z.is_one() {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = self.poly_div_exact(&c, &w)?;
        }
        if !c.is_one() {
            let root = self.poly_pth_root(&c);
            for (s, k) in self.squarefree_decomposition(&root)? {
                out.push((s, k * self.p()));
            }
        }
        Ok(out)
    }

    /// For `a` with a' = 0: the polynomial b with b^p = a.
    fn poly_pth_root(&self, a: &Poly) -> Poly {
        let p = self.p() as usize;
        let cs = a.coeffs().iter().step_by(p).map(|&c| self.pth_root(c)).collect();
        Poly::new(cs)
    }

    /// Splits a monic square-free polynomial into products of same-degree irreducibles.
    fn distinct_degree(&self, f: &Poly) -> Result<Vec<(Poly, usize)>> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        let t = Poly::t();
        let mut h = self.poly_rem(&t, &rest)?;
        let mut d = 0;
        while let Some(deg) = rest.degree() {
            if deg < 2 * (d + 1) {
                if deg > 0 {
                    out.push((rest.clone(), deg));
                }
                break;
            }
            d += 1;
            h = self.poly_frob_mod(&h, &rest)?;
            let g = self.poly_gcd(&self.poly_sub(&h, &t), &rest)?;
            if !g.is_one() {
                rest = self.poly_div_exact(&rest, &g)?;
                h = self.poly_rem(&h, &rest)?;
                out.push((g, d));
            }
        }
        Ok(out)
    }

    /// Cantor–Zassenhaus: split a monic product of distinct degree-d irreducibles.
    fn equal_degree(&self, f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
        let n = f.degree().unwrap_or(0);
        if n == d {
            return Ok(vec![f.clone()]);
        }
        let q = self.q();
        loop {
            let a = Poly::new((0..n).map(|_| rng.gen_range(0..q)).collect());
            if a.is_constant() {
                continue;
            }
            let b = if self.p() == 2 {
                // absolute trace to F_2: sum of a^(2^k), k < m*d
                let mut acc = Poly::zero();
                let mut cur = self.poly_rem(&a, f)?;
                for _ in 0..(self.m() as usize * d) {
                    acc = self.poly_add(&acc, &cur);
                    cur = self.poly_mulmod(&cur, &cur, f)?;
                }
                acc
            } else {
                let e = (BigUint::from(q).pow(d as u32) - 1u32) / 2u32;
                self.poly_sub(&self.poly_powmod(&a, &e, f)?, &Poly::one())
            };
            if b.is_zero() {
                continue;
            }
            let g = self.poly_gcd(&b, f)?;
            if g.is_one() || g.degree() == f.degree() {
                continue;
            }
            let other = self.poly_div_exact(f, &g)?;
            let mut out = self.equal_degree(&g, d, rng)?;
            out.extend(self.equal_degree(&other, d, rng)?);
            return Ok(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t4_plus_t_over_f2() {
        let f = FieldCtx::new(2, 1).unwrap();
        let a = Poly::new(vec![0, 1, 0, 0, 1]);
        let fac = f.poly_factor(&a).unwrap();
        assert_eq!(
            fac.factors,
            vec![(Poly::new(vec![0, 1]), 1), (Poly::new(vec![1, 1]), 1), (Poly::new(vec![1, 1, 1]), 1)]
        );
        assert_eq!(fac.expand(&f), a);
    }

    #[test]
    fn t2_minus_t_over_f3() {
        let f = FieldCtx::new(3, 1).unwrap();
        let a = Poly::new(vec![0, 2, 1]);
        let fac = f.poly_factor(&a).unwrap();
        assert_eq!(fac.factors, vec![(Poly::t(), 1), (Poly::new(vec![2, 1]), 1)]);
    }

    #[test]
    fn irreducible_input_is_its_own_factor() {
        let f = FieldCtx::new(3, 1).unwrap();
        let a = Poly::new(vec![1, 0, 1]); // t^2 + 1, -1 is a non-square mod 3
        assert!(f.poly_is_irreducible(&a));
        assert_eq!(f.poly_factor(&a).unwrap().factors, vec![(a, 1)]);
    }

    #[test]
    fn repeated_and_pth_power_factors() {
        let f = FieldCtx::new(2, 2).unwrap();
        let x = Poly::t();
        let x1 = Poly::new(vec![1, 1]);
        let a = f.poly_mul(&f.poly_pow(&x, 3), &f.poly_pow(&x1, 4));
        let a = f.poly_scale(&a, 3);
        let fac = f.poly_factor(&a).unwrap();
        assert_eq!(fac.unit, 3);
        assert_eq!(fac.factors, vec![(x, 3), (x1, 4)]);
    }

    #[test]
    fn zero_is_rejected() {
        let f = FieldCtx::new(2, 1).unwrap();
        assert_eq!(f.poly_factor(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn divisors_of_t_squared_times_t_plus_one() {
        let f = FieldCtx::new(2, 1).unwrap();
        let a = f.poly_mul(&f.poly_pow(&Poly::t(), 2), &Poly::new(vec![1, 1]));
        let divs = f.poly_factor(&a).unwrap().divisors(&f);
        assert_eq!(divs.len(), 6);
        assert!(divs.iter().all(|d| f.poly_divides(d, &a)));
    }
}
