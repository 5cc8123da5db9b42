//! The finite field F_q, q = p^m, in polynomial-basis representation.
//!
//! An element is the integer `sum c_i p^i` where `c_0 + c_1 x + ... + c_{m-1} x^{m-1}`
//! is its residue modulo the defining polynomial over F_p. The defining polynomial is
//! the smallest monic irreducible of degree m under that same integer encoding.
//! Multiplication goes through discrete log tables built once per context.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A field element, encoded as the base-p digit integer of its coordinates.
pub type Elem = u32;

/// Largest supported field order. Log tables are O(q).
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    /// exp[k] = g^k for a fixed primitive element g, doubled to avoid a modulo.
    exp: Vec<Elem>,
    /// log[a] for a != 0; log[0] is unused.
    log: Vec<u32>,
}

/// Shared, immutable field context. Cloning is cheap.
#[derive(Clone)]
pub struct FieldCtx {
    tables: Arc<Tables>,
    seed: u64,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.tables.p)
            .field("m", &self.tables.m)
            .field("modulus", &self.tables.modulus)
            .finish()
    }
}

impl serde::Serialize for FieldCtx {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FieldCtx", 3)?;
        st.serialize_field("p", &self.tables.p)?;
        st.serialize_field("m", &self.tables.m)?;
        st.serialize_field("modulus", &self.tables.modulus)?;
        st.end()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.tables.p == other.tables.p && self.tables.m == other.tables.m
    }
}

impl Eq for FieldCtx {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiply two F_p polynomials (dense, little-endian).
fn fp_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Remainder of `a` modulo a monic F_p polynomial.
fn fp_rem_monic(a: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = modulus.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (k, &c) in modulus.iter().enumerate() {
                let idx = shift + k;
                let sub = (lead * c as u64) % p as u64;
                r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn digits(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push((v % p as u64) as u32);
        v /= p as u64;
    }
    out
}

fn from_digits(d: &[u32], p: u32) -> u64 {
    d.iter().rev().fold(0u64, |acc, &c| acc * p as u64 + c as u64)
}

/// Monic F_p polynomial of degree `deg` whose lower coefficients are the digits of `k`.
fn fp_monic(k: u64, deg: usize, p: u32) -> Vec<u32> {
    let mut v = digits(k, p, deg);
    v.push(1);
    v
}

fn fp_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for dd in 1..=deg / 2 {
        let count = (p as u64).pow(dd as u32);
        for k in 0..count {
            let g = fp_monic(k, dd, p);
            if fp_rem_monic(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldCtx {
    /// Builds F_{p^m} with the lexicographically smallest monic irreducible modulus.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m < 1 {
            return Err(Error::InvalidDegree(m));
        }
        let q = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge { p, m, max: MAX_FIELD_ORDER });
        }
        let p32 = p as u32;
        let q = q as u32;
        let count = (p).pow(m);
        let modulus = (0..count)
            .map(|k| fp_monic(k, m as usize, p32))
            .find(|f| fp_irreducible(f, p32))
            .expect("an irreducible polynomial exists in every degree");

        let slow_mul = |a: u32, b: u32| -> u32 {
            let da = digits(a as u64, p32, m as usize);
            let db = digits(b as u64, p32, m as usize);
            let prod = fp_rem_monic(&fp_mul(&da, &db, p32), &modulus, p32);
            from_digits(&prod, p32) as u32
        };

        // Primitive element: the first g whose powers reach every nonzero element.
        let order = q - 1;
        let mut exp = Vec::new();
        for g in 1..q {
            let mut powers = Vec::with_capacity(order as usize);
            let mut x = 1u32;
            let mut ok = true;
            for k in 0..order {
                if k > 0 && x == 1 {
                    ok = false;
                    break;
                }
                powers.push(x);
                x = slow_mul(x, g);
            }
            if ok && x == 1 {
                exp = powers;
                break;
            }
        }
        let mut log = vec![0u32; q as usize];
        for (k, &v) in exp.iter().enumerate() {
            log[v as usize] = k as u32;
        }
        let doubled: Vec<Elem> = exp.iter().chain(exp.iter()).copied().collect();

        Ok(FieldCtx { tables: Arc::new(Tables { p: p32, m, q, modulus, exp: doubled, log }), seed: 0 })
    }

    /// Same field with a different seed for randomized factorization.
    pub fn with_seed(&self, seed: u64) -> Self {
        FieldCtx { tables: Arc::clone(&self.tables), seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn p(&self) -> u32 {
        self.tables.p
    }

    pub fn m(&self) -> u32 {
        self.tables.m
    }

    pub fn q(&self) -> u32 {
        self.tables.q
    }

    /// Defining polynomial over F_p, little-endian, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.tables.modulus
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let t = &*self.tables;
        if t.p == 2 {
            return a ^ b;
        }
        if t.m == 1 {
            let s = a + b;
            return if s >= t.p { s - t.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..t.m {
            let s = (a % t.p + b % t.p) % t.p;
            out += s * place;
            place *= t.p;
            a /= t.p;
            b /= t.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let t = &*self.tables;
        if t.p == 2 {
            return a;
        }
        if t.m == 1 {
            return if a == 0 { 0 } else { t.p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..t.m {
            out += ((t.p - a % t.p) % t.p) * place;
            place *= t.p;
            a /= t.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.tables;
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let t = &*self.tables;
        let order = t.q - 1;
        Some(t.exp[((order - t.log[a as usize]) % order) as usize])
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.tables;
        let order = (t.q - 1) as u64;
        let k = (t.log[a as usize] as u64 * (e % order)) % order;
        t.exp[k as usize]
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> Elem {
        k.rem_euclid(self.tables.p as i64) as Elem
    }

    pub fn is_element(&self, a: u64) -> bool {
        a < self.tables.q as u64
    }

    pub fn check_element(&self, a: u64) -> Result<Elem> {
        if self.is_element(a) {
            Ok(a as Elem)
        } else {
            Err(Error::InvalidElement(a))
        }
    }

    /// Unique p-th root, a^(q/p).
    pub fn pth_root(&self, a: Elem) -> Elem {
        self.pow(a, (self.tables.q / self.tables.p) as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_modulus_is_x() {
        let f = FieldCtx::new(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.q(), 2);
        let f3 = FieldCtx::new(3, 1).unwrap();
        assert_eq!(f3.q(), 3);
        assert_eq!(f3.mul(2, 2), 1);
    }

    #[test]
    fn f4_modulus_by_enumeration() {
        // monic quadratics over F_2: x^2, x^2+1, x^2+x, x^2+x+1; only the last has no root
        let quadratics: Vec<Vec<u32>> = (0..4).map(|k| fp_monic(k, 2, 2)).collect();
        let irreducible: Vec<_> =
            quadratics.iter().filter(|f| (0..2u32).all(|r| (f[0] + f[1] * r + r * r) % 2 != 0)).collect();
        assert_eq!(irreducible.len(), 1);
        let f = FieldCtx::new(2, 2).unwrap();
        assert_eq!(f.modulus(), irreducible[0].as_slice());
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(FieldCtx::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldCtx::new(3, 0).unwrap_err(), Error::InvalidDegree(0));
        assert!(matches!(FieldCtx::new(2, 17), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, m) in [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3), (5, 1)] {
            let f = FieldCtx::new(p, m).unwrap();
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                    assert_eq!(f.pow(a, (q - 1) as u64), 1);
                }
                assert_eq!(f.pow(f.pth_root(a), p), a);
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
