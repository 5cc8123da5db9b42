//! Dense univariate polynomials over F_q, i.e. elements of A = F_q[t].

use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::{Elem, FieldCtx};
use crate::error::{Error, Result};

/// Little-endian coefficients with no trailing zero. The zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, c) => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    /// The variable t.
    pub fn t() -> Self {
        Poly { coeffs: vec![0, 1] }
    }

    pub fn constant(c: Elem) -> Self {
        Self::new(vec![c])
    }

    /// Trims trailing zeros. Coefficients are not range-checked; use
    /// [`FieldCtx::poly_from_coeffs`] for untrusted input.
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// t^k.
    pub fn monomial(k: usize, c: Elem) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` stands for deg 0 = -infinity.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for size estimates.
    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
}

impl FieldCtx {
    pub fn poly_from_coeffs(&self, coeffs: &[u64]) -> Result<Poly> {
        let cs = coeffs.iter().map(|&c| self.check_element(c)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(cs))
    }

    /// Integer encoding `sum c_i q^i` of a polynomial.
    pub fn poly_index(&self, a: &Poly) -> u128 {
        let q = self.q() as u128;
        a.coeffs().iter().rev().fold(0u128, |acc, &c| acc * q + c as u128)
    }

    /// Inverse of [`poly_index`](Self::poly_index).
    pub fn poly_from_index(&self, mut k: u128) -> Poly {
        let q = self.q() as u128;
        let mut cs = Vec::new();
        while k > 0 {
            cs.push((k % q) as Elem);
            k /= q;
        }
        Poly::new(cs)
    }

    /// Monic polynomial of degree `d` whose lower coefficients are the base-q digits of `k`.
    pub fn monic_from_index(&self, k: u128, d: usize) -> Poly {
        let q = self.q() as u128;
        let mut k = k;
        let mut cs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            cs.push((k % q) as Elem);
            k /= q;
        }
        cs.push(1);
        Poly::new(cs)
    }

    pub fn poly_add(&self, a: &Poly, b: &Poly) -> Poly {
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() { (a, b) } else { (b, a) };
        let mut cs = long.coeffs.clone();
        for (i, &c) in short.coeffs.iter().enumerate() {
            cs[i] = self.add(cs[i], c);
        }
        Poly::new(cs)
    }

    pub fn poly_neg(&self, a: &Poly) -> Poly {
        Poly { coeffs: a.coeffs.iter().map(|&c| self.neg(c)).collect() }
    }

    pub fn poly_sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        let cs = (0..n).map(|i| self.sub(a.coeff(i), b.coeff(i))).collect();
        Poly::new(cs)
    }

    pub fn poly_scale(&self, a: &Poly, c: Elem) -> Poly {
        if c == 0 {
            return Poly::zero();
        }
        Poly { coeffs: a.coeffs.iter().map(|&x| self.mul(x, c)).collect() }
    }

    /// Multiply by t^k.
    pub fn poly_shift(&self, a: &Poly, k: usize) -> Poly {
        if a.is_zero() {
            return Poly::zero();
        }
        let mut cs = vec![0; k];
        cs.extend_from_slice(&a.coeffs);
        Poly { coeffs: cs }
    }

    pub fn poly_mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut cs = vec![0; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                cs[i + j] = self.add(cs[i + j], self.mul(x, y));
            }
        }
        Poly::new(cs)
    }

    pub fn poly_pow(&self, a: &Poly, mut e: u64) -> Poly {
        let mut base = a.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.poly_mul(&base, &base);
            }
        }
        acc
    }

    /// Long division `a = quot * b + rem` with `deg rem < deg b`.
    pub fn poly_divmod(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = self.inv(b.leading()).expect("nonzero leading coefficient");
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut quot = vec![0; rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = rem[k];
            if c == 0 {
                continue;
            }
            let factor = self.mul(c, inv_lead);
            quot[k - db] = factor;
            for (j, &bc) in b.coeffs.iter().enumerate() {
                let idx = k - db + j;
                rem[idx] = self.sub(rem[idx], self.mul(factor, bc));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn poly_rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        if a.coeffs.len() < b.coeffs.len() && !b.is_zero() {
            return Ok(a.clone());
        }
        self.poly_divmod(a, b).map(|(_, r)| r)
    }

    /// Exact quotient; errors if `b` does not divide `a`.
    pub fn poly_div_exact(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let (quot, rem) = self.poly_divmod(a, b)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision(format!("{a} / {b}")))
        }
    }

    pub fn poly_divides(&self, d: &Poly, a: &Poly) -> bool {
        !d.is_zero() && self.poly_rem(a, d).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn poly_monic(&self, a: &Poly) -> Poly {
        if a.is_zero() || a.is_monic() {
            return a.clone();
        }
        self.poly_scale(a, self.inv(a.leading()).unwrap())
    }

    /// Monic gcd.
    pub fn poly_gcd(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.poly_rem(&x, &y)?;
            x = y;
            y = r;
        }
        Ok(self.poly_monic(&x))
    }

    /// Extended Euclid: returns (g, s, u) with s*a + u*b = g, g monic.
    pub fn poly_xgcd(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly)> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut u0, mut u1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (quot, rem) = self.poly_divmod(&r0, &r1)?;
            let s2 = self.poly_sub(&s0, &self.poly_mul(&quot, &s1));
            let u2 = self.poly_sub(&u0, &self.poly_mul(&quot, &u1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            u0 = std::mem::replace(&mut u1, u2);
        }
        let inv = self.inv(r0.leading()).unwrap();
        Ok((self.poly_scale(&r0, inv), self.poly_scale(&s0, inv), self.poly_scale(&u0, inv)))
    }

    pub fn poly_coprime(&self, a: &Poly, b: &Poly) -> bool {
        self.poly_gcd(a, b).map(|g| g.is_one()).unwrap_or(false)
    }

    pub fn poly_derivative(&self, a: &Poly) -> Poly {
        let cs = a.coeffs.iter().enumerate().skip(1).map(|(i, &c)| self.mul(c, self.from_int(i as i64))).collect();
        Poly::new(cs)
    }

    pub fn poly_eval(&self, a: &Poly, x: Elem) -> Elem {
        a.coeffs.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    pub fn poly_mulmod(&self, a: &Poly, b: &Poly, m: &Poly) -> Result<Poly> {
        self.poly_rem(&self.poly_mul(a, b), m)
    }

    pub fn poly_powmod(&self, a: &Poly, e: &num_bigint::BigUint, m: &Poly) -> Result<Poly> {
        let mut acc = Poly::one();
        let base = self.poly_rem(a, m)?;
        for i in (0..e.bits()).rev() {
            acc = self.poly_mulmod(&acc, &acc, m)?;
            if e.bit(i) {
                acc = self.poly_mulmod(&acc, &base, m)?;
            }
        }
        self.poly_rem(&acc, m)
    }

    /// a^q mod m.
    pub fn poly_frob_mod(&self, a: &Poly, m: &Poly) -> Result<Poly> {
        self.poly_powmod(a, &num_bigint::BigUint::from(self.q()), m)
    }

    /// Substitute t -> t^k (the q-power Frobenius on A when k is a power of q).
    pub fn poly_inflate(&self, a: &Poly, k: usize) -> Poly {
        if a.is_zero() || k == 1 {
            return a.clone();
        }
        let mut cs = vec![0; (a.coeffs.len() - 1) * k + 1];
        for (i, &c) in a.coeffs.iter().enumerate() {
            cs[i * k] = c;
        }
        Poly::new(cs)
    }

    pub fn poly_product<'a>(&self, items: impl IntoIterator<Item = &'a Poly>) -> Poly {
        items.into_iter().fold(Poly::one(), |acc, p| self.poly_mul(&acc, p))
    }
}
