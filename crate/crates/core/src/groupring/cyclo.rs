use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer cyclotomic polynomial Phi_e, little-endian, by dividing x^e - 1 by Phi_d for d | e, d < e.
pub fn cyclotomic_poly(e: u32) -> Vec<BigInt> {
    assert!(e >= 1);
    let mut num: Vec<BigInt> = vec![BigInt::zero(); e as usize + 1];
    num[0] = BigInt::from(-1);
    num[e as usize] = BigInt::one();
    for d in (1..e).filter(|d| e.is_multiple_of(*d)) {
        num = div_monic_exact(&num, &cyclotomic_poly(d));
    }
    num
}

fn div_monic_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (db..a.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - db] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            rem[k - db + j] -= &c * bc;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "cyclotomic division must be exact");
    quot
}

/// Reduce an integer polynomial modulo a monic one, in place; returns length `deg(m)`.
fn reduce_monic(mut a: Vec<BigInt>, m: &[BigInt]) -> Vec<BigInt> {
    let dm = m.len() - 1;
    for k in (dm..a.len()).rev() {
        let c = std::mem::take(&mut a[k]);
        if c.is_zero() {
            continue;
        }
        for (j, mc) in m.iter().enumerate().take(dm) {
            a[k - dm + j] -= &c * mc;
        }
    }
    a.resize(dm, BigInt::zero());
    a
}

/// An element of Z[x]/(Phi_e), i.e. of Z[zeta_e], in the power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloInt {
    order: u32,
    coeffs: Vec<BigInt>,
}

impl serde::Serialize for CycloInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CycloInt", 2)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("coeffs", &self.coeffs.iter().map(crate::json::bigint_value).collect::<Vec<_>>())?;
        st.end()
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}*z{}^{k}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl CycloInt {
    /// Reduce a class in Z[x]/(x^e - 1), given by its e coefficients, into Z[x]/(Phi_e).
    pub fn from_cyclic_sum(order: u32, acc: Vec<BigInt>) -> Self {
        let phi = cyclotomic_poly(order);
        CycloInt { order, coeffs: reduce_monic(acc, &phi) }
    }

    pub fn from_int(order: u32, c: impl Into<BigInt>) -> Self {
        let mut acc = vec![BigInt::zero(); order as usize];
        acc[0] = c.into();
        Self::from_cyclic_sum(order, acc)
    }

    /// zeta_e^k.
    pub fn root_of_unity(order: u32, k: u32) -> Self {
        let mut acc = vec![BigInt::zero(); order as usize];
        acc[(k % order) as usize] = BigInt::one();
        Self::from_cyclic_sum(order, acc)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The integer value, if this element lies in Z.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CycloInt { order: self.order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        CycloInt { order: self.order, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let n = self.coeffs.len() + other.coeffs.len();
        let mut prod = vec![BigInt::zero(); n.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        CycloInt { order: self.order, coeffs: reduce_monic(prod, &cyclotomic_poly(self.order)) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn root_sums_vanish() {
        let z3 = CycloInt::root_of_unity(3, 1);
        let z3sq = CycloInt::root_of_unity(3, 2);
        let one = CycloInt::from_int(3, 1);
        assert!(one.add(&z3).add(&z3sq).is_zero());
        assert_eq!(z3.mul(&z3), z3sq);
        assert_eq!(z3.mul(&z3sq), one);
        // zeta_3 + zeta_3^2 = -1
        assert_eq!(z3.add(&z3sq).as_integer(), Some(BigInt::from(-1)));
    }

    #[test]
    fn order_one_is_the_integers() {
        let a = CycloInt::from_cyclic_sum(1, ints(&[7]));
        assert_eq!(a.as_integer(), Some(BigInt::from(7)));
    }
}
