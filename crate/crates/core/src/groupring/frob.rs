use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::element::GroupRingElem;
use super::unit_group::UnitGroup;
use crate::error::{Error, Result};

/// A polynomial in a central Frobenius symbol F with Z[G_I] coefficients.
/// Little-endian in powers of F; no trailing zero coefficient.
#[derive(Clone)]
pub struct FrobPoly {
    group: Arc<UnitGroup>,
    coeffs: Vec<GroupRingElem>,
}

impl serde::Serialize for FrobPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(&self.coeffs)
    }
}

impl PartialEq for FrobPoly {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for FrobPoly {}

impl fmt::Debug for FrobPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FrobPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})F")?,
                _ => write!(f, "({c})F^{k}")?,
            }
        }
        Ok(())
    }
}

impl FrobPoly {
    pub fn zero(group: &Arc<UnitGroup>) -> Self {
        FrobPoly { group: Arc::clone(group), coeffs: Vec::new() }
    }

    pub fn constant(c: GroupRingElem) -> Self {
        let group = Arc::clone(c.group());
        Self::from_coeffs(&group, vec![c]).expect("single coefficient matches its group")
    }

    /// c * F^k.
    pub fn monomial(c: GroupRingElem, k: usize) -> Self {
        let group = Arc::clone(c.group());
        let mut coeffs = vec![GroupRingElem::zero(&group); k];
        coeffs.push(c);
        Self::from_coeffs(&group, coeffs).expect("coefficients share one group")
    }

    /// The symbol F itself.
    pub fn frobenius(group: &Arc<UnitGroup>) -> Self {
        Self::monomial(GroupRingElem::one(group), 1)
    }

    pub fn from_coeffs(group: &Arc<UnitGroup>, mut coeffs: Vec<GroupRingElem>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.group().same_as(group)) {
            return Err(Error::GroupMismatch);
        }
        while coeffs.last().is_some_and(GroupRingElem::is_zero) {
            coeffs.pop();
        }
        Ok(FrobPoly { group: Arc::clone(group), coeffs })
    }

    pub fn group(&self) -> &Arc<UnitGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &[GroupRingElem] {
        &self.coeffs
    }

    /// Coefficient of F^k (zero past the degree).
    pub fn coeff(&self, k: usize) -> GroupRingElem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| GroupRingElem::zero(&self.group))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.group.same_as(&other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect();
        Self::from_coeffs(&self.group, coeffs)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect();
        Self::from_coeffs(&self.group, coeffs)
    }

    /// Product with F central.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.group));
        }
        let mut coeffs = vec![GroupRingElem::zero(&self.group); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j].add_assign_checked(&a.try_mul(b)?)?;
            }
        }
        Self::from_coeffs(&self.group, coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.scale(c)).collect();
        Self::from_coeffs(&self.group, coeffs).expect("same group")
    }

    /// Multiply every coefficient by a group-ring element.
    pub fn mul_coeff(&self, c: &GroupRingElem) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|a| a.try_mul(c)).collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(&self.group, coeffs)
    }

    /// Multiply by F^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![GroupRingElem::zero(&self.group); k];
        coeffs.extend(self.coeffs.iter().cloned());
        FrobPoly { group: Arc::clone(&self.group), coeffs }
    }

    /// Substitute F = 1: the sum of all coefficients.
    pub fn eval_at_one(&self) -> GroupRingElem {
        let mut acc = GroupRingElem::zero(&self.group);
        for c in &self.coeffs {
            acc.add_assign_checked(c).expect("same group");
        }
        acc
    }

    /// Coefficientwise canonical reduction into (Z[G]/Z*N)[F].
    pub fn reduce_mod_norm(&self) -> Self {
        let coeffs = self.coeffs.iter().map(GroupRingElem::reduce_mod_norm).collect();
        Self::from_coeffs(&self.group, coeffs).expect("same group")
    }

    /// First F-power and unit position at which two polynomials differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find_map(|k| self.coeff(k).first_difference(&other.coeff(k)).map(|g| (k, g)))
    }
}

pub fn frob_mul(a: &FrobPoly, b: &FrobPoly) -> Result<FrobPoly> {
    a.try_mul(b)
}

pub fn frob_eval_at_one(a: &FrobPoly) -> GroupRingElem {
    a.eval_at_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::{FieldCtx, Poly};

    fn group() -> Arc<UnitGroup> {
        let f = FieldCtx::new(3, 1).unwrap();
        UnitGroup::new(&f, &Poly::new(vec![0, 2, 1])).unwrap()
    }

    #[test]
    fn expansion_of_two_linear_factors() {
        let g = group();
        let (a, b) = (1, 2);
        let fa = FrobPoly::frobenius(&g).try_add(&FrobPoly::constant(GroupRingElem::basis(&g, a))).unwrap();
        let fb = FrobPoly::frobenius(&g).try_add(&FrobPoly::constant(GroupRingElem::basis(&g, b))).unwrap();
        let prod = frob_mul(&fa, &fb).unwrap();
        let expected = FrobPoly::from_coeffs(
            &g,
            vec![
                GroupRingElem::basis(&g, g.mul(a, b)),
                &GroupRingElem::basis(&g, a) + &GroupRingElem::basis(&g, b),
                GroupRingElem::one(&g),
            ],
        )
        .unwrap();
        assert_eq!(prod, expected);
        let one = FrobPoly::constant(GroupRingElem::one(&g));
        assert_eq!(frob_mul(&prod, &one).unwrap(), prod);
    }

    #[test]
    fn eval_at_one_sums_coefficients() {
        let g = group();
        let n1 = GroupRingElem::basis(&g, 1);
        let p = FrobPoly::from_coeffs(&g, vec![GroupRingElem::zero(&g), n1.clone(), GroupRingElem::one(&g)]).unwrap();
        assert_eq!(frob_eval_at_one(&p), &GroupRingElem::one(&g) + &n1);
    }

    #[test]
    fn trailing_zeros_trimmed_and_degree_additive() {
        let g = group();
        let p = FrobPoly::from_coeffs(&g, vec![GroupRingElem::one(&g), GroupRingElem::zero(&g)]).unwrap();
        assert_eq!(p.degree(), Some(0));
        let x = FrobPoly::monomial(GroupRingElem::from_int(&g, 2), 3);
        let y = FrobPoly::monomial(GroupRingElem::basis(&g, 2), 2);
        assert_eq!(frob_mul(&x, &y).unwrap().degree(), Some(5));
    }
}
