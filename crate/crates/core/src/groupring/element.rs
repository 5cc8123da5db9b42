use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::unit_group::UnitGroup;
use crate::error::{Error, Result};

/// An element of Z[G_I], stored densely by unit position.
#[derive(Clone)]
pub struct GroupRingElem {
    group: Arc<UnitGroup>,
    coeffs: Vec<BigInt>,
}

impl PartialEq for GroupRingElem {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for GroupRingElem {}

impl fmt::Debug for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "[{}]", self.group.element(i))?;
            } else {
                write!(f, "{c}[{}]", self.group.element(i))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl serde::Serialize for GroupRingElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coeffs: Vec<(&crate::fieldcore::Poly, serde_json::Value)> =
            self.support().map(|(g, c)| (self.group.element(g), crate::json::bigint_value(c))).collect();
        let mut st = s.serialize_struct("GroupRingElem", 2)?;
        st.serialize_field("I", self.group.modulus())?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl GroupRingElem {
    pub fn zero(group: &Arc<UnitGroup>) -> Self {
        GroupRingElem { group: Arc::clone(group), coeffs: vec![BigInt::zero(); group.order()] }
    }

    /// The group element [g] for a unit position `g`.
    pub fn basis(group: &Arc<UnitGroup>, g: usize) -> Self {
        let mut e = Self::zero(group);
        e.coeffs[g] = BigInt::one();
        e
    }

    pub fn one(group: &Arc<UnitGroup>) -> Self {
        Self::basis(group, group.identity())
    }

    /// c * [1].
    pub fn from_int(group: &Arc<UnitGroup>, c: impl Into<BigInt>) -> Self {
        let mut e = Self::zero(group);
        e.coeffs[group.identity()] = c.into();
        e
    }

    /// The norm element N = sum over all g of [g].
    pub fn norm(group: &Arc<UnitGroup>) -> Self {
        GroupRingElem { group: Arc::clone(group), coeffs: vec![BigInt::one(); group.order()] }
    }

    pub fn from_coeffs(group: &Arc<UnitGroup>, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coefficients, got {}",
                group.order(),
                coeffs.len()
            )));
        }
        Ok(GroupRingElem { group: Arc::clone(group), coeffs })
    }

    pub fn group(&self) -> &Arc<UnitGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> &BigInt {
        &self.coeffs[g]
    }

    pub fn add_to_coeff(&mut self, g: usize, c: &BigInt) {
        self.coeffs[g] += c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Sum of coefficients, the image under Z[G] -> Z.
    pub fn augmentation(&self) -> BigInt {
        self.coeffs.iter().sum()
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
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(GroupRingElem { group: Arc::clone(&self.group), coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(GroupRingElem { group: Arc::clone(&self.group), coeffs })
    }

    pub fn add_assign_checked(&mut self, other: &Self) -> Result<()> {
        self.check(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    /// Convolution product in Z[G].
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.group);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[self.group.mul(i, j)] += a * b;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        GroupRingElem { group: Arc::clone(&self.group), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    /// Multiplication by the group element [g], a permutation of coefficients.
    pub fn translate(&self, g: usize) -> Self {
        let mut out = Self::zero(&self.group);
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                out.coeffs[self.group.mul(i, g)] += a;
            }
        }
        out
    }

    /// Canonical representative in Z[G]/Z*N: subtract c*N, c the identity coefficient.
    pub fn reduce_mod_norm(&self) -> Self {
        let c = self.coeffs[self.group.identity()].clone();
        GroupRingElem { group: Arc::clone(&self.group), coeffs: self.coeffs.iter().map(|a| a - &c).collect() }
    }

    /// Nonzero (position, coefficient) pairs in canonical order.
    pub fn support(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// First position where the two elements differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b)
    }
}

/// Exact product of two group-ring elements over the same G_I.
pub fn gr_mul(a: &GroupRingElem, b: &GroupRingElem) -> Result<GroupRingElem> {
    a.try_mul(b)
}

impl std::ops::Add for &GroupRingElem {
    type Output = GroupRingElem;
    fn add(self, rhs: Self) -> GroupRingElem {
        self.try_add(rhs).expect("group ring operands over different groups")
    }
}

impl std::ops::Sub for &GroupRingElem {
    type Output = GroupRingElem;
    fn sub(self, rhs: Self) -> GroupRingElem {
        self.try_sub(rhs).expect("group ring operands over different groups")
    }
}

impl std::ops::Mul for &GroupRingElem {
    type Output = GroupRingElem;
    fn mul(self, rhs: Self) -> GroupRingElem {
        self.try_mul(rhs).expect("group ring operands over different groups")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::{FieldCtx, Poly};

    fn g3() -> Arc<UnitGroup> {
        let f = FieldCtx::new(2, 1).unwrap();
        UnitGroup::new(&f, &Poly::new(vec![1, 1, 1])).unwrap()
    }

    #[test]
    fn t_times_t_is_t_plus_one() {
        let g = g3();
        let t = GroupRingElem::basis(&g, g.class_of(&Poly::t()).unwrap());
        let t1 = GroupRingElem::basis(&g, g.class_of(&Poly::new(vec![1, 1])).unwrap());
        assert_eq!(gr_mul(&t, &t).unwrap(), t1);
        assert_eq!(&t * &GroupRingElem::one(&g), t);
    }

    #[test]
    fn norm_absorbs_and_squares() {
        let g = g3();
        let n = GroupRingElem::norm(&g);
        for h in 0..g.order() {
            assert_eq!(&n * &GroupRingElem::basis(&g, h), n);
        }
        assert_eq!(n.augmentation(), BigInt::from(3));
        assert_eq!(&n * &n, n.scale(&BigInt::from(3)));
        let diff = &GroupRingElem::basis(&g, 1) - &GroupRingElem::basis(&g, 2);
        assert!(diff.augmentation().is_zero());
    }

    #[test]
    fn mismatched_groups_error() {
        let f = FieldCtx::new(2, 1).unwrap();
        let a = GroupRingElem::one(&g3());
        let other = UnitGroup::new(&f, &Poly::new(vec![1, 1, 0, 1])).unwrap();
        let b = GroupRingElem::one(&other);
        assert_eq!(gr_mul(&a, &b).unwrap_err(), Error::GroupMismatch);
    }

    #[test]
    fn reduction_mod_norm_is_canonical() {
        let g = g3();
        let a = GroupRingElem::from_coeffs(&g, vec![2.into(), 5.into(), (-1).into()]).unwrap();
        let shifted = &a + &GroupRingElem::norm(&g).scale(&BigInt::from(7));
        assert_eq!(a.reduce_mod_norm(), shifted.reduce_mod_norm());
        assert!(a.reduce_mod_norm().coeff(g.identity()).is_zero());
    }
}
