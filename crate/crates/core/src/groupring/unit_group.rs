use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};

const NOT_A_UNIT: u32 = u32::MAX;
const MAX_RESIDUES: u128 = 1 << 22;
const MAX_TABLE_ORDER: usize = 2048;

/// G_I = (F_q[t]/I)^x with elements listed as reduced residues in integer-encoding order.
pub struct UnitGroup {
    ctx: FieldCtx,
    modulus: Poly,
    elements: Vec<Poly>,
    /// residue integer encoding -> position in `elements`
    position: Vec<u32>,
    identity: usize,
    mul_table: Vec<u32>,
}

impl std::fmt::Debug for UnitGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("UnitGroup").field("modulus", &self.modulus).field("order", &self.elements.len()).finish()
    }
}

impl UnitGroup {
    pub fn new(ctx: &FieldCtx, modulus: &Poly) -> Result<Arc<Self>> {
        let deg = match modulus.degree() {
            None | Some(0) => return Err(Error::ConstantModulus),
            Some(d) => d,
        };
        if !modulus.is_monic() {
            return Err(Error::NotMonic);
        }
        let count = ctx.monic_count(deg);
        if count > MAX_RESIDUES {
            return Err(Error::ResidueSpaceTooLarge(count));
        }
        let mut position = vec![NOT_A_UNIT; count as usize];
        let mut elements = Vec::new();
        for k in 0..count {
            let r = ctx.poly_from_index(k);
            if !r.is_zero() && ctx.poly_coprime(&r, modulus) {
                position[k as usize] = elements.len() as u32;
                elements.push(r);
            }
        }
        let identity = position[1] as usize;
        let mut group = UnitGroup {
            ctx: ctx.clone(),
            modulus: modulus.clone(),
            elements,
            position,
            identity,
            mul_table: Vec::new(),
        };
        let n = group.elements.len();
        if n <= MAX_TABLE_ORDER {
            let mut table = vec![0u32; n * n];
            for i in 0..n {
                for j in i..n {
                    let k = group.mul_slow(i, j) as u32;
                    table[i * n + j] = k;
                    table[j * n + i] = k;
                }
            }
            group.mul_table = table;
        }
        Ok(Arc::new(group))
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Poly {
        &self.elements[i]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Whether two groups are the same G_I (same field, same modulus).
    pub fn same_as(&self, other: &UnitGroup) -> bool {
        std::ptr::eq(self, other) || (self.ctx == other.ctx && self.modulus == other.modulus)
    }

    /// Position of the class of `a` mod I, or `None` if `a` is not a unit mod I.
    pub fn class_of(&self, a: &Poly) -> Option<usize> {
        let r = self.ctx.poly_rem(a, &self.modulus).ok()?;
        let k = self.ctx.poly_index(&r) as usize;
        match self.position[k] {
            NOT_A_UNIT => None,
            i => Some(i as usize),
        }
    }

    fn mul_slow(&self, i: usize, j: usize) -> usize {
        let prod = self.ctx.poly_mulmod(&self.elements[i], &self.elements[j], &self.modulus).expect("nonzero modulus");
        self.position[self.ctx.poly_index(&prod) as usize] as usize
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let n = self.elements.len();
        if self.mul_table.is_empty() {
            self.mul_slow(i, j)
        } else {
            self.mul_table[i * n + j] as usize
        }
    }

    pub fn pow(&self, i: usize, mut e: u64) -> usize {
        let mut acc = self.identity;
        let mut base = i;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.pow(i, self.order() as u64 - 1)
    }

    /// Order of element `i` by repeated multiplication.
    pub fn element_order(&self, i: usize) -> u64 {
        let mut k = 1;
        let mut x = i;
        while x != self.identity {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }
}

/// |(A/I)^x| from the factorization of I: prod over P^e || I of (Q - 1) Q^(e-1), Q = q^deg P.
pub fn unit_group_order_formula(ctx: &FieldCtx, modulus: &Poly) -> Result<u128> {
    let fac = ctx.poly_factor(modulus)?;
    let q = ctx.q() as u128;
    Ok(fac
        .factors
        .iter()
        .map(|(p, e)| {
            let big_q = q.pow(p.degree().unwrap() as u32);
            (big_q - 1) * big_q.pow(e - 1)
        })
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_from_enumeration() {
        let f2 = FieldCtx::new(2, 1).unwrap();
        let g = UnitGroup::new(&f2, &Poly::new(vec![1, 1, 1])).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.elements(), &[Poly::one(), Poly::t(), Poly::new(vec![1, 1])]);
        let triv = UnitGroup::new(&f2, &Poly::new(vec![0, 1, 1])).unwrap();
        assert_eq!(triv.order(), 1);

        let f3 = FieldCtx::new(3, 1).unwrap();
        let i = f3.poly_mul(&Poly::t(), &Poly::new(vec![2, 1]));
        let g3 = UnitGroup::new(&f3, &i).unwrap();
        assert_eq!(g3.order(), 4);
        // residues f with f(0) != 0 and f(1) != 0
        let brute = (0..9u128)
            .map(|k| f3.poly_from_index(k))
            .filter(|r| f3.poly_eval(r, 0) != 0 && f3.poly_eval(r, 1) != 0)
            .count();
        assert_eq!(brute, 4);
    }

    #[test]
    fn multiplication_mod_modulus() {
        let f2 = FieldCtx::new(2, 1).unwrap();
        let g = UnitGroup::new(&f2, &Poly::new(vec![1, 1, 1])).unwrap();
        let t = g.class_of(&Poly::t()).unwrap();
        let t1 = g.class_of(&Poly::new(vec![1, 1])).unwrap();
        assert_eq!(g.mul(t, t), t1);
        assert_eq!(g.mul(t, t1), g.identity());
        assert_eq!(g.element_order(t), 3);
        assert_eq!(g.inverse(t), t1);
    }

    #[test]
    fn rejects_bad_modulus() {
        let f = FieldCtx::new(3, 1).unwrap();
        assert_eq!(UnitGroup::new(&f, &Poly::one()).unwrap_err(), Error::ConstantModulus);
        assert_eq!(UnitGroup::new(&f, &Poly::new(vec![1, 2])).unwrap_err(), Error::NotMonic);
    }

    #[test]
    fn class_of_non_unit() {
        let f = FieldCtx::new(3, 1).unwrap();
        let g = UnitGroup::new(&f, &Poly::new(vec![0, 2, 1])).unwrap();
        assert_eq!(g.class_of(&Poly::t()), None);
        assert_eq!(g.class_of(&Poly::new(vec![0, 0, 0, 1])), None);
        assert!(g.class_of(&Poly::new(vec![1, 0, 1])).is_some());
    }
}
