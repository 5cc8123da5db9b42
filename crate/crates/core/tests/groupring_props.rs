mod common;

use std::sync::Arc;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use workbench_core::fieldcore::FieldCtx;
use workbench_core::groupring::*;

const Q234: [(u64, u32); 3] = [(2, 1), (3, 1), (2, 2)];

fn group_of(f: usize, digits: &[u32], deg: usize) -> (FieldCtx, Arc<UnitGroup>) {
    let (p, m) = Q234[f];
    let ctx = field(p, m);
    let modulus = monic_from_digits(&ctx, digits, deg);
    let g = UnitGroup::new(&ctx, &modulus).unwrap();
    (ctx, g)
}

fn elem(g: &Arc<UnitGroup>, raw: &[i32]) -> GroupRingElem {
    let coeffs = (0..g.order()).map(|i| BigInt::from(raw.get(i).copied().unwrap_or(0))).collect();
    GroupRingElem::from_coeffs(g, coeffs).unwrap()
}

fn small_coeffs() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec(-6i32..=6, 0..32)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn order_matches_factorization_formula(f in 0usize..3, i in digits(4), deg in 1usize..=4) {
        let (ctx, g) = group_of(f, &i, deg);
        let formula = unit_group_order_formula(&ctx, g.modulus()).unwrap();
        prop_assert_eq!(g.order() as u128, formula);
        // closure and identity
        prop_assert!(g.element(g.identity()).is_one());
        for a in 0..g.order().min(12) {
            for b in 0..g.order().min(12) {
                let prod = ctx.poly_mulmod(g.element(a), g.element(b), g.modulus()).unwrap();
                prop_assert_eq!(g.class_of(&prod), Some(g.mul(a, b)));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in 0usize..3, i in digits(2), deg in 1usize..=2,
                   a in small_coeffs(), b in small_coeffs(), c in small_coeffs()) {
        let (_, g) = group_of(f, &i, deg);
        let (a, b, c) = (elem(&g, &a), elem(&g, &b), elem(&g, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        let n = GroupRingElem::norm(&g);
        prop_assert_eq!(&n * &a, n.scale(&a.augmentation()));
        prop_assert_eq!((&a * &b).augmentation(), a.augmentation() * b.augmentation());
    }

    #[test]
    fn character_orthogonality(f in 0usize..3, i in digits(3), deg in 1usize..=3) {
        let (_, g) = group_of(f, &i, deg);
        prop_assume!(g.order() <= 16);
        let table = characters(&g).unwrap();
        let chars = table.characters();
        prop_assert_eq!(chars.len(), g.order());
        for (x, chi) in chars.iter().enumerate() {
            for (y, psi) in chars.iter().enumerate() {
                let ip = table.inner_product(chi, psi);
                let expected = if x == y { g.order() as i64 } else { 0 };
                prop_assert_eq!(ip.as_integer(), Some(BigInt::from(expected)));
            }
        }
    }

    #[test]
    fn characters_are_multiplicative(f in 0usize..3, i in digits(3), deg in 1usize..=3,
                                     a in small_coeffs(), b in small_coeffs()) {
        let (_, g) = group_of(f, &i, deg);
        prop_assume!(g.order() <= 32);
        let table = characters(&g).unwrap();
        let (a, b) = (elem(&g, &a), elem(&g, &b));
        let ab = &a * &b;
        for chi in table.characters() {
            let lhs = char_apply(&table, chi, &ab).unwrap();
            let rhs = table.apply(chi, &a).mul(&table.apply(chi, &b));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn frob_degree_additive(f in 0usize..3, i in digits(2), deg in 1usize..=2,
                            a in small_coeffs(), b in small_coeffs(), da in 1usize..4, db in 1usize..4) {
        let (_, g) = group_of(f, &i, deg);
        let (a, b) = (elem(&g, &a), elem(&g, &b));
        prop_assume!(a.augmentation() != BigInt::from(0) && b.augmentation() != BigInt::from(0));
        let x = FrobPoly::monomial(a, da).try_add(&FrobPoly::constant(GroupRingElem::one(&g))).unwrap();
        let y = FrobPoly::monomial(b, db).try_add(&FrobPoly::constant(GroupRingElem::basis(&g, g.order() - 1))).unwrap();
        let (dx, dy) = (x.degree().unwrap(), y.degree().unwrap());
        prop_assert_eq!(frob_mul(&x, &y).unwrap().degree(), Some(dx + dy));
    }
}
