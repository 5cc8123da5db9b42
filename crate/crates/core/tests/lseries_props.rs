mod common;

use common::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use workbench_core::fieldcore::FieldCtx;
use workbench_core::groupring::{characters, GroupRingElem};
use workbench_core::heckelat::{phi_count, PhiMethod};
use workbench_core::lseries::*;

const Q234: [(u64, u32); 3] = [(2, 1), (3, 1), (2, 2)];

fn stick(f: usize, digits: &[u32], deg: usize) -> StickCtx {
    let (p, m) = Q234[f];
    let ctx = field(p, m);
    let ideal = monic_from_digits(&ctx, digits, deg);
    StickCtx::new(&ctx, &ideal).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tail_law(f in 0usize..3, i in digits(3), deg in 1usize..=3) {
        let s = stick(f, &i, deg);
        let st = stickelberger_q(&s, 4);
        prop_assert!(st.tail.ok, "{:?}", st.tail.violations);
        // augmentation of s_m counts monics of degree m coprime to I
        let e = euler_series(&s, s.d() + 2, SeriesMethod::Direct);
        for m in 0..=s.d() + 2 {
            let count = s.ctx().monic_enum(m, Some(s.ideal())).len();
            prop_assert_eq!(e.coeff(m).augmentation(), BigInt::from(count));
        }
    }

    #[test]
    fn euler_methods_agree(f in 0usize..3, i in digits(2), deg in 1usize..=2) {
        let s = stick(f, &i, deg);
        prop_assert_eq!(euler_series(&s, 6, SeriesMethod::Direct), euler_series(&s, 6, SeriesMethod::EulerProduct));
    }

    #[test]
    fn phi_augmentation_matches_sublattice_counts(f in 0usize..2, i in digits(2), deg in 1usize..=2, n in 1usize..=3) {
        let s = stick(f, &i, deg);
        let order = (n * s.d() + 2).min(4);
        let c = phi_series(&s, n, order, PhiSeriesMethod::Generating).unwrap();
        for m in 0..=order.min(3) {
            let direct: BigInt = s
                .ctx()
                .monic_enum(m, Some(s.ideal()))
                .iter()
                .map(|g| phi_count(s.ctx(), g, n, PhiMethod::Enumerate).unwrap())
                .sum();
            prop_assert_eq!(c.coeff(m).augmentation(), direct);
        }
    }

    #[test]
    fn nontrivial_characters_kill_the_tail(f in 0usize..3, i in digits(3), deg in 1usize..=3) {
        let s = stick(f, &i, deg);
        prop_assume!(s.group().order() <= 64);
        let table = characters(s.group()).unwrap();
        for chi in table.characters() {
            let l = char_l_poly(&s, &table, chi).unwrap();
            prop_assert!(l.tail_vanishes);
            if chi.is_trivial() {
                for (i, v) in l.values.iter().enumerate() {
                    let count = s.ctx().monic_enum(i, Some(s.ideal())).len();
                    prop_assert_eq!(v.as_integer(), Some(BigInt::from(count)));
                }
            }
        }
    }
}

#[test]
fn identity_grid_small() {
    for (p, m) in [(2, 1), (3, 1)] {
        let ctx = FieldCtx::new(p, m).unwrap();
        for deg in 1..=2 {
            for ideal in ctx.monic_iter(deg) {
                let s = StickCtx::new(&ctx, &ideal).unwrap();
                for r in verify_identities(&s, 3).unwrap() {
                    assert!(r.passed(), "{}: {}", r.check_id, r.witness);
                }
            }
        }
    }
}

#[test]
fn norm_grouping_for_larger_fields() {
    for (p, m) in [(2, 2), (5, 1)] {
        let ctx = FieldCtx::new(p, m).unwrap();
        let s = StickCtx::new(
            &ctx,
            &ctx.poly_mul(
                &workbench_core::fieldcore::Poly::t(),
                &ctx.poly_sub(&workbench_core::fieldcore::Poly::t(), &workbench_core::fieldcore::Poly::one()),
            ),
        )
        .unwrap();
        assert!(check_norm_grouping(&s).unwrap().passed());
        let th = theta_n(&s, 2, PhiSeriesMethod::Lattice).unwrap();
        assert_eq!(th.coeff(2), GroupRingElem::one(s.group()));
    }
}
