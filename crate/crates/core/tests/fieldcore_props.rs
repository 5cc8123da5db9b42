mod common;

use common::*;
use proptest::prelude::*;
use workbench_core::fieldcore::{FieldCtx, Poly};

fn rad(ctx: &FieldCtx, a: &Poly) -> Vec<Poly> {
    ctx.poly_factor(a).unwrap().factors.into_iter().map(|(p, _)| p).collect()
}

/// Inclusion-exclusion over squarefree divisors of rad(I).
fn coprime_count_oracle(ctx: &FieldCtx, modulus: &Poly, d: usize) -> i128 {
    let primes = rad(ctx, modulus);
    let q = ctx.q() as i128;
    let mut total = 0i128;
    for mask in 0u32..(1 << primes.len()) {
        let deg: usize =
            primes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.deg_or_zero()).sum();
        if deg <= d {
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            total += sign * q.pow((d - deg) as u32);
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(250))]

    #[test]
    fn divmod_reconstructs(f in 0usize..4, a in digits(9), b in digits(5)) {
        let (p, m) = SMALL_FIELDS[f];
        let ctx = field(p, m);
        let a = poly_from_digits(&ctx, &a);
        let b = poly_from_digits(&ctx, &b);
        prop_assume!(!b.is_zero());
        let (quo, rem) = ctx.poly_divmod(&a, &b).unwrap();
        prop_assert_eq!(ctx.poly_add(&ctx.poly_mul(&quo, &b), &rem), a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn factorization_remultiplies(f in 0usize..4, a in digits(8), seed in any::<u64>()) {
        let (p, m) = SMALL_FIELDS[f];
        let ctx = field(p, m).with_seed(seed);
        let a = poly_from_digits(&ctx, &a);
        prop_assume!(!a.is_zero());
        let fac = ctx.poly_factor(&a).unwrap();
        prop_assert_eq!(fac.expand(&ctx), a);
        for (g, _) in &fac.factors {
            prop_assert!(g.is_monic());
            prop_assert!(ctx.poly_is_irreducible(g));
        }
    }

    #[test]
    fn gcd_associative(f in 0usize..4, a in digits(6), b in digits(6), c in digits(6)) {
        let (p, m) = SMALL_FIELDS[f];
        let ctx = field(p, m);
        let (a, b, c) = (poly_from_digits(&ctx, &a), poly_from_digits(&ctx, &b), poly_from_digits(&ctx, &c));
        prop_assume!(!a.is_zero() && !c.is_zero());
        let left = ctx.poly_gcd(&ctx.poly_gcd(&a, &b).unwrap(), &c).unwrap();
        let right = ctx.poly_gcd(&a, &ctx.poly_gcd(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert!(left.is_monic());
        prop_assert!(ctx.poly_divides(&left, &a) && ctx.poly_divides(&left, &b) && ctx.poly_divides(&left, &c));
    }

    #[test]
    fn coprime_enumeration_matches_inclusion_exclusion(f in 0usize..3, i in digits(3), deg in 1usize..4, d in 0usize..5) {
        let (p, m) = SMALL_FIELDS[f];
        let ctx = field(p, m);
        let modulus = monic_from_digits(&ctx, &i, deg);
        let got = ctx.monic_enum(d, Some(&modulus)).len() as i128;
        prop_assert_eq!(got, coprime_count_oracle(&ctx, &modulus, d));
    }
}

#[test]
fn monic_counts_are_powers_of_q() {
    for (p, m) in SMALL_FIELDS {
        let ctx = field(p, m);
        let max_d = if ctx.q() > 4 { 4 } else { 6 };
        for d in 0..=max_d {
            let all = ctx.monic_enum(d, None);
            assert_eq!(all.len() as u128, (ctx.q() as u128).pow(d as u32));
            assert!(all.windows(2).all(|w| ctx.poly_index(&w[0]) < ctx.poly_index(&w[1])));
        }
    }
}
