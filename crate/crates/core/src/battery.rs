//! The full verification battery, grouped by topic. Each group returns check records;
//! `run_all` concatenates them in a fixed order.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::carlitz::{check_example39, check_galois_action, check_psi_degree, check_torsion_factorization};
use crate::error::Result;
use crate::fieldcore::{FieldCtx, Poly};
use crate::heckelat::{
    check_alternating, check_bridge, check_hecke_mult, check_newton, check_phi_table, random_chain,
    random_coprime_chain, random_sublattice, Fault, Lattice,
};
use crate::lseries::{
    check_euler_agreement, check_mod_norm_factorization, check_noinf_relation, check_noinf_weights,
    check_norm_grouping, check_phi_agreement, check_tail, split_quadratic, StickCtx,
};
use crate::report::CheckRecord;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BatteryConfig {
    pub seed: u64,
    pub fault: Fault,
}

/// The groups of `run_all`, in order.
pub const GROUPS: &[&str] = &[
    "tail-law",
    "series-agreement",
    "phi-table",
    "norm-grouping",
    "mod-norm-factorization",
    "newton",
    "coprime-multiplicativity",
    "bridge",
    "no-infinity",
    "carlitz",
];

fn timed(f: impl FnOnce() -> Result<CheckRecord>) -> Result<CheckRecord> {
    let start = Instant::now();
    let r = f()?;
    Ok(r.with_timing(start.elapsed().as_millis() as u64))
}

fn field(p: u64, m: u32) -> FieldCtx {
    FieldCtx::new(p, m).expect("battery fields are valid")
}

fn moduli(ctx: &FieldCtx, max_deg: usize) -> Vec<Poly> {
    (1..=max_deg).flat_map(|d| ctx.monic_iter(d).collect::<Vec<_>>()).collect()
}

/// Every monic I of degree <= max_deg over each field, as evaluator contexts.
fn stick_grid(fields: &[(u64, u32)], max_deg: usize) -> Result<Vec<StickCtx>> {
    let mut out = Vec::new();
    for &(p, m) in fields {
        let ctx = field(p, m);
        for i in moduli(&ctx, max_deg) {
            out.push(StickCtx::new(&ctx, &i)?);
        }
    }
    Ok(out)
}

fn rng(cfg: &BatteryConfig, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(cfg.seed);
    r.set_stream(stream);
    r
}

const SMALL: [(u64, u32); 2] = [(2, 1), (3, 1)];

/// s_m = q^{m-d-1} N for d < m <= d + 4, q in {2, 3, 4}, deg I <= 3.
pub fn tail_law() -> Result<Vec<CheckRecord>> {
    let grid = stick_grid(&[(2, 1), (3, 1), (2, 2)], 3)?;
    grid.par_iter().map(|s| timed(|| Ok(check_tail(s)))).collect()
}

/// Direct against Euler product, generating against lattice phi series; q <= 3, deg I <= 2, n <= 3.
pub fn series_agreement() -> Result<Vec<CheckRecord>> {
    let grid = stick_grid(&SMALL, 2)?;
    let per: Vec<Vec<CheckRecord>> = grid
        .par_iter()
        .map(|s| {
            let mut out = vec![timed(|| Ok(check_euler_agreement(s)))?];
            for n in 1..=3 {
                out.push(timed(|| check_phi_agreement(s, n))?);
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// The closed phi(g, 2) values for q in {2, 3, 4, 5}.
pub fn phi_table() -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let start = Instant::now();
        let recs = check_phi_table(&field(p, m))?;
        let ms = start.elapsed().as_millis() as u64 / recs.len() as u64;
        out.extend(recs.into_iter().map(|r| r.with_timing(ms)));
    }
    Ok(out)
}

/// Theta_2 for I = t(t - 1), q in {3, 4, 5}.
pub fn norm_grouping() -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for (p, m) in [(3, 1), (2, 2), (5, 1)] {
        let ctx = field(p, m);
        let s = StickCtx::new(&ctx, &ctx.poly_mul(&Poly::t(), &ctx.poly_sub(&Poly::t(), &Poly::one())))?;
        debug_assert_eq!(*s.ideal(), split_quadratic(&s));
        out.push(timed(|| check_norm_grouping(&s))?);
    }
    Ok(out)
}

/// Theta_n against prod_j theta1(q^j) modulo Z N; q <= 3, deg I <= 2, n <= 3.
pub fn mod_norm_factorization() -> Result<Vec<CheckRecord>> {
    let grid = stick_grid(&SMALL, 2)?;
    let per: Vec<Vec<CheckRecord>> = grid
        .par_iter()
        .map(|s| (1..=3).map(|n| timed(|| check_mod_norm_factorization(s, n))).collect())
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// Newton relations on A^n and three seeded sublattices, plus the alternating identity.
pub fn newton(cfg: &BatteryConfig) -> Result<Vec<CheckRecord>> {
    let mut jobs = Vec::new();
    for (k, &(p, m)) in SMALL.iter().enumerate() {
        let ctx = field(p, m);
        let mut r = rng(cfg, 10 + k as u64);
        for n in 2..=3 {
            let mut lats = vec![Lattice::standard(n)];
            for _ in 0..3 {
                lats.push(random_sublattice(&ctx, n, 1, &mut r));
            }
            for x in [Poly::t(), ctx.irreducibles(2)[0].clone()] {
                for rr in 1..=4 {
                    jobs.push((ctx.clone(), x.clone(), n, rr, lats.clone()));
                }
            }
        }
    }
    let mut out: Vec<CheckRecord> = jobs
        .par_iter()
        .map(|(ctx, x, n, r, lats)| timed(|| check_newton(ctx, x, *n, *r, lats, cfg.fault)))
        .collect::<Result<_>>()?;
    for big_q in [2, 3, 4, 8, 9] {
        for h in 1..=6 {
            out.push(timed(|| Ok(check_alternating(h, big_q)))?);
        }
    }
    Ok(out)
}

/// T(J) T(J') = T(JJ') for ten seeded coprime pairs per (n, q), n <= 3, q <= 3.
pub fn coprime_multiplicativity(cfg: &BatteryConfig) -> Result<Vec<CheckRecord>> {
    let mut jobs = Vec::new();
    for (k, &(p, m)) in SMALL.iter().enumerate() {
        let ctx = field(p, m);
        let mut r = rng(cfg, 20 + k as u64);
        for n in 1..=3 {
            let lats = vec![Lattice::standard(n), random_sublattice(&ctx, n, 1, &mut r)];
            for _ in 0..10 {
                let j = random_chain(&ctx, n, 2, &mut r)?;
                let jbar = random_coprime_chain(&ctx, n, 2, &j.product(&ctx), &mut r)?;
                jobs.push((ctx.clone(), j, jbar, lats.clone()));
            }
        }
    }
    jobs.par_iter().map(|(ctx, j, jbar, lats)| timed(|| check_hecke_mult(ctx, j, jbar, lats))).collect()
}

/// Chain sums of d(J) against phi(g, n) for all monic g of degree <= 3, n <= 3, q <= 3.
pub fn bridge() -> Result<Vec<CheckRecord>> {
    let mut jobs = Vec::new();
    for &(p, m) in &SMALL {
        let ctx = field(p, m);
        for g in moduli(&ctx, 3) {
            for n in 1..=3 {
                jobs.push((ctx.clone(), g.clone(), n));
            }
        }
    }
    jobs.par_iter().map(|(ctx, g, n)| timed(|| check_bridge(ctx, g, *n))).collect()
}

/// The relation for Theta'_n and its weights at F = 1; q <= 3, deg I <= 2, n <= 3.
pub fn no_infinity() -> Result<Vec<CheckRecord>> {
    let grid = stick_grid(&SMALL, 2)?;
    let per: Vec<Vec<CheckRecord>> = grid
        .par_iter()
        .map(|s| {
            let mut out = vec![timed(|| check_noinf_weights(s))?];
            for n in 1..=3 {
                out.push(timed(|| check_noinf_relation(s, n))?);
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// Torsion factorization, deg Psi, the Galois action for deg f <= 3, q <= 3, and the split
/// examples t(t - 1) over F_3 and F_4.
pub fn carlitz() -> Result<Vec<CheckRecord>> {
    let mut jobs = Vec::new();
    for &(p, m) in &SMALL {
        let ctx = field(p, m);
        for f in moduli(&ctx, 3) {
            jobs.push((ctx.clone(), f));
        }
    }
    let per: Vec<Vec<CheckRecord>> = jobs
        .par_iter()
        .map(|(ctx, f)| {
            Ok(vec![
                timed(|| check_torsion_factorization(ctx, f))?,
                timed(|| check_psi_degree(ctx, f))?,
                timed(|| check_galois_action(ctx, f))?,
            ])
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<CheckRecord> = per.into_iter().flatten().collect();
    for (p, m) in [(3, 1), (2, 2)] {
        let ctx = field(p, m);
        let split = ctx.poly_mul(&Poly::t(), &ctx.poly_sub(&Poly::t(), &Poly::one()));
        let start = Instant::now();
        let recs = check_example39(&ctx, &split)?;
        let ms = start.elapsed().as_millis() as u64 / recs.len() as u64;
        out.extend(recs.into_iter().map(|r| r.with_timing(ms)));
    }
    Ok(out)
}

pub fn run_group(name: &str, cfg: &BatteryConfig) -> Result<Vec<CheckRecord>> {
    match name {
        "tail-law" => tail_law(),
        "series-agreement" => series_agreement(),
        "phi-table" => phi_table(),
        "norm-grouping" => norm_grouping(),
        "mod-norm-factorization" => mod_norm_factorization(),
        "newton" => newton(cfg),
        "coprime-multiplicativity" => coprime_multiplicativity(cfg),
        "bridge" => bridge(),
        "no-infinity" => no_infinity(),
        "carlitz" => carlitz(),
        other => Err(crate::Error::InvalidArgument(format!("unknown battery group {other}"))),
    }
}

pub fn run_all(cfg: &BatteryConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for g in GROUPS {
        out.extend(run_group(g, cfg)?);
    }
    Ok(out)
}
