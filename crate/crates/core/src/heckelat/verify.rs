use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::enumerate::{for_each_sublattice, local_series_coeff, phi_count, PhiMethod};
use super::invariants::InvariantType;
use super::lattice::{hnf_from_generators, mat_mul, Lattice, PolyMatrix};
use super::operators::{for_each_subspace, gauss_binom, sigma_lattices, HeckeOp, LatticeSum, ResidueField};
use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};

/// Push-mode Newton checks materialize at most this many lattice terms per test lattice.
pub const NEWTON_PUSH_LIMIT: u64 = 400_000;

/// (-1)^j Q^{j(j-1)/2}.
pub fn newton_coefficient(j: usize, big_q: &BigInt) -> BigInt {
    let mag = num_traits::pow(big_q.clone(), j * j.saturating_sub(1) / 2);
    if j.is_multiple_of(2) {
        mag
    } else {
        -mag
    }
}

/// sum_{j=0}^{h} (-1)^j Q^{j(j-1)/2} C(h, h-j)_Q, which vanishes for h >= 1.
pub fn alternating_identity(h: usize, big_q: &BigInt) -> BigInt {
    (0..=h).map(|j| newton_coefficient(j, big_q) * gauss_binom(h as i64, (h - j) as i64, big_q)).sum()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    /// Replace the sigma_1 coefficient -1 by -2.
    NewtonSigmaOne,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NewtonMode {
    /// Materialize P(N) as a lattice sum.
    Push,
    /// Evaluate the coefficient of P(N) at one target per class of its image in N/xN.
    Pull,
}

#[derive(Clone, Debug, Serialize)]
pub struct NewtonWitness {
    pub test_lattice: Lattice,
    pub target: Lattice,
    #[serde(serialize_with = "crate::json::bigint")]
    pub coefficient: BigInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct NewtonVerdict {
    pub passed: bool,
    pub modes: Vec<NewtonMode>,
    pub terms_evaluated: u64,
    pub alternating_ok: bool,
    pub witness: Option<NewtonWitness>,
}

fn coefficients(n: usize, r: usize, big_q: &BigInt, fault: Fault) -> Vec<BigInt> {
    (0..=n.min(r))
        .map(|j| match (j, fault) {
            (1, Fault::NewtonSigmaOne) => BigInt::from(-2),
            _ => newton_coefficient(j, big_q),
        })
        .collect()
}

/// Number of lattice terms the push evaluation of P(N) would produce.
pub fn newton_push_size(n: usize, r: usize, big_q: &BigInt) -> BigInt {
    (0..=n.min(r)).map(|j| gauss_binom(n as i64, j as i64, big_q) * local_series_coeff(big_q, n, r - j)).sum()
}

fn newton_push(ctx: &FieldCtx, x: &Poly, r: usize, lat: &Lattice, coeffs: &[BigInt]) -> Result<(LatticeSum, u64)> {
    let mut total = LatticeSum::new();
    let mut terms = 0u64;
    for (j, c) in coeffs.iter().enumerate() {
        let c = c.to_i64().ok_or_else(|| Error::InvalidArgument("coefficient overflow".into()))?;
        let g = ctx.poly_pow(x, (r - j) as u64);
        for mid in sigma_lattices(ctx, x, j, lat)? {
            for_each_sublattice(ctx, &mid, &g, &mut |l| {
                terms += 1;
                total.add_term(l, c);
            })?;
        }
    }
    Ok((total, terms))
}

/// Targets of P(N): one sublattice of x-length r for each proper subspace image in N/xN.
/// The coefficient of a target M in P(N) only depends on (M + xN)/xN, because every lattice
/// in sigma_j(N) contains xN.
pub fn newton_class_targets(ctx: &FieldCtx, x: &Poly, r: usize, lat: &Lattice) -> Result<Vec<Lattice>> {
    let rf = ResidueField::new(ctx, x)?;
    let n = lat.rank();
    let mut out = Vec::new();
    let mut err = None;
    for h in 1..=n.min(r) {
        for_each_subspace(&rf, n, n - h, &mut |basis| {
            let pivots: Vec<usize> =
                basis.iter().map(|row| row.iter().position(|e| !e.is_zero()).expect("RREF row")).collect();
            let mut coords: PolyMatrix = basis.clone();
            let mut first = true;
            for k in (0..n).filter(|k| !pivots.contains(k)) {
                let a = if first { r - h + 1 } else { 1 };
                first = false;
                let mut row = vec![Poly::zero(); n];
                row[k] = ctx.poly_pow(x, a as u64);
                coords.push(row);
            }
            match hnf_from_generators(ctx, &mat_mul(ctx, &coords, lat.rows()), n) {
                Ok(l) => out.push(l),
                Err(e) => err = Some(e),
            }
        });
    }
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

fn newton_pull(
    ctx: &FieldCtx,
    x: &Poly,
    r: usize,
    lat: &Lattice,
    coeffs: &[BigInt],
) -> Result<(Vec<(Lattice, BigInt)>, u64)> {
    let sigmas: Vec<Vec<Lattice>> = (0..coeffs.len()).map(|j| sigma_lattices(ctx, x, j, lat)).collect::<Result<_>>()?;
    let dx = x.deg_or_zero();
    let mut out = Vec::new();
    let mut terms = 0u64;
    for target in newton_class_targets(ctx, x, r, lat)? {
        if target.colength() != lat.colength() + r * dx {
            return Err(Error::InvalidArgument("class representative has wrong colength".into()));
        }
        let mut coef = BigInt::zero();
        for (j, c) in coeffs.iter().enumerate() {
            for mid in &sigmas[j] {
                terms += 1;
                if mid.contains(ctx, &target) {
                    coef += c;
                }
            }
        }
        out.push((target, coef));
    }
    Ok((out, terms))
}

/// Check P(N) = sum_j (-1)^j Q^{j(j-1)/2} T^x(r-j) sigma^x_j (N) = 0 on each test lattice.
pub fn newton_verify(
    ctx: &FieldCtx,
    x: &Poly,
    n: usize,
    r: usize,
    test_lattices: &[Lattice],
    fault: Fault,
) -> Result<NewtonVerdict> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let rf = ResidueField::new(ctx, x)?;
    let big_q = BigInt::from(rf.size());
    let coeffs = coefficients(n, r, &big_q, fault);
    let alternating_ok = (1..=n).all(|h| alternating_identity(h, &big_q).is_zero());
    let push = newton_push_size(n, r, &big_q) <= BigInt::from(NEWTON_PUSH_LIMIT);
    let mut verdict =
        NewtonVerdict { passed: alternating_ok, modes: Vec::new(), terms_evaluated: 0, alternating_ok, witness: None };
    for lat in test_lattices {
        if lat.rank() != n {
            return Err(Error::InvalidArgument("test lattice rank differs from n".into()));
        }
        let mode = if push { NewtonMode::Push } else { NewtonMode::Pull };
        if !verdict.modes.contains(&mode) {
            verdict.modes.push(mode);
        }
        let bad = if push {
            let (sum, terms) = newton_push(ctx, x, r, lat, &coeffs)?;
            verdict.terms_evaluated += terms;
            sum.first_term().map(|(l, c)| (l.clone(), BigInt::from(*c)))
        } else {
            let (classes, terms) = newton_pull(ctx, x, r, lat, &coeffs)?;
            verdict.terms_evaluated += terms;
            classes.into_iter().find(|(_, c)| !c.is_zero())
        };
        if let Some((target, coefficient)) = bad {
            verdict.passed = false;
            verdict.witness = Some(NewtonWitness { test_lattice: lat.clone(), target, coefficient });
            break;
        }
    }
    Ok(verdict)
}

#[derive(Clone, Debug, Serialize)]
pub struct MultWitness {
    pub test_lattice: Lattice,
    pub lattice: Lattice,
    pub composed: i64,
    pub product: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultVerdict {
    pub passed: bool,
    pub terms: u64,
    pub witness: Option<MultWitness>,
}

/// First lattice where two sums differ, with both multiplicities.
pub fn first_sum_difference(a: &LatticeSum, b: &LatticeSum) -> Option<(Lattice, i64, i64)> {
    let mut diff = a.clone();
    diff.add_scaled(b, -1);
    diff.first_term().map(|(l, _)| {
        let ca = a.iter().find(|(k, _)| *k == l).map_or(0, |(_, c)| *c);
        let cb = b.iter().find(|(k, _)| *k == l).map_or(0, |(_, c)| *c);
        (l.clone(), ca, cb)
    })
}

/// Check T(J) o T(J') = T(J J') on each test lattice, for coprime determinants.
pub fn hecke_mult_verify(
    ctx: &FieldCtx,
    j: &InvariantType,
    jbar: &InvariantType,
    test_lattices: &[Lattice],
) -> Result<MultVerdict> {
    if !ctx.poly_coprime(&j.product(ctx), &jbar.product(ctx)) {
        return Err(Error::NotCoprime);
    }
    let prod = j.componentwise_mul(ctx, jbar)?;
    let (op, opbar, opprod) = (HeckeOp::Chain(j.clone()), HeckeOp::Chain(jbar.clone()), HeckeOp::Chain(prod));
    let mut verdict = MultVerdict { passed: true, terms: 0, witness: None };
    for lat in test_lattices {
        let base = LatticeSum::single(lat.clone());
        let composed = op.apply(ctx, &opbar.apply(ctx, &base)?)?;
        let direct = opprod.apply(ctx, &base)?;
        verdict.terms += composed.total().unsigned_abs() + direct.total().unsigned_abs();
        if let Some((l, a, b)) = first_sum_difference(&composed, &direct) {
            verdict.passed = false;
            verdict.witness = Some(MultWitness { test_lattice: lat.clone(), lattice: l, composed: a, product: b });
            break;
        }
    }
    Ok(verdict)
}

/// Whether two operators commute on a lattice sum.
pub fn operators_commute(ctx: &FieldCtx, a: &HeckeOp, b: &HeckeOp, s: &LatticeSum) -> Result<bool> {
    Ok(a.apply(ctx, &b.apply(ctx, s)?)? == b.apply(ctx, &a.apply(ctx, s)?)?)
}

/// A random sublattice of A^n in Hermite form with diagonal degrees at most `max_deg`.
pub fn random_sublattice(ctx: &FieldCtx, n: usize, max_deg: usize, rng: &mut ChaCha8Rng) -> Lattice {
    let q = ctx.q();
    let diag: Vec<Poly> = (0..n)
        .map(|_| {
            let d = rng.gen_range(0..=max_deg);
            let mut cs: Vec<u32> = (0..d).map(|_| rng.gen_range(0..q)).collect();
            cs.push(1);
            Poly::new(cs)
        })
        .collect();
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => diag[i].clone(),
                    std::cmp::Ordering::Greater => Poly::zero(),
                    std::cmp::Ordering::Less => {
                        let d = diag[j].deg_or_zero();
                        Poly::new((0..d).map(|_| rng.gen_range(0..q)).collect())
                    }
                })
                .collect()
        })
        .collect();
    Lattice::from_hnf_unchecked(rows)
}

/// A random invariant chain of length n with product of degree in 1..=max_deg.
pub fn random_chain(ctx: &FieldCtx, n: usize, max_deg: usize, rng: &mut ChaCha8Rng) -> Result<InvariantType> {
    let q = ctx.q();
    let d = rng.gen_range(1..=max_deg);
    let mut cs: Vec<u32> = (0..d).map(|_| rng.gen_range(0..q)).collect();
    cs.push(1);
    let g = Poly::new(cs);
    let chains = super::enumerate::chains_with_product(ctx, &g, n)?;
    Ok(chains[rng.gen_range(0..chains.len())].clone())
}

/// A random chain whose product is coprime to `avoid`, degree at most `max_deg`.
pub fn random_coprime_chain(
    ctx: &FieldCtx,
    n: usize,
    max_deg: usize,
    avoid: &Poly,
    rng: &mut ChaCha8Rng,
) -> Result<InvariantType> {
    for _ in 0..1000 {
        let c = random_chain(ctx, n, max_deg, rng)?;
        if ctx.poly_coprime(&c.product(ctx), avoid) {
            return Ok(c);
        }
    }
    Err(Error::InvalidArgument("no coprime chain found".into()))
}

/// Counts of sublattices of A^n by F_q-codimension m, both by summing phi over all monic g of
/// degree m and as the z^m coefficient of prod_P sum_k phi(P^k, n) z^{k deg P}.
pub fn global_count_check(ctx: &FieldCtx, n: usize, max_m: usize) -> Result<Vec<(usize, BigInt, BigInt)>> {
    let mut product = vec![BigInt::zero(); max_m + 1];
    product[0] = BigInt::one();
    let q = BigInt::from(ctx.q());
    for deg in 1..=max_m {
        let big_q = num_traits::pow(q.clone(), deg);
        for _ in ctx.irreducibles(deg) {
            let mut next = vec![BigInt::zero(); max_m + 1];
            for (m, a) in product.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let mut k = 0;
                while m + k * deg <= max_m {
                    next[m + k * deg] += a * local_series_coeff(&big_q, n, k);
                    k += 1;
                }
            }
            product = next;
        }
    }
    let mut out = Vec::new();
    for (m, euler) in product.into_iter().enumerate() {
        let mut direct = BigInt::zero();
        for g in ctx.monic_iter(m) {
            direct += phi_count(ctx, &g, n, PhiMethod::HermiteCount)?;
        }
        out.push((m, direct, euler));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn alternating_small() {
        for q in [2, 3, 4, 8, 9] {
            let big_q = BigInt::from(q);
            for h in 1..=6 {
                assert!(alternating_identity(h, &big_q).is_zero());
            }
            assert_eq!(alternating_identity(0, &big_q), BigInt::one());
        }
    }

    #[test]
    fn newton_r1_and_r3() {
        let f = FieldCtx::new(2, 1).unwrap();
        let a2 = vec![Lattice::standard(2)];
        for r in 1..=3 {
            let v = newton_verify(&f, &Poly::t(), 2, r, &a2, Fault::None).unwrap();
            assert!(v.passed, "r = {r}: {:?}", v.witness);
        }
        let bad = newton_verify(&f, &Poly::t(), 2, 2, &a2, Fault::NewtonSigmaOne).unwrap();
        assert!(!bad.passed);
        assert!(bad.witness.is_some());
    }

    #[test]
    fn pull_matches_push_coefficients() {
        // with a corrupted coefficient P(N) is nonzero; both evaluations must see the same values
        let f = FieldCtx::new(3, 1).unwrap();
        let x = Poly::new(vec![2, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 2..=3 {
            let lat = random_sublattice(&f, n, 1, &mut rng);
            for r in 1..=3 {
                let big_q = BigInt::from(3);
                let coeffs = coefficients(n, r, &big_q, Fault::NewtonSigmaOne);
                let (sum, _) = newton_push(&f, &x, r, &lat, &coeffs).unwrap();
                let (classes, _) = newton_pull(&f, &x, r, &lat, &coeffs).unwrap();
                for (target, c) in classes {
                    let pushed = sum.iter().find(|(l, _)| **l == target).map_or(0, |(_, c)| *c);
                    assert_eq!(BigInt::from(pushed), c);
                }
                let good = coefficients(n, r, &big_q, Fault::None);
                assert!(newton_push(&f, &x, r, &lat, &good).unwrap().0.is_zero());
            }
        }
    }

    #[test]
    fn multiplicativity_small() {
        let f = FieldCtx::new(2, 1).unwrap();
        let j = InvariantType::new(&f, vec![Poly::t(), Poly::one()]).unwrap();
        let jb = InvariantType::new(&f, vec![Poly::new(vec![1, 1]), Poly::one()]).unwrap();
        let v = hecke_mult_verify(&f, &j, &jb, &[Lattice::standard(2)]).unwrap();
        assert!(v.passed);
        let triv = InvariantType::trivial(2);
        assert!(hecke_mult_verify(&f, &j, &triv, &[Lattice::standard(2)]).unwrap().passed);
        assert_eq!(hecke_mult_verify(&f, &j, &j, &[Lattice::standard(2)]).unwrap_err(), Error::NotCoprime);
    }

    #[test]
    fn global_counts_match() {
        for (p, n) in [(2, 2), (3, 2), (2, 3)] {
            let f = FieldCtx::new(p, 1).unwrap();
            for (m, direct, euler) in global_count_check(&f, n, 4).unwrap() {
                assert_eq!(direct, euler, "q = {p}, n = {n}, m = {m}");
            }
        }
    }
}
