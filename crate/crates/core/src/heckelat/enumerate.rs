//! Sublattices of given index via Hermite forms: a sublattice of L with index (g)
//! corresponds to exactly one Hermite matrix H of determinant g, namely N = H * B_L.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::invariants::{invariants_of, quotient_invariants, InvariantType};
use super::lattice::{Lattice, PolyMatrix};
use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};

/// Monic divisors of g sorted by (degree, encoding), with exponent vectors over the primes of g.
#[derive(Clone, Debug)]
pub struct DivisorLattice {
    primes: Vec<Poly>,
    exps: Vec<u32>,
    divisors: Vec<(Vec<u32>, Poly)>,
}

impl DivisorLattice {
    pub fn new(ctx: &FieldCtx, g: &Poly) -> Result<Self> {
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let fac = ctx.poly_factor(g)?;
        let primes: Vec<Poly> = fac.factors.iter().map(|(p, _)| p.clone()).collect();
        let exps: Vec<u32> = fac.factors.iter().map(|(_, e)| *e).collect();
        let mut divisors = vec![(Vec::new(), Poly::one())];
        for (p, e) in primes.iter().zip(&exps) {
            let mut next = Vec::new();
            for (v, d) in &divisors {
                let mut pk = d.clone();
                for k in 0..=*e {
                    let mut w = v.clone();
                    w.push(k);
                    next.push((w, pk.clone()));
                    pk = ctx.poly_mul(&pk, p);
                }
            }
            divisors = next;
        }
        divisors
            .sort_by(|a, b| (a.1.deg_or_zero(), ctx.poly_index(&a.1)).cmp(&(b.1.deg_or_zero(), ctx.poly_index(&b.1))));
        Ok(DivisorLattice { primes, exps, divisors })
    }

    pub fn primes(&self) -> &[Poly] {
        &self.primes
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Ordered factorizations (d_1, ..., d_n) with product g, in lexicographic divisor order.
    pub fn ordered_factorizations(&self, n: usize) -> Vec<Vec<Poly>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        self.factor_rec(n, &self.exps.clone(), &mut current, &mut out);
        out
    }

    fn factor_rec(&self, n: usize, rest: &[u32], current: &mut Vec<Poly>, out: &mut Vec<Vec<Poly>>) {
        if current.len() + 1 == n {
            let last =
                self.divisors.iter().find(|(v, _)| v.as_slice() == rest).expect("remaining exponents name a divisor");
            current.push(last.1.clone());
            out.push(current.clone());
            current.pop();
            return;
        }
        for (v, d) in &self.divisors {
            if v.iter().zip(rest).all(|(a, b)| a <= b) {
                let next: Vec<u32> = v.iter().zip(rest).map(|(a, b)| b - a).collect();
                current.push(d.clone());
                self.factor_rec(n, &next, current, out);
                current.pop();
            }
        }
    }
}

/// Visit every Hermite matrix with the given diagonal, off-diagonal digits in encoding order.
fn for_each_hermite(ctx: &FieldCtx, diag: &[Poly], visit: &mut dyn FnMut(&PolyMatrix)) {
    let n = diag.len();
    let mut m: PolyMatrix =
        (0..n).map(|i| (0..n).map(|j| if i == j { diag[i].clone() } else { Poly::zero() }).collect()).collect();
    // free slots: (i, j) for i < j, with q^{deg d_j} choices each
    let slots: Vec<(usize, usize, u128)> = (0..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .map(|(i, j)| (i, j, ctx.monic_count(diag[j].deg_or_zero())))
        .collect();
    let mut digits = vec![0u128; slots.len()];
    loop {
        visit(&m);
        // odometer with the last slot fastest
        let mut k = slots.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            let (i, j, count) = slots[k];
            digits[k] += 1;
            if digits[k] < count {
                m[i][j] = ctx.poly_from_index(digits[k]);
                break;
            }
            digits[k] = 0;
            m[i][j] = Poly::zero();
        }
    }
}

/// Number of Hermite matrices with the given diagonal: prod_j q^{j deg d_j}.
fn hermite_count(ctx: &FieldCtx, diag: &[Poly]) -> BigInt {
    let q = BigInt::from(ctx.q());
    diag.iter().enumerate().fold(BigInt::one(), |acc, (j, d)| acc * num_traits::pow(q.clone(), j * d.deg_or_zero()))
}

/// Visit all sublattices of `lat` with index (g), in canonical enumeration order.
pub fn for_each_sublattice(ctx: &FieldCtx, lat: &Lattice, g: &Poly, visit: &mut dyn FnMut(Lattice)) -> Result<()> {
    let divs = DivisorLattice::new(ctx, g)?;
    let standard = *lat == Lattice::standard(lat.rank());
    for diag in divs.ordered_factorizations(lat.rank()) {
        for_each_hermite(ctx, &diag, &mut |h| {
            let sub = if standard {
                Lattice::from_hnf_unchecked(h.clone())
            } else {
                lat.sublattice_from_coords(ctx, h).expect("nonsingular Hermite matrix")
            };
            visit(sub);
        });
    }
    Ok(())
}

/// All sublattices N of L with [L : N] = (g), in canonical order; parallel over diagonals.
pub fn sublattice_enum(ctx: &FieldCtx, lat: &Lattice, g: &Poly) -> Result<Vec<Lattice>> {
    let divs = DivisorLattice::new(ctx, g)?;
    let standard = *lat == Lattice::standard(lat.rank());
    let blocks: Vec<Vec<Lattice>> = divs
        .ordered_factorizations(lat.rank())
        .par_iter()
        .map(|diag| {
            let mut out = Vec::new();
            for_each_hermite(ctx, diag, &mut |h| {
                out.push(if standard {
                    Lattice::from_hnf_unchecked(h.clone())
                } else {
                    lat.sublattice_from_coords(ctx, h).expect("nonsingular Hermite matrix")
                });
            });
            out
        })
        .collect();
    Ok(blocks.into_iter().flatten().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiMethod {
    /// Materialize the sublattice list.
    Enumerate,
    /// Sum the Hermite-matrix counts over ordered diagonal factorizations.
    HermiteCount,
    /// Product over P^k || g of the u^k coefficient of prod_{j<n} (1 - Q^j u)^{-1}.
    ClosedForm,
}

/// phi(g, n): the number of sublattices of A^n of index (g).
pub fn phi_count(ctx: &FieldCtx, g: &Poly, n: usize, method: PhiMethod) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    match method {
        PhiMethod::Enumerate => Ok(BigInt::from(sublattice_enum(ctx, &Lattice::standard(n), g)?.len())),
        PhiMethod::HermiteCount => {
            let divs = DivisorLattice::new(ctx, g)?;
            Ok(divs.ordered_factorizations(n).iter().map(|d| hermite_count(ctx, d)).sum())
        }
        PhiMethod::ClosedForm => {
            let fac = DivisorLattice::new(ctx, g)?;
            let q = BigInt::from(ctx.q());
            let mut total = BigInt::one();
            for (p, &k) in fac.primes().iter().zip(fac.exponents()) {
                let big_q = num_traits::pow(q.clone(), p.deg_or_zero());
                total *= local_series_coeff(&big_q, n, k as usize);
            }
            Ok(total)
        }
    }
}

/// Coefficient of u^k in prod_{j=0}^{n-1} (1 - Q^j u)^{-1}, by truncated series product.
pub fn local_series_coeff(big_q: &BigInt, n: usize, k: usize) -> BigInt {
    let mut series = vec![BigInt::zero(); k + 1];
    series[0] = BigInt::one();
    let mut qj = BigInt::one();
    for _ in 0..n {
        // multiply by the geometric series sum_i (Q^j u)^i
        for m in 1..=k {
            let prev = series[m - 1].clone();
            series[m] += &qj * prev;
        }
        qj *= big_q;
    }
    series.swap_remove(k)
}

/// d(J): the number of sublattices N of A^n with A^n / N of invariant type J.
pub fn d_count(ctx: &FieldCtx, chain: &InvariantType) -> Result<BigInt> {
    let n = chain.len();
    let g = chain.product(ctx);
    let mut count = BigInt::zero();
    for_each_sublattice(ctx, &Lattice::standard(n), &g, &mut |lat| {
        if invariants_of(ctx, &lat) == *chain {
            count += 1;
        }
    })?;
    Ok(count)
}

/// All invariant chains of length n with product g.
pub fn chains_with_product(ctx: &FieldCtx, g: &Poly, n: usize) -> Result<Vec<InvariantType>> {
    let divs = DivisorLattice::new(ctx, g)?;
    let mut out = Vec::new();
    for f in divs.ordered_factorizations(n) {
        if let Ok(c) = InvariantType::new(ctx, f) {
            out.push(c);
        }
    }
    Ok(out)
}

/// The sublattices N of L with L / N of type J.
pub fn sublattices_of_type(ctx: &FieldCtx, lat: &Lattice, chain: &InvariantType) -> Result<Vec<Lattice>> {
    let g = chain.product(ctx);
    let mut out = Vec::new();
    let mut err = None;
    for_each_sublattice(ctx, lat, &g, &mut |sub| match quotient_invariants(ctx, &sub, lat) {
        Ok(inv) if inv == *chain => out.push(sub),
        Ok(_) => {}
        Err(e) => err = Some(e),
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u32]) -> Poly {
        Poly::new(c.to_vec())
    }

    #[test]
    fn index_t_in_rank_two() {
        for (pr, m) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let f = FieldCtx::new(pr, m).unwrap();
            let subs = sublattice_enum(&f, &Lattice::standard(2), &Poly::t()).unwrap();
            assert_eq!(subs.len() as u32, f.q() + 1);
            assert!(subs.iter().all(|l| l.is_canonical()));
        }
    }

    #[test]
    fn index_one_is_the_lattice_itself() {
        let f = FieldCtx::new(3, 1).unwrap();
        let l = super::super::lattice::hnf_reduce(&f, &[vec![p(&[0, 1]), p(&[2])], vec![Poly::zero(), p(&[1, 1])]])
            .unwrap();
        assert_eq!(sublattice_enum(&f, &l, &Poly::one()).unwrap(), vec![l]);
    }

    #[test]
    fn t_squared_over_f2() {
        let f = FieldCtx::new(2, 1).unwrap();
        let subs = sublattice_enum(&f, &Lattice::standard(2), &p(&[0, 0, 1])).unwrap();
        assert_eq!(subs.len(), 7);
        let mut sorted = subs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 7);
    }

    #[test]
    fn three_methods_agree_small() {
        let f = FieldCtx::new(3, 1).unwrap();
        for d in 0..=3 {
            for g in f.monic_iter(d) {
                for n in 1..=3 {
                    let a = phi_count(&f, &g, n, PhiMethod::HermiteCount).unwrap();
                    let b = phi_count(&f, &g, n, PhiMethod::ClosedForm).unwrap();
                    assert_eq!(a, b, "g = {g}, n = {n}");
                    if d <= 2 {
                        assert_eq!(phi_count(&f, &g, n, PhiMethod::Enumerate).unwrap(), a);
                    }
                }
            }
        }
    }

    #[test]
    fn d_count_small_chains() {
        let f = FieldCtx::new(3, 1).unwrap();
        let t = Poly::t();
        let c1 = InvariantType::new(&f, vec![t.clone(), Poly::one()]).unwrap();
        assert_eq!(d_count(&f, &c1).unwrap(), BigInt::from(4));
        let c2 = InvariantType::new(&f, vec![t.clone(), t.clone()]).unwrap();
        assert_eq!(d_count(&f, &c2).unwrap(), BigInt::from(1));
        assert_eq!(d_count(&f, &InvariantType::trivial(3)).unwrap(), BigInt::from(1));
    }

    #[test]
    fn local_coefficients() {
        // h_2(1, Q) = 1 + Q + Q^2
        assert_eq!(local_series_coeff(&BigInt::from(3), 2, 2), BigInt::from(13));
        assert_eq!(local_series_coeff(&BigInt::from(3), 1, 5), BigInt::from(1));
        assert_eq!(local_series_coeff(&BigInt::from(2), 3, 0), BigInt::from(1));
    }
}
