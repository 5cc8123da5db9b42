use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use super::series::{euler_series, GrSeries, SeriesMethod, StickCtx};
use crate::error::Result;
use crate::groupring::{FrobPoly, GroupRingElem};
use crate::heckelat::{phi_count, PhiMethod};

/// sum_{i=0}^{d} c^i gamma_i F^{d-i}.
pub fn theta1(s: &StickCtx, c: &BigInt) -> FrobPoly {
    let d = s.d();
    let series = euler_series(s, d, SeriesMethod::Direct);
    let mut coeffs = vec![GroupRingElem::zero(s.group()); d + 1];
    let mut ci = BigInt::one();
    for i in 0..=d {
        coeffs[d - i] = series.coeff(i).scale(&ci);
        ci *= c;
    }
    FrobPoly::from_coeffs(s.group(), coeffs).expect("same group")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiSeriesMethod {
    /// prod_{j<n} E(q^j z) with E the evaluator series.
    Generating,
    /// sum over monic g coprime to I of phi(g, n) [g], phi from sublattice counts.
    Lattice,
}

/// c_0 + c_1 z + ... + c_M z^M with c_m = sum_{deg g = m, (g, I) = 1} phi(g, n) [g].
pub fn phi_series(s: &StickCtx, n: usize, max_order: usize, method: PhiSeriesMethod) -> Result<GrSeries> {
    let g = s.group();
    let ctx = s.ctx();
    match method {
        PhiSeriesMethod::Generating => {
            let e = euler_series(s, max_order, SeriesMethod::Direct);
            let q = BigInt::from(s.q());
            let mut acc = e.clone();
            let mut qj = q.clone();
            for _ in 1..n {
                acc = acc.mul_truncated(&e.scale_variable(&qj))?;
                qj *= &q;
            }
            Ok(acc)
        }
        PhiSeriesMethod::Lattice => {
            let coeffs = (0..=max_order)
                .into_par_iter()
                .map(|m| {
                    let mut acc = GroupRingElem::zero(g);
                    for f in ctx.monic_iter(m) {
                        if let Some(k) = g.class_of(&f) {
                            acc.add_to_coeff(k, &phi_count(ctx, &f, n, PhiMethod::HermiteCount)?);
                        }
                    }
                    Ok(acc)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(GrSeries::new(coeffs))
        }
    }
}

/// Theta_n = sum_{i=0}^{nd} F^{nd-i} c_i.
pub fn theta_n(s: &StickCtx, n: usize, method: PhiSeriesMethod) -> Result<FrobPoly> {
    let nd = n * s.d();
    let c = phi_series(s, n, nd, method)?;
    let coeffs = (0..=nd).map(|k| c.coeff(nd - k).clone()).collect();
    FrobPoly::from_coeffs(s.group(), coeffs)
}

/// Theta'_n = sum_{i=0}^{nd} (F^i + ... + F + 1) c_{nd-i}.
pub fn theta_noinf(s: &StickCtx, n: usize, method: PhiSeriesMethod) -> Result<FrobPoly> {
    let nd = n * s.d();
    let c = phi_series(s, n, nd, method)?;
    // the coefficient of F^k collects c_{nd-i} for all i >= k
    let mut coeffs = vec![GroupRingElem::zero(s.group()); nd + 1];
    let mut running = GroupRingElem::zero(s.group());
    for k in (0..=nd).rev() {
        running.add_assign_checked(c.coeff(nd - k))?;
        coeffs[k] = running.clone();
    }
    FrobPoly::from_coeffs(s.group(), coeffs)
}

/// sum_{m <= nd} c_m.
pub fn phi_series_sum(s: &StickCtx, n: usize, method: PhiSeriesMethod) -> Result<GroupRingElem> {
    let nd = n * s.d();
    let c = phi_series(s, n, nd, method)?;
    let mut acc = GroupRingElem::zero(s.group());
    for m in 0..=nd {
        acc.add_assign_checked(c.coeff(m))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldcore::{FieldCtx, Poly};

    fn split_ideal(p: u64) -> StickCtx {
        let f = FieldCtx::new(p, 1).unwrap();
        let ideal = f.poly_mul(&Poly::t(), &f.poly_sub(&Poly::t(), &Poly::one()));
        StickCtx::new(&f, &ideal).unwrap()
    }

    /// N_1 = sum over a != 0, 1 of [t - a].
    fn n1(s: &StickCtx) -> GroupRingElem {
        let f = s.ctx();
        let mut acc = GroupRingElem::zero(s.group());
        for a in 2..f.q() {
            let k = s.group().class_of(&f.poly_sub(&Poly::t(), &Poly::constant(a))).unwrap();
            acc.add_to_coeff(k, &BigInt::one());
        }
        acc
    }

    #[test]
    fn theta1_for_split_quadratic() {
        let s = split_ideal(5);
        let th = theta1(&s, &BigInt::one());
        let expected = FrobPoly::frobenius(s.group()).try_add(&FrobPoly::constant(n1(&s))).unwrap();
        assert_eq!(th, expected);
        assert_eq!(theta1(&s, &BigInt::from(0)), FrobPoly::frobenius(s.group()));
    }

    #[test]
    fn phi_coefficients_for_split_quadratic() {
        let s = split_ideal(3);
        let c = phi_series(&s, 2, 2, PhiSeriesMethod::Lattice).unwrap();
        assert_eq!(c.coeff(1), &n1(&s).scale(&BigInt::from(4)));
        assert_eq!(c, phi_series(&s, 2, 2, PhiSeriesMethod::Generating).unwrap());
        // degree-1 coefficient of Theta_2 is (q+1) N_1, with N_1 = [t+1] for q = 3
        let th = theta_n(&s, 2, PhiSeriesMethod::Generating).unwrap();
        assert_eq!(th.coeff(2), GroupRingElem::one(s.group()));
        let t1 = s.group().class_of(&Poly::new(vec![1, 1])).unwrap();
        assert_eq!(th.coeff(1), GroupRingElem::basis(s.group(), t1).scale(&BigInt::from(4)));
    }

    #[test]
    fn rank_one_is_theta1() {
        let f = FieldCtx::new(3, 1).unwrap();
        let s = StickCtx::new(&f, &Poly::new(vec![1, 0, 1])).unwrap();
        assert_eq!(theta_n(&s, 1, PhiSeriesMethod::Lattice).unwrap(), theta1(&s, &BigInt::one()));
        let lin = StickCtx::new(&f, &Poly::new(vec![2, 1])).unwrap();
        assert_eq!(
            theta_n(&lin, 3, PhiSeriesMethod::Lattice).unwrap(),
            FrobPoly::constant(GroupRingElem::one(lin.group()))
        );
        assert_eq!(
            theta_noinf(&lin, 1, PhiSeriesMethod::Lattice).unwrap(),
            FrobPoly::constant(GroupRingElem::one(lin.group()))
        );
    }
}
