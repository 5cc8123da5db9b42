use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};
use crate::groupring::{Character, CharacterTable, CycloInt, GroupRingElem, UnitGroup};

/// The data of one evaluator: F_q, the modulus I of degree d+1, and G_I.
#[derive(Clone, Debug)]
pub struct StickCtx {
    ctx: FieldCtx,
    ideal: Poly,
    group: Arc<UnitGroup>,
    d: usize,
}

impl StickCtx {
    pub fn new(ctx: &FieldCtx, ideal: &Poly) -> Result<Self> {
        let group = UnitGroup::new(ctx, ideal)?;
        let d = ideal.degree().expect("unit group requires a nonconstant modulus") - 1;
        Ok(StickCtx { ctx: ctx.clone(), ideal: ideal.clone(), group, d })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn ideal(&self) -> &Poly {
        &self.ideal
    }

    pub fn group(&self) -> &Arc<UnitGroup> {
        &self.group
    }

    /// deg I - 1.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> u32 {
        self.ctx.q()
    }

    pub fn norm(&self) -> GroupRingElem {
        GroupRingElem::norm(&self.group)
    }
}

/// A truncated power series s_0 + s_1 z + ... + s_M z^M over Z[G_I].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct GrSeries {
    coeffs: Vec<GroupRingElem>,
}

impl GrSeries {
    pub fn new(coeffs: Vec<GroupRingElem>) -> Self {
        GrSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[GroupRingElem] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> &GroupRingElem {
        &self.coeffs[m]
    }

    /// Product truncated at the smaller order.
    pub fn mul_truncated(&self, other: &GrSeries) -> Result<GrSeries> {
        let m = self.order().min(other.order());
        let group = self.coeffs[0].group();
        let mut out = vec![GroupRingElem::zero(group); m + 1];
        for i in 0..=m {
            for j in 0..=m - i {
                out[i + j].add_assign_checked(&self.coeffs[i].try_mul(&other.coeffs[j])?)?;
            }
        }
        Ok(GrSeries { coeffs: out })
    }

    /// Substitute z -> c z.
    pub fn scale_variable(&self, c: &BigInt) -> GrSeries {
        let mut pow = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a.scale(&pow);
                pow *= c;
                out
            })
            .collect();
        GrSeries { coeffs }
    }

    /// First (degree, unit position) where two series differ.
    pub fn first_difference(&self, other: &GrSeries) -> Option<(usize, usize)> {
        let n = self.coeffs.len().min(other.coeffs.len());
        (0..n).find_map(|m| self.coeffs[m].first_difference(&other.coeffs[m]).map(|g| (m, g)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesMethod {
    /// Sum [g mod I] over monic g coprime to I, degree by degree.
    Direct,
    /// Expand prod_P (1 - [P] z^{deg P})^{-1} over monic irreducibles P coprime to I.
    EulerProduct,
}

/// The evaluator prod_{x not in S} (1 - tau_x z^{deg x})^{-1} up to z^M.
pub fn euler_series(s: &StickCtx, max_order: usize, method: SeriesMethod) -> GrSeries {
    let g = s.group();
    let ctx = s.ctx();
    match method {
        SeriesMethod::Direct => {
            let coeffs = (0..=max_order)
                .into_par_iter()
                .map(|m| {
                    let mut acc = GroupRingElem::zero(g);
                    let one = BigInt::one();
                    for f in ctx.monic_iter(m) {
                        if let Some(k) = g.class_of(&f) {
                            acc.add_to_coeff(k, &one);
                        }
                    }
                    acc
                })
                .collect();
            GrSeries { coeffs }
        }
        SeriesMethod::EulerProduct => {
            let mut coeffs = vec![GroupRingElem::zero(g); max_order + 1];
            coeffs[0] = GroupRingElem::one(g);
            for deg in 1..=max_order {
                for p in ctx.irreducibles(deg) {
                    let Some(k) = g.class_of(&p) else { continue };
                    // multiply by the geometric series in [P] z^deg, ascending so terms compound
                    for m in deg..=max_order {
                        let add = coeffs[m - deg].translate(k);
                        coeffs[m].add_assign_checked(&add).expect("same group");
                    }
                }
            }
            GrSeries { coeffs }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TailViolation {
    pub m: usize,
    pub unit: Poly,
    #[serde(serialize_with = "crate::json::bigint")]
    pub expected: BigInt,
    #[serde(serialize_with = "crate::json::bigint")]
    pub found: BigInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct TailVerdict {
    pub ok: bool,
    pub checked: Vec<usize>,
    pub violations: Vec<TailViolation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StickelbergerQ {
    /// gamma_0, ..., gamma_d.
    pub gammas: Vec<GroupRingElem>,
    pub tail: TailVerdict,
}

/// gamma_i = s_i for i <= d, plus the tail law s_m = q^{m-d-1} N for d < m <= d + extra.
pub fn stickelberger_q(s: &StickCtx, extra: usize) -> StickelbergerQ {
    let d = s.d();
    let series = euler_series(s, d + extra, SeriesMethod::Direct);
    let gammas = series.coeffs()[..=d].to_vec();
    let n = s.norm();
    let q = BigInt::from(s.q());
    let mut violations = Vec::new();
    let checked: Vec<usize> = (d + 1..=d + extra).collect();
    for &m in &checked {
        let expected = n.scale(&num_traits::pow(q.clone(), m - d - 1));
        if let Some(g) = series.coeff(m).first_difference(&expected) {
            violations.push(TailViolation {
                m,
                unit: s.group().element(g).clone(),
                expected: expected.coeff(g).clone(),
                found: series.coeff(m).coeff(g).clone(),
            });
        }
    }
    StickelbergerQ { gammas, tail: TailVerdict { ok: violations.is_empty(), checked, violations } }
}

#[derive(Clone, Debug, Serialize)]
pub struct CharLPoly {
    pub label: Vec<u32>,
    /// chi(gamma_0), ..., chi(gamma_d).
    pub values: Vec<CycloInt>,
    /// chi(s_m) = 0 for d < m <= d + 3 (nontrivial chi only).
    pub tail_vanishes: bool,
}

/// The L-polynomial coefficients chi(gamma_i) of one character.
pub fn char_l_poly(s: &StickCtx, table: &CharacterTable, chi: &Character) -> Result<CharLPoly> {
    if chi.exps.len() != s.group().order() {
        return Err(Error::GroupMismatch);
    }
    let d = s.d();
    let series = euler_series(s, d + 3, SeriesMethod::Direct);
    let values = series.coeffs()[..=d].iter().map(|g| table.apply(chi, g)).collect();
    let tail_vanishes = chi.is_trivial() || (d + 1..=d + 3).all(|m| table.apply(chi, series.coeff(m)).is_zero());
    Ok(CharLPoly { label: chi.label.clone(), values, tail_vanishes })
}
