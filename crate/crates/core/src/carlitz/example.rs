use serde::Serialize;

use super::ratfunc::RatFunc;
use super::skew::torsion_poly;
use super::torsion::{AlgElem, TensorElem, TorsionAlgebra};
use crate::error::{Error, Result};
use crate::fieldcore::{Elem, FieldCtx, Poly};
use crate::groupring::UnitGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialFraction {
    pub root: Elem,
    pub m: Elem,
}

fn linear(ctx: &FieldCtx, a: Elem) -> Poly {
    Poly::new(vec![ctx.neg(a), 1])
}

/// 1/p = sum_j m_j/(t - a_j) with m_j = 1/p'(a_j), roots in increasing encoding.
pub fn partial_fractions(ctx: &FieldCtx, p: &Poly) -> Result<Vec<PartialFraction>> {
    if !p.is_monic() || p.degree().is_none_or(|d| d == 0) {
        return Err(Error::NotSplitSquarefree);
    }
    let fac = ctx.poly_factor(p)?;
    if fac.factors.iter().any(|(f, e)| *e != 1 || f.degree() != Some(1)) {
        return Err(Error::NotSplitSquarefree);
    }
    let dp = ctx.poly_derivative(p);
    let mut roots: Vec<Elem> = fac.factors.iter().map(|(f, _)| ctx.neg(f.coeff(0))).collect();
    roots.sort_unstable();
    Ok(roots
        .into_iter()
        .map(|a| PartialFraction { root: a, m: ctx.inv(ctx.poly_eval(&dp, a)).expect("simple root") })
        .collect())
}

/// sum_j m_j p/(t - a_j) as a polynomial; equals 1 exactly when the m_j are right.
pub fn partial_fraction_sum(ctx: &FieldCtx, p: &Poly, pf: &[PartialFraction]) -> Result<Poly> {
    let mut acc = Poly::zero();
    for f in pf {
        let cof = ctx.poly_div_exact(p, &linear(ctx, f.root))?;
        acc = ctx.poly_add(&acc, &ctx.poly_scale(&cof, f.m));
    }
    Ok(acc)
}

#[derive(Clone, Debug, Serialize)]
pub struct Example39Verdicts {
    pub reconstruction: bool,
    pub psi_degree_is_group_order: bool,
    pub deltas_invertible: bool,
    pub torsion_relations: bool,
    pub diagonal_image: bool,
}

impl Example39Verdicts {
    pub fn all(&self) -> bool {
        self.reconstruction
            && self.psi_degree_is_group_order
            && self.deltas_invertible
            && self.torsion_relations
            && self.diagonal_image
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Example39 {
    pub partial_fractions: Vec<PartialFraction>,
    pub psi_degree: usize,
    pub group_order: usize,
    /// delta_j = phi_{p/(t - a_j)}(X) mod Psi.
    pub deltas: Vec<AlgElem>,
    /// sum_j m_j (delta_j (x) 1)(1 (x) delta_j)^{-1} - 1, absent when some delta_j is not a unit.
    pub u: Option<TensorElem>,
    /// Image of u under X, Y -> X.
    pub u_diagonal: Option<AlgElem>,
    pub non_invertible: Option<usize>,
    pub verdicts: Example39Verdicts,
}

pub fn example39_element(ctx: &FieldCtx, p: &Poly) -> Result<Example39> {
    let pf = partial_fractions(ctx, p)?;
    let reconstruction = partial_fraction_sum(ctx, p, &pf)?.is_one();
    let alg = TorsionAlgebra::new(ctx, p)?;
    let group_order = UnitGroup::new(ctx, p)?.order();

    let mut deltas = Vec::with_capacity(pf.len());
    let mut torsion_relations = true;
    for f in &pf {
        let lin = linear(ctx, f.root);
        let cof = ctx.poly_div_exact(p, &lin)?;
        let delta = alg.from_xpoly(&torsion_poly(ctx, &cof)?.to_xpoly(ctx));
        torsion_relations &= alg.eval_additive(&torsion_poly(ctx, &lin)?, &delta).is_zero();
        deltas.push(delta);
    }

    let mut sum = alg.tensor_zero();
    let mut non_invertible = None;
    for (j, (f, delta)) in pf.iter().zip(&deltas).enumerate() {
        match alg.inverse(delta) {
            Ok(inv) => {
                let term = alg.tensor(delta, &inv);
                sum = alg.tensor_add(&sum, &alg.tensor_scale(&term, &RatFunc::from_poly(Poly::constant(f.m))));
            }
            Err(Error::NotInvertible(_)) => {
                non_invertible = Some(j);
                break;
            }
            Err(e) => return Err(e),
        }
    }

    let m_sum = pf.iter().fold(0, |acc, f| ctx.add(acc, f.m));
    let (u, u_diagonal, diagonal_image) = if non_invertible.is_none() {
        let u = alg.tensor_sub(&sum, &alg.tensor_one());
        let diag_sum = alg.diagonal(&sum);
        let diag_u = alg.diagonal(&u);
        let target = RatFunc::from_poly(Poly::constant(m_sum));
        let ok = diag_sum == alg.constant(target.clone()) && diag_u == alg.constant(target.sub(ctx, &RatFunc::one()));
        (Some(u), Some(diag_u), ok)
    } else {
        (None, None, false)
    };

    let verdicts = Example39Verdicts {
        reconstruction,
        psi_degree_is_group_order: alg.dim() == group_order,
        deltas_invertible: non_invertible.is_none(),
        torsion_relations,
        diagonal_image,
    };
    Ok(Example39 {
        partial_fractions: pf,
        psi_degree: alg.dim(),
        group_order,
        deltas,
        u,
        u_diagonal,
        non_invertible,
        verdicts,
    })
}
