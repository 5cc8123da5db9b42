use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use super::series::{char_l_poly, euler_series, stickelberger_q, SeriesMethod, StickCtx};
use super::theta::{phi_series, phi_series_sum, theta1, theta_n, theta_noinf, PhiSeriesMethod};
use crate::error::Result;
use crate::fieldcore::Poly;
use crate::groupring::{characters, FrobPoly, GroupRingElem};
use crate::json::bigint_value;
use crate::report::CheckRecord;

/// Suffix naming the field and modulus in check ids.
pub fn param_tag(s: &StickCtx) -> String {
    let cs: Vec<String> = s.ideal().coeffs().iter().map(|c| c.to_string()).collect();
    format!("(q={},I=[{}])", s.q(), cs.join(","))
}

fn frob_witness(s: &StickCtx, lhs: &FrobPoly, rhs: &FrobPoly) -> Value {
    match lhs.first_difference(rhs) {
        Some((k, g)) => json!({
            "f_power": k,
            "unit": s.group().element(g),
            "lhs": bigint_value(lhs.coeff(k).coeff(g)),
            "rhs": bigint_value(rhs.coeff(k).coeff(g)),
        }),
        None => Value::Null,
    }
}

fn elem_witness(s: &StickCtx, lhs: &GroupRingElem, rhs: &GroupRingElem) -> Value {
    match lhs.first_difference(rhs) {
        Some(g) => json!({
            "unit": s.group().element(g),
            "lhs": bigint_value(lhs.coeff(g)),
            "rhs": bigint_value(rhs.coeff(g)),
        }),
        None => Value::Null,
    }
}

/// t(t - 1).
pub fn split_quadratic(s: &StickCtx) -> Poly {
    let f = s.ctx();
    f.poly_mul(&Poly::t(), &f.poly_sub(&Poly::t(), &Poly::one()))
}

/// Tail law.
pub fn check_tail(s: &StickCtx) -> CheckRecord {
    let st = stickelberger_q(s, 4);
    let witness = serde_json::to_value(&st.tail.violations).unwrap_or(Value::Null);
    CheckRecord::new(format!("lseries.tail{}", param_tag(s)), "evaluator-tail", st.tail.ok, witness)
}

/// chi(s_m) = 0 past degree d for every nontrivial character.
pub fn check_character_tail(s: &StickCtx) -> Result<CheckRecord> {
    let table = characters(s.group())?;
    let mut bad = None;
    for chi in table.characters() {
        let l = char_l_poly(s, &table, chi)?;
        if !l.tail_vanishes {
            bad = Some(json!({ "character": l.label }));
            break;
        }
    }
    Ok(CheckRecord::new(
        format!("lseries.character-tail{}", param_tag(s)),
        "evaluator-tail",
        bad.is_none(),
        bad.unwrap_or(Value::Null),
    ))
}

/// Direct enumeration against the Euler product, to order 6.
pub fn check_euler_agreement(s: &StickCtx) -> CheckRecord {
    let a = euler_series(s, 6, SeriesMethod::Direct);
    let b = euler_series(s, 6, SeriesMethod::EulerProduct);
    let witness = match a.first_difference(&b) {
        Some((m, g)) => json!({
            "m": m,
            "unit": s.group().element(g),
            "direct": bigint_value(a.coeff(m).coeff(g)),
            "euler_product": bigint_value(b.coeff(m).coeff(g)),
        }),
        None => Value::Null,
    };
    CheckRecord::new(format!("lseries.series-agreement.euler{}", param_tag(s)), "evaluator-tail", a == b, witness)
}

/// Generating-function phi series against lattice counts, to order min(6, nd + 2).
pub fn check_phi_agreement(s: &StickCtx, n: usize) -> Result<CheckRecord> {
    let order = 6.min(n * s.d() + 2);
    let a = phi_series(s, n, order, PhiSeriesMethod::Generating)?;
    let b = phi_series(s, n, order, PhiSeriesMethod::Lattice)?;
    let witness = match a.first_difference(&b) {
        Some((m, g)) => json!({
            "m": m,
            "unit": s.group().element(g),
            "generating": bigint_value(a.coeff(m).coeff(g)),
            "lattice": bigint_value(b.coeff(m).coeff(g)),
        }),
        None => Value::Null,
    };
    Ok(CheckRecord::new(
        format!("lseries.series-agreement.phi.n{n}{}", param_tag(s)),
        "higher-stickelberger",
        a == b,
        witness,
    ))
}

/// Theta_2 = theta1(1) theta1(q) + (q^2 + 1) N exactly, for I = t(t - 1).
pub fn check_norm_grouping(s: &StickCtx) -> Result<CheckRecord> {
    let q = BigInt::from(s.q());
    let lhs = theta_n(s, 2, PhiSeriesMethod::Lattice)?;
    let prod = theta1(s, &BigInt::one()).try_mul(&theta1(s, &q))?;
    let rhs = prod.try_add(&FrobPoly::constant(s.norm().scale(&(&q * &q + 1))))?;
    Ok(CheckRecord::new(
        format!("lseries.norm-grouping{}", param_tag(s)),
        "norm-grouping",
        lhs == rhs,
        frob_witness(s, &lhs, &rhs),
    ))
}

/// Theta_n = prod_{j<n} theta1(q^j) in (Z[G]/Z N)[F], with lattice counts as the oracle for Theta_n.
pub fn check_mod_norm_factorization(s: &StickCtx, n: usize) -> Result<CheckRecord> {
    let q = BigInt::from(s.q());
    let lhs = theta_n(s, n, PhiSeriesMethod::Lattice)?.reduce_mod_norm();
    let mut prod = FrobPoly::constant(GroupRingElem::one(s.group()));
    let mut qj = BigInt::one();
    for _ in 0..n {
        prod = prod.try_mul(&theta1(s, &qj))?;
        qj *= &q;
    }
    let rhs = prod.reduce_mod_norm();
    Ok(CheckRecord::new(
        format!("lseries.mod-norm-factorization.n{n}{}", param_tag(s)),
        "higher-stickelberger",
        lhs == rhs,
        frob_witness(s, &lhs, &rhs),
    ))
}

/// Theta_1 = theta1(1).
pub fn check_rank_one(s: &StickCtx) -> Result<CheckRecord> {
    let lhs = theta_n(s, 1, PhiSeriesMethod::Lattice)?;
    let rhs = theta1(s, &BigInt::one());
    Ok(CheckRecord::new(
        format!("lseries.rank-one{}", param_tag(s)),
        "stickelberger-element",
        lhs == rhs,
        frob_witness(s, &lhs, &rhs),
    ))
}

/// (F - 1) Theta'_n = F Theta_n - sum_{m <= nd} c_m.
pub fn check_noinf_relation(s: &StickCtx, n: usize) -> Result<CheckRecord> {
    let g = s.group();
    let f_minus_one = FrobPoly::frobenius(g).try_sub(&FrobPoly::constant(GroupRingElem::one(g)))?;
    let lhs = f_minus_one.try_mul(&theta_noinf(s, n, PhiSeriesMethod::Lattice)?)?;
    let rhs = theta_n(s, n, PhiSeriesMethod::Lattice)?.shift(1).try_sub(&FrobPoly::constant(phi_series_sum(
        s,
        n,
        PhiSeriesMethod::Lattice,
    )?))?;
    Ok(CheckRecord::new(
        format!("lseries.noinf-relation.n{n}{}", param_tag(s)),
        "no-infinity",
        lhs == rhs,
        frob_witness(s, &lhs, &rhs),
    ))
}

/// Theta'_2 at F = 1 equals sum_m (2d + 1 - m) c_m.
pub fn check_noinf_weights(s: &StickCtx) -> Result<CheckRecord> {
    let d = s.d();
    let lhs = theta_noinf(s, 2, PhiSeriesMethod::Lattice)?.eval_at_one();
    let c = phi_series(s, 2, 2 * d, PhiSeriesMethod::Lattice)?;
    let mut rhs = GroupRingElem::zero(s.group());
    for m in 0..=2 * d {
        rhs.add_assign_checked(&c.coeff(m).scale(&BigInt::from(2 * d + 1 - m)))?;
    }
    Ok(CheckRecord::new(
        format!("lseries.noinf-weights{}", param_tag(s)),
        "no-infinity",
        lhs == rhs,
        elem_witness(s, &lhs, &rhs),
    ))
}

/// Every group-ring identity for one modulus, ranks 1..=n_max.
pub fn verify_identities(s: &StickCtx, n_max: usize) -> Result<Vec<CheckRecord>> {
    let mut out = vec![check_tail(s), check_character_tail(s)?, check_euler_agreement(s), check_rank_one(s)?];
    if *s.ideal() == split_quadratic(s) {
        out.push(check_norm_grouping(s)?);
    }
    for n in 1..=n_max {
        out.push(check_phi_agreement(s, n)?);
        out.push(check_mod_norm_factorization(s, n)?);
        out.push(check_noinf_relation(s, n)?);
    }
    out.push(check_noinf_weights(s)?);
    Ok(out)
}
