use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use super::enumerate::{chains_with_product, d_count, phi_count, PhiMethod};
use super::invariants::InvariantType;
use super::lattice::Lattice;
use super::verify::{alternating_identity, global_count_check, hecke_mult_verify, newton_verify, Fault};
use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};
use crate::json::bigint_value;
use crate::report::CheckRecord;

/// Comma-separated coefficients, the CLI polynomial syntax.
pub fn poly_tag(p: &Poly) -> String {
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

/// Chain entries joined by ';'.
pub fn chain_tag(c: &InvariantType) -> String {
    c.chain().iter().map(poly_tag).collect::<Vec<_>>().join(";")
}

/// The four closed values phi(g, 2) for deg g <= 2, each by brute-force enumeration.
pub fn check_phi_table(ctx: &FieldCtx) -> Result<Vec<CheckRecord>> {
    let q = BigInt::from(ctx.q());
    let t = Poly::t();
    let t1 = ctx.poly_sub(&t, &Poly::one());
    let irred = ctx.irreducibles(2).into_iter().next().expect("irreducible quadratics exist");
    let cases = [
        ("linear", t.clone(), &q + 1),
        ("square", ctx.poly_mul(&t, &t), &q * &q + &q + 1),
        ("split", ctx.poly_mul(&t, &t1), &q * &q + &q * 2 + 1),
        ("irreducible", irred, &q * &q + 1),
    ];
    cases
        .into_iter()
        .map(|(name, g, expected)| {
            let found = phi_count(ctx, &g, 2, PhiMethod::Enumerate)?;
            Ok(CheckRecord::new(
                format!("hecke.phi-table.{name}(q={},g=[{}])", ctx.q(), poly_tag(&g)),
                "phi-table",
                found == expected,
                json!({ "expected": bigint_value(&expected), "found": bigint_value(&found) }),
            ))
        })
        .collect()
}

/// sum over chains with product g of d(J) equals phi(g, n) by every counting method.
pub fn check_bridge(ctx: &FieldCtx, g: &Poly, n: usize) -> Result<CheckRecord> {
    let mut via_chains = BigInt::zero();
    for c in chains_with_product(ctx, g, n)? {
        via_chains += d_count(ctx, &c)?;
    }
    let methods = [PhiMethod::Enumerate, PhiMethod::HermiteCount, PhiMethod::ClosedForm];
    let mut witness = Value::Null;
    for m in methods {
        let v = phi_count(ctx, g, n, m)?;
        if v != via_chains {
            witness = json!({
                "method": format!("{m:?}"),
                "phi": bigint_value(&v),
                "chain_sum": bigint_value(&via_chains),
            });
            break;
        }
    }
    Ok(CheckRecord::new(
        format!("hecke.bridge.n{n}(q={},g=[{}])", ctx.q(), poly_tag(g)),
        "hecke-counts",
        witness.is_null(),
        witness,
    ))
}

pub fn check_newton(
    ctx: &FieldCtx,
    x: &Poly,
    n: usize,
    r: usize,
    lats: &[Lattice],
    fault: Fault,
) -> Result<CheckRecord> {
    let v = newton_verify(ctx, x, n, r, lats, fault)?;
    let witness = serde_json::to_value(&v.witness).unwrap_or(Value::Null);
    Ok(CheckRecord::new(
        format!("hecke.newton.n{n}.r{r}(q={},x=[{}])", ctx.q(), poly_tag(x)),
        "newton",
        v.passed,
        json!({ "alternating_ok": v.alternating_ok, "counterexample": witness }),
    ))
}

/// sum_j (-1)^j Q^{j(j-1)/2} C(h, h-j)_Q = 0.
pub fn check_alternating(h: usize, big_q: u64) -> CheckRecord {
    let v = alternating_identity(h, &BigInt::from(big_q));
    CheckRecord::new(
        format!("hecke.alternating.h{h}(Q={big_q})"),
        "newton",
        v.is_zero(),
        json!({ "value": bigint_value(&v) }),
    )
}

pub fn check_hecke_mult(
    ctx: &FieldCtx,
    j: &InvariantType,
    jbar: &InvariantType,
    lats: &[Lattice],
) -> Result<CheckRecord> {
    let v = hecke_mult_verify(ctx, j, jbar, lats)?;
    Ok(CheckRecord::new(
        format!("hecke.mult.n{}(q={},J=[{}],J'=[{}])", j.len(), ctx.q(), chain_tag(j), chain_tag(jbar)),
        "hecke-product",
        v.passed,
        serde_json::to_value(&v.witness).unwrap_or(Value::Null),
    ))
}

/// Sublattice counts by codimension, direct sum of phi against the Euler product.
pub fn check_global_counts(ctx: &FieldCtx, n: usize, max_m: usize) -> Result<CheckRecord> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let rows = global_count_check(ctx, n, max_m)?;
    let bad = rows.iter().find(|(_, a, b)| a != b);
    let witness = match bad {
        Some((m, a, b)) => json!({ "m": m, "direct": bigint_value(a), "euler_product": bigint_value(b) }),
        None => Value::Null,
    };
    Ok(CheckRecord::new(format!("hecke.global-counts.n{n}(q={})", ctx.q()), "hecke-counts", bad.is_none(), witness))
}
