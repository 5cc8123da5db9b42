use serde_json::{json, Value};

use super::cyclotomic::{carlitz_totient, psi_table};
use super::example::example39_element;
use super::skew::torsion_poly;
use super::torsion::{galois_image, TorsionAlgebra};
use super::xpoly::XPoly;
use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};
use crate::groupring::UnitGroup;
use crate::report::CheckRecord;

fn tag(ctx: &FieldCtx, ideal: &Poly) -> String {
    let cs: Vec<String> = ideal.coeffs().iter().map(|c| c.to_string()).collect();
    format!("(q={},I=[{}])", ctx.q(), cs.join(","))
}

/// Greedy generating set: each element not yet in the generated subgroup is added.
pub fn generators(g: &UnitGroup) -> Vec<usize> {
    let mut inside = vec![false; g.order()];
    inside[g.identity()] = true;
    let mut members = vec![g.identity()];
    let mut gens = Vec::new();
    for x in 0..g.order() {
        if inside[x] {
            continue;
        }
        gens.push(x);
        let mut frontier = members.clone();
        while let Some(y) = frontier.pop() {
            let z = g.mul(y, x);
            if !inside[z] {
                inside[z] = true;
                members.push(z);
                frontier.push(z);
            }
        }
    }
    gens
}

/// prod_{g | f} Psi_g = phi_f(X), every division exact.
pub fn check_torsion_factorization(ctx: &FieldCtx, f: &Poly) -> Result<CheckRecord> {
    let id = format!("carlitz.torsion-factorization{}", tag(ctx, f));
    let (ok, witness) = match psi_table(ctx, f) {
        Ok(table) => {
            let prod = XPoly::product(ctx, table.entries.iter().map(|(_, p)| p));
            let phi = torsion_poly(ctx, f)?.to_xpoly(ctx);
            let w = json!({ "product_degree": prod.degree(), "torsion_degree": phi.degree() });
            (prod == phi, w)
        }
        Err(Error::InexactDivision(msg)) => (false, json!({ "inexact_division": msg })),
        Err(e) => return Err(e),
    };
    Ok(CheckRecord::new(id, "carlitz-torsion", ok, witness))
}

/// deg Psi_I = |G_I| = the Carlitz totient of I.
pub fn check_psi_degree(ctx: &FieldCtx, ideal: &Poly) -> Result<CheckRecord> {
    let alg = TorsionAlgebra::new(ctx, ideal)?;
    let order = UnitGroup::new(ctx, ideal)?.order();
    let totient = carlitz_totient(ctx, ideal)?;
    let ok = alg.dim() == order && alg.dim() as u128 == totient;
    Ok(CheckRecord::new(
        format!("carlitz.psi-degree{}", tag(ctx, ideal)),
        "carlitz-torsion",
        ok,
        json!({ "psi_degree": alg.dim(), "group_order": order, "totient": totient }),
    ))
}

/// X is primitive: phi_{I/P}(X) is a unit mod Psi_I for every prime P | I.
pub fn check_psi_primitive(ctx: &FieldCtx, ideal: &Poly) -> Result<CheckRecord> {
    let alg = TorsionAlgebra::new(ctx, ideal)?;
    let mut bad = Value::Null;
    for (p, _) in ctx.poly_factor(ideal)?.factors {
        let h = ctx.poly_div_exact(ideal, &p)?;
        let val = alg.from_xpoly(&torsion_poly(ctx, &h)?.to_xpoly(ctx));
        if !alg.is_unit(&val) {
            bad = json!({ "prime": p });
            break;
        }
    }
    Ok(CheckRecord::new(format!("carlitz.psi-primitive{}", tag(ctx, ideal)), "carlitz-torsion", bad.is_null(), bad))
}

/// sigma_a sigma_b = sigma_{ab} on X for generators a and all b, roots go to roots,
/// and sigma_a depends only on a mod I.
pub fn check_galois_action(ctx: &FieldCtx, ideal: &Poly) -> Result<CheckRecord> {
    let alg = TorsionAlgebra::new(ctx, ideal)?;
    let g = UnitGroup::new(ctx, ideal)?;
    let images = (0..g.order()).map(|i| galois_image(&alg, g.element(i))).collect::<Result<Vec<_>>>()?;
    let mut witness = Value::Null;
    if let Some(i) = images.iter().position(|im| !im.maps_roots_to_roots) {
        witness = json!({ "unit": g.element(i), "law": "roots" });
    }
    for a in generators(&g) {
        if !witness.is_null() {
            break;
        }
        let lifted = ctx.poly_add(g.element(a), ideal);
        if galois_image(&alg, &lifted)?.image != images[a].image {
            witness = json!({ "unit": g.element(a), "law": "mod-I" });
            break;
        }
        for b in 0..g.order() {
            let lhs = alg.substitute(&images[b].image, &images[a].image);
            if lhs != images[g.mul(a, b)].image {
                witness = json!({ "generator": g.element(a), "unit": g.element(b), "law": "composition" });
                break;
            }
        }
    }
    Ok(CheckRecord::new(
        format!("carlitz.galois-action{}", tag(ctx, ideal)),
        "carlitz-torsion",
        witness.is_null(),
        witness,
    ))
}

/// One record per prerequisite of the split-case element.
pub fn check_example39(ctx: &FieldCtx, p: &Poly) -> Result<Vec<CheckRecord>> {
    let ex = example39_element(ctx, p)?;
    let t = tag(ctx, p);
    let v = &ex.verdicts;
    let rec = |name: &str, anchor: &str, ok: bool, w: Value| {
        CheckRecord::new(format!("carlitz.example39.{name}{t}"), anchor, ok, w)
    };
    Ok(vec![
        rec("partial-fractions", "split-example", v.reconstruction, json!({ "m": ex.partial_fractions })),
        rec(
            "psi-degree",
            "carlitz-torsion",
            v.psi_degree_is_group_order,
            json!({ "psi_degree": ex.psi_degree, "group_order": ex.group_order }),
        ),
        rec("delta-invertible", "split-example", v.deltas_invertible, json!({ "j": ex.non_invertible })),
        rec("torsion-relations", "split-example", v.torsion_relations, Value::Null),
        rec("diagonal-image", "split-example", v.diagonal_image, json!({ "u_diagonal": ex.u_diagonal })),
    ])
}

/// Every Carlitz check that applies to I.
pub fn verify_carlitz(ctx: &FieldCtx, ideal: &Poly) -> Result<Vec<CheckRecord>> {
    let mut out = vec![
        check_torsion_factorization(ctx, ideal)?,
        check_psi_degree(ctx, ideal)?,
        check_psi_primitive(ctx, ideal)?,
        check_galois_action(ctx, ideal)?,
    ];
    match check_example39(ctx, ideal) {
        Ok(recs) => out.extend(recs),
        Err(Error::NotSplitSquarefree) => {}
        Err(e) => return Err(e),
    }
    Ok(out)
}
