use serde::Serialize;

use super::skew::torsion_poly;
use super::xpoly::XPoly;
use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};

/// Psi_g for every monic divisor g of I, by degree.
#[derive(Clone, Debug, Serialize)]
pub struct PsiTable {
    pub entries: Vec<(Poly, XPoly)>,
}

impl PsiTable {
    pub fn get(&self, g: &Poly) -> Option<&XPoly> {
        self.entries.iter().find(|(d, _)| d == g).map(|(_, p)| p)
    }
}

fn validate(ctx: &FieldCtx, ideal: &Poly) -> Result<()> {
    match ideal.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantModulus),
        _ if !ideal.is_monic() => Err(Error::NotMonic),
        _ => {
            ctx.poly_factor(ideal)?;
            Ok(())
        }
    }
}

/// Psi_g = phi_g(X) / prod_{h | g, h != g} Psi_h, every division checked exact.
pub fn psi_table(ctx: &FieldCtx, ideal: &Poly) -> Result<PsiTable> {
    validate(ctx, ideal)?;
    let divisors = ctx.poly_factor(ideal)?.divisors(ctx);
    let mut entries: Vec<(Poly, XPoly)> = Vec::with_capacity(divisors.len());
    for g in divisors {
        let mut psi = torsion_poly(ctx, &g)?.to_xpoly(ctx);
        for (h, ph) in &entries {
            if ctx.poly_divides(h, &g) {
                psi = psi.div_exact(ctx, ph)?;
            }
        }
        entries.push((g, psi));
    }
    Ok(PsiTable { entries })
}

pub fn psi_cyclotomic(ctx: &FieldCtx, ideal: &Poly) -> Result<XPoly> {
    let table = psi_table(ctx, ideal)?;
    Ok(table.entries.into_iter().last().expect("I divides itself").1)
}

/// prod over P^e || I of (q^{deg P} - 1) q^{deg P (e - 1)}.
pub fn carlitz_totient(ctx: &FieldCtx, ideal: &Poly) -> Result<u128> {
    validate(ctx, ideal)?;
    let q = ctx.q() as u128;
    Ok(ctx
        .poly_factor(ideal)?
        .factors
        .iter()
        .map(|(p, e)| {
            let qd = q.pow(p.deg_or_zero() as u32);
            (qd - 1) * qd.pow(e - 1)
        })
        .product())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn psi_of_t() {
        for (p, m) in [(2, 1), (3, 1), (2, 2)] {
            let f = FieldCtx::new(p, m).unwrap();
            let psi = psi_cyclotomic(&f, &Poly::t()).unwrap();
            let mut cs = vec![Poly::zero(); f.q() as usize];
            cs[0] = Poly::t();
            cs[f.q() as usize - 1] = Poly::one();
            assert_eq!(psi, XPoly::new(cs));
        }
    }

    #[test]
    fn psi_of_t_squared_over_f2() {
        let f = FieldCtx::new(2, 1).unwrap();
        let t2 = Poly::new(vec![0, 0, 1]);
        let expected = torsion_poly(&f, &t2)
            .unwrap()
            .to_xpoly(&f)
            .div_exact(&f, &torsion_poly(&f, &Poly::t()).unwrap().to_xpoly(&f))
            .unwrap();
        assert_eq!(psi_cyclotomic(&f, &t2).unwrap(), expected);
        assert_eq!(expected.degree(), Some(2));
    }

    #[test]
    fn totient_matches_degree() {
        let f = FieldCtx::new(3, 1).unwrap();
        for i in [vec![0, 2, 1], vec![1, 0, 1], vec![0, 0, 1], vec![0, 2, 0, 1]] {
            let i = Poly::new(i);
            let psi = psi_cyclotomic(&f, &i).unwrap();
            assert_eq!(psi.degree().unwrap() as u128, carlitz_totient(&f, &i).unwrap());
            assert!(psi.is_monic());
        }
        assert!(psi_cyclotomic(&f, &Poly::one()).is_err());
    }
}
