use serde::Serialize;

use super::xpoly::XPoly;
use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};

/// sum_i c_i tau^i over A, with tau b = b^q tau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct SkewPoly {
    coeffs: Vec<Poly>,
}

impl SkewPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero() -> Self {
        SkewPoly::default()
    }

    pub fn constant(c: Poly) -> Self {
        SkewPoly::new(vec![c])
    }

    pub fn tau() -> Self {
        SkewPoly { coeffs: vec![Poly::zero(), Poly::one()] }
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, ctx: &FieldCtx, o: &SkewPoly) -> SkewPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        SkewPoly::new((0..n).map(|i| ctx.poly_add(&self.coeff(i), &o.coeff(i))).collect())
    }

    /// self o other.
    pub fn compose(&self, ctx: &FieldCtx, o: &SkewPoly) -> SkewPoly {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return SkewPoly::zero();
        }
        let q = ctx.q() as usize;
        let mut out = vec![Poly::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        let mut qi = 1usize;
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                for (j, b) in o.coeffs.iter().enumerate() {
                    let twisted = ctx.poly_inflate(b, qi);
                    out[i + j] = ctx.poly_add(&out[i + j], &ctx.poly_mul(a, &twisted));
                }
            }
            qi *= q;
        }
        SkewPoly::new(out)
    }
}

/// phi_a, from phi_t = tau + t by Horner in t.
pub fn carlitz_map(ctx: &FieldCtx, a: &Poly) -> SkewPoly {
    let phi_t = SkewPoly::new(vec![Poly::t(), Poly::one()]);
    let mut acc = SkewPoly::zero();
    for &c in a.coeffs().iter().rev() {
        acc = phi_t.compose(ctx, &acc).add(ctx, &SkewPoly::constant(Poly::constant(c)));
    }
    acc
}

/// sum_i c_i X^{q^i}, serialized as [[i, c_i], ...] over nonzero c_i.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct AddPoly {
    terms: Vec<(usize, Poly)>,
}

impl AddPoly {
    pub fn from_skew(s: &SkewPoly) -> Self {
        let terms = s.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
        AddPoly { terms }
    }

    pub fn terms(&self) -> &[(usize, Poly)] {
        &self.terms
    }

    pub fn to_xpoly(&self, ctx: &FieldCtx) -> XPoly {
        let q = ctx.q() as usize;
        let top = self.terms.last().map_or(0, |(i, _)| q.pow(*i as u32));
        let mut cs = vec![Poly::zero(); top + 1];
        for (i, c) in &self.terms {
            cs[q.pow(*i as u32)] = c.clone();
        }
        XPoly::new(cs)
    }
}

/// phi_a(X).
pub fn torsion_poly(ctx: &FieldCtx, a: &Poly) -> Result<AddPoly> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(AddPoly::from_skew(&carlitz_map(ctx, a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_t_squared() {
        for p in [2, 3, 5] {
            let f = FieldCtx::new(p, 1).unwrap();
            let phi = carlitz_map(&f, &Poly::new(vec![0, 0, 1]));
            let mid = f.poly_add(&Poly::monomial(p as usize, 1), &Poly::t());
            assert_eq!(phi, SkewPoly::new(vec![Poly::new(vec![0, 0, 1]), mid, Poly::one()]));
        }
    }

    #[test]
    fn constants_and_linear() {
        let f = FieldCtx::new(3, 1).unwrap();
        assert_eq!(carlitz_map(&f, &Poly::constant(2)), SkewPoly::constant(Poly::constant(2)));
        assert_eq!(carlitz_map(&f, &Poly::t()), SkewPoly::new(vec![Poly::t(), Poly::one()]));
    }

    #[test]
    fn torsion_of_t_over_f2() {
        let f = FieldCtx::new(2, 1).unwrap();
        let x = torsion_poly(&f, &Poly::t()).unwrap().to_xpoly(&f);
        assert_eq!(x, XPoly::new(vec![Poly::zero(), Poly::t(), Poly::one()]));
        assert!(x.coeff(0).is_zero());
        let sum = torsion_poly(&f, &Poly::new(vec![0, 1, 1])).unwrap().to_xpoly(&f);
        let parts = torsion_poly(&f, &Poly::new(vec![0, 0, 1])).unwrap().to_xpoly(&f).add(&f, &x);
        assert_eq!(sum, parts);
        assert!(torsion_poly(&f, &Poly::zero()).is_err());
    }

    #[test]
    fn degree_over_f4() {
        let f = FieldCtx::new(2, 2).unwrap();
        let a = Poly::new(vec![2, 3, 1]);
        assert_eq!(torsion_poly(&f, &a).unwrap().to_xpoly(&f).degree(), Some(16));
    }
}
