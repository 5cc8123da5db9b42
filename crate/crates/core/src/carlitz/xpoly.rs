use serde::Serialize;

use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};

/// A polynomial in X with coefficients in A = F_q[t], little-endian, no trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct XPoly {
    coeffs: Vec<Poly>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly { coeffs: vec![Poly::one()] }
    }

    pub fn x() -> Self {
        XPoly { coeffs: vec![Poly::zero(), Poly::one()] }
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, ctx: &FieldCtx, o: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        XPoly::new((0..n).map(|i| ctx.poly_add(&self.coeff(i), &o.coeff(i))).collect())
    }

    pub fn sub(&self, ctx: &FieldCtx, o: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        XPoly::new((0..n).map(|i| ctx.poly_sub(&self.coeff(i), &o.coeff(i))).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, o: &XPoly) -> XPoly {
        if self.is_zero() || o.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![Poly::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = ctx.poly_add(&out[i + j], &ctx.poly_mul(a, b));
                }
            }
        }
        XPoly::new(out)
    }

    /// Division by a monic divisor in A[X].
    pub fn divmod_monic(&self, ctx: &FieldCtx, b: &XPoly) -> Result<(XPoly, XPoly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        if !b.is_monic() {
            return Err(Error::NotMonic);
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((XPoly::zero(), self.clone()));
        }
        let mut quot = vec![Poly::zero(); rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = std::mem::take(&mut rem[k]);
            if c.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs[..db].iter().enumerate() {
                let idx = k - db + j;
                rem[idx] = ctx.poly_sub(&rem[idx], &ctx.poly_mul(&c, bc));
            }
            quot[k - db] = c;
        }
        rem.truncate(db);
        Ok((XPoly::new(quot), XPoly::new(rem)))
    }

    pub fn div_exact(&self, ctx: &FieldCtx, b: &XPoly) -> Result<XPoly> {
        let (q, r) = self.divmod_monic(ctx, b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(format!("remainder of degree {} in X", r.degree().unwrap_or(0))))
        }
    }

    pub fn product<'a>(ctx: &FieldCtx, items: impl IntoIterator<Item = &'a XPoly>) -> XPoly {
        items.into_iter().fold(XPoly::one(), |acc, p| acc.mul(ctx, p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_round_trip() {
        let f = FieldCtx::new(3, 1).unwrap();
        let a = XPoly::new(vec![Poly::t(), Poly::one(), Poly::new(vec![2, 1])]);
        let b = XPoly::new(vec![Poly::new(vec![1, 1]), Poly::one()]);
        let prod = a.mul(&f, &b);
        assert_eq!(prod.div_exact(&f, &b).unwrap(), a);
        let shifted = prod.add(&f, &XPoly::one());
        assert!(matches!(shifted.div_exact(&f, &b), Err(Error::InexactDivision(_))));
        assert_eq!(shifted.divmod_monic(&f, &b).unwrap().1, XPoly::one());
    }
}
