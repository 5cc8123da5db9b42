use serde::ser::{Serialize, SerializeTuple, Serializer};

use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};

/// An element of F_q(t) as num/den, reduced, with den monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.num)?;
        t.serialize_element(&self.den)?;
        t.end()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_poly(a: Poly) -> Self {
        RatFunc { num: a, den: Poly::one() }
    }

    pub fn new(ctx: &FieldCtx, num: &Poly, den: &Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = ctx.poly_gcd(num, den)?;
        let (mut n, mut d) = (ctx.poly_div_exact(num, &g)?, ctx.poly_div_exact(den, &g)?);
        if !d.is_monic() {
            let c = ctx.inv(d.leading()).expect("nonzero");
            n = ctx.poly_scale(&n, c);
            d = ctx.poly_scale(&d, c);
        }
        Ok(RatFunc { num: n, den: d })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn add(&self, ctx: &FieldCtx, o: &RatFunc) -> RatFunc {
        if self.den == o.den {
            return Self::new(ctx, &ctx.poly_add(&self.num, &o.num), &self.den).expect("nonzero den");
        }
        let n = ctx.poly_add(&ctx.poly_mul(&self.num, &o.den), &ctx.poly_mul(&o.num, &self.den));
        Self::new(ctx, &n, &ctx.poly_mul(&self.den, &o.den)).expect("nonzero den")
    }

    pub fn neg(&self, ctx: &FieldCtx) -> RatFunc {
        RatFunc { num: ctx.poly_neg(&self.num), den: self.den.clone() }
    }

    pub fn sub(&self, ctx: &FieldCtx, o: &RatFunc) -> RatFunc {
        self.add(ctx, &o.neg(ctx))
    }

    pub fn mul(&self, ctx: &FieldCtx, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let n = ctx.poly_mul(&self.num, &o.num);
        Self::new(ctx, &n, &ctx.poly_mul(&self.den, &o.den)).expect("nonzero den")
    }

    pub fn inv(&self, ctx: &FieldCtx) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(ctx, &self.den, &self.num)
    }

    pub fn div(&self, ctx: &FieldCtx, o: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(ctx, &o.inv(ctx)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        let f = FieldCtx::new(3, 1).unwrap();
        // (2t^2 + 2t) / (2t) = t + 1
        let r = RatFunc::new(&f, &Poly::new(vec![0, 2, 2]), &Poly::new(vec![0, 2])).unwrap();
        assert_eq!(r, RatFunc::from_poly(Poly::new(vec![1, 1])));
        // 1/(2t + 1) = 2/(t + 2)
        let s = RatFunc::new(&f, &Poly::one(), &Poly::new(vec![1, 2])).unwrap();
        assert_eq!(s.num(), &Poly::constant(2));
        assert_eq!(s.den(), &Poly::new(vec![2, 1]));
        assert!(s.mul(&f, &s.inv(&f).unwrap()).is_one());
        assert!(s.sub(&f, &s).is_zero());
    }
}
