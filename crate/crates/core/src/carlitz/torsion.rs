use serde::Serialize;

use super::cyclotomic::psi_cyclotomic;
use super::ratfunc::RatFunc;
use super::skew::{torsion_poly, AddPoly};
use super::xpoly::XPoly;
use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};

/// Residue class mod Psi: exactly `dim` coefficients of 1, X, ..., X^{dim-1}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct AlgElem {
    coeffs: Vec<RatFunc>,
}

impl AlgElem {
    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_zero)
    }
}

/// Element of the tensor square; coefficient of X^k Y^l sits at k * dim + l.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct TensorElem {
    coeffs: Vec<RatFunc>,
}

impl TensorElem {
    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }
}

fn trim(mut v: Vec<RatFunc>) -> Vec<RatFunc> {
    while v.last().is_some_and(RatFunc::is_zero) {
        v.pop();
    }
    v
}

fn rp_mul(ctx: &FieldCtx, a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![RatFunc::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(ctx, &x.mul(ctx, y));
            }
        }
    }
    trim(out)
}

fn rp_sub(ctx: &FieldCtx, a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
    let n = a.len().max(b.len());
    let z = RatFunc::zero();
    trim((0..n).map(|i| a.get(i).unwrap_or(&z).sub(ctx, b.get(i).unwrap_or(&z))).collect())
}

/// Division with remainder over F_q(t); b nonzero and trimmed.
fn rp_divmod(ctx: &FieldCtx, a: &[RatFunc], b: &[RatFunc]) -> Result<(Vec<RatFunc>, Vec<RatFunc>)> {
    let db = b.len().checked_sub(1).ok_or(Error::DivisionByZero)?;
    let inv_lead = b[db].inv(ctx)?;
    let mut rem = trim(a.to_vec());
    if rem.len() <= db {
        return Ok((Vec::new(), rem));
    }
    let mut quot = vec![RatFunc::zero(); rem.len() - db];
    for k in (db..rem.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let f = rem[k].mul(ctx, &inv_lead);
        for (j, bc) in b.iter().enumerate() {
            rem[k - db + j] = rem[k - db + j].sub(ctx, &f.mul(ctx, bc));
        }
        quot[k - db] = f;
    }
    rem.truncate(db);
    Ok((trim(quot), trim(rem)))
}

/// The algebra F_q(t)[X]/Psi_I(X) and its tensor square.
#[derive(Clone, Debug)]
pub struct TorsionAlgebra {
    ctx: FieldCtx,
    ideal: Poly,
    psi: XPoly,
    psi_rat: Vec<RatFunc>,
    dim: usize,
}

impl TorsionAlgebra {
    pub fn new(ctx: &FieldCtx, ideal: &Poly) -> Result<Self> {
        let psi = psi_cyclotomic(ctx, ideal)?;
        let dim = psi.degree().expect("Psi is nonzero");
        let psi_rat = psi.coeffs().iter().cloned().map(RatFunc::from_poly).collect();
        Ok(TorsionAlgebra { ctx: ctx.clone(), ideal: ideal.clone(), psi, psi_rat, dim })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn ideal(&self) -> &Poly {
        &self.ideal
    }

    pub fn psi(&self) -> &XPoly {
        &self.psi
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn pad(&self, v: Vec<RatFunc>) -> AlgElem {
        let mut coeffs = v;
        coeffs.resize(self.dim, RatFunc::zero());
        AlgElem { coeffs }
    }

    fn reduce(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        rp_divmod(&self.ctx, v, &self.psi_rat).expect("Psi is monic").1
    }

    pub fn zero(&self) -> AlgElem {
        self.pad(Vec::new())
    }

    pub fn one(&self) -> AlgElem {
        self.constant(RatFunc::one())
    }

    pub fn constant(&self, c: RatFunc) -> AlgElem {
        self.pad(vec![c])
    }

    /// The class of X.
    pub fn x(&self) -> AlgElem {
        self.from_xpoly(&XPoly::x())
    }

    pub fn from_xpoly(&self, f: &XPoly) -> AlgElem {
        let (_, r) = f.divmod_monic(&self.ctx, &self.psi).expect("Psi is monic");
        self.pad(r.coeffs().iter().cloned().map(RatFunc::from_poly).collect())
    }

    pub fn from_coeffs(&self, coeffs: Vec<RatFunc>) -> AlgElem {
        self.pad(self.reduce(&trim(coeffs)))
    }

    pub fn add(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        AlgElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.add(&self.ctx, y)).collect() }
    }

    pub fn sub(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        AlgElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.sub(&self.ctx, y)).collect() }
    }

    pub fn scale(&self, a: &AlgElem, c: &RatFunc) -> AlgElem {
        AlgElem { coeffs: a.coeffs.iter().map(|x| x.mul(&self.ctx, c)).collect() }
    }

    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        self.pad(self.reduce(&rp_mul(&self.ctx, &trim(a.coeffs.clone()), &trim(b.coeffs.clone()))))
    }

    pub fn pow(&self, a: &AlgElem, mut e: u64) -> AlgElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Inverse by extended Euclid against Psi; fails when the gcd is not a unit.
    pub fn inverse(&self, a: &AlgElem) -> Result<AlgElem> {
        let ctx = &self.ctx;
        let (mut r0, mut r1) = (self.psi_rat.clone(), trim(a.coeffs.clone()));
        let (mut u0, mut u1): (Vec<RatFunc>, Vec<RatFunc>) = (Vec::new(), vec![RatFunc::one()]);
        if r1.is_empty() {
            return Err(Error::NotInvertible("zero element".into()));
        }
        while !r1.is_empty() {
            let (quot, rem) = rp_divmod(ctx, &r0, &r1)?;
            let u2 = rp_sub(ctx, &u0, &rp_mul(ctx, &quot, &u1));
            r0 = std::mem::replace(&mut r1, rem);
            u0 = std::mem::replace(&mut u1, u2);
        }
        if r0.len() != 1 {
            return Err(Error::NotInvertible(format!("gcd with Psi has degree {} in X", r0.len() - 1)));
        }
        let c = r0[0].inv(ctx)?;
        Ok(self.pad(self.reduce(&u0.iter().map(|x| x.mul(ctx, &c)).collect::<Vec<_>>())))
    }

    pub fn is_unit(&self, a: &AlgElem) -> bool {
        self.inverse(a).is_ok()
    }

    /// f(a) for f in A[X].
    pub fn eval(&self, f: &XPoly, a: &AlgElem) -> AlgElem {
        let mut acc = self.zero();
        for c in f.coeffs().iter().rev() {
            acc = self.mul(&acc, a);
            acc.coeffs[0] = acc.coeffs[0].add(&self.ctx, &RatFunc::from_poly(c.clone()));
        }
        acc
    }

    /// sum_i c_i a^{q^i} by repeated q-th powers.
    pub fn eval_additive(&self, f: &AddPoly, a: &AlgElem) -> AlgElem {
        let q = self.ctx.q() as u64;
        let mut acc = self.zero();
        let mut power = a.clone();
        let mut at = 0usize;
        for (i, c) in f.terms() {
            while at < *i {
                power = self.pow(&power, q);
                at += 1;
            }
            acc = self.add(&acc, &self.scale(&power, &RatFunc::from_poly(c.clone())));
        }
        acc
    }

    /// sum_k c_k s^k: the F_q(t)-algebra map sending X to s, applied to e.
    pub fn substitute(&self, e: &AlgElem, s: &AlgElem) -> AlgElem {
        let mut acc = self.zero();
        for c in e.coeffs.iter().rev() {
            acc = self.mul(&acc, s);
            acc.coeffs[0] = acc.coeffs[0].add(&self.ctx, c);
        }
        acc
    }

    pub fn tensor_zero(&self) -> TensorElem {
        TensorElem { coeffs: vec![RatFunc::zero(); self.dim * self.dim] }
    }

    pub fn tensor_one(&self) -> TensorElem {
        self.tensor(&self.one(), &self.one())
    }

    /// a (x) b.
    pub fn tensor(&self, a: &AlgElem, b: &AlgElem) -> TensorElem {
        let mut out = self.tensor_zero();
        for (k, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (l, y) in b.coeffs.iter().enumerate() {
                out.coeffs[k * self.dim + l] = x.mul(&self.ctx, y);
            }
        }
        out
    }

    pub fn tensor_add(&self, a: &TensorElem, b: &TensorElem) -> TensorElem {
        TensorElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.add(&self.ctx, y)).collect() }
    }

    pub fn tensor_sub(&self, a: &TensorElem, b: &TensorElem) -> TensorElem {
        TensorElem { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.sub(&self.ctx, y)).collect() }
    }

    pub fn tensor_scale(&self, a: &TensorElem, c: &RatFunc) -> TensorElem {
        TensorElem { coeffs: a.coeffs.iter().map(|x| x.mul(&self.ctx, c)).collect() }
    }

    /// Bivariate product reduced mod (Psi(X), Psi(Y)).
    pub fn tensor_mul(&self, a: &TensorElem, b: &TensorElem) -> TensorElem {
        let n = self.dim;
        let w = 2 * n - 1;
        let mut full = vec![RatFunc::zero(); w * w];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let idx = (i / n + j / n) * w + (i % n + j % n);
                full[idx] = full[idx].add(&self.ctx, &x.mul(&self.ctx, y));
            }
        }
        // reduce each X-row in Y, then each Y-column in X
        let rows: Vec<Vec<RatFunc>> = full.chunks(w).map(|row| self.pad(self.reduce(row)).coeffs).collect();
        let mut out = self.tensor_zero();
        for l in 0..n {
            let col: Vec<RatFunc> = rows.iter().map(|r| r[l].clone()).collect();
            for (k, c) in self.pad(self.reduce(&col)).coeffs.into_iter().enumerate() {
                out.coeffs[k * n + l] = c;
            }
        }
        out
    }

    /// The multiplication map X, Y -> X.
    pub fn diagonal(&self, t: &TensorElem) -> AlgElem {
        let n = self.dim;
        let mut v = vec![RatFunc::zero(); 2 * n - 1];
        for (i, c) in t.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[i / n + i % n] = v[i / n + i % n].add(&self.ctx, c);
            }
        }
        self.pad(self.reduce(&trim(v)))
    }
}

/// Image of X under the automorphism attached to a, with the root condition Psi(image) = 0.
#[derive(Clone, Debug, Serialize)]
pub struct GaloisImage {
    pub image: AlgElem,
    pub maps_roots_to_roots: bool,
}

pub fn galois_image(alg: &TorsionAlgebra, a: &Poly) -> Result<GaloisImage> {
    let ctx = alg.ctx();
    if a.is_zero() || !ctx.poly_coprime(a, alg.ideal()) {
        return Err(Error::NotCoprime);
    }
    let image = alg.from_xpoly(&torsion_poly(ctx, a)?.to_xpoly(ctx));
    let maps_roots_to_roots = alg.eval(alg.psi(), &image).is_zero();
    Ok(GaloisImage { image, maps_roots_to_roots })
}

/// sigma_a(e), where sigma_a sends X to phi_a(X).
pub fn galois_act(alg: &TorsionAlgebra, a: &Poly, e: &AlgElem) -> Result<AlgElem> {
    let g = galois_image(alg, a)?;
    if !g.maps_roots_to_roots {
        return Err(Error::InvalidArgument(format!("phi_{a}(X) is not a root of Psi")));
    }
    Ok(alg.substitute(e, &g.image))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(p: u64, ideal: &[u32]) -> TorsionAlgebra {
        TorsionAlgebra::new(&FieldCtx::new(p, 1).unwrap(), &Poly::new(ideal.to_vec())).unwrap()
    }

    #[test]
    fn x_is_a_root_and_a_unit() {
        let a = alg(3, &[0, 2, 1]);
        assert_eq!(a.dim(), 4);
        assert!(a.eval(a.psi(), &a.x()).is_zero());
        let inv = a.inverse(&a.x()).unwrap();
        assert_eq!(a.mul(&inv, &a.x()), a.one());
        assert!(a.inverse(&a.zero()).is_err());
    }

    #[test]
    fn identity_and_inverse_pair_over_f2() {
        let a = alg(2, &[1, 1, 1]);
        let x = a.x();
        assert_eq!(galois_act(&a, &Poly::one(), &x).unwrap(), x);
        let t = galois_act(&a, &Poly::t(), &x).unwrap();
        let back = galois_act(&a, &Poly::new(vec![1, 1]), &t).unwrap();
        assert_eq!(back, x);
        assert!(matches!(galois_act(&a, &Poly::new(vec![1, 1, 1]), &x), Err(Error::NotCoprime)));
    }

    #[test]
    fn tensor_product_is_multiplicative() {
        let a = alg(3, &[0, 1]);
        let x = a.x();
        let u = a.add(&x, &a.one());
        let lhs = a.tensor_mul(&a.tensor(&x, &u), &a.tensor(&u, &x));
        let rhs = a.tensor(&a.mul(&x, &u), &a.mul(&u, &x));
        assert_eq!(lhs, rhs);
        assert_eq!(a.diagonal(&a.tensor(&x, &a.inverse(&x).unwrap())), a.one());
    }
}
