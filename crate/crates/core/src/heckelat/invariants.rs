#![allow(clippy::needless_range_loop)]

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::lattice::{Lattice, PolyMatrix};
use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};

pub const CHAIN_CONVENTION: &str = "largest-first: f_{k+1} divides f_k";

/// Invariant factors of a finite quotient, largest first: f_{k+1} | f_k.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantType {
    chain: Vec<Poly>,
}

impl Serialize for InvariantType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("InvariantType", 2)?;
        st.serialize_field("convention", CHAIN_CONVENTION)?;
        st.serialize_field("chain", &self.chain)?;
        st.end()
    }
}

impl InvariantType {
    /// Validate a chain of monic polynomials with f_{k+1} | f_k.
    pub fn new(ctx: &FieldCtx, chain: Vec<Poly>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::InvalidChain("empty chain".into()));
        }
        if let Some(f) = chain.iter().find(|f| !f.is_monic()) {
            return Err(Error::InvalidChain(format!("{f} is not monic")));
        }
        for w in chain.windows(2) {
            if !ctx.poly_divides(&w[1], &w[0]) {
                return Err(Error::InvalidChain(format!("{} does not divide {}", w[1], w[0])));
            }
        }
        Ok(InvariantType { chain })
    }

    /// The trivial chain (1, ..., 1) of length n.
    pub fn trivial(n: usize) -> Self {
        InvariantType { chain: vec![Poly::one(); n] }
    }

    /// Pad with trailing 1s to length n.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if self.chain.len() > n {
            return Err(Error::InvalidChain(format!("chain longer than rank {n}")));
        }
        let mut chain = self.chain.clone();
        chain.resize(n, Poly::one());
        Ok(InvariantType { chain })
    }

    pub fn chain(&self) -> &[Poly] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn product(&self, ctx: &FieldCtx) -> Poly {
        ctx.poly_product(&self.chain)
    }

    /// Componentwise product; a chain again when the two products are coprime.
    pub fn componentwise_mul(&self, ctx: &FieldCtx, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::InvalidChain("chains of different length".into()));
        }
        let chain = self.chain.iter().zip(&other.chain).map(|(a, b)| ctx.poly_mul(a, b)).collect();
        Self::new(ctx, chain)
    }
}

/// Monic Smith diagonal d_1 | d_2 | ... | d_n of a nonsingular square matrix over A.
pub fn smith_diagonal(ctx: &FieldCtx, m: &PolyMatrix) -> Result<Vec<Poly>> {
    let n = m.len();
    let mut a = m.clone();
    for k in 0..n {
        loop {
            // move a nonzero entry of least degree to (k, k)
            let mut best: Option<(usize, usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if let Some(d) = a[i][j].degree() {
                        if best.is_none_or(|(_, _, bd)| d < bd) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((bi, bj, _)) = best else {
                return Err(Error::Singular);
            };
            a.swap(k, bi);
            for row in a.iter_mut() {
                row.swap(k, bj);
            }
            let pivot = a[k][k].clone();
            let mut clean = true;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let (quo, rem) = ctx.poly_divmod(&a[i][k], &pivot)?;
                for j in k..n {
                    let t = ctx.poly_mul(&quo, &a[k][j]);
                    a[i][j] = ctx.poly_sub(&a[i][j], &t);
                }
                clean &= rem.is_zero();
            }
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let (quo, rem) = ctx.poly_divmod(&a[k][j], &pivot)?;
                for i in k..n {
                    let t = ctx.poly_mul(&quo, &a[i][k]);
                    a[i][j] = ctx.poly_sub(&a[i][j], &t);
                }
                clean &= rem.is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest; otherwise fold the offending row in and retry
            let bad = (k + 1..n).find(|&i| (k + 1..n).any(|j| !ctx.poly_divides(&pivot, &a[i][j])));
            match bad {
                Some(i) => {
                    for j in k..n {
                        let t = a[i][j].clone();
                        a[k][j] = ctx.poly_add(&a[k][j], &t);
                    }
                }
                None => break,
            }
        }
    }
    Ok((0..n).map(|k| ctx.poly_monic(&a[k][k])).collect())
}

/// Invariant factors of L/N for N inside L.
pub fn quotient_invariants(ctx: &FieldCtx, sub: &Lattice, sup: &Lattice) -> Result<InvariantType> {
    if sub.rank() != sup.rank() {
        return Err(Error::InvalidArgument("lattices of different rank".into()));
    }
    let transition = sub
        .rows()
        .iter()
        .map(|r| sup.coordinates(ctx, r).ok_or(Error::NotContained))
        .collect::<Result<PolyMatrix>>()?;
    let mut diag = smith_diagonal(ctx, &transition)?;
    diag.reverse();
    InvariantType::new(ctx, diag)
}

/// Invariant factors of A^n / N.
pub fn invariants_of(ctx: &FieldCtx, lat: &Lattice) -> InvariantType {
    let mut diag = smith_diagonal(ctx, lat.rows()).expect("lattices are nonsingular");
    diag.reverse();
    InvariantType { chain: diag }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heckelat::lattice::hnf_reduce;

    fn p(c: &[u32]) -> Poly {
        Poly::new(c.to_vec())
    }

    #[test]
    fn basic_chains() {
        let f = FieldCtx::new(3, 1).unwrap();
        let a2 = Lattice::standard(2);
        assert_eq!(quotient_invariants(&f, &a2, &a2).unwrap(), InvariantType::trivial(2));
        let t = p(&[0, 1]);
        let ta2 = hnf_reduce(&f, &[vec![t.clone(), Poly::zero()], vec![Poly::zero(), t.clone()]]).unwrap();
        assert_eq!(quotient_invariants(&f, &ta2, &a2).unwrap().chain(), &[t.clone(), t.clone()]);
        let t2 = p(&[0, 0, 1]);
        let n = hnf_reduce(&f, &[vec![t2.clone(), Poly::zero()], vec![Poly::zero(), Poly::one()]]).unwrap();
        assert_eq!(quotient_invariants(&f, &n, &a2).unwrap().chain(), &[t2, Poly::one()]);
        assert_eq!(quotient_invariants(&f, &a2, &ta2).unwrap_err(), Error::NotContained);
    }

    #[test]
    fn non_diagonal_quotient() {
        // span{(t, 1), (0, t)} has quotient A/t^2: cyclic since (0,1) has order t^2
        let f = FieldCtx::new(2, 1).unwrap();
        let n = hnf_reduce(&f, &[vec![p(&[0, 1]), p(&[1])], vec![Poly::zero(), p(&[0, 1])]]).unwrap();
        let inv = invariants_of(&f, &n);
        assert_eq!(inv.chain(), &[p(&[0, 0, 1]), Poly::one()]);
    }

    #[test]
    fn chain_validation() {
        let f = FieldCtx::new(2, 1).unwrap();
        assert!(InvariantType::new(&f, vec![p(&[0, 1]), p(&[1, 1])]).is_err());
        assert!(InvariantType::new(&f, vec![p(&[0, 1, 1]), p(&[1, 1])]).is_ok());
    }
}
