use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::enumerate::{for_each_sublattice, sublattices_of_type};
use super::invariants::InvariantType;
use super::lattice::{hnf_from_generators, mat_mul, Lattice, PolyMatrix};
use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};

/// A formal Z-linear combination of lattices; no zero multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticeSum {
    terms: BTreeMap<Lattice, i64>,
}

impl Serialize for LatticeSum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (lat, c) in &self.terms {
            seq.serialize_element(&(lat, c))?;
        }
        seq.end()
    }
}

impl LatticeSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(lat: Lattice) -> Self {
        let mut s = Self::new();
        s.add_term(lat, 1);
        s
    }

    pub fn add_term(&mut self, lat: Lattice, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(lat);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LatticeSum, c: i64) {
        for (lat, m) in &other.terms {
            self.add_term(lat.clone(), m * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Lattice, &i64)> {
        self.terms.iter()
    }

    pub fn first_term(&self) -> Option<(&Lattice, &i64)> {
        self.terms.iter().next()
    }
}

/// Arithmetic in the residue field A/(x), elements as polynomials of degree < deg x.
#[derive(Clone, Debug)]
pub struct ResidueField {
    ctx: FieldCtx,
    x: Poly,
}

impl ResidueField {
    pub fn new(ctx: &FieldCtx, x: &Poly) -> Result<Self> {
        if !x.is_monic() || x.degree().unwrap_or(0) == 0 || !ctx.poly_is_irreducible(x) {
            return Err(Error::InvalidArgument(format!("{x} is not a monic irreducible")));
        }
        Ok(ResidueField { ctx: ctx.clone(), x: x.clone() })
    }

    pub fn size(&self) -> u128 {
        self.ctx.monic_count(self.x.deg_or_zero())
    }

    pub fn element(&self, k: u128) -> Poly {
        self.ctx.poly_from_index(k)
    }

    pub fn modulus(&self) -> &Poly {
        &self.x
    }
}

/// Visit the RREF bases of all k-dimensional subspaces of (A/x)^n.
pub fn for_each_subspace(rf: &ResidueField, n: usize, k: usize, visit: &mut dyn FnMut(&PolyMatrix)) {
    if k > n {
        return;
    }
    let size = rf.size();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // free slots: row i, column c > pivots[i] not a pivot column
        let slots: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let piv = pivots.clone();
                (piv[i] + 1..n).filter(move |c| !piv.contains(c)).map(move |c| (i, c))
            })
            .collect();
        let mut m: PolyMatrix =
            (0..k).map(|i| (0..n).map(|c| if c == pivots[i] { Poly::one() } else { Poly::zero() }).collect()).collect();
        let mut digits = vec![0u128; slots.len()];
        'odometer: loop {
            visit(&m);
            let mut s = slots.len();
            loop {
                if s == 0 {
                    break 'odometer;
                }
                s -= 1;
                digits[s] += 1;
                let (i, c) = slots[s];
                if digits[s] < size {
                    m[i][c] = rf.element(digits[s]);
                    break;
                }
                digits[s] = 0;
                m[i][c] = Poly::zero();
            }
        }
        // next pivot combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Sublattices N' of N with N / N' = (A/x)^j: preimages of codimension-j subspaces of N/xN.
pub fn sigma_lattices(ctx: &FieldCtx, x: &Poly, j: usize, lat: &Lattice) -> Result<Vec<Lattice>> {
    let rf = ResidueField::new(ctx, x)?;
    let n = lat.rank();
    let mut out = Vec::new();
    if j > n {
        return Ok(out);
    }
    let x_rows: PolyMatrix = lat.rows().iter().map(|r| r.iter().map(|e| ctx.poly_mul(x, e)).collect()).collect();
    let mut err = None;
    for_each_subspace(&rf, n, n - j, &mut |basis| {
        let mut gens = x_rows.clone();
        gens.extend(mat_mul(ctx, basis, lat.rows()));
        match hnf_from_generators(ctx, &gens, n) {
            Ok(l) => out.push(l),
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeckeOp {
    /// sigma^x_j.
    Sigma { x: Poly, j: usize },
    /// T^x(m): all sublattices whose quotient is x-primary of length m.
    Local { x: Poly, m: usize },
    /// T(J): all sublattices with quotient of invariant type J.
    Chain(InvariantType),
}

impl HeckeOp {
    /// Image of a single lattice.
    pub fn apply_lattice(&self, ctx: &FieldCtx, lat: &Lattice) -> Result<LatticeSum> {
        let mut out = LatticeSum::new();
        match self {
            HeckeOp::Sigma { x, j } => {
                for l in sigma_lattices(ctx, x, *j, lat)? {
                    out.add_term(l, 1);
                }
            }
            HeckeOp::Local { x, m } => {
                let g = ctx.poly_pow(x, *m as u64);
                for_each_sublattice(ctx, lat, &g, &mut |l| out.add_term(l, 1))?;
            }
            HeckeOp::Chain(chain) => {
                if chain.len() != lat.rank() {
                    return Err(Error::InvalidChain("chain length differs from rank".into()));
                }
                for l in sublattices_of_type(ctx, lat, chain)? {
                    out.add_term(l, 1);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, ctx: &FieldCtx, s: &LatticeSum) -> Result<LatticeSum> {
        let mut out = LatticeSum::new();
        for (lat, c) in s.iter() {
            out.add_scaled(&self.apply_lattice(ctx, lat)?, *c);
        }
        Ok(out)
    }
}

pub fn sigma_apply(ctx: &FieldCtx, x: &Poly, j: usize, s: &LatticeSum) -> Result<LatticeSum> {
    HeckeOp::Sigma { x: x.clone(), j }.apply(ctx, s)
}

pub fn t_local(ctx: &FieldCtx, x: &Poly, m: usize, s: &LatticeSum) -> Result<LatticeSum> {
    HeckeOp::Local { x: x.clone(), m }.apply(ctx, s)
}

pub fn t_chain(ctx: &FieldCtx, chain: &InvariantType, s: &LatticeSum) -> Result<LatticeSum> {
    HeckeOp::Chain(chain.clone()).apply(ctx, s)
}

/// Gaussian binomial C(h, j)_Q; zero outside 0 <= j <= h.
pub fn gauss_binom(h: i64, j: i64, big_q: &BigInt) -> BigInt {
    if j < 0 || h < 0 || j > h {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= num_traits::pow(big_q.clone(), (h - i) as usize) - 1;
        den *= num_traits::pow(big_q.clone(), (i + 1) as usize) - 1;
    }
    num / den
}
