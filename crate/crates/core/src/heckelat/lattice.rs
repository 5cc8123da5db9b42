#![allow(clippy::needless_range_loop)]

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fieldcore::{FieldCtx, Poly};

/// Matrix over A as a list of rows.
pub type PolyMatrix = Vec<Vec<Poly>>;

/// A full-rank A-sublattice of A^n, stored as the row basis in Hermite normal form:
/// upper triangular, monic diagonal, and every entry above a pivot reduced modulo it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Lattice {
    rank: usize,
    rows: PolyMatrix,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Lattice {
    /// The standard lattice A^n.
    pub fn standard(n: usize) -> Self {
        let rows = (0..n).map(|i| (0..n).map(|j| if i == j { Poly::one() } else { Poly::zero() }).collect()).collect();
        Lattice { rank: n, rows }
    }

    /// Wrap a matrix already known to be in canonical form.
    pub(crate) fn from_hnf_unchecked(rows: PolyMatrix) -> Self {
        Lattice { rank: rows.len(), rows }
    }

    /// Validate and wrap a matrix that claims to be canonical.
    pub fn from_hnf(rows: PolyMatrix) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("lattice basis must be square".into()));
        }
        let lat = Lattice { rank: n, rows };
        if !lat.is_canonical() {
            return Err(Error::InvalidArgument("matrix is not in Hermite normal form".into()));
        }
        Ok(lat)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> &PolyMatrix {
        &self.rows
    }

    pub fn diagonal(&self) -> Vec<Poly> {
        (0..self.rank).map(|i| self.rows[i][i].clone()).collect()
    }

    /// Generator of the index ideal [A^n : L], the product of the diagonal.
    pub fn det(&self, ctx: &FieldCtx) -> Poly {
        ctx.poly_product(self.rows.iter().enumerate().map(|(i, r)| &r[i]))
    }

    /// Codimension over F_q, the degree of the determinant.
    pub fn colength(&self) -> usize {
        (0..self.rank).map(|i| self.rows[i][i].deg_or_zero()).sum()
    }

    pub fn is_canonical(&self) -> bool {
        for j in 0..self.rank {
            let pivot = &self.rows[j][j];
            if !pivot.is_monic() {
                return false;
            }
            let dj = pivot.deg_or_zero();
            for i in 0..self.rank {
                let e = &self.rows[i][j];
                if i > j && !e.is_zero() {
                    return false;
                }
                if i < j && e.degree().is_some_and(|d| d >= dj) {
                    return false;
                }
            }
        }
        true
    }

    /// Coordinates x with x * B = v, if v lies in the lattice.
    pub fn coordinates(&self, ctx: &FieldCtx, v: &[Poly]) -> Option<Vec<Poly>> {
        let mut rest = v.to_vec();
        let mut x = Vec::with_capacity(self.rank);
        for j in 0..self.rank {
            let (quo, rem) = ctx.poly_divmod(&rest[j], &self.rows[j][j]).ok()?;
            if !rem.is_zero() {
                return None;
            }
            if !quo.is_zero() {
                for k in j..self.rank {
                    rest[k] = ctx.poly_sub(&rest[k], &ctx.poly_mul(&quo, &self.rows[j][k]));
                }
            }
            x.push(quo);
        }
        Some(x)
    }

    pub fn contains_vector(&self, ctx: &FieldCtx, v: &[Poly]) -> bool {
        self.coordinates(ctx, v).is_some()
    }

    /// Whether `other` is a sublattice of `self`.
    pub fn contains(&self, ctx: &FieldCtx, other: &Lattice) -> bool {
        self.rank == other.rank && other.rows.iter().all(|r| self.contains_vector(ctx, r))
    }

    /// Image of the coordinate matrix `h` (rows in this lattice's basis) in A^n, reduced.
    pub fn sublattice_from_coords(&self, ctx: &FieldCtx, h: &[Vec<Poly>]) -> Result<Lattice> {
        hnf_from_generators(ctx, &mat_mul(ctx, h, &self.rows), self.rank)
    }
}

pub fn mat_mul(ctx: &FieldCtx, a: &[Vec<Poly>], b: &[Vec<Poly>]) -> PolyMatrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = Poly::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][j].is_zero() {
                            acc = ctx.poly_add(&acc, &ctx.poly_mul(x, &b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// row_dst -= c * row_src, over columns from `start`.
fn row_axpy(ctx: &FieldCtx, m: &mut [Vec<Poly>], dst: usize, src: usize, c: &Poly, start: usize) {
    if c.is_zero() {
        return;
    }
    for k in start..m[src].len() {
        if m[src][k].is_zero() {
            continue;
        }
        let t = ctx.poly_mul(c, &m[src][k]);
        m[dst][k] = ctx.poly_sub(&m[dst][k], &t);
    }
}

/// Hermite normal form of the row span of a k x n generator matrix; errors unless rank n.
pub fn hnf_from_generators(ctx: &FieldCtx, gens: &[Vec<Poly>], n: usize) -> Result<Lattice> {
    if gens.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("generator length differs from rank".into()));
    }
    let mut m: PolyMatrix = gens.iter().filter(|r| r.iter().any(|p| !p.is_zero())).cloned().collect();
    for col in 0..n {
        // Euclid among rows col.. until a single nonzero entry remains in this column
        loop {
            let mut best: Option<(usize, usize)> = None;
            for r in col..m.len() {
                if let Some(d) = m[r][col].degree() {
                    if best.is_none_or(|(_, bd)| d < bd) {
                        best = Some((r, d));
                    }
                }
            }
            let Some((piv, _)) = best else {
                return Err(Error::Singular);
            };
            m.swap(col, piv);
            let mut done = true;
            for r in col + 1..m.len() {
                if m[r][col].is_zero() {
                    continue;
                }
                let (quo, rem) = ctx.poly_divmod(&m[r][col], &m[col][col])?;
                row_axpy(ctx, &mut m, r, col, &quo, col);
                if !rem.is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        let lead = m[col][col].leading();
        if lead != 1 {
            let inv = ctx.inv(lead).expect("nonzero leading coefficient");
            for k in col..n {
                m[col][k] = ctx.poly_scale(&m[col][k], inv);
            }
        }
        for r in 0..col {
            if m[r][col].is_zero() {
                continue;
            }
            let (quo, _) = ctx.poly_divmod(&m[r][col], &m[col][col])?;
            row_axpy(ctx, &mut m, r, col, &quo, col);
        }
        m.retain(|r| r.iter().any(|p| !p.is_zero()));
    }
    m.truncate(n);
    Ok(Lattice::from_hnf_unchecked(m))
}

/// Canonical form of a full-rank square matrix's row span.
pub fn hnf_reduce(ctx: &FieldCtx, m: &[Vec<Poly>]) -> Result<Lattice> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidArgument("matrix must be square".into()));
    }
    hnf_from_generators(ctx, m, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u32]) -> Poly {
        Poly::new(c.to_vec())
    }

    #[test]
    fn identity_is_canonical() {
        let f = FieldCtx::new(2, 1).unwrap();
        let id = Lattice::standard(3);
        assert!(id.is_canonical());
        assert_eq!(hnf_reduce(&f, id.rows()).unwrap(), id);
    }

    #[test]
    fn small_reduction_over_f2() {
        // rows (t, 0) and (1, 1): span contains (t+1)... reduce by hand to [[1, 1], [0, t]]
        let f = FieldCtx::new(2, 1).unwrap();
        let m = vec![vec![p(&[0, 1]), Poly::zero()], vec![p(&[1]), p(&[1])]];
        let lat = hnf_reduce(&f, &m).unwrap();
        assert_eq!(lat.rows(), &vec![vec![p(&[1]), p(&[1])], vec![Poly::zero(), p(&[0, 1])]]);
        assert_eq!(lat.det(&f), p(&[0, 1]));
        let swapped = vec![m[1].clone(), m[0].clone()];
        assert_eq!(hnf_reduce(&f, &swapped).unwrap(), lat);
    }

    #[test]
    fn singular_matrix_rejected() {
        let f = FieldCtx::new(3, 1).unwrap();
        let m = vec![vec![p(&[1]), p(&[0, 1])], vec![p(&[2]), p(&[0, 2])]];
        assert_eq!(hnf_reduce(&f, &m).unwrap_err(), Error::Singular);
    }

    #[test]
    fn membership() {
        let f = FieldCtx::new(3, 1).unwrap();
        let lat = hnf_reduce(&f, &[vec![p(&[0, 1]), p(&[1])], vec![Poly::zero(), p(&[0, 1])]]).unwrap();
        assert!(lat.contains_vector(&f, &[p(&[0, 1]), p(&[1])]));
        assert!(lat.contains_vector(&f, &[Poly::zero(), p(&[0, 0, 1])]));
        assert!(!lat.contains_vector(&f, &[Poly::zero(), p(&[1])]));
        assert!(Lattice::standard(2).contains(&f, &lat));
        assert!(!lat.contains(&f, &Lattice::standard(2)));
    }
}
