//! Exact sparse matrices over the rationals.
//!
//! Rows are stored as column-sorted lists of nonzero entries, so two matrices
//! are equal as values iff they are equal as data.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `base^exp` for a signed exponent. `base` must be nonzero when `exp < 0`.
pub fn q_pow(base: &Q, exp: i64) -> Q {
    let mut acc = Q::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= base;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, Q)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            nrows: n,
            ncols: n,
            rows: (0..n).map(|i| vec![(i, Q::one())]).collect(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets<I>(nrows: usize, ncols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Q)>,
    {
        let mut acc: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); nrows];
        for (r, c, v) in entries {
            assert!(r < nrows && c < ncols, "triplet ({r}, {c}) out of bounds");
            *acc[r].entry(c).or_insert_with(Q::zero) += v;
        }
        let rows = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Self { nrows, ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        match self.rows[r].binary_search_by_key(&c, |(col, _)| *col) {
            Ok(pos) => self.rows[r][pos].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn row(&self, r: usize) -> &[(usize, Q)] {
        &self.rows[r]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols, rhs.nrows, "inner dimensions differ");
        let mut rows = Vec::with_capacity(self.nrows);
        for row in &self.rows {
            let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
            for (k, a) in row {
                for (c, b) in &rhs.rows[*k] {
                    *acc.entry(*c).or_insert_with(Q::zero) += a * b;
                }
            }
            rows.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        SparseMatrix {
            nrows: self.nrows,
            ncols: rhs.ncols,
            rows,
        }
    }

    pub fn add(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        let entries = self
            .entries()
            .chain(rhs.entries())
            .map(|(r, c, v)| (r, c, v.clone()));
        SparseMatrix::from_triplets(self.nrows, self.ncols, entries)
    }

    pub fn neg(&self) -> SparseMatrix {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, s: &Q) -> SparseMatrix {
        if s.is_zero() {
            return SparseMatrix::zeros(self.nrows, self.ncols);
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, v * s)).collect())
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows,
        }
    }

    /// Kronecker product with row-major pairing: entry `((i, k), (j, l))`
    /// lives at `(i * rhs.nrows + k, j * rhs.ncols + l)`.
    pub fn kron(&self, rhs: &SparseMatrix) -> SparseMatrix {
        let nrows = self.nrows * rhs.nrows;
        let ncols = self.ncols * rhs.ncols;
        let mut rows = Vec::with_capacity(nrows);
        for arow in &self.rows {
            for brow in &rhs.rows {
                let mut row = Vec::with_capacity(arow.len() * brow.len());
                for (j, a) in arow {
                    for (l, b) in brow {
                        row.push((j * rhs.ncols + l, a * b));
                    }
                }
                rows.push(row);
            }
        }
        SparseMatrix { nrows, ncols, rows }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let entries = self.entries().map(|(r, c, v)| (c, r, v.clone()));
        SparseMatrix::from_triplets(self.ncols, self.nrows, entries)
    }

    /// Exact inverse by Gauss-Jordan elimination, `None` if singular or non-square.
    pub fn inverse(&self) -> Option<SparseMatrix> {
        if self.nrows != self.ncols {
            return None;
        }
        let n = self.nrows;
        let mut a = self.to_dense();
        let mut inv: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = &a[col][j] / &p;
                inv[col][j] = &inv[col][j] / &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..n {
                        let t = &f * &a[col][j];
                        a[r][j] -= t;
                        let t = &f * &inv[col][j];
                        inv[r][j] -= t;
                    }
                }
            }
        }
        Some(SparseMatrix::from_dense(&inv))
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.ncols]; self.nrows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn from_dense(rows: &[Vec<Q>]) -> SparseMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let entries = rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(c, v)| (r, c, v.clone()))
        });
        SparseMatrix::from_triplets(nrows, ncols, entries)
    }

    /// Largest absolute entry of `self - other`, used for failure witnesses.
    pub fn max_abs_diff(&self, other: &SparseMatrix) -> Q {
        if (self.nrows, self.ncols) != (other.nrows, other.ncols) {
            return Q::one();
        }
        self.add(&other.neg())
            .entries()
            .map(|(_, _, v)| v.abs())
            .max()
            .unwrap_or_else(Q::zero)
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.to_dense().iter().enumerate() {
            if r > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        let dense: Vec<Vec<Q>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| q_int(v)).collect())
            .collect();
        SparseMatrix::from_dense(&dense)
    }

    #[test]
    fn scalar_product() {
        assert_eq!(m(&[&[2]]).mul(&m(&[&[3]])), m(&[&[6]]));
    }

    #[test]
    fn kron_layout_is_row_major() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        // ((i,k),(j,l)) -> a[i][j] * b[k][l]
        for i in 0..2 {
            for j in 0..2 {
                for r in 0..2 {
                    for l in 0..2 {
                        assert_eq!(k.get(i * 2 + r, j * 2 + l), a.get(i, j) * b.get(r, l));
                    }
                }
            }
        }
    }

    #[test]
    fn zeros_are_never_stored() {
        let a = m(&[&[1, -1]]);
        let s = a.add(&a.neg());
        assert!(s.is_zero());
        assert_eq!(s.nnz(), 0);
        assert_eq!(s, SparseMatrix::zeros(1, 2));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[0, 2], &[3, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), SparseMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn negative_powers() {
        let two = q_int(2);
        assert_eq!(q_pow(&two, -3) * q_int(8), Q::one());
        assert_eq!(q_pow(&two, 0), Q::one());
    }
}
