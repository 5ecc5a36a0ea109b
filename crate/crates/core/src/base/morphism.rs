use std::collections::BTreeMap;
use std::fmt;

use super::BaseObject;
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, Q};

/// A base morphism `src → dst`: a `dim(dst) × dim(src)` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Morphism<O> {
    src: O,
    dst: O,
    matrix: SparseMatrix,
}

/// A degree block of a morphism: the rows and columns of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub degree: i64,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub matrix: SparseMatrix,
}

impl<O: BaseObject> Morphism<O> {
    /// Panics if the matrix shape does not match the objects; a shape error
    /// here is always a bug in the caller, not a data error.
    pub fn new(src: O, dst: O, matrix: SparseMatrix) -> Self {
        assert_eq!(
            (matrix.nrows(), matrix.ncols()),
            (dst.dim(), src.dim()),
            "matrix shape does not match {src} → {dst}"
        );
        Self { src, dst, matrix }
    }

    pub fn identity(a: &O) -> Self {
        Self::new(a.clone(), a.clone(), SparseMatrix::identity(a.dim()))
    }

    pub fn zero(a: &O, b: &O) -> Self {
        Self::new(a.clone(), b.clone(), SparseMatrix::zeros(b.dim(), a.dim()))
    }

    pub fn src(&self) -> &O {
        &self.src
    }

    pub fn dst(&self) -> &O {
        &self.dst
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Morphism<O>) -> Result<Morphism<O>> {
        if f.dst != self.src {
            return Err(Error::Mismatch(format!(
                "compose: {} → {} after {} → {}",
                self.src, self.dst, f.src, f.dst
            )));
        }
        Ok(Self::new(f.src.clone(), self.dst.clone(), self.matrix.mul(&f.matrix)))
    }

    pub fn add(&self, g: &Morphism<O>) -> Result<Morphism<O>> {
        if self.src != g.src || self.dst != g.dst {
            return Err(Error::Mismatch(format!(
                "add: {} → {} and {} → {}",
                self.src, self.dst, g.src, g.dst
            )));
        }
        Ok(Self::new(self.src.clone(), self.dst.clone(), self.matrix.add(&g.matrix)))
    }

    pub fn neg(&self) -> Morphism<O> {
        Self::new(self.src.clone(), self.dst.clone(), self.matrix.neg())
    }

    pub fn scale(&self, s: &Q) -> Morphism<O> {
        Self::new(self.src.clone(), self.dst.clone(), self.matrix.scale(s))
    }

    pub fn tensor(&self, g: &Morphism<O>) -> Morphism<O> {
        Self::new(
            self.src.tensor(&g.src),
            self.dst.tensor(&g.dst),
            self.matrix.kron(&g.matrix),
        )
    }

    /// Two-sided inverse, if the matrix is invertible.
    pub fn inverse(&self) -> Option<Morphism<O>> {
        let inv = self.matrix.inverse()?;
        Some(Self::new(self.dst.clone(), self.src.clone(), inv))
    }

    /// True iff every nonzero entry connects basis vectors of equal degree.
    pub fn preserves_degree(&self) -> bool {
        self.matrix
            .entries()
            .all(|(r, c, _)| self.dst.degree_of(r) == self.src.degree_of(c))
    }

    /// The per-degree blocks of the matrix, in increasing degree.
    pub fn blocks(&self) -> Vec<Block> {
        let mut rows: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        let mut cols: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for r in 0..self.dst.dim() {
            rows.entry(self.dst.degree_of(r)).or_default().push(r);
        }
        for c in 0..self.src.dim() {
            cols.entry(self.src.degree_of(c)).or_default().push(c);
        }
        rows.iter()
            .filter_map(|(d, rs)| {
                let cs = cols.get(d)?;
                let entries = rs.iter().enumerate().flat_map(|(bi, &r)| {
                    cs.iter()
                        .enumerate()
                        .map(move |(bj, &c)| (bi, bj, self.matrix.get(r, c)))
                });
                Some(Block {
                    degree: *d,
                    rows: rs.clone(),
                    cols: cs.clone(),
                    matrix: SparseMatrix::from_triplets(rs.len(), cs.len(), entries),
                })
            })
            .collect()
    }
}

impl<O: BaseObject> fmt::Debug for Morphism<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → {} {:?}", self.src, self.dst, self.matrix)
    }
}
