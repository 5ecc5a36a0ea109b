use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{BaseObject, BraidedCategory, Dir, Morphism};
use crate::error::{Error, Result};
use crate::linalg::{q_int, q_pow, SparseMatrix, Q};

/// A finite-dimensional ℤ-graded vector space with an ordered basis, stored
/// as the degree of each basis vector.
///
/// Two objects are equal iff their degree sequences are equal. The tensor
/// product lists basis pairs `(i, j)` row-major, so it is associative and
/// unital on the nose for objects and for morphisms alike.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GradedObject(Arc<[i64]>);

impl GradedObject {
    pub fn from_degrees<I: IntoIterator<Item = i64>>(degrees: I) -> Self {
        GradedObject(degrees.into_iter().collect())
    }

    /// The canonical object with the given grade dimensions: basis sorted by
    /// degree. Zero dimensions are ignored.
    pub fn from_grades<I: IntoIterator<Item = (i64, usize)>>(grades: I) -> Self {
        let map: BTreeMap<i64, usize> = grades.into_iter().fold(BTreeMap::new(), |mut m, (d, n)| {
            *m.entry(d).or_default() += n;
            m
        });
        Self::from_degrees(map.into_iter().flat_map(|(d, n)| std::iter::repeat_n(d, n)))
    }

    pub fn zero_object() -> Self {
        Self::from_degrees([])
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    /// Degree → dimension, only positive dimensions present.
    pub fn grades(&self) -> BTreeMap<i64, usize> {
        let mut m = BTreeMap::new();
        for d in self.0.iter() {
            *m.entry(*d).or_default() += 1;
        }
        m
    }

    pub fn is_sorted(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

impl BaseObject for GradedObject {
    fn unit() -> Self {
        Self::from_degrees([0])
    }

    fn tensor(&self, other: &Self) -> Self {
        Self::from_degrees(
            self.0
                .iter()
                .flat_map(|a| other.0.iter().map(move |b| a + b)),
        )
    }

    fn dual(&self) -> Self {
        Self::from_degrees(self.0.iter().map(|d| -d))
    }

    fn dim(&self) -> usize {
        self.0.len()
    }

    fn degree_of(&self, i: usize) -> i64 {
        self.0[i]
    }
}

impl fmt::Display for GradedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_sorted() {
            let parts: Vec<String> = self.grades().iter().map(|(d, n)| format!("{d}↦{n}")).collect();
            write!(f, "{{{}}}", parts.join(","))
        } else {
            let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", parts.join(","))
        }
    }
}

impl fmt::Debug for GradedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Graded vector spaces with braiding `v⊗w ↦ q^{|v||w|} w⊗v` and twist
/// `q^{|v|²}` on homogeneous vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVect {
    q: Q,
}

impl GradedVect {
    pub fn new(q: Q) -> Result<Self> {
        if num_traits::Zero::is_zero(&q) {
            return Err(Error::Usage("braiding parameter q must be nonzero".into()));
        }
        Ok(Self { q })
    }

    pub fn with_int(q: i64) -> Result<Self> {
        Self::new(q_int(q))
    }

    pub fn q(&self) -> &Q {
        &self.q
    }
}

impl Default for GradedVect {
    fn default() -> Self {
        Self { q: q_int(2) }
    }
}

impl BraidedCategory for GradedVect {
    type Obj = GradedObject;

    fn name(&self) -> String {
        format!("graded(q={})", self.q)
    }

    fn braid_c(&self, a: &GradedObject, b: &GradedObject, dir: Dir) -> Morphism<GradedObject> {
        let (na, nb) = (a.dim(), b.dim());
        let sign = match dir {
            Dir::Forward => 1,
            Dir::Inverse => -1,
        };
        // forward: e_i⊗f_j at i*nb+j  ↦  q^{|e_i||f_j|} f_j⊗e_i at j*na+i
        let entries = (0..na).flat_map(|i| {
            (0..nb).map(move |j| {
                let s = q_pow(&self.q, sign * a.degree_of(i) * b.degree_of(j));
                match dir {
                    Dir::Forward => (j * na + i, i * nb + j, s),
                    Dir::Inverse => (i * nb + j, j * na + i, s),
                }
            })
        });
        let m = SparseMatrix::from_triplets(na * nb, na * nb, entries.collect::<Vec<_>>());
        match dir {
            Dir::Forward => Morphism::new(a.tensor(b), b.tensor(a), m),
            Dir::Inverse => Morphism::new(b.tensor(a), a.tensor(b), m),
        }
    }

    fn twist_c(&self, a: &GradedObject) -> Morphism<GradedObject> {
        let entries = (0..a.dim()).map(|i| {
            let d = a.degree_of(i);
            (i, i, q_pow(&self.q, d * d))
        });
        Morphism::new(a.clone(), a.clone(), SparseMatrix::from_triplets(a.dim(), a.dim(), entries))
    }
}
