use std::fmt;

use super::{BaseObject, BraidedCategory, Dir, Morphism};
use crate::linalg::{SparseMatrix, Q};

/// A plain finite-dimensional vector space, identified by its dimension.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlainObject(pub usize);

impl BaseObject for PlainObject {
    fn unit() -> Self {
        PlainObject(1)
    }

    fn tensor(&self, other: &Self) -> Self {
        PlainObject(self.0 * other.0)
    }

    fn dual(&self) -> Self {
        *self
    }

    fn dim(&self) -> usize {
        self.0
    }
}

impl fmt::Display for PlainObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k^{}", self.0)
    }
}

impl fmt::Debug for PlainObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Vector spaces with the flip braiding and trivial twist: the symmetric control.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlainVect;

impl BraidedCategory for PlainVect {
    type Obj = PlainObject;

    fn name(&self) -> String {
        "symmetric".into()
    }

    fn braid_c(&self, a: &PlainObject, b: &PlainObject, dir: Dir) -> Morphism<PlainObject> {
        let (na, nb) = (a.0, b.0);
        let one = || Q::from_integer(1.into());
        let entries: Vec<_> = (0..na)
            .flat_map(|i| {
                (0..nb).map(move |j| match dir {
                    Dir::Forward => (j * na + i, i * nb + j, one()),
                    Dir::Inverse => (i * nb + j, j * na + i, one()),
                })
            })
            .collect();
        let m = SparseMatrix::from_triplets(na * nb, na * nb, entries);
        match dir {
            Dir::Forward => Morphism::new(a.tensor(b), b.tensor(a), m),
            Dir::Inverse => Morphism::new(b.tensor(a), a.tensor(b), m),
        }
    }

    fn twist_c(&self, a: &PlainObject) -> Morphism<PlainObject> {
        Morphism::identity(a)
    }
}
