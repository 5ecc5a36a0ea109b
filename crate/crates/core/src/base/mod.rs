//! Small strict braided monoidal Ab-categories with left duality and twist.
//!
//! Objects carry their own strict monoidal structure ([`BaseObject`]);
//! morphisms are exact rational matrices between them ([`Morphism`]). A
//! [`BraidedCategory`] fixes the braiding and twist on top of that.

mod graded;
pub mod laws;
mod morphism;
mod plain;

use std::fmt::{Debug, Display};
use std::hash::Hash;

pub use graded::{GradedObject, GradedVect};
pub use morphism::{Block, Morphism};
pub use plain::{PlainObject, PlainVect};

use crate::error::Result;
use crate::linalg::{SparseMatrix, Q};

/// Direction of a structure isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dir {
    Forward,
    Inverse,
}

/// An object of a strict monoidal category with left duals whose morphisms
/// are matrices over a chosen basis.
///
/// Tensor must be strictly associative and unital as data, and the basis of
/// `a ⊗ b` is the row-major product of the bases of `a` and `b`.
pub trait BaseObject: Clone + Eq + Hash + Ord + Debug + Display + Send + Sync + 'static {
    fn unit() -> Self;
    fn tensor(&self, other: &Self) -> Self;
    fn dual(&self) -> Self;
    fn dim(&self) -> usize;

    /// Degree of the `i`-th basis vector; ungraded objects live in degree 0.
    fn degree_of(&self, _i: usize) -> i64 {
        0
    }
}

pub trait BraidedCategory: Clone + Debug + Send + Sync + 'static {
    type Obj: BaseObject;

    fn name(&self) -> String;

    /// `c_{a,b}: a⊗b → b⊗a`, or its inverse `b⊗a → a⊗b`.
    fn braid_c(&self, a: &Self::Obj, b: &Self::Obj, dir: Dir) -> Morphism<Self::Obj>;

    fn twist_c(&self, a: &Self::Obj) -> Morphism<Self::Obj>;

    fn unit(&self) -> Self::Obj {
        Self::Obj::unit()
    }

    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj {
        a.tensor(b)
    }

    fn dual_obj(&self, a: &Self::Obj) -> Self::Obj {
        a.dual()
    }

    fn identity_c(&self, a: &Self::Obj) -> Morphism<Self::Obj> {
        Morphism::identity(a)
    }

    fn zero_c(&self, a: &Self::Obj, b: &Self::Obj) -> Morphism<Self::Obj> {
        Morphism::zero(a, b)
    }

    fn add_c(&self, f: &Morphism<Self::Obj>, g: &Morphism<Self::Obj>) -> Result<Morphism<Self::Obj>> {
        f.add(g)
    }

    fn compose_c(&self, g: &Morphism<Self::Obj>, f: &Morphism<Self::Obj>) -> Result<Morphism<Self::Obj>> {
        g.compose(f)
    }

    fn tensor_c(&self, f: &Morphism<Self::Obj>, g: &Morphism<Self::Obj>) -> Morphism<Self::Obj> {
        f.tensor(g)
    }

    /// `d_a: a*⊗a → I`, the canonical pairing.
    fn eval_c(&self, a: &Self::Obj) -> Morphism<Self::Obj> {
        let n = a.dim();
        let m = SparseMatrix::from_triplets(1, n * n, (0..n).map(|i| (0, i * n + i, Q::from_integer(1.into()))));
        Morphism::new(a.dual().tensor(a), Self::Obj::unit(), m)
    }

    /// `b_a: I → a⊗a*`, the canonical copairing.
    fn coev_c(&self, a: &Self::Obj) -> Morphism<Self::Obj> {
        let n = a.dim();
        let m = SparseMatrix::from_triplets(n * n, 1, (0..n).map(|i| (i * n + i, 0, Q::from_integer(1.into()))));
        Morphism::new(Self::Obj::unit(), a.tensor(&a.dual()), m)
    }

    /// Dual of a morphism `f: a → b` as `f*: b* → a*` (transpose in dual bases).
    fn dual_mor(&self, f: &Morphism<Self::Obj>) -> Morphism<Self::Obj> {
        Morphism::new(f.dst().dual(), f.src().dual(), f.matrix().transpose())
    }
}

#[cfg(test)]
mod tests;
