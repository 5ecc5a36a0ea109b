//! Seeded random probes: base objects and morphisms within bounds.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;

use crate::base::{BaseObject, BraidedCategory, GradedObject, GradedVect, Morphism, PlainObject, PlainVect};
use crate::index::Index;
use crate::linalg::{q_int, SparseMatrix};
use crate::matcat::{MatMorphism, MatObject, Row};

/// Bounds for sampled base objects: basis degrees in `[-max_degree, max_degree]`,
/// total dimension at most `max_dim`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_degree: i64,
    pub max_dim: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_degree: 2,
            max_dim: 2,
        }
    }
}

pub trait Sampler: BraidedCategory {
    /// A nonzero object within `bounds`.
    fn sample_object<R: Rng>(&self, rng: &mut R, bounds: Bounds) -> Self::Obj;

    /// Every object within `bounds`, including the zero object.
    fn all_objects(&self, bounds: Bounds) -> Vec<Self::Obj>;
}

impl Sampler for GradedVect {
    fn sample_object<R: Rng>(&self, rng: &mut R, bounds: Bounds) -> GradedObject {
        let n = rng.gen_range(1..=bounds.max_dim.max(1));
        GradedObject::from_degrees(
            (0..n).map(|_| rng.gen_range(-bounds.max_degree..=bounds.max_degree)),
        )
    }

    fn all_objects(&self, bounds: Bounds) -> Vec<GradedObject> {
        let degrees: Vec<i64> = (-bounds.max_degree..=bounds.max_degree).collect();
        let mut out = vec![GradedObject::zero_object()];
        let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
        for _ in 0..bounds.max_dim {
            layer = layer
                .iter()
                .flat_map(|w| {
                    degrees.iter().map(move |d| {
                        let mut w = w.clone();
                        w.push(*d);
                        w
                    })
                })
                .collect();
            out.extend(layer.iter().cloned().map(GradedObject::from_degrees));
        }
        out
    }
}

impl Sampler for PlainVect {
    fn sample_object<R: Rng>(&self, rng: &mut R, bounds: Bounds) -> PlainObject {
        PlainObject(rng.gen_range(1..=bounds.max_dim.max(1)))
    }

    fn all_objects(&self, bounds: Bounds) -> Vec<PlainObject> {
        (0..=bounds.max_dim).map(PlainObject).collect()
    }
}

/// A random degree-preserving morphism `a → b` with small integer entries.
pub fn random_morphism<O: BaseObject, R: Rng>(rng: &mut R, a: &O, b: &O) -> Morphism<O> {
    let mut entries = Vec::new();
    for r in 0..b.dim() {
        for c in 0..a.dim() {
            if b.degree_of(r) == a.degree_of(c) && rng.gen_bool(0.7) {
                let v = rng.gen_range(-3..=3);
                entries.push((r, c, q_int(v)));
            }
        }
    }
    Morphism::new(a.clone(), b.clone(), SparseMatrix::from_triplets(b.dim(), a.dim(), entries))
}

/// A random finite-domain object: up to `max_size` distinct indices below
/// `spread`, each with a sampled nonzero fiber.
pub fn random_mat_object<C: Sampler, R: Rng>(
    c: &C,
    rng: &mut R,
    bounds: Bounds,
    max_size: usize,
    spread: u64,
) -> MatObject<C::Obj> {
    let n = rng.gen_range(1..=max_size.max(1));
    let picks: BTreeSet<u64> = (0..n).map(|_| rng.gen_range(0..spread.max(1))).collect();
    MatObject::from_table(picks.into_iter().map(|i| (Index::from(i), c.sample_object(rng, bounds))))
}

/// A random morphism between finite-domain objects; each entry is present
/// with probability one half.
pub fn random_mat_morphism<O: BaseObject, R: Rng>(rng: &mut R, f: &MatObject<O>, g: &MatObject<O>) -> MatMorphism<O> {
    let (xs, ys) = (
        f.members().expect("finite domain"),
        g.members().expect("finite codomain"),
    );
    let mut table: BTreeMap<Index, Row<O>> = BTreeMap::new();
    for x in &xs {
        let fx = f.fiber(x).expect("member");
        let mut row = Row::new();
        for y in &ys {
            if rng.gen_bool(0.5) {
                row.insert(y.clone(), random_morphism(rng, &fx, &g.fiber(y).expect("member")));
            }
        }
        table.insert(x.clone(), row);
    }
    MatMorphism::from_fn("F", f.clone(), g.clone(), move |x| Ok(table.get(x).cloned().unwrap_or_default()))
}
