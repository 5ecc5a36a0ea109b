//! Coproducts of families with disjoint index sets, and the embedding of
//! the base category as singleton objects.

use std::collections::{BTreeMap, BTreeSet};

use super::{mat_id, MatMorphism, MatObject};
use crate::base::{BaseObject, Morphism};
use crate::error::{Error, Result};
use crate::index::Index;

/// A coproduct `⊕ f_i` with its injections `J_k: f_k → ⊕ f_i`.
pub struct Coproduct<O> {
    pub object: MatObject<O>,
    pub injections: Vec<MatMorphism<O>>,
    summands: Vec<MatObject<O>>,
}

fn finite_members<O: BaseObject>(f: &MatObject<O>) -> Result<Vec<Index>> {
    f.members()
        .ok_or_else(|| Error::Usage(format!("coproduct summand {f} has an infinite index set")))
}

impl<O: BaseObject> Coproduct<O> {
    /// The coproduct of finite-domain families with pairwise disjoint index sets.
    pub fn new(family: &[MatObject<O>]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut table = BTreeMap::new();
        for f in family {
            for x in finite_members(f)? {
                if !seen.insert(x.clone()) {
                    return Err(Error::NotDisjoint(x));
                }
                table.insert(x.clone(), f.fiber(&x)?);
            }
        }
        let object = MatObject::from_table(table);
        let injections = family
            .iter()
            .enumerate()
            .map(|(k, f)| {
                let obj = f.clone();
                MatMorphism::from_fn(format!("J_{k}"), f.clone(), object.clone(), move |x| {
                    Ok(BTreeMap::from([(x.clone(), Morphism::identity(&obj.fiber(x)?))]))
                })
            })
            .collect();
        Ok(Self {
            object,
            injections,
            summands: family.to_vec(),
        })
    }

    pub fn summands(&self) -> &[MatObject<O>] {
        &self.summands
    }

    /// The unique `T: ⊕ f_i → g` with `T ∘ J_k = T_k`: `T(t, y) = T_k(t, y)` for `t ∈ S_k`.
    pub fn copair(&self, targets: &[MatMorphism<O>]) -> Result<MatMorphism<O>> {
        if targets.len() != self.summands.len() {
            return Err(Error::Mismatch(format!(
                "copair: {} targets for {} summands",
                targets.len(),
                self.summands.len()
            )));
        }
        let cod = match targets.first() {
            Some(t) => t.cod().clone(),
            None => return Ok(super::mat_zero(&self.object, &MatObject::from_table([]))),
        };
        for (t, f) in targets.iter().zip(&self.summands) {
            if t.dom() != f || t.cod() != &cod {
                return Err(Error::Mismatch(format!("copair: {t:?} does not fit summand {f}")));
            }
        }
        let parts: Vec<(MatObject<O>, MatMorphism<O>)> = self.summands.iter().cloned().zip(targets.iter().cloned()).collect();
        Ok(MatMorphism::from_fn("[T_i]", self.object.clone(), cod, move |t| {
            let (_, tk) = parts
                .iter()
                .find(|(f, _)| f.contains(t))
                .ok_or_else(|| Error::NotMember {
                    index: t.clone(),
                    set: "coproduct".into(),
                })?;
            tk.row(t)
        }))
    }
}

/// Decomposition of a finite-domain object into its singleton restrictions.
pub fn singleton_decomposition<O: BaseObject>(f: &MatObject<O>) -> Result<Coproduct<O>> {
    let parts: Vec<MatObject<O>> = finite_members(f)?
        .into_iter()
        .map(|x| f.fiber(&x).map(|v| MatObject::singleton(x, v)))
        .collect::<Result<_>>()?;
    Coproduct::new(&parts)
}

/// The comparison `⊕_x f|_{x} → f` built by copairing the restriction maps.
pub fn decomposition_iso<O: BaseObject>(f: &MatObject<O>) -> Result<(Coproduct<O>, MatMorphism<O>)> {
    let sum = singleton_decomposition(f)?;
    let restrictions: Vec<MatMorphism<O>> = sum
        .summands()
        .iter()
        .map(|s| {
            let obj = s.clone();
            MatMorphism::from_fn("ι", s.clone(), f.clone(), move |x| {
                Ok(BTreeMap::from([(x.clone(), Morphism::identity(&obj.fiber(x)?))]))
            })
        })
        .collect();
    let iso = sum.copair(&restrictions)?;
    Ok((sum, iso))
}

/// `J(V)`: the singleton family at `at` with fiber `V`.
pub fn embed_obj<O: BaseObject>(v: &O, at: Index) -> MatObject<O> {
    MatObject::singleton(at, v.clone())
}

/// `J(α)` with the single entry `F_α(from, to) = α`.
pub fn embed_mor<O: BaseObject>(alpha: &Morphism<O>, from: Index, to: Index) -> MatMorphism<O> {
    let dom = embed_obj(alpha.src(), from);
    let cod = embed_obj(alpha.dst(), to.clone());
    let a = alpha.clone();
    MatMorphism::from_fn(format!("J({a:?})"), dom, cod, move |_| Ok(BTreeMap::from([(to.clone(), a.clone())])))
}

/// `Id` on a singleton object agrees with the embedded identity.
pub fn embedded_identity<O: BaseObject>(v: &O, at: Index) -> MatMorphism<O> {
    mat_id(&embed_obj(v, at))
}
