//! Left duality, available only on finite-domain objects.

use std::collections::BTreeMap;

use super::{MatCat, MatMorphism, MatObject, Mor, Obj};
use crate::base::BraidedCategory;
use crate::error::{Error, Result};
use crate::index::{pair, unpair, Index};

impl<C: BraidedCategory> MatCat<C> {
    pub fn dual_obj_m(&self, f: &Obj<C>) -> Obj<C> {
        f.dual()
    }

    /// `D_f: f*⊗f → I`, `D_f(v, ∗) = δ_{x*_v, x_v} d_{f(x_v)}`.
    pub fn eval_m(&self, f: &Obj<C>) -> Mor<C> {
        let base = self.base.clone();
        let obj = f.clone();
        MatMorphism::from_fn(format!("D_{f}"), f.dual().tensor(f), MatObject::unit(), move |v| {
            let (xs, x) = unpair(v);
            let mut row = BTreeMap::new();
            if xs == x {
                row.insert(Index::star(), base.eval_c(&obj.fiber(&x)?));
            }
            Ok(row)
        })
    }

    /// `B_f: I → f⊗f*`, `B_f(∗, v) = δ_{x_v, x*_v} b_{f(x_v)}`. Its single row
    /// has support `|S_f|`, so it is a morphism only when `S_f` is finite.
    pub fn coev_m(&self, f: &Obj<C>) -> Result<Mor<C>> {
        let members = f.members().ok_or(Error::DualityObstruction)?;
        let base = self.base.clone();
        let obj = f.clone();
        Ok(MatMorphism::from_fn(format!("B_{f}"), MatObject::unit(), f.tensor(&f.dual()), move |_| {
            members
                .iter()
                .map(|x| Ok((pair(x, x), base.coev_c(&obj.fiber(x)?))))
                .collect()
        }))
    }
}
