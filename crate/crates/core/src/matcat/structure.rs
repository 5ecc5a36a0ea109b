//! Associator, unit constraints, braiding and twist of the matrix category.
//! Every one of them is a Kronecker-delta matrix: one entry per row.

use std::collections::BTreeMap;

use super::{MatCat, MatMorphism, MatObject, Mor, Obj};
use crate::base::{BaseObject, BraidedCategory, Dir, Morphism};
use crate::index::{pair, unpair, Index};

fn single<O>(y: Index, m: Morphism<O>) -> BTreeMap<Index, Morphism<O>> {
    BTreeMap::from([(y, m)])
}

/// `A_{f,g,h}: (f⊗g)⊗h → f⊗(g⊗h)` relabels `((x,y),z)` to `(x,(y,z))`
/// with identity entries; the inverse relabels back.
pub fn assoc<O: BaseObject>(f: &MatObject<O>, g: &MatObject<O>, h: &MatObject<O>, dir: Dir) -> MatMorphism<O> {
    let left = f.tensor(g).tensor(h);
    let right = f.tensor(&g.tensor(h));
    match dir {
        Dir::Forward => {
            let dom = left.clone();
            MatMorphism::from_fn(format!("A_{{{f},{g},{h}}}"), left, right, move |v| {
                let (xy, z) = unpair(v);
                let (x, y) = unpair(&xy);
                Ok(single(pair(&x, &pair(&y, &z)), Morphism::identity(&dom.fiber(v)?)))
            })
        }
        Dir::Inverse => {
            let dom = right.clone();
            MatMorphism::from_fn(format!("A⁻¹_{{{f},{g},{h}}}"), right, left, move |w| {
                let (x, yz) = unpair(w);
                let (y, z) = unpair(&yz);
                Ok(single(pair(&pair(&x, &y), &z), Morphism::identity(&dom.fiber(w)?)))
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `R_f: f⊗I → f` (right) or `L_f: I⊗f → f` (left), and their inverses.
pub fn units<O: BaseObject>(f: &MatObject<O>, side: Side, dir: Dir) -> MatMorphism<O> {
    let unit = MatObject::unit();
    let star = Index::star();
    let padded = match side {
        Side::Right => f.tensor(&unit),
        Side::Left => unit.tensor(f),
    };
    let name = match side {
        Side::Right => "R",
        Side::Left => "L",
    };
    match dir {
        Dir::Forward => {
            let dom = padded.clone();
            MatMorphism::from_fn(format!("{name}_{f}"), padded, f.clone(), move |z| {
                let (x, y) = unpair(z);
                let target = if side == Side::Right { x } else { y };
                Ok(single(target, Morphism::identity(&dom.fiber(z)?)))
            })
        }
        Dir::Inverse => {
            let obj = f.clone();
            MatMorphism::from_fn(format!("{name}⁻¹_{f}"), f.clone(), padded, move |x| {
                let target = match side {
                    Side::Right => pair(x, &star),
                    Side::Left => pair(&star, x),
                };
                Ok(single(target, Morphism::identity(&obj.fiber(x)?)))
            })
        }
    }
}

impl<C: BraidedCategory> MatCat<C> {
    pub fn assoc(&self, f: &Obj<C>, g: &Obj<C>, h: &Obj<C>, dir: Dir) -> Mor<C> {
        assoc(f, g, h, dir)
    }

    pub fn units(&self, f: &Obj<C>, side: Side, dir: Dir) -> Mor<C> {
        units(f, side, dir)
    }

    /// `C_{f,g}(v, w) = δ^{v,w}_{x;y} c_{f(x_v), g(y_v)}: f⊗g → g⊗f`; the
    /// inverse runs `g⊗f → f⊗g` with entries `c⁻¹`.
    pub fn braid_m(&self, f: &Obj<C>, g: &Obj<C>, dir: Dir) -> Mor<C> {
        let base = self.base.clone();
        let (fo, go) = (f.clone(), g.clone());
        match dir {
            Dir::Forward => MatMorphism::from_fn(format!("C_{{{f},{g}}}"), f.tensor(g), g.tensor(f), move |v| {
                let (x, y) = unpair(v);
                let c = base.braid_c(&fo.fiber(&x)?, &go.fiber(&y)?, Dir::Forward);
                Ok(single(pair(&y, &x), c))
            }),
            Dir::Inverse => MatMorphism::from_fn(format!("C⁻¹_{{{f},{g}}}"), g.tensor(f), f.tensor(g), move |w| {
                let (y, x) = unpair(w);
                let c = base.braid_c(&fo.fiber(&x)?, &go.fiber(&y)?, Dir::Inverse);
                Ok(single(pair(&x, &y), c))
            }),
        }
    }

    /// `Θ_f(x, y) = δ_{x,y} θ_{f(x)}`.
    pub fn twist_m(&self, f: &Obj<C>) -> Mor<C> {
        let base = self.base.clone();
        let obj = f.clone();
        MatMorphism::from_fn(format!("Θ_{f}"), f.clone(), f.clone(), move |x| {
            Ok(single(x.clone(), base.twist_c(&obj.fiber(x)?)))
        })
    }
}
