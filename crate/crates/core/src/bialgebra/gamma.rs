//! The base-level isomorphisms behind the multiplication of `h̄`.

use crate::base::{BaseObject, BraidedCategory, Dir, Morphism};
use crate::error::Result;

/// `γ_{x,y}: y*⊗x* → (x⊗y)*`, the composite
/// `(d_y ⊗ id)(id ⊗ d_x ⊗ id)(id ⊗ b_{x⊗y})`.
pub fn gamma_dual<C: BraidedCategory>(c: &C, x: &C::Obj, y: &C::Obj) -> Result<Morphism<C::Obj>> {
    let xy = x.tensor(y);
    let id = |o: &C::Obj| c.identity_c(o);
    let s1 = id(&y.dual().tensor(&x.dual())).tensor(&c.coev_c(&xy));
    let s2 = id(&y.dual()).tensor(&c.eval_c(x)).tensor(&id(&y.tensor(&xy.dual())));
    let s3 = c.eval_c(y).tensor(&id(&xy.dual()));
    s3.compose(&s2)?.compose(&s1)
}

/// `Γ_{x,y}: y*⊗y⊗x*⊗x → (x⊗y)*⊗(x⊗y)`, the composite
/// `(γ_{x,y} ⊗ c_{y,x}) ∘ (id_{y*} ⊗ c_{y,x*} ⊗ id_x)`.
pub fn big_gamma<C: BraidedCategory>(c: &C, x: &C::Obj, y: &C::Obj) -> Result<Morphism<C::Obj>> {
    let inner = c
        .identity_c(&y.dual())
        .tensor(&c.braid_c(y, &x.dual(), Dir::Forward))
        .tensor(&c.identity_c(x));
    let outer = gamma_dual(c, x, y)?.tensor(&c.braid_c(y, x, Dir::Forward));
    outer.compose(&inner)
}

/// The identity matrix placed between the endpoints of `Γ_{x,y}`, ignoring
/// basis labels. Used only to check that the suite notices a wrong `Γ`.
pub fn positional_identity<O: BaseObject>(x: &O, y: &O) -> Morphism<O> {
    let src = y.dual().tensor(y).tensor(&x.dual()).tensor(x);
    let dst = x.tensor(y).dual().tensor(&x.tensor(y));
    Morphism::new(src.clone(), dst, crate::linalg::SparseMatrix::identity(src.dim()))
}
