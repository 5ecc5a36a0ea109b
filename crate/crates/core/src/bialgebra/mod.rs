//! The bialgebra `h̄ = ⊕_x h(x)*⊗h(x)` in the matrix category.

mod encoding;
mod gamma;
mod suite;

use std::collections::BTreeMap;
use std::marker::PhantomData;
use std::sync::Arc;

pub use encoding::{chi, x0, Encodable};
pub use gamma::{big_gamma, gamma_dual, positional_identity};
pub use suite::{probe_objects, SuiteConfig};

use crate::base::{BaseObject, BraidedCategory, Dir, Morphism};
use crate::coherence::{TensorWord, TypedMor};
use crate::error::Result;
use crate::index::{pair, unpair, Index, IndexSet};
use crate::matcat::{assoc, mat_id, Family, MatCat, MatMorphism, MatObject, Obj};

/// Deliberate defects, used to confirm the suite can fail.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mutation {
    #[default]
    None,
    /// `Γ` replaced by a positional identity matrix.
    GammaIdentity,
    /// The braiding in the middle of `μ̂` replaced by the identity.
    DropMiddleBraid,
}

struct HBarFamily<O>(PhantomData<fn() -> O>);

impl<O: Encodable> Family<O> for HBarFamily<O> {
    fn name(&self) -> String {
        "h̄".into()
    }

    fn fiber(&self, i: &Index) -> Result<O> {
        let (x, _) = unpair(i);
        let hx = O::decode(&x)?;
        Ok(hx.dual().tensor(&hx))
    }
}

/// `γ(x, x)`, the index of the summand `h(x)*⊗h(x)`.
pub fn diag(x: &Index) -> Index {
    pair(x, x)
}

#[derive(Clone)]
pub struct Bialgebra<C: BraidedCategory> {
    cat: MatCat<C>,
    h: Obj<C>,
    mutation: Mutation,
}

impl<C: BraidedCategory> Bialgebra<C>
where
    C::Obj: Encodable,
{
    pub fn new(base: C) -> Self {
        Self::with_mutation(base, Mutation::None)
    }

    pub fn with_mutation(base: C, mutation: Mutation) -> Self {
        let h = MatObject::family(
            IndexSet::diag_image(IndexSet::AllNaturals),
            Arc::new(HBarFamily::<C::Obj>(PhantomData)),
        );
        Self {
            cat: MatCat::new(base),
            h,
            mutation,
        }
    }

    pub fn cat(&self) -> &MatCat<C> {
        &self.cat
    }

    pub fn base(&self) -> &C {
        self.cat.base()
    }

    pub fn mutation(&self) -> Mutation {
        self.mutation
    }

    /// The object `h̄` on `γ(Δ S_h)`.
    pub fn h(&self) -> &Obj<C> {
        &self.h
    }

    pub fn x0(&self) -> Index {
        x0::<C::Obj>()
    }

    /// `Γ_{x,y}`, or its mutated stand-in.
    pub fn gamma(&self, x: &C::Obj, y: &C::Obj) -> Result<Morphism<C::Obj>> {
        match self.mutation {
            Mutation::GammaIdentity => Ok(positional_identity(x, y)),
            _ => big_gamma(self.base(), x, y),
        }
    }

    /// `μ: h̄⊗h̄ → h̄`, `μ(v, γ(z,z)) = δ_{z, χ(y_v, x_v)} Γ_{h(y_v), h(x_v)}`.
    pub fn mu(&self) -> MatMorphism<C::Obj> {
        let me = self.clone();
        MatMorphism::from_fn("μ", self.h.tensor(&self.h), self.h.clone(), move |v| {
            let (gx, gy) = unpair(v);
            let (x, y) = (unpair(&gx).0, unpair(&gy).0);
            let z = chi::<C::Obj>(&y, &x)?;
            let entry = me.gamma(&C::Obj::decode(&y)?, &C::Obj::decode(&x)?)?;
            Ok(BTreeMap::from([(diag(&z), entry)]))
        })
    }

    /// `η: I → h̄`, `η(∗, γ(y,y)) = δ_{x₀,y} id_I`.
    pub fn eta(&self) -> MatMorphism<C::Obj> {
        let target = diag(&self.x0());
        MatMorphism::from_fn("η", MatObject::unit(), self.h.clone(), move |_| {
            Ok(BTreeMap::from([(target.clone(), Morphism::identity(&C::Obj::unit()))]))
        })
    }

    /// `Δ: h̄ → h̄⊗h̄`, entry `id_{h(x)*} ⊗ b_{h(x)} ⊗ id_{h(x)}` at `(γ(x,x), γ(x,x))`.
    pub fn delta(&self) -> MatMorphism<C::Obj> {
        let base = self.base().clone();
        MatMorphism::from_fn("Δ", self.h.clone(), self.h.tensor(&self.h), move |u| {
            let hx = C::Obj::decode(&unpair(u).0)?;
            let entry = base
                .identity_c(&hx.dual())
                .tensor(&base.coev_c(&hx))
                .tensor(&base.identity_c(&hx));
            Ok(BTreeMap::from([(pair(u, u), entry)]))
        })
    }

    /// `ε: h̄ → I`, `ε(γ(x,x), ∗) = d_{h(x)}`.
    pub fn epsilon(&self) -> MatMorphism<C::Obj> {
        let base = self.base().clone();
        MatMorphism::from_fn("ε", self.h.clone(), MatObject::unit(), move |u| {
            let hx = C::Obj::decode(&unpair(u).0)?;
            Ok(BTreeMap::from([(Index::star(), base.eval_c(&hx))]))
        })
    }

    /// `μ̂: (h̄⊗h̄)⊗(h̄⊗h̄) → h̄⊗h̄`, the product on `h̄⊗h̄` through the middle braiding.
    pub fn mu_hat(&self) -> Result<TypedMor<C::Obj>> {
        let h = &self.h;
        let hh = h.tensor(h);
        let (fw, inv) = (Dir::Forward, Dir::Inverse);
        let middle = match self.mutation {
            Mutation::DropMiddleBraid => mat_id(&h.tensor(&hh)).tensor(&mat_id(h)),
            _ => mat_id(h).tensor(&self.cat.braid_m(h, h, fw)).tensor(&mat_id(h)),
        };
        let mu = self.mu();
        let stages = [
            assoc(&hh, h, h, inv),
            assoc(h, h, h, fw).tensor(&mat_id(h)),
            middle,
            assoc(h, h, h, inv).tensor(&mat_id(h)),
            assoc(&hh, h, h, fw),
            mu.tensor(&mu),
        ];
        let mut it = stages.into_iter();
        let first = it.next().expect("six stages");
        let mor = it.try_fold(first, |acc, s| s.compose(&acc))?.relabel("μ̂");
        let hw = TensorWord::leaf(h);
        let hh_w = TensorWord::node(hw.clone(), hw.clone());
        TypedMor::new(TensorWord::node(hh_w.clone(), hh_w.clone()), hh_w, mor)
    }

    /// `j_V`: the singleton object at `x₀` with fiber `V`.
    pub fn j(&self, v: &C::Obj) -> Obj<C> {
        MatObject::singleton(self.x0(), v.clone())
    }

    /// `T: h̄⊗j_V → j_V`, `T(γ(γ(x,x), x₀), x₀) = d_{h(x)} ⊗ id_V`.
    pub fn action_t(&self, v: &C::Obj) -> MatMorphism<C::Obj> {
        let base = self.base().clone();
        let (vv, at) = (v.clone(), self.x0());
        MatMorphism::from_fn("T", self.h.tensor(&self.j(v)), self.j(v), move |w| {
            let hx = C::Obj::decode(&unpair(&unpair(w).0).0)?;
            let entry = base.eval_c(&hx).tensor(&base.identity_c(&vv));
            Ok(BTreeMap::from([(at.clone(), entry)]))
        })
    }
}
