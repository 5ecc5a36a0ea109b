//! The matrix category over a base category: objects are index-set families
//! of base objects, morphisms are row-finite matrices of base morphisms.
//!
//! Rows are computed lazily but always come back as a fully materialized
//! finite map holding only nonzero entries, so row-finiteness is structural.

mod duality;
pub mod laws;
mod structure;
mod sum;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::base::{BaseObject, BraidedCategory, Morphism};
use crate::error::{Error, Result};
use crate::index::{pair, unpair, Index, IndexSet};
use crate::linalg::Q;

pub use structure::{assoc, units, Side};
pub use sum::{decomposition_iso, embed_mor, embed_obj, embedded_identity, singleton_decomposition, Coproduct};

/// A named, computable family of base objects, used for objects whose index
/// set is infinite. Families are compared by name.
pub trait Family<O>: Send + Sync {
    fn name(&self) -> String;
    fn fiber(&self, i: &Index) -> Result<O>;
}

enum Node<O> {
    Table(IndexSet, BTreeMap<Index, O>),
    Tensor(IndexSet, MatObject<O>, MatObject<O>),
    Dual(MatObject<O>),
    Family(IndexSet, Arc<dyn Family<O>>),
}

/// An object: a family `f: S_f → Obj(C)` over a decidable index set.
pub struct MatObject<O> {
    node: Arc<Node<O>>,
}

impl<O> Clone for MatObject<O> {
    fn clone(&self) -> Self {
        Self {
            node: Arc::clone(&self.node),
        }
    }
}

impl<O: BaseObject> PartialEq for MatObject<O> {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.node, &other.node) {
            return true;
        }
        match (&*self.node, &*other.node) {
            (Node::Table(_, a), Node::Table(_, b)) => a == b,
            (Node::Tensor(_, a1, b1), Node::Tensor(_, a2, b2)) => a1 == a2 && b1 == b2,
            (Node::Dual(a), Node::Dual(b)) => a == b,
            (Node::Family(s1, f1), Node::Family(s2, f2)) => s1 == s2 && f1.name() == f2.name(),
            _ => false,
        }
    }
}

impl<O: BaseObject> Eq for MatObject<O> {}

impl<O: BaseObject> MatObject<O> {
    /// A finite family given by its table of fibers.
    pub fn from_table<I: IntoIterator<Item = (Index, O)>>(fibers: I) -> Self {
        let map: BTreeMap<Index, O> = fibers.into_iter().collect();
        let set = IndexSet::finite(map.keys().cloned());
        Self {
            node: Arc::new(Node::Table(set, map)),
        }
    }

    pub fn singleton(at: Index, fiber: O) -> Self {
        Self::from_table([(at, fiber)])
    }

    /// The unit object: the base unit at the base point `∗ = 0`.
    pub fn unit() -> Self {
        Self::singleton(Index::star(), O::unit())
    }

    pub fn family(set: IndexSet, family: Arc<dyn Family<O>>) -> Self {
        Self {
            node: Arc::new(Node::Family(set, family)),
        }
    }

    pub fn index_set(&self) -> IndexSet {
        match &*self.node {
            Node::Table(s, _) | Node::Tensor(s, _, _) | Node::Family(s, _) => s.clone(),
            Node::Dual(inner) => inner.index_set(),
        }
    }

    pub fn contains(&self, i: &Index) -> bool {
        match &*self.node {
            Node::Table(_, m) => m.contains_key(i),
            Node::Tensor(s, _, _) | Node::Family(s, _) => s.member(i),
            Node::Dual(inner) => inner.contains(i),
        }
    }

    pub fn check_member(&self, i: &Index) -> Result<()> {
        if self.contains(i) {
            Ok(())
        } else {
            Err(Error::NotMember {
                index: i.clone(),
                set: self.index_set().to_string(),
            })
        }
    }

    pub fn fiber(&self, i: &Index) -> Result<O> {
        self.check_member(i)?;
        match &*self.node {
            Node::Table(_, m) => Ok(m[i].clone()),
            Node::Tensor(_, l, r) => {
                let (x, y) = unpair(i);
                Ok(l.fiber(&x)?.tensor(&r.fiber(&y)?))
            }
            Node::Dual(inner) => Ok(inner.fiber(i)?.dual()),
            Node::Family(_, f) => f.fiber(i),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.index_set().is_finite()
    }

    /// Members of the index set, `None` when infinite.
    pub fn members(&self) -> Option<Vec<Index>> {
        match &*self.node {
            Node::Table(_, m) => Some(m.keys().cloned().collect()),
            _ => self.index_set().members(),
        }
    }

    /// The two factors, if this object was built as a tensor product.
    pub fn factors(&self) -> Option<(&MatObject<O>, &MatObject<O>)> {
        match &*self.node {
            Node::Tensor(_, l, r) => Some((l, r)),
            _ => None,
        }
    }

    /// `f ⊗ g` on `γ(S_f × S_g)`, fiber `f(x_z) ⊗ g(y_z)`.
    pub fn tensor(&self, other: &MatObject<O>) -> MatObject<O> {
        let set = IndexSet::pair_image(self.index_set(), other.index_set());
        Self {
            node: Arc::new(Node::Tensor(set, self.clone(), other.clone())),
        }
    }

    /// The pointwise dual `f*(x) = f(x)*`.
    pub fn dual(&self) -> MatObject<O> {
        Self {
            node: Arc::new(Node::Dual(self.clone())),
        }
    }
}

impl<O: BaseObject> fmt::Display for MatObject<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.node {
            Node::Table(_, m) => {
                if m.len() == 1 && m.keys().next() == Some(&Index::star()) && m.values().next() == Some(&O::unit()) {
                    return write!(f, "I");
                }
                let parts: Vec<String> = m.iter().map(|(k, v)| format!("{k}:{v}")).collect();
                write!(f, "⟨{}⟩", parts.join(", "))
            }
            Node::Tensor(_, l, r) => write!(f, "({l}⊗{r})"),
            Node::Dual(inner) => write!(f, "{inner}*"),
            Node::Family(_, fam) => write!(f, "{}", fam.name()),
        }
    }
}

impl<O: BaseObject> fmt::Debug for MatObject<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A row of a matrix morphism: nonzero entries only.
pub type Row<O> = BTreeMap<Index, Morphism<O>>;

type RowFn<O> = dyn Fn(&Index) -> Result<Row<O>> + Send + Sync;

/// A morphism `F: f → g` given row by row. `row(x)` is the finite support
/// `S^F_x` with its entries `F(x, y): f(x) → g(y)`.
pub struct MatMorphism<O> {
    dom: MatObject<O>,
    cod: MatObject<O>,
    rows: Arc<RowFn<O>>,
    label: Arc<str>,
}

impl<O> Clone for MatMorphism<O> {
    fn clone(&self) -> Self {
        Self {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            rows: Arc::clone(&self.rows),
            label: Arc::clone(&self.label),
        }
    }
}

impl<O: BaseObject> fmt::Debug for MatMorphism<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} → {}", self.label, self.dom, self.cod)
    }
}

impl<O: BaseObject> MatMorphism<O> {
    pub fn from_fn<F>(label: impl Into<String>, dom: MatObject<O>, cod: MatObject<O>, rows: F) -> Self
    where
        F: Fn(&Index) -> Result<Row<O>> + Send + Sync + 'static,
    {
        Self {
            dom,
            cod,
            rows: Arc::new(rows),
            label: Arc::from(label.into()),
        }
    }

    pub fn dom(&self) -> &MatObject<O> {
        &self.dom
    }

    pub fn cod(&self) -> &MatObject<O> {
        &self.cod
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = Arc::from(label.into());
        self
    }

    /// The row at `x`, type-checked entry by entry.
    pub fn row(&self, x: &Index) -> Result<Row<O>> {
        self.dom.check_member(x)?;
        let src = self.dom.fiber(x)?;
        let mut row = (self.rows)(x)?;
        row.retain(|_, m| !m.is_zero());
        for (y, m) in &row {
            let dst = self.cod.fiber(y)?;
            if m.src() != &src || m.dst() != &dst {
                return Err(Error::Mismatch(format!(
                    "{}: entry ({x}, {y}) is {} → {}, expected {src} → {dst}",
                    self.label,
                    m.src(),
                    m.dst()
                )));
            }
        }
        Ok(row)
    }

    /// The single entry `F(x, y)`, zero when `y` is outside the row support.
    pub fn entry(&self, x: &Index, y: &Index) -> Result<Morphism<O>> {
        self.cod.check_member(y)?;
        let row = self.row(x)?;
        match row.get(y) {
            Some(m) => Ok(m.clone()),
            None => Ok(Morphism::zero(&self.dom.fiber(x)?, &self.cod.fiber(y)?)),
        }
    }

    /// `self ∘ f`: `(G∘F)(x, y) = Σ_{z ∈ S^F_x} G(z, y) ∘ F(x, z)`.
    pub fn compose(&self, f: &MatMorphism<O>) -> Result<MatMorphism<O>> {
        if f.cod != self.dom {
            return Err(Error::Mismatch(format!(
                "compose {} after {}: {} ≠ {}",
                self.label, f.label, f.cod, self.dom
            )));
        }
        let (g, f) = (self.clone(), f.clone());
        let label = format!("{}∘{}", g.label, f.label);
        let (dom, cod) = (f.dom.clone(), g.cod.clone());
        Ok(MatMorphism::from_fn(label, dom, cod, move |x| {
            let mut acc: Row<O> = BTreeMap::new();
            for (z, fxz) in f.row(x)? {
                for (y, gzy) in g.row(&z)? {
                    let term = gzy.compose(&fxz)?;
                    let merged = match acc.remove(&y) {
                        Some(prev) => prev.add(&term)?,
                        None => term,
                    };
                    acc.insert(y, merged);
                }
            }
            Ok(acc)
        }))
    }

    pub fn then(&self, g: &MatMorphism<O>) -> Result<MatMorphism<O>> {
        g.compose(self)
    }

    pub fn add(&self, g: &MatMorphism<O>) -> Result<MatMorphism<O>> {
        if self.dom != g.dom || self.cod != g.cod {
            return Err(Error::Mismatch(format!("add {} and {}", self.label, g.label)));
        }
        let (f, g) = (self.clone(), g.clone());
        let label = format!("({}+{})", f.label, g.label);
        Ok(MatMorphism::from_fn(label, f.dom.clone(), f.cod.clone(), move |x| {
            let mut acc = f.row(x)?;
            for (y, m) in g.row(x)? {
                let merged = match acc.remove(&y) {
                    Some(prev) => prev.add(&m)?,
                    None => m,
                };
                acc.insert(y, merged);
            }
            Ok(acc)
        }))
    }

    pub fn scale(&self, s: &Q) -> MatMorphism<O> {
        let (f, s) = (self.clone(), s.clone());
        let label = format!("{}·{}", s, f.label);
        MatMorphism::from_fn(label, f.dom.clone(), f.cod.clone(), move |x| {
            Ok(f.row(x)?.into_iter().map(|(y, m)| (y, m.scale(&s))).collect())
        })
    }

    pub fn neg(&self) -> MatMorphism<O> {
        self.scale(&-<Q as num_traits::One>::one()).relabel(format!("−{}", self.label))
    }

    /// `(F⊗G)(z, z') = F(x_z, x'_{z'}) ⊗ G(y_z, y'_{z'})`.
    pub fn tensor(&self, g: &MatMorphism<O>) -> MatMorphism<O> {
        let (f, g) = (self.clone(), g.clone());
        let label = format!("({}⊗{})", f.label, g.label);
        let dom = f.dom.tensor(&g.dom);
        let cod = f.cod.tensor(&g.cod);
        MatMorphism::from_fn(label, dom, cod, move |z| {
            let (x, y) = unpair(z);
            let (frow, grow) = (f.row(&x)?, g.row(&y)?);
            let mut out = BTreeMap::new();
            for (x2, fe) in &frow {
                for (y2, ge) in &grow {
                    out.insert(pair(x2, y2), fe.tensor(ge));
                }
            }
            Ok(out)
        })
    }

    /// Whether the rows at `probes` coincide exactly with those of `other`.
    pub fn equal_on_rows(&self, other: &MatMorphism<O>, probes: &[Index]) -> Result<bool> {
        Ok(self.first_row_difference(other, probes)?.is_none())
    }

    /// The first probe row where `self` and `other` differ, with a description.
    pub fn first_row_difference(&self, other: &MatMorphism<O>, probes: &[Index]) -> Result<Option<(Index, String)>> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(Error::Mismatch(format!(
                "comparing {}: {} → {} with {}: {} → {}",
                self.label, self.dom, self.cod, other.label, other.dom, other.cod
            )));
        }
        for x in probes {
            let (a, b) = (self.row(x)?, other.row(x)?);
            if a != b {
                return Ok(Some((x.clone(), describe_row_diff(&a, &b))));
            }
        }
        Ok(None)
    }

    /// Exhaustive equality over a finite domain.
    pub fn equal_exhaustive(&self, other: &MatMorphism<O>) -> Result<bool> {
        let members = self
            .dom
            .members()
            .ok_or_else(|| Error::Usage("exhaustive comparison needs a finite domain".into()))?;
        self.equal_on_rows(other, &members)
    }
}

fn describe_row_diff<O: BaseObject>(a: &Row<O>, b: &Row<O>) -> String {
    let ka: Vec<&Index> = a.keys().collect();
    let kb: Vec<&Index> = b.keys().collect();
    if ka != kb {
        return format!("supports differ: {ka:?} vs {kb:?}");
    }
    for (y, m) in a {
        let n = &b[y];
        if m != n {
            if m.src() != n.src() || m.dst() != n.dst() {
                return format!("entry at {y}: types differ ({:?} vs {:?})", m, n);
            }
            return format!(
                "entry at {y}: max |Δ| = {} ({:?} vs {:?})",
                m.matrix().max_abs_diff(n.matrix()),
                m.matrix(),
                n.matrix()
            );
        }
    }
    "rows differ".into()
}

/// `Id_f(x, y) = δ_{x,y} id_{f(x)}`.
pub fn mat_id<O: BaseObject>(f: &MatObject<O>) -> MatMorphism<O> {
    let obj = f.clone();
    MatMorphism::from_fn(format!("Id_{f}"), f.clone(), f.clone(), move |x| {
        Ok(BTreeMap::from([(x.clone(), Morphism::identity(&obj.fiber(x)?))]))
    })
}

pub fn mat_zero<O: BaseObject>(f: &MatObject<O>, g: &MatObject<O>) -> MatMorphism<O> {
    MatMorphism::from_fn("0", f.clone(), g.clone(), |_| Ok(BTreeMap::new()))
}

pub fn mat_add<O: BaseObject>(f: &MatMorphism<O>, g: &MatMorphism<O>) -> Result<MatMorphism<O>> {
    f.add(g)
}

pub fn mat_compose<O: BaseObject>(g: &MatMorphism<O>, f: &MatMorphism<O>) -> Result<MatMorphism<O>> {
    g.compose(f)
}

pub fn tensor_obj_m<O: BaseObject>(f: &MatObject<O>, g: &MatObject<O>) -> MatObject<O> {
    f.tensor(g)
}

pub fn tensor_mor_m<O: BaseObject>(f: &MatMorphism<O>, g: &MatMorphism<O>) -> MatMorphism<O> {
    f.tensor(g)
}

/// The matrix category over a braided base category `C`.
#[derive(Clone, Debug)]
pub struct MatCat<C> {
    base: C,
}

impl<C: BraidedCategory> MatCat<C> {
    pub fn new(base: C) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &C {
        &self.base
    }
}

/// Shorthand for the object and morphism types over a category `C`.
pub type Obj<C> = MatObject<<C as BraidedCategory>::Obj>;
pub type Mor<C> = MatMorphism<<C as BraidedCategory>::Obj>;

#[cfg(test)]
mod tests;
