//! Parenthesized tensor words, the canonical isomorphisms between words with
//! the same factors, and the relation `F ≐ G` (equality up to such isomorphisms).

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::base::{BaseObject, Dir};
use crate::check::{Outcome, Witness};
use crate::error::{Error, Result};
use crate::index::Index;
use crate::matcat::laws::{probe_rows, ROW_CAP};
use crate::matcat::{assoc, mat_id, units, MatMorphism, MatObject, Side};

/// A parenthesized tensor product of objects, possibly containing units.
pub enum TensorWord<O> {
    Leaf(MatObject<O>),
    Unit,
    Node(Arc<TensorWord<O>>, Arc<TensorWord<O>>),
}

impl<O> Clone for TensorWord<O> {
    fn clone(&self) -> Self {
        match self {
            Self::Leaf(f) => Self::Leaf(f.clone()),
            Self::Unit => Self::Unit,
            Self::Node(l, r) => Self::Node(Arc::clone(l), Arc::clone(r)),
        }
    }
}

impl<O: BaseObject> PartialEq for TensorWord<O> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Self::Leaf(a), Self::Leaf(b)) => a == b,
            (Self::Unit, Self::Unit) => true,
            (Self::Node(a1, b1), Self::Node(a2, b2)) => a1 == a2 && b1 == b2,
            _ => false,
        }
    }
}

impl<O: BaseObject> Eq for TensorWord<O> {}

impl<O: BaseObject> fmt::Display for TensorWord<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Leaf(o) => write!(f, "{o}"),
            Self::Unit => write!(f, "I"),
            Self::Node(l, r) => write!(f, "({l}⊗{r})"),
        }
    }
}

impl<O: BaseObject> fmt::Debug for TensorWord<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<O: BaseObject> TensorWord<O> {
    pub fn leaf(f: &MatObject<O>) -> Self {
        Self::Leaf(f.clone())
    }

    pub fn node(l: TensorWord<O>, r: TensorWord<O>) -> Self {
        Self::Node(Arc::new(l), Arc::new(r))
    }

    /// The left comb `((w₁⊗w₂)⊗…)⊗wₙ`, or `I` for no factors.
    pub fn left_comb(leaves: &[MatObject<O>]) -> Self {
        let mut it = leaves.iter();
        match it.next() {
            None => Self::Unit,
            Some(first) => it.fold(Self::leaf(first), |acc, l| Self::node(acc, Self::leaf(l))),
        }
    }

    pub fn realize(&self) -> MatObject<O> {
        match self {
            Self::Leaf(f) => f.clone(),
            Self::Unit => MatObject::unit(),
            Self::Node(l, r) => l.realize().tensor(&r.realize()),
        }
    }

    /// The non-unit leaves, left to right.
    pub fn frontier(&self) -> Vec<MatObject<O>> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<MatObject<O>>) {
        match self {
            Self::Leaf(f) => out.push(f.clone()),
            Self::Unit => {}
            Self::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Self::Leaf(_) | Self::Unit => 1,
            Self::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }
}

struct Normalized<O> {
    word: TensorWord<O>,
    fwd: MatMorphism<O>,
    inv: MatMorphism<O>,
}

fn chain<O: BaseObject>(steps: [(MatMorphism<O>, MatMorphism<O>); 2]) -> Result<(MatMorphism<O>, MatMorphism<O>)> {
    let [(f1, i1), (f2, i2)] = steps;
    Ok((f2.compose(&f1)?, i1.compose(&i2)?))
}

/// `a⊗b → comb(a ++ b)` for left combs `a`, `b` with `b` non-unit.
fn join<O: BaseObject>(a: &TensorWord<O>, b: &TensorWord<O>) -> Result<Normalized<O>> {
    match b {
        TensorWord::Leaf(_) => {
            let word = TensorWord::node(a.clone(), b.clone());
            let id = mat_id(&word.realize());
            Ok(Normalized {
                word,
                fwd: id.clone(),
                inv: id,
            })
        }
        TensorWord::Node(b1, l) => {
            let (ra, rb1, rl) = (a.realize(), b1.realize(), l.realize());
            let step = (assoc(&ra, &rb1, &rl, Dir::Inverse), assoc(&ra, &rb1, &rl, Dir::Forward));
            let inner = join(a, b1)?;
            let id_l = mat_id(&rl);
            let lift = (inner.fwd.tensor(&id_l), inner.inv.tensor(&id_l));
            let (fwd, inv) = chain([step, lift])?;
            Ok(Normalized {
                word: TensorWord::node(inner.word, (**l).clone()),
                fwd,
                inv,
            })
        }
        TensorWord::Unit => Err(Error::NoCoherence("join with a unit".into())),
    }
}

/// The canonical isomorphism from `w` to its unit-free left comb, with its inverse.
fn normalize<O: BaseObject>(w: &TensorWord<O>) -> Result<Normalized<O>> {
    match w {
        TensorWord::Leaf(_) | TensorWord::Unit => {
            let id = mat_id(&w.realize());
            Ok(Normalized {
                word: w.clone(),
                fwd: id.clone(),
                inv: id,
            })
        }
        TensorWord::Node(u, v) => {
            let (nu, nv) = (normalize(u)?, normalize(v)?);
            let inner = (nu.fwd.tensor(&nv.fwd), nu.inv.tensor(&nv.inv));
            let (ru, rv) = (nu.word.realize(), nv.word.realize());
            let (word, outer) = match (&nu.word, &nv.word) {
                (_, TensorWord::Unit) => (
                    nu.word.clone(),
                    (units(&ru, Side::Right, Dir::Forward), units(&ru, Side::Right, Dir::Inverse)),
                ),
                (TensorWord::Unit, _) => (
                    nv.word.clone(),
                    (units(&rv, Side::Left, Dir::Forward), units(&rv, Side::Left, Dir::Inverse)),
                ),
                _ => {
                    let j = join(&nu.word, &nv.word)?;
                    (j.word, (j.fwd, j.inv))
                }
            };
            let (fwd, inv) = chain([inner, outer])?;
            Ok(Normalized { word, fwd, inv })
        }
    }
}

/// A morphism together with the words typing its domain and codomain.
pub struct TypedMor<O> {
    pub dom_word: TensorWord<O>,
    pub cod_word: TensorWord<O>,
    pub mor: MatMorphism<O>,
}

impl<O> Clone for TypedMor<O> {
    fn clone(&self) -> Self {
        Self {
            dom_word: self.dom_word.clone(),
            cod_word: self.cod_word.clone(),
            mor: self.mor.clone(),
        }
    }
}

impl<O: BaseObject> fmt::Debug for TypedMor<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} → {}", self.mor.label(), self.dom_word, self.cod_word)
    }
}

impl<O: BaseObject> TypedMor<O> {
    pub fn new(dom_word: TensorWord<O>, cod_word: TensorWord<O>, mor: MatMorphism<O>) -> Result<Self> {
        if &dom_word.realize() != mor.dom() || &cod_word.realize() != mor.cod() {
            return Err(Error::Mismatch(format!(
                "{}: words {dom_word} → {cod_word} do not type {} → {}",
                mor.label(),
                mor.dom(),
                mor.cod()
            )));
        }
        Ok(Self { dom_word, cod_word, mor })
    }

    pub fn identity(w: &TensorWord<O>) -> Self {
        Self {
            dom_word: w.clone(),
            cod_word: w.clone(),
            mor: mat_id(&w.realize()),
        }
    }

    /// `self ∘ f`, requiring literally equal words at the junction.
    pub fn compose(&self, f: &TypedMor<O>) -> Result<Self> {
        if self.dom_word != f.cod_word {
            return Err(Error::Mismatch(format!("{} ≠ {}", f.cod_word, self.dom_word)));
        }
        Ok(Self {
            dom_word: f.dom_word.clone(),
            cod_word: self.cod_word.clone(),
            mor: self.mor.compose(&f.mor)?,
        })
    }

    /// `self ∘ K ∘ f` with `K` the coherence isomorphism bridging the two words.
    pub fn compose_coherent(&self, f: &TypedMor<O>) -> Result<Self> {
        let k = coherence_iso(&f.cod_word, &self.dom_word)?;
        self.compose(&k.compose(f)?)
    }

    pub fn tensor(&self, g: &TypedMor<O>) -> Self {
        Self {
            dom_word: TensorWord::node(self.dom_word.clone(), g.dom_word.clone()),
            cod_word: TensorWord::node(self.cod_word.clone(), g.cod_word.clone()),
            mor: self.mor.tensor(&g.mor),
        }
    }

    pub fn scale(&self, s: &crate::linalg::Q) -> Self {
        Self {
            mor: self.mor.scale(s),
            ..self.clone()
        }
    }
}

/// The canonical isomorphism `realize(src) → realize(dst)` generated by
/// `Id`, `A^{±1}`, `R^{±1}`, `L^{±1}` under `∘` and `⊗`.
pub fn coherence_iso<O: BaseObject>(src: &TensorWord<O>, dst: &TensorWord<O>) -> Result<TypedMor<O>> {
    let (fs, fd) = (src.frontier(), dst.frontier());
    if fs != fd {
        return Err(Error::NoCoherence(format!("{src} and {dst} have different factors")));
    }
    let (ns, nd) = (normalize(src)?, normalize(dst)?);
    let mor = nd.inv.compose(&ns.fwd)?.relabel(format!("K[{src} → {dst}]"));
    Ok(TypedMor {
        dom_word: src.clone(),
        cod_word: dst.clone(),
        mor,
    })
}

/// `X∘F∘Y` with `X`, `Y` the coherence isomorphisms retyping `f` as `g`.
pub fn retype<O: BaseObject>(f: &TypedMor<O>, g: &TypedMor<O>) -> Result<MatMorphism<O>> {
    let x = coherence_iso(&f.cod_word, &g.cod_word)?;
    let y = coherence_iso(&g.dom_word, &f.dom_word)?;
    x.mor.compose(&f.mor)?.compose(&y.mor)
}

/// `F ≐ G`, decided on the given probe rows of `G`'s domain.
pub fn doteq<O: BaseObject>(f: &TypedMor<O>, g: &TypedMor<O>, probes: &[Index]) -> Result<bool> {
    retype(f, g)?.equal_on_rows(&g.mor, probes)
}

/// `F ≐ G` as a check: on failure the witness names the first differing row.
/// Probes default to the first rows of `G`'s domain.
pub fn doteq_check<O: BaseObject>(what: &str, f: &TypedMor<O>, g: &TypedMor<O>, probes: Option<&[Index]>) -> Outcome {
    let owned;
    let probes = match probes {
        Some(p) => p,
        None => {
            owned = probe_rows(g.mor.dom(), ROW_CAP);
            &owned
        }
    };
    let lhs = retype(f, g).map_err(|e| Witness::new(format!("{what}: {e}")))?;
    match lhs.first_row_difference(&g.mor, probes) {
        Ok(None) => Ok(()),
        Ok(Some((row, detail))) => Err(Witness::at(row, format!("{what}: {detail}"))),
        Err(e) => Err(Witness::new(format!("{what}: {e}"))),
    }
}

/// A random parenthesization of `leaves`, with units sprinkled in with
/// probability `unit_p` at each split.
pub fn random_word<O: BaseObject, R: Rng>(rng: &mut R, leaves: &[MatObject<O>], unit_p: f64) -> TensorWord<O> {
    let base = match leaves.len() {
        0 => TensorWord::Unit,
        1 => TensorWord::leaf(&leaves[0]),
        n => {
            let k = rng.gen_range(1..n);
            TensorWord::node(
                random_word(rng, &leaves[..k], unit_p),
                random_word(rng, &leaves[k..], unit_p),
            )
        }
    };
    if rng.gen_bool(unit_p) {
        if rng.gen_bool(0.5) {
            TensorWord::node(TensorWord::Unit, base)
        } else {
            TensorWord::node(base, TensorWord::Unit)
        }
    } else {
        base
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{GradedObject, GradedVect};
    use crate::matcat::laws::eq_rows;
    use crate::matcat::MatCat;
    use crate::probe::{random_mat_morphism, random_mat_object, Bounds};
    use crate::linalg::q_int;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type W = TensorWord<GradedObject>;

    fn obj(i: u64, d: i64) -> MatObject<GradedObject> {
        MatObject::from_table([(Index::from(i), GradedObject::from_degrees([d])), (Index::from(i + 1), GradedObject::from_degrees([0, d]))])
    }

    fn leaves() -> Vec<MatObject<GradedObject>> {
        vec![obj(0, 1), obj(2, -1), obj(4, 2)]
    }

    #[test]
    fn realize_examples() {
        let [f, g, h] = <[_; 3]>::try_from(leaves()).unwrap();
        assert_eq!(W::leaf(&f).realize(), f);
        assert_eq!(W::node(W::leaf(&f), W::Unit).realize(), f.tensor(&MatObject::unit()));
        assert_eq!(
            W::node(W::node(W::leaf(&f), W::leaf(&g)), W::leaf(&h)).realize(),
            f.tensor(&g).tensor(&h)
        );
    }

    #[test]
    fn single_generator_examples() {
        let [f, g, h] = <[_; 3]>::try_from(leaves()).unwrap();
        let fi = W::node(W::leaf(&f), W::Unit);
        let r = coherence_iso(&fi, &W::leaf(&f)).unwrap();
        eq_rows("K = R", &r.mor, &units(&f, Side::Right, Dir::Forward)).unwrap();
        let left = W::node(W::node(W::leaf(&f), W::leaf(&g)), W::leaf(&h));
        let right = W::node(W::leaf(&f), W::node(W::leaf(&g), W::leaf(&h)));
        let a = coherence_iso(&left, &right).unwrap();
        eq_rows("K = A", &a.mor, &assoc(&f, &g, &h, Dir::Forward)).unwrap();
        let same = coherence_iso(&right, &right).unwrap();
        eq_rows("K = Id", &same.mor, &mat_id(&right.realize())).unwrap();
        assert!(matches!(coherence_iso(&left, &W::leaf(&f)), Err(Error::NoCoherence(_))));
    }

    #[test]
    fn confluence_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pool: Vec<_> = (0..5).map(|i| obj(10 * i, (i as i64) - 2)).collect();
        for _ in 0..100 {
            let n = rng.gen_range(1..=5);
            let ls = &pool[..n];
            let (w1, w2, w3) = (random_word(&mut rng, ls, 0.3), random_word(&mut rng, ls, 0.3), random_word(&mut rng, ls, 0.3));
            let k12 = coherence_iso(&w1, &w2).unwrap();
            let k23 = coherence_iso(&w2, &w3).unwrap();
            let k13 = coherence_iso(&w1, &w3).unwrap();
            let probes = probe_rows(&w1.realize(), 40);
            assert!(k23.compose(&k12).unwrap().mor.equal_on_rows(&k13.mor, &probes).unwrap());
        }
    }

    #[test]
    fn doteq_examples() {
        let [f, g, h] = <[_; 3]>::try_from(leaves()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let left = W::node(W::node(W::leaf(&f), W::leaf(&g)), W::leaf(&h));
        let right = W::node(W::leaf(&f), W::node(W::leaf(&g), W::leaf(&h)));
        let src = left.realize();
        let m = random_mat_morphism(&mut rng, &src, &src);
        let fm = TypedMor::new(left.clone(), left.clone(), m).unwrap();
        let probes = probe_rows(&src, 64);
        assert!(doteq(&fm, &fm, &probes).unwrap());
        let af = coherence_iso(&left, &right).unwrap().compose(&fm).unwrap();
        assert!(doteq(&fm, &af, &probes).unwrap());
        let twice = fm.scale(&q_int(2));
        let nonzero_row = probes.iter().any(|x| !fm.mor.row(x).unwrap().is_empty());
        assert_eq!(doteq(&fm, &twice, &probes).unwrap(), !nonzero_row);
    }

    #[test]
    fn zigzags_up_to_coherence() {
        let m = MatCat::new(GradedVect::default());
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..5 {
            let f = random_mat_object(m.base(), &mut rng, Bounds::default(), 3, 6);
            let fs = f.dual();
            let (lf, ls) = (W::leaf(&f), W::leaf(&fs));
            let d = TypedMor::new(W::node(ls.clone(), lf.clone()), W::Unit, m.eval_m(&f)).unwrap();
            let b = TypedMor::new(W::Unit, W::node(lf.clone(), ls.clone()), m.coev_m(&f).unwrap()).unwrap();
            let zig = d.tensor(&TypedMor::identity(&ls)).compose_coherent(&TypedMor::identity(&ls).tensor(&b)).unwrap();
            doteq_check("zig", &zig, &TypedMor::identity(&ls), None).unwrap();
            let zag = TypedMor::identity(&lf).tensor(&d).compose_coherent(&b.tensor(&TypedMor::identity(&lf))).unwrap();
            doteq_check("zag", &zag, &TypedMor::identity(&lf), None).unwrap();
        }
    }
}
