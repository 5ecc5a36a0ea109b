//! Check lists for the base category, the matrix category and coherence.

use std::marker::PhantomData;
use std::sync::Arc;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Instance, RunConfig};
use crate::base::{laws as base_laws, BaseObject, Morphism};
use crate::check::{built, expect_eq, Check, Outcome, Witness};
use crate::coherence::{coherence_iso, doteq_check, random_word, TensorWord, TypedMor};
use crate::error::{Error, Result};
use crate::index::{pair, Index, IndexSet};
use crate::matcat::laws::{self as mat_laws, eq_rows, probe_rows, ROW_CAP};
use crate::matcat::{embed_mor, embed_obj, mat_id, Coproduct, Family, MatCat, MatObject};
use crate::probe::{random_mat_morphism, random_mat_object, random_morphism, Bounds, Sampler};

fn rng_for(cfg: &RunConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
}

fn salt(id: &str) -> u64 {
    id.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn tag(i: usize, w: Witness) -> Witness {
    Witness {
        detail: format!("probe {i}: {}", w.detail),
        ..w
    }
}

/// Wrap a sampled law into a check that runs it on `probe_rows` samples.
fn sampled<F>(id: &str, anchor: &'static str, cfg: &RunConfig, law: F) -> Check
where
    F: Fn(&mut ChaCha8Rng) -> Outcome + Send + Sync + 'static,
{
    let (n, c) = (cfg.probe_rows, cfg.clone());
    let s = salt(id);
    Check::new(id, anchor, move || {
        let mut rng = rng_for(&c, s);
        (0..n).try_for_each(|i| law(&mut rng).map_err(|w| tag(i, w)))
    })
}

/// Like [`sampled`], but keeps drawing until the law has been compared on at
/// least `probe_rows` matrix rows. `law` returns the rows it compared.
fn row_sampled<F>(id: &str, anchor: &'static str, cfg: &RunConfig, law: F) -> Check
where
    F: Fn(&mut ChaCha8Rng) -> std::result::Result<usize, Witness> + Send + Sync + 'static,
{
    let (target, c) = (cfg.probe_rows, cfg.clone());
    let s = salt(id);
    Check::new(id, anchor, move || {
        let mut rng = rng_for(&c, s);
        let (mut rows, mut i) = (0, 0);
        while rows < target || i < 3 {
            rows += law(&mut rng).map_err(|w| tag(i, w))?;
            i += 1;
        }
        Ok(())
    })
}

fn rows_of<O: BaseObject>(f: &MatObject<O>) -> usize {
    probe_rows(f, ROW_CAP).len()
}

pub fn base_checks<C: Sampler>(c: C, cfg: &RunConfig) -> Vec<Check> {
    let b = cfg.bounds();
    let mut out = Vec::new();
    macro_rules! law {
        ($id:expr, $anchor:expr, |$cc:ident, $rng:ident| $body:expr) => {{
            let $cc = c.clone();
            out.push(sampled($id, $anchor, cfg, move |$rng| $body));
        }};
    }
    law!("base.composition", "composition-associativity", |c, rng| {
        let [a, x, y, z] = objs(&c, rng, b);
        base_laws::composition_associative::<C>(
            &random_morphism(rng, &y, &z),
            &random_morphism(rng, &x, &y),
            &random_morphism(rng, &a, &x),
        )
    });
    law!("base.identity", "identity-laws", |c, rng| {
        let [a, x, ..] = objs(&c, rng, b);
        base_laws::identity_laws(&c, &random_morphism(rng, &a, &x))
    });
    law!("base.abelian", "abelian-laws", |c, rng| {
        let [a, x, y, z] = objs(&c, rng, b);
        let (f, g) = (random_morphism(rng, &a, &x), random_morphism(rng, &a, &x));
        base_laws::abelian_laws(&c, &f, &g, &random_morphism(rng, &x, &y), &random_morphism(rng, &z, &a))
    });
    law!("base.tensor_functorial", "tensor-functoriality", |c, rng| {
        let [a, x, y, z] = objs(&c, rng, b);
        let [u, v, ..] = objs(&c, rng, b);
        base_laws::tensor_functorial::<C>(
            &random_morphism(rng, &x, &y),
            &random_morphism(rng, &a, &x),
            &random_morphism(rng, &v, &z),
            &random_morphism(rng, &u, &v),
        )
    });
    law!("base.strictness", "strict-tensor", |c, rng| {
        let [a, x, y, z] = objs(&c, rng, b);
        base_laws::strictness::<C>(
            &random_morphism(rng, &a, &x),
            &random_morphism(rng, &x, &y),
            &random_morphism(rng, &y, &z),
        )
    });
    law!("base.hexagons", "hexagons", |c, rng| {
        let [a, x, y, _] = objs(&c, rng, b);
        base_laws::hexagons(&c, &a, &x, &y)
    });
    law!("base.braid_invertible", "braid-invertible", |c, rng| {
        let [a, x, ..] = objs(&c, rng, b);
        base_laws::braid_invertible(&c, &a, &x)
    });
    law!("base.braid_natural", "braid-naturality", |c, rng| {
        let [a, x, y, z] = objs(&c, rng, b);
        base_laws::braid_natural(&c, &random_morphism(rng, &a, &x), &random_morphism(rng, &y, &z))
    });
    law!("base.twist_natural", "twist-naturality", |c, rng| {
        let [a, x, ..] = objs(&c, rng, b);
        base_laws::twist_natural(&c, &random_morphism(rng, &a, &x))
    });
    law!("base.twist_balance", "twist-balance", |c, rng| {
        let [a, x, ..] = objs(&c, rng, b);
        base_laws::twist_balance(&c, &a, &x)
    });
    law!("base.twist_dual", "twist-duality", |c, rng| {
        let [a, ..] = objs(&c, rng, b);
        base_laws::twist_dual(&c, &a)
    });
    law!("base.zigzag", "zigzag", |c, rng| {
        let [a, ..] = objs(&c, rng, b);
        base_laws::zigzag(&c, &a)
    });
    law!("base.homogeneous", "structure-homogeneous", |c, rng| {
        let [a, x, ..] = objs(&c, rng, b);
        base_laws::structure_homogeneous(&c, &a, &x)
    });
    if cfg.instance == Instance::Symmetric || cfg.q.is_one() {
        law!("base.symmetric", "symmetric-braiding", |c, rng| {
            let [a, x, ..] = objs(&c, rng, b);
            base_laws::symmetric(&c, &a, &x)
        });
    }
    out
}

fn objs<C: Sampler>(c: &C, rng: &mut ChaCha8Rng, b: Bounds) -> [C::Obj; 4] {
    std::array::from_fn(|_| c.sample_object(rng, b))
}

struct ConstFamily<O>(PhantomData<fn() -> O>);

impl<O: BaseObject> Family<O> for ConstFamily<O> {
    fn name(&self) -> String {
        "unit".into()
    }

    fn fiber(&self, _: &Index) -> Result<O> {
        Ok(O::unit())
    }
}

/// A finite object whose indices all lie in `[base, base + 8)`.
fn object_in<C: Sampler>(c: &C, rng: &mut ChaCha8Rng, b: Bounds, base: u64, max_size: usize) -> MatObject<C::Obj> {
    let n = rng.gen_range(1..=max_size);
    let picks: std::collections::BTreeSet<u64> = (0..n).map(|_| base + rng.gen_range(0..8)).collect();
    MatObject::from_table(picks.into_iter().map(|i| (Index::from(i), c.sample_object(rng, b))))
}

pub fn matcat_checks<C: Sampler>(c: C, cfg: &RunConfig) -> Vec<Check> {
    let b = cfg.bounds();
    let m = MatCat::new(c.clone());
    let mut out = Vec::new();
    macro_rules! law {
        ($id:expr, $anchor:expr, |$mm:ident, $rng:ident| $body:expr) => {{
            let $mm = m.clone();
            out.push(row_sampled($id, $anchor, cfg, move |$rng| $body));
        }};
    }
    fn four<C: Sampler>(m: &MatCat<C>, rng: &mut ChaCha8Rng, b: Bounds) -> [MatObject<C::Obj>; 4] {
        std::array::from_fn(|_| random_mat_object(m.base(), rng, b, 3, 6))
    }
    law!("matcat.identity", "matrix-identity", |m, rng| {
        let [f, g, ..] = four(&m, rng, b);
        mat_laws::funct1(&random_mat_morphism(rng, &f, &g)).map(|_| rows_of(&f))
    });
    law!("matcat.composition", "matrix-composition", |m, rng| {
        let [f, g, h, k] = four(&m, rng, b);
        let (ff, gg, hh) = (
            random_mat_morphism(rng, &f, &g),
            random_mat_morphism(rng, &g, &h),
            random_mat_morphism(rng, &h, &k),
        );
        mat_laws::funct2(&hh, &gg, &ff).map(|_| rows_of(&f))
    });
    law!("matcat.abelian", "matrix-abelian", |m, rng| {
        let [f, g, h, _] = four(&m, rng, b);
        let (ff, ff2) = (random_mat_morphism(rng, &f, &g), random_mat_morphism(rng, &f, &g));
        mat_laws::abelian(&ff, &ff2, &random_mat_morphism(rng, &g, &h)).map(|_| rows_of(&f))
    });
    law!("matcat.tensor_functorial", "matrix-tensor-functoriality", |m, rng| {
        let [f, g, h, k] = four(&m, rng, b);
        let (f1, f2) = (random_mat_morphism(rng, &f, &g), random_mat_morphism(rng, &g, &h));
        let (g1, g2) = (random_mat_morphism(rng, &k, &f), random_mat_morphism(rng, &f, &g));
        mat_laws::tensor_functorial(&f2, &f1, &g2, &g1).map(|_| rows_of(&f) * rows_of(&k))
    });
    law!("matcat.tensor_identity", "matrix-tensor-identity", |m, rng| {
        let [f, g, ..] = four(&m, rng, b);
        mat_laws::tensor_identity(&f, &g).map(|_| rows_of(&f) * rows_of(&g))
    });
    law!("matcat.structure_inverses", "structure-inverses", |m, rng| {
        let [f, g, h, _] = four(&m, rng, b);
        mat_laws::structure_inverses(&f, &g, &h).map(|_| rows_of(&f) * rows_of(&g) * rows_of(&h))
    });
    law!("matcat.pentagon", "pentagon", |m, rng| {
        let [f, g, h, k] = four(&m, rng, b);
        mat_laws::pentagon(&f, &g, &h, &k).map(|_| rows_of(&f) * rows_of(&g) * rows_of(&h) * rows_of(&k))
    });
    law!("matcat.triangle", "triangle", |m, rng| {
        let [f, g, ..] = four(&m, rng, b);
        mat_laws::triangle(&f, &g).map(|_| rows_of(&f) * rows_of(&g))
    });
    law!("matcat.assoc_natural", "associator-naturality", |m, rng| {
        let [f, g, h, k] = four(&m, rng, b);
        let (ff, gg, hh) = (
            random_mat_morphism(rng, &f, &g),
            random_mat_morphism(rng, &g, &h),
            random_mat_morphism(rng, &h, &k),
        );
        mat_laws::assoc_natural(&ff, &gg, &hh).map(|_| rows_of(&f) * rows_of(&g) * rows_of(&h))
    });
    law!("matcat.units_natural", "unit-naturality", |m, rng| {
        let [f, g, ..] = four(&m, rng, b);
        mat_laws::units_natural(&random_mat_morphism(rng, &f, &g)).map(|_| rows_of(&f))
    });
    law!("matcat.hexagons", "matrix-hexagons", |m, rng| {
        let [f, g, h, _] = four(&m, rng, b);
        mat_laws::hexagons(&m, &f, &g, &h).map(|_| rows_of(&f) * rows_of(&g) * rows_of(&h))
    });
    law!("matcat.braid_invertible", "matrix-braid-invertible", |m, rng| {
        let [f, g, ..] = four(&m, rng, b);
        mat_laws::braid_invertible(&m, &f, &g).map(|_| rows_of(&f) * rows_of(&g))
    });
    law!("matcat.braid_natural", "matrix-braid-naturality", |m, rng| {
        let [f, g, h, k] = four(&m, rng, b);
        let (ff, gg) = (random_mat_morphism(rng, &f, &g), random_mat_morphism(rng, &h, &k));
        mat_laws::braid_natural(&m, &ff, &gg).map(|_| rows_of(&f) * rows_of(&h))
    });
    law!("matcat.twist_natural", "matrix-twist-naturality", |m, rng| {
        let [f, g, ..] = four(&m, rng, b);
        mat_laws::twist_natural(&m, &random_mat_morphism(rng, &f, &g)).map(|_| rows_of(&f))
    });
    law!("matcat.twist_balance", "matrix-twist-balance", |m, rng| {
        let [f, g, ..] = four(&m, rng, b);
        mat_laws::twist_balance(&m, &f, &g).map(|_| rows_of(&f) * rows_of(&g))
    });
    law!("matcat.row_finite", "row-finiteness", |m, rng| {
        let [f, g, h, k] = four(&m, rng, b);
        let t = random_mat_morphism(rng, &f, &g).tensor(&random_mat_morphism(rng, &h, &k));
        mat_laws::row_finite(&t).map(|_| rows_of(t.dom()))
    });
    law!("matcat.coproduct", "coproduct-universal", |m, rng| {
        let n = rng.gen_range(1..=6);
        let parts: Vec<_> = (0..n).map(|k| object_in(m.base(), rng, b, 10 * k, 3)).collect();
        let sum = Coproduct::new(&parts).map_err(|e| Witness::new(format!("coproduct: {e}")))?;
        let target = random_mat_object(m.base(), rng, b, 3, 6);
        let ts: Vec<_> = parts.iter().map(|p| random_mat_morphism(rng, p, &target)).collect();
        mat_laws::coproduct_universal(&sum, &ts).map(|_| rows_of(&sum.object))
    });
    law!("matcat.decomposition", "direct-sum-decomposition", |m, rng| {
        let [f, ..] = four(&m, rng, b);
        mat_laws::direct_sum_decomposition(&f).map(|_| rows_of(&f))
    });
    law!("matcat.embedding", "embedding-functor", |m, rng| {
        let c = m.base();
        let [a, x, y, z] = [0; 4].map(|_| c.sample_object(rng, b));
        let [ia, ix, iy] = [0u64; 3].map(|_| Index::from(rng.gen_range(0..50u64)));
        let (al, be) = (random_morphism(rng, &a, &x), random_morphism(rng, &x, &y));
        let composite = built("β∘α", be.compose(&al))?;
        let lhs = embed_mor(&composite, ia.clone(), iy.clone());
        let rhs = built("J(β)∘J(α)", embed_mor(&be, ix.clone(), iy.clone()).compose(&embed_mor(&al, ia.clone(), ix.clone())))?;
        eq_rows("J(β∘α) = J(β)∘J(α)", &lhs, &rhs)?;
        eq_rows("J(id) = Id", &embed_mor(&Morphism::identity(&a), ia.clone(), ia.clone()), &mat_id(&embed_obj(&a, ia.clone())))?;
        let gm = random_morphism(rng, &z, &a);
        let tensored = embed_mor(&al, ia.clone(), ix.clone()).tensor(&embed_mor(&gm, ix.clone(), ia.clone()));
        let joint = embed_mor(&al.tensor(&gm), pair(&ia, &ix), pair(&ix, &ia));
        // J(V)⊗J(W) and J(V⊗W) share their single index and fiber
        let at = pair(&ia, &ix);
        let (l, r) = (built("row", joint.row(&at))?, built("row", tensored.row(&at))?);
        if l != r {
            return Err(Witness::at(at, "J(α⊗γ) ≠ J(α)⊗J(γ)"));
        }
        let back = built("entry", rhs.entry(&ia, &iy))?;
        expect_eq("hom bijection", &back, &composite)?;
        Ok(1)
    });
    law!("matcat.duality_zigzag", "duality-zigzag", |m, rng| {
        let [f, ..] = four(&m, rng, b);
        zigzags(&m, &f).map(|_| rows_of(&f))
    });
    let mm = m.clone();
    out.push(Check::new("matcat.duality_obstruction", "duality-obstruction", move || {
        let naturals = MatObject::family(IndexSet::AllNaturals, Arc::new(ConstFamily::<C::Obj>(PhantomData)));
        match mm.coev_m(&naturals) {
            Err(Error::DualityObstruction) => {}
            Err(e) => return Err(Witness::new(format!("unexpected error: {e}"))),
            Ok(_) => return Err(Witness::new("coevaluation built on an infinite index set")),
        }
        // evaluation stays row-finite
        let d = mm.eval_m(&naturals);
        mat_laws::row_finite(&d)
    }));
    out
}

fn zigzags<C: Sampler>(m: &MatCat<C>, f: &MatObject<C::Obj>) -> Outcome {
    let fs = f.dual();
    let (lf, ls) = (TensorWord::leaf(f), TensorWord::leaf(&fs));
    let d = built("D", TypedMor::new(TensorWord::node(ls.clone(), lf.clone()), TensorWord::Unit, m.eval_m(f)))?;
    let coev = built("B", m.coev_m(f))?;
    let bb = built("B", TypedMor::new(TensorWord::Unit, TensorWord::node(lf.clone(), ls.clone()), coev))?;
    let (id_s, id_f) = (TypedMor::identity(&ls), TypedMor::identity(&lf));
    let zig = built("zig", d.tensor(&id_s).compose_coherent(&id_s.tensor(&bb)))?;
    doteq_check("(D⊗Id)(Id⊗B) ≐ Id", &zig, &id_s, None)?;
    let zag = built("zag", id_f.tensor(&d).compose_coherent(&bb.tensor(&id_f)))?;
    doteq_check("(Id⊗D)(B⊗Id) ≐ Id", &zag, &id_f, None)
}

fn leaf_pool<C: Sampler>(c: &C, rng: &mut ChaCha8Rng, b: Bounds, max_leaves: usize) -> Vec<MatObject<C::Obj>> {
    let n = rng.gen_range(1..=max_leaves);
    (0..n).map(|_| random_mat_object(c, rng, b, 2, 4)).collect()
}

fn typed<O: BaseObject>(w: &TensorWord<O>, rng: &mut ChaCha8Rng) -> std::result::Result<TypedMor<O>, Witness> {
    let src = w.realize();
    built("typed", TypedMor::new(w.clone(), w.clone(), random_mat_morphism(rng, &src, &src)))
}

/// `K_{w,v}∘F∘K_{v,w}`, the transport of an endomorphism of `w` to `v`.
fn transport<O: BaseObject>(f: &TypedMor<O>, v: &TensorWord<O>) -> std::result::Result<TypedMor<O>, Witness> {
    let there = built("K", coherence_iso(&f.cod_word, v))?;
    let back = built("K", coherence_iso(v, &f.dom_word))?;
    built("transport", there.compose(f).and_then(|x| x.compose(&back)))
}

pub fn coherence_checks<C: Sampler>(c: C, cfg: &RunConfig) -> Vec<Check> {
    let b = cfg.bounds();
    let triples = cfg.probe_rows.max(100);
    let mut out = Vec::new();
    let cc = c.clone();
    out.push(sampled("coherence.identity", "coherence-identity", cfg, move |rng| {
        let pool = leaf_pool(&cc, rng, b, 5);
        let w = random_word(rng, &pool, 0.3);
        let k = built("K", coherence_iso(&w, &w))?;
        eq_rows("K_{w,w} = Id", &k.mor, &mat_id(&w.realize()))
    }));
    let cc = c.clone();
    let s = salt("coherence.confluence");
    let cfg2 = cfg.clone();
    out.push(Check::new("coherence.confluence", "coherence-confluence", move || {
        let mut rng = rng_for(&cfg2, s);
        for i in 0..triples {
            let pool = leaf_pool(&cc, &mut rng, b, 5);
            let [w1, w2, w3] = [0; 3].map(|_| random_word(&mut rng, &pool, 0.3));
            let k12 = built("K12", coherence_iso(&w1, &w2))?;
            let k23 = built("K23", coherence_iso(&w2, &w3))?;
            let k13 = built("K13", coherence_iso(&w1, &w3))?;
            let via = built("K23∘K12", k23.compose(&k12))?;
            eq_rows("K23∘K12 = K13", &via.mor, &k13.mor).map_err(|w| tag(i, w))?;
        }
        Ok(())
    }));
    let cc = c.clone();
    out.push(sampled("coherence.doteq_equivalence", "doteq-equivalence", cfg, move |rng| {
        let pool = leaf_pool(&cc, rng, b, 4);
        let [w1, w2, w3] = [0; 3].map(|_| random_word(rng, &pool, 0.3));
        let f = typed(&w1, rng)?;
        let g = transport(&f, &w2)?;
        let h = transport(&g, &w3)?;
        doteq_check("F ≐ F", &f, &f, None)?;
        doteq_check("F ≐ G", &f, &g, None)?;
        doteq_check("G ≐ F", &g, &f, None)?;
        doteq_check("G ≐ H", &g, &h, None)?;
        doteq_check("F ≐ H", &f, &h, None)?;
        let twice = f.scale(&crate::linalg::q_int(2));
        let nonzero = probe_rows(f.mor.dom(), ROW_CAP).iter().any(|x| f.mor.row(x).map(|r| !r.is_empty()).unwrap_or(false));
        if nonzero && doteq_check("F ≐ 2F", &f, &twice, None).is_ok() {
            return Err(Witness::new("F ≐ 2F for a nonzero F"));
        }
        Ok(())
    }));
    let cc = c.clone();
    out.push(sampled("coherence.doteq_compatible", "doteq-compatibility", cfg, move |rng| {
        let pool = leaf_pool(&cc, rng, b, 4);
        let [w1, w2] = [0; 2].map(|_| random_word(rng, &pool, 0.3));
        let (f, f2) = (typed(&w1, rng)?, typed(&w1, rng)?);
        let (g, g2) = (transport(&f, &w2)?, transport(&f2, &w2)?);
        let lhs = built("F'∘F", f2.compose(&f))?;
        let rhs = built("G'∘G", g2.compose(&g))?;
        doteq_check("F'∘F ≐ G'∘G", &lhs, &rhs, None)?;
        doteq_check("F⊗F' ≐ G⊗G'", &f.tensor(&f2), &g.tensor(&g2), None)
    }));
    out
}
