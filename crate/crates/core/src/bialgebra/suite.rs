//! The verification suite for `h̄`: base identities for `Γ`, then the
//! algebra, coalgebra, bialgebra and module axioms on probe rows.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{diag, Bialgebra, Encodable};
use crate::base::laws::eq_mor;
use crate::base::{BaseObject, Dir};
use crate::check::{built, Check, Outcome, Witness};
use crate::coherence::{doteq_check, TensorWord, TypedMor};
use crate::error::{Error, Result};
use crate::index::{pair, Index};
use crate::matcat::{mat_id, units, MatMorphism, Side};
use crate::probe::{Bounds, Sampler};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub bounds: Bounds,
    /// Rows compared per check.
    pub probe_rows: usize,
    /// Object triples for the base-level relation of `Γ`.
    pub triples: usize,
    /// Fibers `V` for the module axioms.
    pub fibers: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            bounds: Bounds::default(),
            probe_rows: 25,
            triples: 60,
            fibers: 5,
            seed: 0,
        }
    }
}

/// `n` nonzero objects within `bounds`, drawn with the given seed.
pub fn probe_objects<C: Sampler>(c: &C, bounds: Bounds, n: usize, seed: u64) -> Vec<C::Obj> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| c.sample_object(&mut rng, bounds)).collect()
}

/// A random domain row for `word`: `h̄` leaves get `γ(x,x)` with `x` from
/// `pool`, finite leaves one of their members, units `∗`.
fn sample_row<O: BaseObject, R: Rng>(word: &TensorWord<O>, rng: &mut R, pool: &[Index]) -> Index {
    match word {
        TensorWord::Unit => Index::star(),
        TensorWord::Leaf(f) => match f.members() {
            Some(m) => m.choose(rng).cloned().unwrap_or_else(Index::star),
            None => diag(pool.choose(rng).expect("nonempty pool")),
        },
        TensorWord::Node(l, r) => {
            let x = sample_row(l, rng, pool);
            pair(&x, &sample_row(r, rng, pool))
        }
    }
}

fn obj_list<O: BaseObject>(os: &[O]) -> String {
    os.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn at<O: BaseObject>(os: &[O], r: Outcome) -> Outcome {
    r.map_err(|w| Witness {
        detail: format!("objects ({}): {}", obj_list(os), w.detail),
        ..w
    })
}

impl<C: Sampler> Bialgebra<C>
where
    C::Obj: Encodable,
{
    fn pool(&self, cfg: &SuiteConfig) -> Vec<Index> {
        probe_objects(self.base(), cfg.bounds, cfg.probe_rows.max(1), cfg.seed)
            .iter()
            .map(Encodable::encode)
            .collect()
    }

    /// `cfg.probe_rows` rows of `word`, deterministic in `cfg.seed` and `salt`.
    pub fn rows(&self, word: &TensorWord<C::Obj>, cfg: &SuiteConfig, salt: u64) -> Result<Vec<Index>> {
        if cfg.probe_rows == 0 {
            return Err(Error::EmptyProbes);
        }
        let pool = self.pool(cfg);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut out: Vec<Index> = (0..cfg.probe_rows).map(|_| sample_row(word, &mut rng, &pool)).collect();
        // unit rows first so the most degenerate cases are always covered
        out[0] = sample_row(word, &mut rng, &[self.x0()]);
        Ok(out)
    }

    fn hw(&self) -> TensorWord<C::Obj> {
        TensorWord::leaf(self.h())
    }

    fn typed(&self, dom: TensorWord<C::Obj>, cod: TensorWord<C::Obj>, m: MatMorphism<C::Obj>) -> std::result::Result<TypedMor<C::Obj>, Witness> {
        built("typing", TypedMor::new(dom, cod, m))
    }

    fn doteq_on(&self, what: &str, f: &TypedMor<C::Obj>, g: &TypedMor<C::Obj>, cfg: &SuiteConfig, salt: u64) -> Outcome {
        let rows = built("probe rows", self.rows(&g.dom_word, cfg, salt))?;
        doteq_check(what, f, g, Some(&rows))
    }

    fn exact_on(&self, what: &str, f: &TypedMor<C::Obj>, g: &TypedMor<C::Obj>, cfg: &SuiteConfig, salt: u64) -> Outcome {
        let rows = built("probe rows", self.rows(&g.dom_word, cfg, salt))?;
        match built(what, f.mor.first_row_difference(&g.mor, &rows))? {
            None => Ok(()),
            Some((row, detail)) => Err(Witness::at(row, format!("{what}: {detail}"))),
        }
    }

    /// `Γ_{x,y⊗z}∘(Γ_{y,z}⊗id) = Γ_{x⊗y,z}∘(id⊗Γ_{x,y})` on sampled triples.
    pub fn check_gamma_relation(&self, cfg: &SuiteConfig) -> Outcome {
        let objs = probe_objects(self.base(), cfg.bounds, 3 * cfg.triples, cfg.seed ^ 0x7a);
        let c = self.base();
        for t in objs.chunks(3) {
            let [x, y, z] = t else { continue };
            let lhs = built(
                "Γ_{x,y⊗z}∘(Γ_{y,z}⊗id)",
                self.gamma(x, &y.tensor(z))
                    .and_then(|g1| g1.compose(&self.gamma(y, z)?.tensor(&c.identity_c(&x.dual().tensor(x))))),
            )?;
            let rhs = built(
                "Γ_{x⊗y,z}∘(id⊗Γ_{x,y})",
                self.gamma(&x.tensor(y), z)
                    .and_then(|g1| g1.compose(&c.identity_c(&z.dual().tensor(z)).tensor(&self.gamma(x, y)?))),
            )?;
            at(t, eq_mor("relation of Γ", &lhs, &rhs))?;
        }
        Ok(())
    }

    /// `Γ_{a,I} = id` and `Γ_{I,a} = id` on probe objects.
    pub fn check_gamma_unit(&self, cfg: &SuiteConfig) -> Outcome {
        let i = C::Obj::unit();
        for a in probe_objects(self.base(), cfg.bounds, cfg.probe_rows, cfg.seed ^ 0x51) {
            let id = self.base().identity_c(&a.dual().tensor(&a));
            at(std::slice::from_ref(&a), eq_mor("Γ_{a,I} = id", &built("Γ", self.gamma(&a, &i))?, &id))?;
            at(std::slice::from_ref(&a), eq_mor("Γ_{I,a} = id", &built("Γ", self.gamma(&i, &a))?, &id))?;
        }
        Ok(())
    }

    /// `d_{x⊗y}∘Γ_{x,y} = d_y ⊗ d_x` on probe pairs.
    pub fn check_gamma_eval(&self, cfg: &SuiteConfig) -> Outcome {
        let c = self.base();
        let objs = probe_objects(c, cfg.bounds, cfg.probe_rows, cfg.seed ^ 0x46);
        for x in &objs {
            for y in &objs {
                let lhs = built("d∘Γ", c.eval_c(&x.tensor(y)).compose(&built("Γ", self.gamma(x, y))?))?;
                at(&[x.clone(), y.clone()], eq_mor("d_{x⊗y}∘Γ = d_y⊗d_x", &lhs, &c.eval_c(y).tensor(&c.eval_c(x))))?;
            }
        }
        Ok(())
    }

    /// `(id⊗b⊗id⊗id)(id⊗b⊗id) = (id⊗id⊗b⊗id)(id⊗b⊗id)` on `x*⊗x`.
    pub fn check_comultiplication_base(&self, cfg: &SuiteConfig) -> Outcome {
        let c = self.base();
        for x in probe_objects(c, cfg.bounds, cfg.probe_rows, cfg.seed ^ 0x43) {
            let (xs, b) = (x.dual(), c.coev_c(&x));
            let id = |o: &C::Obj| c.identity_c(o);
            let first = id(&xs).tensor(&b).tensor(&id(&x));
            let left = id(&xs).tensor(&b).tensor(&id(&x.tensor(&xs).tensor(&x)));
            let right = id(&xs.tensor(&x).tensor(&xs)).tensor(&b).tensor(&id(&x));
            let lhs = built("left", left.compose(&first))?;
            let rhs = built("right", right.compose(&first))?;
            at(std::slice::from_ref(&x), eq_mor("comultiplication on x*⊗x", &lhs, &rhs))?;
        }
        Ok(())
    }

    /// `μ(μ⊗Id) ≐ μ(Id⊗μ)`.
    pub fn check_associativity(&self, cfg: &SuiteConfig) -> Outcome {
        let (h, mu) = (self.hw(), self.mu());
        let id = mat_id(self.h());
        let l = self.typed(
            TensorWord::node(TensorWord::node(h.clone(), h.clone()), h.clone()),
            h.clone(),
            built("μ(μ⊗Id)", mu.compose(&mu.tensor(&id)))?,
        )?;
        let r = self.typed(
            TensorWord::node(h.clone(), TensorWord::node(h.clone(), h.clone())),
            h.clone(),
            built("μ(Id⊗μ)", mu.compose(&id.tensor(&mu)))?,
        )?;
        self.doteq_on("μ(μ⊗Id) ≐ μ(Id⊗μ)", &l, &r, cfg, 2)
    }

    /// `μ(η⊗Id) ≐ Id ≐ μ(Id⊗η)`.
    pub fn check_unit(&self, cfg: &SuiteConfig) -> Outcome {
        let (h, mu, eta) = (self.hw(), self.mu(), self.eta());
        let id = mat_id(self.h());
        let idt = TypedMor::identity(&h);
        let l = self.typed(TensorWord::node(TensorWord::Unit, h.clone()), h.clone(), built("μ(η⊗Id)", mu.compose(&eta.tensor(&id)))?)?;
        self.doteq_on("μ(η⊗Id) ≐ Id", &l, &idt, cfg, 3)?;
        let r = self.typed(TensorWord::node(h.clone(), TensorWord::Unit), h.clone(), built("μ(Id⊗η)", mu.compose(&id.tensor(&eta)))?)?;
        self.doteq_on("μ(Id⊗η) ≐ Id", &r, &idt, cfg, 3)
    }

    /// `(Δ⊗Id)Δ ≐ (Id⊗Δ)Δ`.
    pub fn check_coassociativity(&self, cfg: &SuiteConfig) -> Outcome {
        let (h, delta) = (self.hw(), self.delta());
        let id = mat_id(self.h());
        let l = self.typed(
            h.clone(),
            TensorWord::node(TensorWord::node(h.clone(), h.clone()), h.clone()),
            built("(Δ⊗Id)Δ", delta.tensor(&id).compose(&delta))?,
        )?;
        let r = self.typed(
            h.clone(),
            TensorWord::node(h.clone(), TensorWord::node(h.clone(), h.clone())),
            built("(Id⊗Δ)Δ", id.tensor(&delta).compose(&delta))?,
        )?;
        self.doteq_on("(Δ⊗Id)Δ ≐ (Id⊗Δ)Δ", &l, &r, cfg, 4)
    }

    /// `(ε⊗Id)Δ = L⁻¹` and `(Id⊗ε)Δ = R⁻¹`, exactly.
    pub fn check_counit(&self, cfg: &SuiteConfig) -> Outcome {
        let (h, delta, eps) = (self.hw(), self.delta(), self.epsilon());
        let id = mat_id(self.h());
        let l = self.typed(h.clone(), TensorWord::node(TensorWord::Unit, h.clone()), built("(ε⊗Id)Δ", eps.tensor(&id).compose(&delta))?)?;
        let li = self.typed(h.clone(), l.cod_word.clone(), units(self.h(), Side::Left, Dir::Inverse))?;
        self.exact_on("(ε⊗Id)Δ = L⁻¹", &l, &li, cfg, 5)?;
        let r = self.typed(h.clone(), TensorWord::node(h.clone(), TensorWord::Unit), built("(Id⊗ε)Δ", id.tensor(&eps).compose(&delta))?)?;
        let ri = self.typed(h.clone(), r.cod_word.clone(), units(self.h(), Side::Right, Dir::Inverse))?;
        self.exact_on("(Id⊗ε)Δ = R⁻¹", &r, &ri, cfg, 5)
    }

    /// `μ̂(Δ⊗Δ) ≐ Δμ`.
    pub fn check_compatibility(&self, cfg: &SuiteConfig) -> Outcome {
        let h = self.hw();
        let hh = TensorWord::node(h.clone(), h.clone());
        let dd = self.delta().tensor(&self.delta());
        let mu_hat = built("μ̂", self.mu_hat())?;
        let l = self.typed(hh.clone(), hh.clone(), built("μ̂(Δ⊗Δ)", mu_hat.mor.compose(&dd))?)?;
        let r = self.typed(hh.clone(), hh, built("Δμ", self.delta().compose(&self.mu()))?)?;
        self.doteq_on("μ̂(Δ⊗Δ) ≐ Δμ", &l, &r, cfg, 6)
    }

    /// `εμ ≐ ε⊗ε`.
    pub fn check_counit_multiplicative(&self, cfg: &SuiteConfig) -> Outcome {
        let h = self.hw();
        let hh = TensorWord::node(h.clone(), h.clone());
        let eps = self.epsilon();
        let l = self.typed(hh.clone(), TensorWord::Unit, built("εμ", eps.compose(&self.mu()))?)?;
        let r = self.typed(hh, TensorWord::node(TensorWord::Unit, TensorWord::Unit), eps.tensor(&eps))?;
        self.doteq_on("εμ ≐ ε⊗ε", &l, &r, cfg, 7)
    }

    /// `T(η⊗Id) ≐ Id` and `T(μ⊗Id) ≐ T(Id⊗T)` on `cfg.fibers` objects `V`.
    pub fn check_module(&self, cfg: &SuiteConfig) -> Outcome {
        let h = self.hw();
        let (mu, eta) = (self.mu(), self.eta());
        for (k, v) in probe_objects(self.base(), cfg.bounds, cfg.fibers, cfg.seed ^ 0x54).iter().enumerate() {
            let (jv, t) = (self.j(v), self.action_t(v));
            let jw = TensorWord::leaf(&jv);
            let idj = mat_id(&jv);
            let salt = 8 + 16 * k as u64;
            let unit = self.typed(
                TensorWord::node(TensorWord::Unit, jw.clone()),
                jw.clone(),
                built("T(η⊗Id)", t.compose(&eta.tensor(&idj)))?,
            )?;
            at(std::slice::from_ref(v), self.doteq_on("T(η⊗Id) ≐ Id", &unit, &TypedMor::identity(&jw), cfg, salt))?;
            let l = self.typed(
                TensorWord::node(TensorWord::node(h.clone(), h.clone()), jw.clone()),
                jw.clone(),
                built("T(μ⊗Id)", t.compose(&mu.tensor(&idj)))?,
            )?;
            let r = self.typed(
                TensorWord::node(h.clone(), TensorWord::node(h.clone(), jw.clone())),
                jw.clone(),
                built("T(Id⊗T)", t.compose(&mat_id(self.h()).tensor(&t)))?,
            )?;
            at(std::slice::from_ref(v), self.doteq_on("T(μ⊗Id) ≐ T(Id⊗T)", &l, &r, cfg, salt + 1))?;
        }
        Ok(())
    }

    /// Rows of `μ`, `η`, `Δ`, `ε`, `T` have exactly one entry.
    pub fn check_singleton_rows(&self, cfg: &SuiteConfig) -> Outcome {
        let h = self.hw();
        let hh = TensorWord::node(h.clone(), h.clone());
        let v = C::Obj::unit();
        let jw = TensorWord::leaf(&self.j(&v));
        let cases = [
            (self.mu(), hh),
            (self.eta(), TensorWord::Unit),
            (self.delta(), h.clone()),
            (self.epsilon(), h.clone()),
            (self.action_t(&v), TensorWord::node(h, jw)),
        ];
        for (k, (m, w)) in cases.iter().enumerate() {
            for x in built("probe rows", self.rows(w, cfg, 100 + k as u64))? {
                let row = m.row(&x).map_err(|e| Witness::at(x.clone(), format!("{}: {e}", m.label())))?;
                let dims_nonzero = m.dom().fiber(&x).map(|o| o.dim() > 0).unwrap_or(false);
                if dims_nonzero && row.len() != 1 {
                    return Err(Witness::at(x, format!("{}: support of size {}", m.label(), row.len())));
                }
            }
        }
        Ok(())
    }

    /// The whole suite in its fixed order.
    pub fn checks(&self, cfg: &SuiteConfig) -> Vec<Check> {
        type Run<C> = fn(&Bialgebra<C>, &SuiteConfig) -> Outcome;
        let table: [(&str, &'static str, Run<C>); 12] = [
            ("bialgebra.gamma_relation", "gamma-relation", Self::check_gamma_relation),
            ("bialgebra.gamma_unit", "gamma-unit", Self::check_gamma_unit),
            ("bialgebra.gamma_eval", "gamma-evaluation", Self::check_gamma_eval),
            ("bialgebra.comultiplication_base", "comultiplication-base", Self::check_comultiplication_base),
            ("bialgebra.associativity", "algebra-associativity", Self::check_associativity),
            ("bialgebra.unit", "algebra-unit", Self::check_unit),
            ("bialgebra.coassociativity", "coalgebra-coassociativity", Self::check_coassociativity),
            ("bialgebra.counit", "coalgebra-counit", Self::check_counit),
            ("bialgebra.compatibility", "bialgebra-compatibility", Self::check_compatibility),
            ("bialgebra.counit_multiplicative", "bialgebra-counit-multiplicative", Self::check_counit_multiplicative),
            ("bialgebra.module", "module-axioms", Self::check_module),
            ("bialgebra.singleton_rows", "structure-singleton-rows", Self::check_singleton_rows),
        ];
        table
            .into_iter()
            .map(|(id, anchor, run)| {
                let (me, cfg) = (self.clone(), *cfg);
                Check::new(id, anchor, move || run(&me, &cfg))
            })
            .collect()
    }
}
