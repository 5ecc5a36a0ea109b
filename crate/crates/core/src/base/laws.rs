//! The defining identities of a strict braided Ab-category with left duality
//! and twist, each as an exact check on concrete probes.

use super::{BaseObject, BraidedCategory, Dir, Morphism};
use crate::check::{built, expect_eq, Outcome, Witness};

type Mor<C> = Morphism<<C as BraidedCategory>::Obj>;

pub fn eq_mor<O: BaseObject>(what: &str, lhs: &Morphism<O>, rhs: &Morphism<O>) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else if lhs.src() != rhs.src() || lhs.dst() != rhs.dst() {
        Err(Witness::new(format!(
            "{what}: types differ ({} → {} vs {} → {})",
            lhs.src(),
            lhs.dst(),
            rhs.src(),
            rhs.dst()
        )))
    } else {
        Err(Witness::new(format!(
            "{what}: max |Δ| = {} ({:?} vs {:?})",
            lhs.matrix().max_abs_diff(rhs.matrix()),
            lhs.matrix(),
            rhs.matrix()
        )))
    }
}

pub fn composition_associative<C: BraidedCategory>(h: &Mor<C>, g: &Mor<C>, f: &Mor<C>) -> Outcome {
    let l = built("(h∘g)∘f", h.compose(g).and_then(|hg| hg.compose(f)))?;
    let r = built("h∘(g∘f)", g.compose(f).and_then(|gf| h.compose(&gf)))?;
    eq_mor("associativity of ∘", &l, &r)
}

pub fn identity_laws<C: BraidedCategory>(c: &C, f: &Mor<C>) -> Outcome {
    let l = built("id∘f", c.identity_c(f.dst()).compose(f))?;
    let r = built("f∘id", f.compose(&c.identity_c(f.src())))?;
    eq_mor("id∘f = f", &l, f)?;
    eq_mor("f∘id = f", &r, f)
}

/// Abelian-group laws on a hom-set and bilinearity of ∘ and ⊗.
pub fn abelian_laws<C: BraidedCategory>(c: &C, f: &Mor<C>, g: &Mor<C>, h: &Mor<C>, k: &Mor<C>) -> Outcome {
    let zero = c.zero_c(f.src(), f.dst());
    eq_mor("f + 0 = f", &built("add", c.add_c(f, &zero))?, f)?;
    eq_mor("f + (−f) = 0", &built("add", c.add_c(f, &f.neg()))?, &zero)?;
    eq_mor("f + g = g + f", &built("add", c.add_c(f, g))?, &built("add", c.add_c(g, f))?)?;
    // h: f.dst → _, post-composition distributes
    let fg = built("add", c.add_c(f, g))?;
    let lhs = built("h∘(f+g)", h.compose(&fg))?;
    let rhs = built("h∘f + h∘g", h.compose(f).and_then(|hf| h.compose(g).and_then(|hg| hf.add(&hg))))?;
    eq_mor("h∘(f+g) = h∘f + h∘g", &lhs, &rhs)?;
    eq_mor("h∘0 = 0", &built("h∘0", h.compose(&zero))?, &c.zero_c(f.src(), h.dst()))?;
    let lhs = c.tensor_c(&fg, k);
    let rhs = built("f⊗k + g⊗k", c.add_c(&c.tensor_c(f, k), &c.tensor_c(g, k)))?;
    eq_mor("(f+g)⊗k = f⊗k + g⊗k", &lhs, &rhs)?;
    let z = c.tensor_c(f, &c.zero_c(k.src(), k.dst()));
    eq_mor("f⊗0 = 0", &z, &c.zero_c(z.src(), z.dst()))
}

pub fn tensor_functorial<C: BraidedCategory>(f2: &Mor<C>, f1: &Mor<C>, g2: &Mor<C>, g1: &Mor<C>) -> Outcome {
    let lhs = built("(f'⊗g')∘(f⊗g)", f2.tensor(g2).compose(&f1.tensor(g1)))?;
    let rhs = built("f'∘f", f2.compose(f1))?.tensor(&built("g'∘g", g2.compose(g1))?);
    eq_mor("(f'⊗g')∘(f⊗g) = (f'∘f)⊗(g'∘g)", &lhs, &rhs)?;
    let ids = Morphism::identity(f1.src()).tensor(&Morphism::identity(g1.src()));
    eq_mor("id⊗id = id", &ids, &Morphism::identity(&f1.src().tensor(g1.src())))
}

/// Strict associativity and unitality of ⊗ on objects and morphisms.
pub fn strictness<C: BraidedCategory>(f: &Mor<C>, g: &Mor<C>, h: &Mor<C>) -> Outcome {
    let (a, b, d) = (f.src(), g.src(), h.src());
    expect_eq("(a⊗b)⊗c = a⊗(b⊗c)", &a.tensor(b).tensor(d), &a.tensor(&b.tensor(d)))?;
    expect_eq("a⊗I = a", &a.tensor(&C::Obj::unit()), a)?;
    expect_eq("I⊗a = a", &C::Obj::unit().tensor(a), a)?;
    eq_mor("(f⊗g)⊗h = f⊗(g⊗h)", &f.tensor(g).tensor(h), &f.tensor(&g.tensor(h)))?;
    let id_i = Morphism::identity(&C::Obj::unit());
    eq_mor("f⊗id_I = f", &f.tensor(&id_i), f)?;
    eq_mor("id_I⊗f = f", &id_i.tensor(f), f)
}

/// `c_{a,b⊗d} = (id_b⊗c_{a,d})(c_{a,b}⊗id_d)` and
/// `c_{a⊗b,d} = (c_{a,d}⊗id_b)(id_a⊗c_{b,d})`.
pub fn hexagons<C: BraidedCategory>(c: &C, a: &C::Obj, b: &C::Obj, d: &C::Obj) -> Outcome {
    let lhs = c.braid_c(a, &b.tensor(d), Dir::Forward);
    let rhs = built(
        "hexagon I",
        Morphism::identity(b)
            .tensor(&c.braid_c(a, d, Dir::Forward))
            .compose(&c.braid_c(a, b, Dir::Forward).tensor(&Morphism::identity(d))),
    )?;
    eq_mor("hexagon c_{a,b⊗c}", &lhs, &rhs)?;
    let lhs = c.braid_c(&a.tensor(b), d, Dir::Forward);
    let rhs = built(
        "hexagon II",
        c.braid_c(a, d, Dir::Forward)
            .tensor(&Morphism::identity(b))
            .compose(&Morphism::identity(a).tensor(&c.braid_c(b, d, Dir::Forward))),
    )?;
    eq_mor("hexagon c_{a⊗b,c}", &lhs, &rhs)
}

pub fn braid_invertible<C: BraidedCategory>(c: &C, a: &C::Obj, b: &C::Obj) -> Outcome {
    let fwd = c.braid_c(a, b, Dir::Forward);
    let inv = c.braid_c(a, b, Dir::Inverse);
    eq_mor("c⁻¹∘c = id", &built("c⁻¹∘c", inv.compose(&fwd))?, &Morphism::identity(&a.tensor(b)))?;
    eq_mor("c∘c⁻¹ = id", &built("c∘c⁻¹", fwd.compose(&inv))?, &Morphism::identity(&b.tensor(a)))?;
    eq_mor("c_{a,I} = id", &c.braid_c(a, &C::Obj::unit(), Dir::Forward), &Morphism::identity(a))
}

/// `(g⊗f)∘c_{a,b} = c_{a',b'}∘(f⊗g)` for `f: a → a'`, `g: b → b'`.
pub fn braid_natural<C: BraidedCategory>(c: &C, f: &Mor<C>, g: &Mor<C>) -> Outcome {
    let lhs = built("(g⊗f)∘c", g.tensor(f).compose(&c.braid_c(f.src(), g.src(), Dir::Forward)))?;
    let rhs = built("c∘(f⊗g)", c.braid_c(f.dst(), g.dst(), Dir::Forward).compose(&f.tensor(g)))?;
    eq_mor("naturality of c", &lhs, &rhs)
}

pub fn twist_natural<C: BraidedCategory>(c: &C, f: &Mor<C>) -> Outcome {
    let lhs = built("f∘θ", f.compose(&c.twist_c(f.src())))?;
    let rhs = built("θ∘f", c.twist_c(f.dst()).compose(f))?;
    eq_mor("naturality of θ", &lhs, &rhs)
}

/// `θ_{a⊗b} = c_{b,a} c_{a,b} (θ_a⊗θ_b)` and `θ_I = id`.
pub fn twist_balance<C: BraidedCategory>(c: &C, a: &C::Obj, b: &C::Obj) -> Outcome {
    let lhs = c.twist_c(&a.tensor(b));
    let rhs = built(
        "balance",
        c.braid_c(b, a, Dir::Forward)
            .compose(&c.braid_c(a, b, Dir::Forward))
            .and_then(|cc| cc.compose(&c.twist_c(a).tensor(&c.twist_c(b)))),
    )?;
    eq_mor("θ_{a⊗b} = c_{b,a}c_{a,b}(θ_a⊗θ_b)", &lhs, &rhs)?;
    eq_mor("θ_I = id", &c.twist_c(&C::Obj::unit()), &Morphism::identity(&C::Obj::unit()))
}

/// `θ_{a*} = (θ_a)*`.
pub fn twist_dual<C: BraidedCategory>(c: &C, a: &C::Obj) -> Outcome {
    eq_mor("θ_{a*} = (θ_a)*", &c.twist_c(&a.dual()), &c.dual_mor(&c.twist_c(a)))
}

/// `(d_a⊗id_{a*})(id_{a*}⊗b_a) = id_{a*}` and `(id_a⊗d_a)(b_a⊗id_a) = id_a`.
pub fn zigzag<C: BraidedCategory>(c: &C, a: &C::Obj) -> Outcome {
    let ad = a.dual();
    let lhs = built(
        "zig-zag a*",
        c.eval_c(a)
            .tensor(&Morphism::identity(&ad))
            .compose(&Morphism::identity(&ad).tensor(&c.coev_c(a))),
    )?;
    eq_mor("(d⊗id)(id⊗b) = id_{a*}", &lhs, &Morphism::identity(&ad))?;
    let lhs = built(
        "zig-zag a",
        Morphism::identity(a)
            .tensor(&c.eval_c(a))
            .compose(&c.coev_c(a).tensor(&Morphism::identity(a))),
    )?;
    eq_mor("(id⊗d)(b⊗id) = id_a", &lhs, &Morphism::identity(a))
}

/// `c_{b,a} ∘ c_{a,b} = id`, true only for symmetric braidings.
pub fn symmetric<C: BraidedCategory>(c: &C, a: &C::Obj, b: &C::Obj) -> Outcome {
    let cc = built("c∘c", c.braid_c(b, a, Dir::Forward).compose(&c.braid_c(a, b, Dir::Forward)))?;
    eq_mor("c_{b,a}∘c_{a,b} = id", &cc, &Morphism::identity(&a.tensor(b)))
}

/// Every structure morphism preserves the grading.
pub fn structure_homogeneous<C: BraidedCategory>(c: &C, a: &C::Obj, b: &C::Obj) -> Outcome {
    let all = [
        c.braid_c(a, b, Dir::Forward),
        c.braid_c(a, b, Dir::Inverse),
        c.twist_c(a),
        c.eval_c(a),
        c.coev_c(a),
    ];
    match all.iter().find(|m| !m.preserves_degree()) {
        None => Ok(()),
        Some(m) => Err(Witness::new(format!("not degree-preserving: {m:?}"))),
    }
}
