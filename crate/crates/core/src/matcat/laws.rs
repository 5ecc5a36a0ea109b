//! The identities making the matrix category a braided monoidal
//! Ab-category with twist, each checked entrywise on probe rows.

use super::{assoc, mat_id, mat_zero, units, Coproduct, MatCat, MatMorphism, MatObject, Mor, Obj, Side};
use crate::base::{BaseObject, BraidedCategory, Dir};
use crate::check::{built, Outcome, Witness};
use crate::index::Index;

/// Rows compared per law when the domain is larger than this.
pub const ROW_CAP: usize = 256;

/// Domain indices used as probes: every member when the domain is small,
/// otherwise its `cap` smallest members.
pub fn probe_rows<O: BaseObject>(f: &MatObject<O>, cap: usize) -> Vec<Index> {
    match f.members() {
        Some(m) if m.len() <= cap => m,
        _ => f.index_set().enumerate_upto(cap),
    }
}

/// Exact row equality of two parallel morphisms on the probe rows of their domain.
pub fn eq_rows<O: BaseObject>(what: &str, lhs: &MatMorphism<O>, rhs: &MatMorphism<O>) -> Outcome {
    let probes = probe_rows(lhs.dom(), ROW_CAP);
    match lhs.first_row_difference(rhs, &probes) {
        Ok(None) => Ok(()),
        Ok(Some((row, detail))) => Err(Witness::at(row, format!("{what}: {detail}"))),
        Err(e) => Err(Witness::new(format!("{what}: {e}"))),
    }
}

fn comp<O: BaseObject>(what: &str, ms: &[&MatMorphism<O>]) -> Result<MatMorphism<O>, Witness> {
    let (last, rest) = ms.split_last().expect("nonempty chain");
    rest.iter()
        .rev()
        .try_fold((*last).clone(), |acc, g| built(what, g.compose(&acc)))
}

/// `Id_g ∘ F = F = F ∘ Id_f`.
pub fn funct1<O: BaseObject>(f: &MatMorphism<O>) -> Outcome {
    eq_rows("Id∘F = F", &comp("Id∘F", &[&mat_id(f.cod()), f])?, f)?;
    eq_rows("F∘Id = F", &comp("F∘Id", &[f, &mat_id(f.dom())])?, f)
}

/// `(H∘G)∘F = H∘(G∘F)`.
pub fn funct2<O: BaseObject>(h: &MatMorphism<O>, g: &MatMorphism<O>, f: &MatMorphism<O>) -> Outcome {
    let hg = built("H∘G", h.compose(g))?;
    let gf = built("G∘F", g.compose(f))?;
    eq_rows("(H∘G)∘F = H∘(G∘F)", &built("(H∘G)∘F", hg.compose(f))?, &built("H∘(G∘F)", h.compose(&gf))?)
}

/// Abelian-group laws on a hom-set and bilinearity of composition.
pub fn abelian<O: BaseObject>(f: &MatMorphism<O>, g: &MatMorphism<O>, h: &MatMorphism<O>) -> Outcome {
    let zero = mat_zero(f.dom(), f.cod());
    eq_rows("F + (−F) = 0", &built("add", f.add(&f.neg()))?, &zero)?;
    eq_rows("F + G = G + F", &built("add", f.add(g))?, &built("add", g.add(f))?)?;
    let fg = built("add", f.add(g))?;
    let lhs = built("H∘(F+G)", h.compose(&fg))?;
    let rhs = built("H∘F + H∘G", h.compose(f).and_then(|hf| h.compose(g).and_then(|hg| hf.add(&hg))))?;
    eq_rows("H∘(F+G) = H∘F + H∘G", &lhs, &rhs)
}

/// `(F'⊗G')∘(F⊗G) = (F'∘F)⊗(G'∘G)`.
pub fn tensor_functorial<O: BaseObject>(
    f2: &MatMorphism<O>,
    f1: &MatMorphism<O>,
    g2: &MatMorphism<O>,
    g1: &MatMorphism<O>,
) -> Outcome {
    let lhs = built("(F'⊗G')∘(F⊗G)", f2.tensor(g2).compose(&f1.tensor(g1)))?;
    let rhs = built("F'∘F", f2.compose(f1))?.tensor(&built("G'∘G", g2.compose(g1))?);
    eq_rows("(F'⊗G')∘(F⊗G) = (F'∘F)⊗(G'∘G)", &lhs, &rhs)
}

/// `Id_f ⊗ Id_g = Id_{f⊗g}`.
pub fn tensor_identity<O: BaseObject>(f: &MatObject<O>, g: &MatObject<O>) -> Outcome {
    eq_rows("Id_f⊗Id_g = Id_{f⊗g}", &mat_id(f).tensor(&mat_id(g)), &mat_id(&f.tensor(g)))
}

/// `A⁻¹∘A = Id`, `A∘A⁻¹ = Id`, and likewise for `R`, `L`.
pub fn structure_inverses<O: BaseObject>(f: &MatObject<O>, g: &MatObject<O>, h: &MatObject<O>) -> Outcome {
    let a = assoc(f, g, h, Dir::Forward);
    let ai = assoc(f, g, h, Dir::Inverse);
    eq_rows("A⁻¹∘A = Id", &comp("A⁻¹∘A", &[&ai, &a])?, &mat_id(a.dom()))?;
    eq_rows("A∘A⁻¹ = Id", &comp("A∘A⁻¹", &[&a, &ai])?, &mat_id(a.cod()))?;
    for side in [Side::Left, Side::Right] {
        let r = units(f, side, Dir::Forward);
        let ri = units(f, side, Dir::Inverse);
        eq_rows("U⁻¹∘U = Id", &comp("U⁻¹∘U", &[&ri, &r])?, &mat_id(r.dom()))?;
        eq_rows("U∘U⁻¹ = Id", &comp("U∘U⁻¹", &[&r, &ri])?, &mat_id(f))?;
    }
    Ok(())
}

/// `(Id_f⊗A_{g,h,k})∘A_{f,g⊗h,k}∘(A_{f,g,h}⊗Id_k) = A_{f,g,h⊗k}∘A_{f⊗g,h,k}`.
pub fn pentagon<O: BaseObject>(f: &MatObject<O>, g: &MatObject<O>, h: &MatObject<O>, k: &MatObject<O>) -> Outcome {
    let fw = Dir::Forward;
    let lhs = comp(
        "pentagon, long side",
        &[
            &mat_id(f).tensor(&assoc(g, h, k, fw)),
            &assoc(f, &g.tensor(h), k, fw),
            &assoc(f, g, h, fw).tensor(&mat_id(k)),
        ],
    )?;
    let rhs = comp("pentagon, short side", &[&assoc(f, g, &h.tensor(k), fw), &assoc(&f.tensor(g), h, k, fw)])?;
    eq_rows("pentagon", &lhs, &rhs)
}

/// `(Id_f⊗L_g)∘A_{f,I,g} = R_f⊗Id_g`.
pub fn triangle<O: BaseObject>(f: &MatObject<O>, g: &MatObject<O>) -> Outcome {
    let unit = MatObject::unit();
    let lhs = comp(
        "(Id⊗L)∘A",
        &[&mat_id(f).tensor(&units(g, Side::Left, Dir::Forward)), &assoc(f, &unit, g, Dir::Forward)],
    )?;
    eq_rows("triangle", &lhs, &units(f, Side::Right, Dir::Forward).tensor(&mat_id(g)))
}

/// `A∘((F⊗G)⊗H) = (F⊗(G⊗H))∘A`.
pub fn assoc_natural<O: BaseObject>(f: &MatMorphism<O>, g: &MatMorphism<O>, h: &MatMorphism<O>) -> Outcome {
    let a_src = assoc(f.dom(), g.dom(), h.dom(), Dir::Forward);
    let a_dst = assoc(f.cod(), g.cod(), h.cod(), Dir::Forward);
    let lhs = comp("A∘((F⊗G)⊗H)", &[&a_dst, &f.tensor(g).tensor(h)])?;
    let rhs = comp("(F⊗(G⊗H))∘A", &[&f.tensor(&g.tensor(h)), &a_src])?;
    eq_rows("naturality of A", &lhs, &rhs)
}

/// `F∘R_f = R_{f'}∘(F⊗Id_I)` and `F∘L_f = L_{f'}∘(Id_I⊗F)`.
pub fn units_natural<O: BaseObject>(f: &MatMorphism<O>) -> Outcome {
    let id_i = mat_id(&MatObject::unit());
    let lhs = comp("F∘R", &[f, &units(f.dom(), Side::Right, Dir::Forward)])?;
    let rhs = comp("R∘(F⊗Id)", &[&units(f.cod(), Side::Right, Dir::Forward), &f.tensor(&id_i)])?;
    eq_rows("naturality of R", &lhs, &rhs)?;
    let lhs = comp("F∘L", &[f, &units(f.dom(), Side::Left, Dir::Forward)])?;
    let rhs = comp("L∘(Id⊗F)", &[&units(f.cod(), Side::Left, Dir::Forward), &id_i.tensor(f)])?;
    eq_rows("naturality of L", &lhs, &rhs)
}

/// Both hexagons, with the associators made explicit.
pub fn hexagons<C: BraidedCategory>(m: &MatCat<C>, f: &Obj<C>, g: &Obj<C>, h: &Obj<C>) -> Outcome {
    let (fw, inv) = (Dir::Forward, Dir::Inverse);
    let lhs = comp(
        "A∘C_{f,g⊗h}∘A",
        &[&assoc(g, h, f, fw), &m.braid_m(f, &g.tensor(h), fw), &assoc(f, g, h, fw)],
    )?;
    let rhs = comp(
        "(Id⊗C)∘A∘(C⊗Id)",
        &[
            &mat_id(g).tensor(&m.braid_m(f, h, fw)),
            &assoc(g, f, h, fw),
            &m.braid_m(f, g, fw).tensor(&mat_id(h)),
        ],
    )?;
    eq_rows("first hexagon", &lhs, &rhs)?;
    let lhs = comp(
        "A⁻¹∘C_{f⊗g,h}∘A⁻¹",
        &[&assoc(h, f, g, inv), &m.braid_m(&f.tensor(g), h, fw), &assoc(f, g, h, inv)],
    )?;
    let rhs = comp(
        "(C⊗Id)∘A⁻¹∘(Id⊗C)",
        &[
            &m.braid_m(f, h, fw).tensor(&mat_id(g)),
            &assoc(f, h, g, inv),
            &mat_id(f).tensor(&m.braid_m(g, h, fw)),
        ],
    )?;
    eq_rows("second hexagon", &lhs, &rhs)
}

/// `C⁻¹∘C = Id` and `C∘C⁻¹ = Id`.
pub fn braid_invertible<C: BraidedCategory>(m: &MatCat<C>, f: &Obj<C>, g: &Obj<C>) -> Outcome {
    let c = m.braid_m(f, g, Dir::Forward);
    let ci = m.braid_m(f, g, Dir::Inverse);
    eq_rows("C⁻¹∘C = Id", &comp("C⁻¹∘C", &[&ci, &c])?, &mat_id(c.dom()))?;
    eq_rows("C∘C⁻¹ = Id", &comp("C∘C⁻¹", &[&c, &ci])?, &mat_id(c.cod()))
}

/// `C_{f',g'}∘(F⊗G) = (G⊗F)∘C_{f,g}`.
pub fn braid_natural<C: BraidedCategory>(m: &MatCat<C>, f: &Mor<C>, g: &Mor<C>) -> Outcome {
    let lhs = comp("C∘(F⊗G)", &[&m.braid_m(f.cod(), g.cod(), Dir::Forward), &f.tensor(g)])?;
    let rhs = comp("(G⊗F)∘C", &[&g.tensor(f), &m.braid_m(f.dom(), g.dom(), Dir::Forward)])?;
    eq_rows("naturality of C", &lhs, &rhs)
}

/// `Θ_g∘F = F∘Θ_f`.
pub fn twist_natural<C: BraidedCategory>(m: &MatCat<C>, f: &Mor<C>) -> Outcome {
    let lhs = comp("Θ∘F", &[&m.twist_m(f.cod()), f])?;
    let rhs = comp("F∘Θ", &[f, &m.twist_m(f.dom())])?;
    eq_rows("naturality of Θ", &lhs, &rhs)
}

/// `Θ_{f⊗g} = C_{g,f}∘C_{f,g}∘(Θ_f⊗Θ_g)`.
pub fn twist_balance<C: BraidedCategory>(m: &MatCat<C>, f: &Obj<C>, g: &Obj<C>) -> Outcome {
    let rhs = comp(
        "C∘C∘(Θ⊗Θ)",
        &[
            &m.braid_m(g, f, Dir::Forward),
            &m.braid_m(f, g, Dir::Forward),
            &m.twist_m(f).tensor(&m.twist_m(g)),
        ],
    )?;
    eq_rows("twist balance", &m.twist_m(&f.tensor(g)), &rhs)
}

/// Every probe row materializes, with type-correct entries and finite support.
pub fn row_finite<O: BaseObject>(f: &MatMorphism<O>) -> Outcome {
    for x in probe_rows(f.dom(), ROW_CAP) {
        f.row(&x).map_err(|e| Witness::at(x.clone(), format!("{}: {e}", f.label())))?;
    }
    Ok(())
}

/// `copair(T_i)∘J_k = T_k` for every `k`, and `copair(J_i) = Id`.
pub fn coproduct_universal<O: BaseObject>(sum: &Coproduct<O>, targets: &[MatMorphism<O>]) -> Outcome {
    let t = built("copair", sum.copair(targets))?;
    for (j, tk) in sum.injections.iter().zip(targets) {
        eq_rows("copair∘J_k = T_k", &comp("copair∘J_k", &[&t, j])?, tk)?;
    }
    let id = built("copair(J)", sum.copair(&sum.injections))?;
    eq_rows("copair(J_i) = Id", &id, &mat_id(&sum.object))
}

/// The singleton decomposition `⊕_x f|_{x} → f` is the identity relabelling,
/// hence an isomorphism with inverse given row by row.
pub fn direct_sum_decomposition<O: BaseObject>(f: &MatObject<O>) -> Outcome {
    let (sum, iso) = built("decomposition", super::decomposition_iso(f))?;
    let back = {
        let obj = f.clone();
        MatMorphism::from_fn("ι⁻¹", f.clone(), sum.object.clone(), move |x| {
            Ok(std::collections::BTreeMap::from([(
                x.clone(),
                crate::base::Morphism::identity(&obj.fiber(x)?),
            )]))
        })
    };
    eq_rows("ι⁻¹∘ι = Id", &comp("ι⁻¹∘ι", &[&back, &iso])?, &mat_id(&sum.object))?;
    eq_rows("ι∘ι⁻¹ = Id", &comp("ι∘ι⁻¹", &[&iso, &back])?, &mat_id(f))?;
    for (s, j) in sum.summands().iter().zip(&sum.injections) {
        if s.members().map(|m| m.len()) != Some(1) {
            return Err(Witness::new(format!("summand {s} is not a singleton")));
        }
        row_finite(j)?;
    }
    Ok(())
}
