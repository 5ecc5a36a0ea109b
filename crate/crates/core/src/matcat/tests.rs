use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::laws;
use super::*;
use crate::base::{Dir, GradedObject, GradedVect, PlainObject, PlainVect};
use crate::index::IndexSet;
use crate::linalg::{q_int, SparseMatrix};
use crate::probe::{random_mat_morphism, random_mat_object, Bounds, Sampler};

type G = GradedObject;

fn ix(i: u64) -> Index {
    Index::from(i)
}

fn scalar_mor(a: &G, v: i64) -> Morphism<G> {
    Morphism::new(a.clone(), a.clone(), SparseMatrix::from_dense(&[vec![q_int(v)]]))
}

fn deg(d: i64) -> G {
    GradedObject::from_degrees([d])
}

#[test]
fn composition_examples() {
    let a = deg(1);
    let two = embed_mor(&scalar_mor(&a, 2), ix(1), ix(2));
    let three = embed_mor(&scalar_mor(&a, 3), ix(2), ix(4));
    let six = three.compose(&two).unwrap();
    assert_eq!(six.entry(&ix(1), &ix(4)).unwrap().matrix(), &SparseMatrix::from_dense(&[vec![q_int(6)]]));
    assert!(laws::eq_rows("G∘Id", &two.compose(&mat_id(two.dom())).unwrap(), &two).is_ok());
    assert!(two.compose(&two).is_err());
}

#[test]
fn composition_drops_unreached_columns() {
    let a = deg(0);
    let f = MatObject::from_table([(ix(0), a.clone()), (ix(1), a.clone())]);
    let g = MatObject::from_table([(ix(5), a.clone()), (ix(6), a.clone())]);
    let ff = MatMorphism::from_fn("F", f.clone(), f.clone(), |x| Ok(BTreeMap::from([(x.clone(), Morphism::identity(&deg(0)))])));
    let gg = MatMorphism::from_fn("G", f, g, |x| {
        let y = if *x == Index::from(0u64) { 5u64 } else { 6 };
        Ok(BTreeMap::from([(Index::from(y), Morphism::identity(&deg(0)))]))
    });
    let h = gg.compose(&ff).unwrap();
    assert!(h.entry(&ix(0), &ix(6)).unwrap().is_zero());
    assert_eq!(h.row(&ix(0)).unwrap().len(), 1);
}

#[test]
fn identity_and_addition() {
    let f = MatObject::from_table([(ix(2), deg(1)), (ix(3), deg(-1))]);
    let id = mat_id(&f);
    assert_eq!(id.row(&ix(2)).unwrap(), BTreeMap::from([(ix(2), Morphism::identity(&deg(1)))]));
    let zero = id.add(&id.neg()).unwrap();
    assert!(zero.row(&ix(3)).unwrap().is_empty());
    assert!(id.row(&ix(4)).is_err());
}

#[test]
fn tensor_object_examples() {
    let f = MatObject::singleton(ix(3), deg(0));
    let g = MatObject::singleton(ix(5), deg(1));
    // (3+5)(3+5+1)/2 + 5 = 41
    assert_eq!((f.tensor(&g)).members().unwrap(), vec![ix(41)]);
    assert_eq!(f.tensor(&g).fiber(&ix(41)).unwrap(), deg(1));
    let fi = f.tensor(&MatObject::unit());
    assert_eq!(
        fi.index_set(),
        IndexSet::pair_image(f.index_set(), IndexSet::finite([Index::star()]))
    );
}

#[test]
fn structure_inverse_pairs() {
    let f = MatObject::from_table([(ix(0), deg(1)), (ix(2), deg(0))]);
    let g = MatObject::singleton(ix(1), deg(-1));
    laws::structure_inverses(&f, &g, &f).unwrap();
    let m = MatCat::new(GradedVect::default());
    laws::braid_invertible(&m, &f, &g).unwrap();
}

#[test]
fn twist_examples() {
    let m = MatCat::new(GradedVect::default());
    let unit = MatObject::<G>::unit();
    assert!(laws::eq_rows("Θ_I", &m.twist_m(&unit), &mat_id(&unit)).is_ok());
    let j = embed_obj(&deg(1), ix(0));
    let t = m.twist_m(&j);
    assert_eq!(t.entry(&ix(0), &ix(0)).unwrap().matrix(), &SparseMatrix::from_dense(&[vec![q_int(2)]]));
    // Θ on {1}⊗{1}: q^{(1+1)²} = 16 = q·q·q·q from C, C and the two twists
    let k = embed_obj(&deg(1), ix(1));
    let tt = m.twist_m(&j.tensor(&k));
    let v = pair(&ix(0), &ix(1));
    assert_eq!(tt.entry(&v, &v).unwrap().matrix(), &SparseMatrix::from_dense(&[vec![q_int(16)]]));
    laws::twist_balance(&m, &j, &k).unwrap();
}

#[test]
fn symmetric_braid_squares_to_identity() {
    let m = MatCat::new(PlainVect);
    let f = MatObject::singleton(ix(0), PlainObject(2));
    let g = MatObject::singleton(ix(1), PlainObject(3));
    let cc = m.braid_m(&g, &f, Dir::Forward).compose(&m.braid_m(&f, &g, Dir::Forward)).unwrap();
    laws::eq_rows("C∘C", &cc, &mat_id(&f.tensor(&g))).unwrap();
}

#[test]
fn equal_on_rows_examples() {
    let f = MatObject::from_table([(ix(0), deg(0))]);
    let id = mat_id(&f);
    assert!(id.equal_on_rows(&id, &[ix(0)]).unwrap());
    assert!(!id.equal_on_rows(&id.scale(&q_int(2)), &[ix(0)]).unwrap());
    assert!(id.equal_on_rows(&id, &[ix(9)]).is_err());
}

#[test]
fn coproduct_examples() {
    let a = MatObject::singleton(ix(1), deg(0));
    let b = MatObject::singleton(ix(2), deg(1));
    let sum = Coproduct::new(&[a.clone(), b.clone()]).unwrap();
    assert_eq!(sum.object.members().unwrap(), vec![ix(1), ix(2)]);
    let id = sum.copair(&sum.injections).unwrap();
    assert!(id.equal_exhaustive(&mat_id(&sum.object)).unwrap());
    assert!(matches!(Coproduct::new(&[a.clone(), a]), Err(Error::NotDisjoint(_))));
}

#[test]
fn embedding_examples() {
    let v = deg(1);
    assert!(embed_mor(&Morphism::identity(&v), ix(0), ix(0))
        .equal_exhaustive(&embedded_identity(&v, ix(0)))
        .unwrap());
    let (a, b) = (scalar_mor(&v, 2), scalar_mor(&v, 5));
    let composed = embed_mor(&b, ix(1), ix(2)).compose(&embed_mor(&a, ix(0), ix(1))).unwrap();
    assert!(composed.equal_exhaustive(&embed_mor(&b.compose(&a).unwrap(), ix(0), ix(2))).unwrap());
    assert_eq!(embed_obj(&G::unit(), Index::star()), MatObject::unit());
}

#[test]
fn duality_examples() {
    let m = MatCat::new(GradedVect::default());
    let naturals = MatObject::family(IndexSet::AllNaturals, std::sync::Arc::new(ConstFamily));
    assert!(matches!(m.coev_m(&naturals), Err(Error::DualityObstruction)));
    let j = embed_obj(&deg(1), ix(4));
    assert_eq!(m.dual_obj_m(&j).fiber(&ix(4)).unwrap(), deg(-1));
    let b = m.coev_m(&j).unwrap();
    assert_eq!(b.row(&Index::star()).unwrap().len(), 1);
    let d = m.eval_m(&naturals);
    assert_eq!(d.row(&pair(&ix(7), &ix(7))).unwrap().len(), 1);
    assert!(d.row(&pair(&ix(7), &ix(8))).unwrap().is_empty());
}

struct ConstFamily;

impl Family<G> for ConstFamily {
    fn name(&self) -> String {
        "const".into()
    }

    fn fiber(&self, _: &Index) -> Result<G> {
        Ok(deg(1))
    }
}

fn run_suite<C: Sampler>(c: C, seed: u64) {
    let m = MatCat::new(c.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = Bounds::default();
    for _ in 0..6 {
        let objs: Vec<_> = (0..4).map(|_| random_mat_object(&c, &mut rng, b, 3, 6)).collect();
        let (f, g, h, k) = (&objs[0], &objs[1], &objs[2], &objs[3]);
        let ff = random_mat_morphism(&mut rng, f, g);
        let ff2 = random_mat_morphism(&mut rng, f, g);
        let gg = random_mat_morphism(&mut rng, g, h);
        let hh = random_mat_morphism(&mut rng, h, k);
        let kk = random_mat_morphism(&mut rng, h, f);
        laws::funct1(&ff).unwrap();
        laws::funct2(&hh, &gg, &ff).unwrap();
        laws::abelian(&ff, &ff2, &gg).unwrap();
        laws::tensor_functorial(&gg, &ff, &kk, &gg).unwrap();
        laws::tensor_identity(f, g).unwrap();
        laws::structure_inverses(f, g, h).unwrap();
        laws::pentagon(f, g, h, k).unwrap();
        laws::triangle(f, g).unwrap();
        laws::assoc_natural(&ff, &gg, &hh).unwrap();
        laws::units_natural(&ff).unwrap();
        laws::hexagons(&m, f, g, h).unwrap();
        laws::braid_invertible(&m, f, g).unwrap();
        laws::braid_natural(&m, &ff, &gg).unwrap();
        laws::twist_natural(&m, &ff).unwrap();
        laws::twist_balance(&m, f, g).unwrap();
        laws::row_finite(&ff.tensor(&gg)).unwrap();
        laws::direct_sum_decomposition(f).unwrap();
    }
}

#[test]
fn matcat_laws_graded() {
    for q in 1..=3 {
        run_suite(GradedVect::with_int(q).unwrap(), 100 + q as u64);
    }
}

#[test]
fn matcat_laws_symmetric() {
    run_suite(PlainVect, 5);
}

#[test]
fn broken_associator_is_caught() {
    let f = MatObject::from_table([(ix(0), deg(1)), (ix(1), deg(0))]);
    let a = assoc(&f, &f, &f, Dir::Forward);
    let doubled = a.scale(&q_int(2));
    let w = laws::eq_rows("A vs 2A", &a, &doubled).unwrap_err();
    assert!(w.row.is_some());
}
