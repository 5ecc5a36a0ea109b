use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::laws;
use super::*;
use crate::linalg::q_int;
use crate::probe::{random_morphism, Bounds, Sampler};

fn g(grades: &[(i64, usize)]) -> GradedObject {
    GradedObject::from_grades(grades.iter().copied())
}

fn scalar(v: i64) -> SparseMatrix {
    SparseMatrix::from_dense(&[vec![q_int(v)]])
}

#[test]
fn tensor_obj_examples() {
    let c = GradedVect::default();
    assert_eq!(c.tensor_obj(&g(&[(1, 1)]), &g(&[(-1, 1)])), g(&[(0, 1)]));
    let a = g(&[(0, 1), (2, 1)]);
    assert_eq!(c.tensor_obj(&a, &c.unit()), a);
    assert_eq!(c.tensor_obj(&g(&[(0, 2)]), &g(&[(0, 2)])), g(&[(0, 4)]));
}

#[test]
fn compose_examples() {
    let c = GradedVect::default();
    let a = g(&[(1, 1)]);
    let f = Morphism::new(a.clone(), a.clone(), scalar(2));
    let h = Morphism::new(a.clone(), a.clone(), scalar(3));
    assert_eq!(c.compose_c(&c.identity_c(&a), &f).unwrap(), f);
    assert_eq!(c.compose_c(&c.zero_c(&a, &a), &f).unwrap(), c.zero_c(&a, &a));
    assert_eq!(c.compose_c(&h, &f).unwrap().matrix(), &scalar(6));
}

#[test]
fn compose_rejects_mismatch() {
    let c = GradedVect::default();
    let f = c.identity_c(&g(&[(1, 1)]));
    let h = c.identity_c(&g(&[(2, 1)]));
    assert!(matches!(c.compose_c(&h, &f), Err(crate::error::Error::Mismatch(_))));
    assert!(c.add_c(&h, &f).is_err());
}

#[test]
fn tensor_c_examples() {
    let c = GradedVect::default();
    let (a, b) = (g(&[(0, 1), (1, 1)]), g(&[(-1, 2)]));
    assert_eq!(
        c.tensor_c(&c.identity_c(&a), &c.identity_c(&b)),
        c.identity_c(&c.tensor_obj(&a, &b))
    );
    let x = g(&[(1, 1)]);
    let f = Morphism::new(x.clone(), x.clone(), scalar(2));
    let h = Morphism::new(x.clone(), x.clone(), scalar(3));
    assert_eq!(c.tensor_c(&f, &h).matrix(), &scalar(6));
    assert!(c.tensor_c(&f, &c.zero_c(&b, &b)).is_zero());
}

#[test]
fn braid_examples() {
    let c = GradedVect::default();
    let a = g(&[(1, 1)]);
    assert_eq!(c.braid_c(&a, &a, Dir::Forward).matrix(), &scalar(2));
    let b = g(&[(0, 1), (2, 1)]);
    assert_eq!(c.braid_c(&b, &c.unit(), Dir::Forward), c.identity_c(&b));
    let fwd = c.braid_c(&a, &b, Dir::Forward);
    let inv = c.braid_c(&a, &b, Dir::Inverse);
    assert_eq!(inv.compose(&fwd).unwrap(), c.identity_c(&a.tensor(&b)));
}

#[test]
fn braid_is_flip_with_bicharacter() {
    // a = [1, 2], b = [3]: c(e_i⊗f) = q^{|e_i|·3} f⊗e_i
    let c = GradedVect::with_int(3).unwrap();
    let a = GradedObject::from_degrees([1, 2]);
    let b = GradedObject::from_degrees([3]);
    let m = c.braid_c(&a, &b, Dir::Forward);
    assert_eq!(m.matrix().get(0, 0), q_int(27));
    assert_eq!(m.matrix().get(1, 1), q_int(729));
    assert_eq!(m.dst(), &GradedObject::from_degrees([4, 5]));
}

#[test]
fn twist_examples() {
    let c = GradedVect::default();
    assert_eq!(c.twist_c(&c.unit()), c.identity_c(&c.unit()));
    assert_eq!(c.twist_c(&g(&[(1, 1)])).matrix(), &scalar(2));
    assert_eq!(c.twist_c(&g(&[(2, 1)])).matrix(), &scalar(16));
}

#[test]
fn duality_examples() {
    let c = GradedVect::default();
    assert_eq!(c.dual_obj(&g(&[(1, 1)])), g(&[(-1, 1)]));
    assert_eq!(c.eval_c(&g(&[(1, 1)])).matrix(), &scalar(1));
    // zig-zag on {0↦2}, computed by hand: (d⊗id)(id⊗b) is the 2×2 identity.
    let a = g(&[(0, 2)]);
    let zig = c
        .eval_c(&a)
        .tensor(&c.identity_c(&a.dual()))
        .compose(&c.identity_c(&a.dual()).tensor(&c.coev_c(&a)))
        .unwrap();
    assert_eq!(zig.matrix(), &SparseMatrix::identity(2));
}

#[test]
fn blocks_split_by_degree() {
    let c = GradedVect::default();
    let a = GradedObject::from_degrees([0, 1, 0]);
    let blocks = c.identity_c(&a).blocks();
    assert_eq!(blocks.len(), 2);
    assert_eq!(blocks[0].degree, 0);
    assert_eq!(blocks[0].matrix, SparseMatrix::identity(2));
    assert_eq!(blocks[1].rows, vec![1]);
}

#[test]
fn zero_q_is_rejected() {
    assert!(GradedVect::with_int(0).is_err());
}

#[test]
fn symmetric_instance_squares_to_identity() {
    let c = PlainVect;
    for (a, b) in [(1, 2), (2, 2), (3, 1)] {
        laws::symmetric(&c, &PlainObject(a), &PlainObject(b)).unwrap();
    }
    let c = GradedVect::with_int(1).unwrap();
    laws::symmetric(&c, &g(&[(1, 1), (2, 1)]), &g(&[(-1, 2)])).unwrap();
}

#[test]
fn nonsymmetric_for_q_two() {
    let c = GradedVect::default();
    assert!(laws::symmetric(&c, &g(&[(1, 1)]), &g(&[(1, 1)])).is_err());
}

fn run_all_laws<C: Sampler>(c: &C, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = Bounds {
        max_degree: 2,
        max_dim: 2,
    };
    for _ in 0..25 {
        let (x, y, z) = (
            c.sample_object(&mut rng, b),
            c.sample_object(&mut rng, b),
            c.sample_object(&mut rng, b),
        );
        let f = random_morphism(&mut rng, &x, &y);
        let f2 = random_morphism(&mut rng, &x, &y);
        let h = random_morphism(&mut rng, &y, &z);
        let k = random_morphism(&mut rng, &z, &x);
        let g1 = random_morphism(&mut rng, &z, &y);
        let g2 = random_morphism(&mut rng, &y, &x);
        laws::composition_associative::<C>(&k, &h, &f).unwrap();
        laws::identity_laws(c, &f).unwrap();
        laws::abelian_laws(c, &f, &f2, &h, &k).unwrap();
        laws::tensor_functorial::<C>(&h, &f, &g2, &g1).unwrap();
        laws::strictness::<C>(&f, &h, &k).unwrap();
        laws::hexagons(c, &x, &y, &z).unwrap();
        laws::braid_invertible(c, &x, &y).unwrap();
        laws::braid_natural(c, &f, &h).unwrap();
        laws::twist_natural(c, &f).unwrap();
        laws::twist_balance(c, &x, &y).unwrap();
        laws::twist_dual(c, &x).unwrap();
        laws::zigzag(c, &x).unwrap();
        laws::structure_homogeneous(c, &x, &y).unwrap();
    }
}

#[test]
fn laws_hold_for_q_one_two_three() {
    for q in 1..=3 {
        run_all_laws(&GradedVect::with_int(q).unwrap(), q as u64);
    }
    let third = GradedVect::new(num_rational::BigRational::new(2.into(), 3.into())).unwrap();
    run_all_laws(&third, 9);
}

#[test]
fn laws_hold_for_symmetric_instance() {
    run_all_laws(&PlainVect, 11);
}

fn graded_object() -> impl Strategy<Value = GradedObject> {
    prop::collection::vec(-2i64..=2, 0..=3).prop_map(GradedObject::from_degrees)
}

proptest! {
    #[test]
    fn object_tensor_is_strict(a in graded_object(), b in graded_object(), d in graded_object()) {
        prop_assert_eq!(a.tensor(&b).tensor(&d), a.tensor(&b.tensor(&d)));
        prop_assert_eq!(a.tensor(&GradedObject::unit()), a.clone());
        prop_assert_eq!(a.dual().dual(), a);
    }

    #[test]
    fn hexagons_and_balance(a in graded_object(), b in graded_object(), d in graded_object(), q in 1i64..=3) {
        let c = GradedVect::with_int(q).unwrap();
        prop_assert!(laws::hexagons(&c, &a, &b, &d).is_ok());
        prop_assert!(laws::twist_balance(&c, &a, &b).is_ok());
        prop_assert!(laws::zigzag(&c, &a).is_ok());
    }
}
