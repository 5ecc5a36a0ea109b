use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use matcat::base::{BaseObject, GradedObject, GradedVect};
use matcat::bialgebra::{chi, x0, Encodable};
use matcat::coherence::{coherence_iso, random_word};
use matcat::index::{pair, unpair, Index};
use matcat::matcat::laws::eq_rows;
use matcat::matcat::mat_id;
use matcat::probe::{random_mat_object, Bounds};

fn word() -> impl Strategy<Value = GradedObject> {
    prop::collection::vec(-3i64..=3, 0..=4).prop_map(GradedObject::from_degrees)
}

proptest! {
    #[test]
    fn unpair_inverts_pair(x in any::<u64>(), y in any::<u64>()) {
        let (a, b) = (Index::from(x), Index::from(y));
        prop_assert_eq!(unpair(&pair(&a, &b)), (a, b));
    }

    #[test]
    fn pair_inverts_unpair(z in any::<u64>()) {
        let z = Index::from(z);
        let (a, b) = unpair(&z);
        prop_assert_eq!(pair(&a, &b), z);
    }

    #[test]
    fn encoding_round_trips(w in word()) {
        prop_assert_eq!(GradedObject::decode(&w.encode()).unwrap(), w);
    }

    #[test]
    fn decoding_is_total(n in 0u64..100_000) {
        let i = Index::from(n);
        prop_assert_eq!(GradedObject::decode(&i).unwrap().encode(), i);
    }

    #[test]
    fn chi_encodes_the_tensor(a in word(), b in word(), c in word()) {
        let (x, y, z) = (a.encode(), b.encode(), c.encode());
        prop_assert_eq!(chi::<GradedObject>(&x, &y).unwrap(), a.tensor(&b).encode());
        let left = chi::<GradedObject>(&chi::<GradedObject>(&x, &y).unwrap(), &z).unwrap();
        let right = chi::<GradedObject>(&x, &chi::<GradedObject>(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(chi::<GradedObject>(&x0::<GradedObject>(), &x).unwrap(), x);
    }

    #[test]
    fn coherence_isos_are_mutually_inverse(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = GradedVect::default();
        let leaves: Vec<_> = (0..3).map(|_| random_mat_object(&c, &mut rng, Bounds::default(), 2, 4)).collect();
        let (w1, w2) = (random_word(&mut rng, &leaves, 0.3), random_word(&mut rng, &leaves, 0.3));
        let there = coherence_iso(&w1, &w2).unwrap();
        let back = coherence_iso(&w2, &w1).unwrap();
        let round = back.compose(&there).unwrap();
        prop_assert!(eq_rows("K21∘K12", &round.mor, &mat_id(&w1.realize())).is_ok());
    }
}
