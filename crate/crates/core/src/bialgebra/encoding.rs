//! Injective encodings `h` of base objects as indices.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::base::{BaseObject, GradedObject, PlainObject};
use crate::error::{Error, Result};
use crate::index::{pair, unpair, Index};

/// A bijection between base objects and the naturals, so that the image of
/// `h` is all of the index space and is closed under `⊗`.
pub trait Encodable: BaseObject {
    fn encode(&self) -> Index;
    fn decode(i: &Index) -> Result<Self>;
}

/// `x₀ = h⁻¹(I)`.
pub fn x0<O: Encodable>() -> Index {
    O::unit().encode()
}

/// `χ(x, y)` with `h(χ(x, y)) = h(x) ⊗ h(y)`.
pub fn chi<O: Encodable>(x: &Index, y: &Index) -> Result<Index> {
    Ok(O::decode(x)?.tensor(&O::decode(y)?).encode())
}

fn zigzag(d: i64) -> u64 {
    if d >= 0 {
        2 * d as u64
    } else {
        2 * d.unsigned_abs() - 1
    }
}

fn unzigzag(n: u64) -> i64 {
    if n.is_multiple_of(2) {
        (n / 2) as i64
    } else {
        -(n.div_ceil(2) as i64)
    }
}

/// Longest word `decode` will build.
const MAX_LETTERS: usize = 1 << 16;

/// `ℕ^k → ℕ` through a balanced tree of pairings.
fn tuple_code(xs: &[Index]) -> Index {
    match xs {
        [x] => x.clone(),
        _ => {
            let (l, r) = xs.split_at(xs.len().div_ceil(2));
            pair(&tuple_code(l), &tuple_code(r))
        }
    }
}

fn tuple_decode(z: Index, k: usize, out: &mut Vec<Index>) {
    if k == 1 {
        out.push(z);
    } else {
        let (a, b) = unpair(&z);
        let left = k.div_ceil(2);
        tuple_decode(a, left, out);
        tuple_decode(b, k - left, out);
    }
}

/// Degree words: `[] ↦ 0` and `w ↦ 1 + pair(|w| - 1, t)`, where `t` pairs the
/// zigzagged degrees along a balanced tree. Code length grows linearly in `|w|`.
impl Encodable for GradedObject {
    fn encode(&self) -> Index {
        if self.degrees().is_empty() {
            return Index::star();
        }
        let letters: Vec<Index> = self.degrees().iter().map(|d| Index::from(zigzag(*d))).collect();
        pair(&Index::from(letters.len() as u64 - 1), &tuple_code(&letters)).next()
    }

    fn decode(i: &Index) -> Result<Self> {
        if i.0.is_zero() {
            return Ok(GradedObject::from_degrees([]));
        }
        let (k, t) = unpair(&Index(&i.0 - BigUint::from(1u32)));
        let k = k
            .0
            .to_usize()
            .map(|k| k + 1)
            .filter(|k| *k <= MAX_LETTERS)
            .ok_or_else(|| Error::Encoding(i.clone()))?;
        let mut letters = Vec::with_capacity(k);
        tuple_decode(t, k, &mut letters);
        let degrees = letters
            .iter()
            .map(|d| d.0.to_u64().filter(|n| *n < 1 << 62).map(unzigzag))
            .collect::<Option<Vec<i64>>>()
            .ok_or_else(|| Error::Encoding(i.clone()))?;
        Ok(GradedObject::from_degrees(degrees))
    }
}

impl Encodable for PlainObject {
    fn encode(&self) -> Index {
        Index::from(self.0 as u64)
    }

    fn decode(i: &Index) -> Result<Self> {
        i.0.to_usize().map(PlainObject).ok_or_else(|| Error::Encoding(i.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(ds: &[i64]) -> GradedObject {
        GradedObject::from_degrees(ds.iter().copied())
    }

    #[test]
    fn hand_computed_codes() {
        // [0] ↦ 1 + pair(0, 0) = 1; [1] ↦ 1 + pair(0, 2) = 6; [2] ↦ 1 + pair(0, 4) = 15
        // [1,2] ↦ 1 + pair(1, pair(2, 4)) = 1 + pair(1, 25) = 377
        assert_eq!(x0::<GradedObject>(), Index::from(1u64));
        assert_eq!(g(&[1]).encode(), Index::from(6u64));
        assert_eq!(g(&[2]).encode(), Index::from(15u64));
        assert_eq!(g(&[1, 2]).encode(), Index::from(377u64));
        assert_eq!(chi::<GradedObject>(&Index::from(6u64), &Index::from(6u64)).unwrap(), Index::from(15u64));
        assert_eq!(x0::<PlainObject>(), Index::from(1u64));
    }

    #[test]
    fn round_trip_and_units() {
        for n in 0..2000u64 {
            let i = Index::from(n);
            let o = GradedObject::decode(&i).unwrap();
            assert_eq!(o.encode(), i);
            assert_eq!(chi::<GradedObject>(&i, &x0::<GradedObject>()).unwrap(), i);
            assert_eq!(chi::<GradedObject>(&x0::<GradedObject>(), &i).unwrap(), i);
        }
        for d in -5..=5 {
            assert_eq!(unzigzag(zigzag(d)), d);
        }
    }

    #[test]
    fn long_words_stay_small() {
        let w = GradedObject::from_degrees((0..64).map(|i| i % 5 - 2));
        let code = w.encode();
        assert!(code.0.bits() < 2000);
        assert_eq!(GradedObject::decode(&code).unwrap(), w);
    }

    #[test]
    fn chi_is_associative() {
        let xs: Vec<Index> = [&[1][..], &[0, -1], &[2, 2], &[-2]].iter().map(|d| g(d).encode()).collect();
        for a in &xs {
            for b in &xs {
                for c in &xs {
                    let l = chi::<GradedObject>(&chi::<GradedObject>(a, b).unwrap(), c).unwrap();
                    let r = chi::<GradedObject>(a, &chi::<GradedObject>(b, c).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }
}
