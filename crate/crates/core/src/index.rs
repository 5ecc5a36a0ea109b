//! The countable index space: naturals, the Cantor pairing bijection, and
//! decidable descriptors for the index sets the construction produces.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A point of the index space. Arbitrary precision, since nested pairings
/// grow doubly exponentially with depth.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index(pub BigUint);

/// The base point used for the unit object.
pub const STAR: u64 = 0;

impl Index {
    pub fn star() -> Index {
        Index::from(STAR)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn next(&self) -> Index {
        Index(&self.0 + 1u32)
    }
}

impl From<u64> for Index {
    fn from(v: u64) -> Self {
        Index(BigUint::from(v))
    }
}

impl From<BigUint> for Index {
    fn from(v: BigUint) -> Self {
        Index(v)
    }
}

impl std::str::FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "*" || s == "∗" {
            return Ok(Index::star());
        }
        s.parse::<BigUint>()
            .map(Index)
            .map_err(|_| Error::Usage(format!("not an index: {s:?}")))
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Index {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

/// Cantor pairing `(x+y)(x+y+1)/2 + y`.
pub fn pair(x: &Index, y: &Index) -> Index {
    let s = &x.0 + &y.0;
    let tri = (&s * (&s + 1u32)) >> 1u32;
    Index(tri + &y.0)
}

/// Inverse of [`pair`].
pub fn unpair(z: &Index) -> (Index, Index) {
    // w = floor((sqrt(8z + 1) - 1) / 2)
    let disc = (&z.0 << 3u32) + 1u32;
    let w = (disc.sqrt() - 1u32) >> 1u32;
    let tri = (&w * (&w + 1u32)) >> 1u32;
    let y = &z.0 - tri;
    let x = &w - &y;
    (Index(x), Index(y))
}

/// Descriptor of a subset of the index space.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum IndexSet {
    Empty,
    Singleton(Index),
    /// Sorted, duplicate-free.
    FiniteSet(Vec<Index>),
    AllNaturals,
    /// `pair(A × B)`.
    PairImage(Box<IndexSet>, Box<IndexSet>),
    /// `pair({(x, x) : x ∈ A})`.
    DiagImage(Box<IndexSet>),
}

impl IndexSet {
    pub fn finite<I: IntoIterator<Item = Index>>(items: I) -> IndexSet {
        let mut v: Vec<Index> = items.into_iter().collect();
        v.sort();
        v.dedup();
        match v.len() {
            0 => IndexSet::Empty,
            1 => IndexSet::Singleton(v.pop().unwrap()),
            _ => IndexSet::FiniteSet(v),
        }
    }

    pub fn pair_image(a: IndexSet, b: IndexSet) -> IndexSet {
        IndexSet::PairImage(Box::new(a), Box::new(b))
    }

    pub fn diag_image(a: IndexSet) -> IndexSet {
        IndexSet::DiagImage(Box::new(a))
    }

    pub fn member(&self, i: &Index) -> bool {
        match self {
            IndexSet::Empty => false,
            IndexSet::Singleton(s) => s == i,
            IndexSet::FiniteSet(v) => v.binary_search(i).is_ok(),
            IndexSet::AllNaturals => true,
            IndexSet::PairImage(a, b) => {
                let (x, y) = unpair(i);
                a.member(&x) && b.member(&y)
            }
            IndexSet::DiagImage(a) => {
                let (x, y) = unpair(i);
                x == y && a.member(&x)
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            IndexSet::Empty => true,
            IndexSet::Singleton(_) | IndexSet::AllNaturals => false,
            IndexSet::FiniteSet(v) => v.is_empty(),
            IndexSet::PairImage(a, b) => a.is_empty() || b.is_empty(),
            IndexSet::DiagImage(a) => a.is_empty(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            IndexSet::AllNaturals => false,
            IndexSet::PairImage(a, b) => {
                a.is_empty() || b.is_empty() || (a.is_finite() && b.is_finite())
            }
            IndexSet::DiagImage(a) => a.is_finite(),
            _ => true,
        }
    }

    /// All members in increasing order, `None` for an infinite set.
    pub fn members(&self) -> Option<Vec<Index>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = match self {
            IndexSet::Empty => Vec::new(),
            IndexSet::Singleton(i) => vec![i.clone()],
            IndexSet::FiniteSet(v) => v.clone(),
            IndexSet::AllNaturals => unreachable!(),
            IndexSet::PairImage(_, _) if self.is_empty() => Vec::new(),
            IndexSet::PairImage(a, b) => {
                let (xs, ys) = (a.members()?, b.members()?);
                let mut out = Vec::with_capacity(xs.len() * ys.len());
                for x in &xs {
                    for y in &ys {
                        out.push(pair(x, y));
                    }
                }
                out
            }
            IndexSet::DiagImage(a) => a.members()?.iter().map(|x| pair(x, x)).collect(),
        };
        out.sort();
        out.dedup();
        Some(out)
    }

    pub fn len(&self) -> Option<usize> {
        self.members().map(|m| m.len())
    }

    /// The `n` smallest members, fewer if the set is smaller.
    pub fn enumerate_upto(&self, n: usize) -> Vec<Index> {
        if let Some(mut all) = self.members() {
            all.truncate(n);
            return all;
        }
        // An infinite set: scan the naturals in order.
        let mut out = Vec::with_capacity(n);
        let mut z = Index(BigUint::zero());
        while out.len() < n {
            if self.member(&z) {
                out.push(z.clone());
            }
            z = Index(z.0 + BigUint::one());
        }
        out
    }

    pub fn check_member(&self, i: &Index) -> Result<()> {
        if self.member(i) {
            Ok(())
        } else {
            Err(Error::NotMember {
                index: i.clone(),
                set: self.to_string(),
            })
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexSet::Empty => write!(f, "∅"),
            IndexSet::Singleton(i) => write!(f, "{{{i}}}"),
            IndexSet::FiniteSet(v) => {
                let items: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            IndexSet::AllNaturals => write!(f, "ℕ"),
            IndexSet::PairImage(a, b) => write!(f, "γ({a}×{b})"),
            IndexSet::DiagImage(a) => write!(f, "γ(Δ{a})"),
        }
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Nested unpairing along the tensor tree of `shape`, returning the leaf
/// components in left-to-right order. `PairImage` nodes are split; every
/// other descriptor is a leaf.
pub fn decode_word_index(z: &Index, shape: &IndexSet) -> Result<Vec<Index>> {
    shape.check_member(z)?;
    let mut out = Vec::new();
    decode_into(z, shape, &mut out);
    Ok(out)
}

fn decode_into(z: &Index, shape: &IndexSet, out: &mut Vec<Index>) {
    match shape {
        IndexSet::PairImage(a, b) => {
            let (x, y) = unpair(z);
            decode_into(&x, a, out);
            decode_into(&y, b, out);
        }
        _ => out.push(z.clone()),
    }
}
