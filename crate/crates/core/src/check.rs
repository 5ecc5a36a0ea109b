//! Outcomes of individual law checks.

use std::fmt;

use serde::Serialize;

use crate::index::Index;

/// Where a law failed: the probe row (if the law is row-local) and the
/// entrywise difference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub row: Option<Index>,
    pub detail: String,
}

impl Witness {
    pub fn new(detail: impl Into<String>) -> Self {
        Self {
            row: None,
            detail: detail.into(),
        }
    }

    pub fn at(row: Index, detail: impl Into<String>) -> Self {
        Self {
            row: Some(row),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.row {
            Some(r) => write!(f, "row {r}: {}", self.detail),
            None => write!(f, "{}", self.detail),
        }
    }
}

pub type Outcome = std::result::Result<(), Witness>;

/// Compare two values, producing a witness labelled `what` on mismatch.
pub fn expect_eq<T: PartialEq + fmt::Debug>(what: &str, lhs: &T, rhs: &T) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness::new(format!("{what}: {lhs:?} ≠ {rhs:?}")))
    }
}

/// Lift an error from building the two sides of a law into a witness.
pub fn built<T, E: fmt::Display>(what: &str, r: std::result::Result<T, E>) -> std::result::Result<T, Witness> {
    r.map_err(|e| Witness::new(format!("{what}: {e}")))
}

type Runner = Box<dyn Fn() -> Outcome + Send + Sync>;

/// A named, deferred law check. `anchor` keys into the catalog of
/// identities in `docs/anchors.md`.
pub struct Check {
    pub id: String,
    pub anchor: &'static str,
    run: Runner,
}

impl Check {
    pub fn new<F>(id: impl Into<String>, anchor: &'static str, run: F) -> Self
    where
        F: Fn() -> Outcome + Send + Sync + 'static,
    {
        Self {
            id: id.into(),
            anchor,
            run: Box::new(run),
        }
    }

    pub fn run(&self) -> Outcome {
        (self.run)()
    }
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Check({}, {})", self.id, self.anchor)
    }
}
