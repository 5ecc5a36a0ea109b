//! Configuration, suite selection and reports for the command line.

mod eval;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::base::{GradedVect, PlainVect};
use crate::bialgebra::{Bialgebra, SuiteConfig};
use crate::check::{Check, Witness};
use crate::error::{Error, Result};
use crate::linalg::{q_int, Q};
use crate::probe::Bounds;

pub use eval::{eval_morphism, parse_row, EntryReport, EvalReport, RowSpec};
pub use suites::{base_checks, coherence_checks, matcat_checks};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Instance {
    Graded,
    Symmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Base,
    Matcat,
    Coherence,
    Bialgebra,
    All,
}

fn ser_q<S: Serializer>(q: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// Parse an exact rational such as `2`, `-3` or `2/3`.
pub fn parse_q(s: &str) -> Result<Q> {
    Q::from_str(s.trim()).map_err(|_| Error::Usage(format!("not a rational number: {s:?}")))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    #[serde(serialize_with = "ser_q")]
    pub q: Q,
    pub max_degree: i64,
    pub max_dim: usize,
    pub probe_rows: usize,
    pub seed: u64,
    pub instance: Instance,
    pub format: Format,
    /// Record wall-clock time per check. Off by default so that reports
    /// are byte-identical across runs.
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            q: q_int(2),
            max_degree: 2,
            max_dim: 2,
            probe_rows: 25,
            seed: 0,
            instance: Instance::Graded,
            format: Format::Json,
            timings: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if num_traits::Zero::is_zero(&self.q) {
            return Err(Error::Usage("q must be nonzero".into()));
        }
        if self.max_degree < 0 {
            return Err(Error::Usage("max-degree must be ≥ 0".into()));
        }
        if self.max_dim == 0 {
            return Err(Error::Usage("max-dim must be ≥ 1".into()));
        }
        if self.probe_rows == 0 {
            return Err(Error::Usage("probes must be ≥ 1".into()));
        }
        Ok(())
    }

    pub fn bounds(&self) -> Bounds {
        Bounds {
            max_degree: self.max_degree,
            max_dim: self.max_dim,
        }
    }

    pub fn suite(&self) -> SuiteConfig {
        SuiteConfig {
            bounds: self.bounds(),
            probe_rows: self.probe_rows,
            seed: self.seed,
            ..SuiteConfig::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status}  {}  [{}]", self.check_id, self.anchor)?;
        if let Some(ms) = self.elapsed_ms {
            write!(f, "  {ms:.1} ms")?;
        }
        if let Some(w) = &self.witness {
            write!(f, "\n      {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn render(&self) -> String {
        match self.config.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s: String = self.checks.iter().map(|c| format!("{c}\n")).collect();
                let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
                s.push_str(&format!("{} checks, {failed} failed\n", self.checks.len()));
                s
            }
        }
    }
}

fn checks_for<C>(c: C, target: Target, cfg: &RunConfig) -> Vec<Check>
where
    C: crate::probe::Sampler,
    C::Obj: crate::bialgebra::Encodable,
{
    let mut out = Vec::new();
    let all = target == Target::All;
    if all || target == Target::Base {
        out.extend(base_checks(c.clone(), cfg));
    }
    if all || target == Target::Matcat {
        out.extend(matcat_checks(c.clone(), cfg));
    }
    if all || target == Target::Coherence {
        out.extend(coherence_checks(c.clone(), cfg));
    }
    if all || target == Target::Bialgebra {
        out.extend(Bialgebra::new(c).checks(&cfg.suite()));
    }
    out
}

/// The checks selected by `target`, in declaration order.
pub fn build_checks(target: Target, cfg: &RunConfig) -> Result<Vec<Check>> {
    cfg.validate()?;
    Ok(match cfg.instance {
        Instance::Graded => checks_for(GradedVect::new(cfg.q.clone())?, target, cfg),
        Instance::Symmetric => checks_for(PlainVect, target, cfg),
    })
}

/// Run the selected suites. Checks run in parallel; the report keeps
/// declaration order.
pub fn run_suite(target: Target, cfg: &RunConfig) -> Result<Report> {
    let checks = build_checks(target, cfg)?;
    let timings = cfg.timings;
    let reports = checks
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = c.run();
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            CheckReport {
                check_id: c.id.clone(),
                anchor: c.anchor.to_string(),
                status: if outcome.is_ok() { Status::Pass } else { Status::Fail },
                witness: outcome.err(),
                elapsed_ms: timings.then_some(elapsed),
            }
        })
        .collect();
    Ok(Report {
        config: cfg.clone(),
        checks: reports,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn failures(r: &Report) -> Vec<String> {
        r.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| format!("{}: {:?}", c.check_id, c.witness))
            .collect()
    }

    #[test]
    fn defaults_pass() {
        let r = run_suite(Target::All, &RunConfig::default()).unwrap();
        assert_eq!(failures(&r), Vec::<String>::new());
        assert!(r.checks.iter().all(|c| !c.anchor.is_empty()));
    }

    #[test]
    fn symmetric_and_q1_pass() {
        let cfg = RunConfig {
            instance: Instance::Symmetric,
            probe_rows: 5,
            ..RunConfig::default()
        };
        let r = run_suite(Target::All, &cfg).unwrap();
        assert_eq!(failures(&r), Vec::<String>::new());
        assert!(r.checks.iter().any(|c| c.check_id == "base.symmetric"));
        let cfg = RunConfig {
            q: q_int(1),
            probe_rows: 5,
            ..RunConfig::default()
        };
        assert_eq!(failures(&run_suite(Target::Base, &cfg).unwrap()), Vec::<String>::new());
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = RunConfig {
            probe_rows: 5,
            seed: 11,
            ..RunConfig::default()
        };
        let a = run_suite(Target::Coherence, &cfg).unwrap().render();
        let b = run_suite(Target::Coherence, &cfg).unwrap().render();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let bad = [
            RunConfig { q: q_int(0), ..RunConfig::default() },
            RunConfig { probe_rows: 0, ..RunConfig::default() },
            RunConfig { max_degree: -1, ..RunConfig::default() },
        ];
        for cfg in bad {
            assert!(matches!(run_suite(Target::Base, &cfg), Err(Error::Usage(_))));
        }
        assert_eq!(parse_q("2/3").unwrap(), Q::new(2.into(), 3.into()));
        assert!(parse_q("two").is_err());
    }
}
