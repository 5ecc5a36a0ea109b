//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are always printed; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use matcat::base::GradedVect;
use matcat::bialgebra::{Bialgebra, Mutation};
use matcat::check::Check;
use matcat::harness::{build_checks, RunConfig, Target};
use matcat::linalg::q_int;

struct Verdict {
    ok: bool,
    detail: String,
}

fn run_ids(checks: &[Check], ids: &[&str]) -> Verdict {
    let mut failed = Vec::new();
    for id in ids {
        match checks.iter().find(|c| c.id == *id) {
            None => failed.push(format!("{id}: missing")),
            Some(c) => {
                if let Err(w) = c.run() {
                    failed.push(format!("{id}: {w}"));
                }
            }
        }
    }
    Verdict {
        ok: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks", ids.len())
        } else {
            failed.join("; ")
        },
    }
}

fn suite(target: Target, cfg: &RunConfig, ids: &[&str]) -> Verdict {
    match build_checks(target, cfg) {
        Ok(checks) => run_ids(&checks, ids),
        Err(e) => Verdict {
            ok: false,
            detail: e.to_string(),
        },
    }
}

fn base_suite() -> Verdict {
    let ids = [
        "base.hexagons",
        "base.braid_natural",
        "base.twist_natural",
        "base.zigzag",
        "base.twist_balance",
    ];
    let mut out = Vec::new();
    for q in 1..=3 {
        let cfg = RunConfig {
            q: q_int(q),
            ..RunConfig::default()
        };
        let v = suite(Target::Base, &cfg, &ids);
        if !v.ok {
            return Verdict {
                ok: false,
                detail: format!("q = {q}: {}", v.detail),
            };
        }
        out.push(format!("q={q}"));
    }
    let morphisms = RunConfig::default().probe_rows;
    Verdict {
        ok: morphisms >= 20,
        detail: format!("{} with {morphisms} samples per law", out.join(", ")),
    }
}

fn matcat_suite() -> Verdict {
    let cfg = RunConfig::default();
    let v = suite(
        Target::Matcat,
        &cfg,
        &[
            "matcat.identity",
            "matcat.composition",
            "matcat.tensor_functorial",
            "matcat.tensor_identity",
            "matcat.pentagon",
            "matcat.triangle",
            "matcat.assoc_natural",
            "matcat.units_natural",
            "matcat.structure_inverses",
            "matcat.hexagons",
            "matcat.twist_balance",
        ],
    );
    Verdict {
        ok: v.ok && cfg.probe_rows >= 25,
        detail: format!("{}, ≥ {} rows each", v.detail, cfg.probe_rows),
    }
}

fn coproduct() -> Verdict {
    suite(
        Target::Matcat,
        &RunConfig::default(),
        &["matcat.coproduct", "matcat.decomposition"],
    )
}

fn coherence() -> Verdict {
    suite(
        Target::Coherence,
        &RunConfig::default(),
        &[
            "coherence.identity",
            "coherence.confluence",
            "coherence.doteq_equivalence",
            "coherence.doteq_compatible",
        ],
    )
}

fn gamma_identities() -> Verdict {
    let cfg = RunConfig::default();
    let v = suite(
        Target::Bialgebra,
        &cfg,
        &["bialgebra.gamma_relation", "bialgebra.gamma_eval", "bialgebra.gamma_unit"],
    );
    let triples = cfg.suite().triples;
    Verdict {
        ok: v.ok && triples >= 50,
        detail: format!("{}, {triples} triples", v.detail),
    }
}

fn bialgebra_suite() -> Verdict {
    let cfg = RunConfig::default();
    let v = suite(
        Target::Bialgebra,
        &cfg,
        &[
            "bialgebra.associativity",
            "bialgebra.unit",
            "bialgebra.coassociativity",
            "bialgebra.counit",
            "bialgebra.compatibility",
            "bialgebra.counit_multiplicative",
            "bialgebra.module",
        ],
    );
    let fibers = cfg.suite().fibers;
    Verdict {
        ok: v.ok && fibers >= 5,
        detail: format!("{}, {fibers} fibers", v.detail),
    }
}

fn duality() -> Verdict {
    suite(
        Target::Matcat,
        &RunConfig::default(),
        &["matcat.duality_obstruction", "matcat.duality_zigzag"],
    )
}

fn mutation_sensitivity() -> Verdict {
    let cfg = RunConfig::default().suite();
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, m) in [
        ("Γ = id", Mutation::GammaIdentity),
        ("no middle braid", Mutation::DropMiddleBraid),
    ] {
        let b = Bialgebra::with_mutation(GradedVect::default(), m);
        let checks = b.checks(&cfg);
        let mut caught = Vec::new();
        for id in ["bialgebra.associativity", "bialgebra.compatibility"] {
            let c = checks.iter().find(|c| c.id == id).expect("check exists");
            match c.run() {
                Err(w) if w.row.is_some() => caught.push(format!("{id} caught")),
                Err(_) => {
                    ok = false;
                    caught.push(format!("{id} failed without a row"));
                }
                Ok(()) => {
                    ok = false;
                    caught.push(format!("{id} passed"));
                }
            }
        }
        parts.push(format!("{name}: {}", caught.join(", ")));
    }
    Verdict {
        ok,
        detail: parts.join("; "),
    }
}

type Criterion = (&'static str, fn() -> Verdict, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("base category suite", base_suite, Some(Duration::from_secs(10))),
        ("matrix category suite", matcat_suite, Some(Duration::from_secs(30))),
        ("coproduct and decomposition", coproduct, None),
        ("coherence and doteq", coherence, None),
        ("Γ relation, evaluation and unit", gamma_identities, None),
        ("bialgebra suite at defaults", bialgebra_suite, Some(Duration::from_secs(60))),
        ("duality obstruction and zig-zags", duality, None),
        ("mutation sensitivity", mutation_sensitivity, None),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let v = run();
        let took = start.elapsed();
        let in_time = limit.is_none_or(|l| took < l);
        let ok = v.ok && in_time;
        if !ok {
            failed += 1;
        }
        let budget = limit.map(|l| format!(" of {}s", l.as_secs())).unwrap_or_default();
        println!(
            "{} {name} ({:.2}s{budget}): {}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            v.detail
        );
    }
    println!("{} of 8 criteria pass", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
