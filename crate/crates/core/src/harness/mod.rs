//! Suite orchestration: configuration, the law registry, and reports.

pub mod config;
pub mod laws;
pub mod ops;
pub mod report;

use std::time::Instant;

pub use config::{Suite, SuiteConfig, Tier, BOUNDS_OVERRIDE_VAR};
pub use laws::{registry, LawSpec};
pub use report::{LawEntry, Report, Status, Tally};

use crate::error::{Error, Result};

/// Runs one law. Bound errors become a skipped entry; any other error is a
/// failure carrying the error text.
pub fn run_law(spec: &LawSpec, cfg: &SuiteConfig) -> LawEntry {
    let start = Instant::now();
    let outcome = (spec.run)(cfg);
    let wall_ms = cfg.timing.then(|| start.elapsed().as_millis());
    let (status, tally, note) = match outcome {
        Ok(tally) => {
            let status = if tally.failed > 0 {
                Status::Fail
            } else if tally.undetermined > 0 {
                Status::Undetermined
            } else {
                Status::Pass
            };
            let note = (tally.instances == 0).then(|| "vacuous: no instances within bounds".to_string());
            (status, tally, note)
        }
        Err(e @ Error::BoundExceeded { .. }) => (Status::Skipped, Tally::default(), Some(e.to_string())),
        Err(e) => {
            let tally = Tally {
                counterexample: Some(e.to_string()),
                ..Tally::default()
            };
            (Status::Fail, tally, Some("the law could not be evaluated".into()))
        }
    };
    LawEntry {
        id: spec.id,
        statement: spec.statement,
        tier: spec.tier,
        degenerate_at_finite_scale: spec.degenerate,
        status,
        tally,
        note,
        wall_ms,
    }
}

/// Runs every registered law of the configured suite, in registry order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let specs: Vec<LawSpec> = registry().into_iter().filter(|l| cfg.suite.includes(l.tier)).collect();
    let entries = cfg.exec.map(&specs, |spec| run_law(spec, cfg));
    Ok(Report::new(cfg.clone(), entries))
}

/// Runs the named laws only, in the given order.
pub fn run_laws(ids: &[&str], cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let specs = ids
        .iter()
        .map(|id| laws::find(id).ok_or_else(|| Error::Parse(format!("unknown law {id:?}"))))
        .collect::<Result<Vec<_>>>()?;
    let entries = cfg.exec.map(&specs, |spec| run_law(spec, cfg));
    Ok(Report::new(cfg.clone(), entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_has_no_failures() {
        let cfg = SuiteConfig::default();
        let report = run_suite(&cfg).unwrap();
        let bad: Vec<_> = report
            .entries
            .iter()
            .filter(|e| e.status == Status::Fail)
            .map(|e| format!("{}: {:?} {:?}", e.id, e.tally.counterexample, e.note))
            .collect();
        assert!(bad.is_empty(), "{bad:#?}");
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = SuiteConfig {
            max_atoms: 2,
            max_points: 3,
            ..SuiteConfig::default()
        };
        let a = run_suite(&cfg).unwrap().to_json();
        let b = run_suite(&cfg).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_law_is_a_parse_error() {
        assert!(matches!(
            run_laws(&["nope"], &SuiteConfig::default()),
            Err(Error::Parse(_))
        ));
    }
}
