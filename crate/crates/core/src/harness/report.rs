use std::fmt::Write as _;

use serde::Serialize;

use super::config::{SuiteConfig, Tier};

/// Tally of one law over its instances.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub instances: u64,
    pub passed: u64,
    pub failed: u64,
    pub undetermined: u64,
    pub counterexample: Option<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(describe());
            }
        }
    }

    /// An `Err` counts as a failed instance carrying the error text.
    pub fn check_res(&mut self, r: crate::error::Result<bool>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, describe),
            Err(e) => self.check(false, || format!("{}: {e}", describe())),
        }
    }

    pub fn undetermined(&mut self, why: impl FnOnce() -> String) {
        self.instances += 1;
        self.undetermined += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(why());
        }
    }

    pub fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.passed += other.passed;
        self.failed += other.failed;
        self.undetermined += other.undetermined;
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undetermined,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Undetermined => "UNDET",
            Status::Skipped => "SKIP",
        }
    }
}

/// One row of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawEntry {
    pub id: &'static str,
    pub statement: &'static str,
    pub tier: Tier,
    /// Set for laws whose content collapses on finite instances.
    pub degenerate_at_finite_scale: bool,
    pub status: Status,
    #[serde(flatten)]
    pub tally: Tally,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u128>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub laws: usize,
    pub pass: usize,
    pub fail: usize,
    pub undetermined: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub config: SuiteConfig,
    pub entries: Vec<LawEntry>,
    pub totals: Totals,
}

impl Report {
    pub fn new(config: SuiteConfig, entries: Vec<LawEntry>) -> Self {
        let mut totals = Totals {
            laws: entries.len(),
            ..Totals::default()
        };
        for e in &entries {
            match e.status {
                Status::Pass => totals.pass += 1,
                Status::Fail => totals.fail += 1,
                Status::Undetermined => totals.undetermined += 1,
                Status::Skipped => totals.skipped += 1,
            }
        }
        Report {
            config,
            entries,
            totals,
        }
    }

    /// Undetermined and skipped laws do not fail a run.
    pub fn passed(&self) -> bool {
        self.totals.fail == 0
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn entry(&self, id: &str) -> Option<&LawEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "suite={} max_atoms={} max_points={} seed={}\n",
            c.suite, c.max_atoms, c.max_points, c.seed
        );
        for e in &self.entries {
            let t = &e.tally;
            let _ = write!(
                out,
                "{:<5} {:<40} n={} pass={} fail={} undet={}",
                e.status.label(),
                e.id,
                t.instances,
                t.passed,
                t.failed,
                t.undetermined
            );
            if e.degenerate_at_finite_scale {
                out.push_str(" [degenerate-at-finite-scale]");
            }
            if let Some(ms) = e.wall_ms {
                let _ = write!(out, " {ms}ms");
            }
            out.push('\n');
            let _ = writeln!(out, "      {}", e.statement);
            if let Some(n) = &e.note {
                let _ = writeln!(out, "      note: {n}");
            }
            if let Some(cx) = &t.counterexample {
                let label = if e.status == Status::Fail {
                    "counterexample"
                } else {
                    "detail"
                };
                let _ = writeln!(out, "      {label}: {cx}");
            }
        }
        let s = &self.totals;
        let _ = writeln!(
            out,
            "laws={} pass={} fail={} undetermined={} skipped={}",
            s.laws, s.pass, s.fail, s.undetermined, s.skipped
        );
        out
    }
}
