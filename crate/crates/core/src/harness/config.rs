use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::Exec;

/// Environment variable holding `key=value` pairs that override bounds.
pub const BOUNDS_OVERRIDE_VAR: &str = "SDL_BOUNDS_OVERRIDE";

pub const MAX_SUITE_ATOMS: usize = 4;
pub const MAX_SUITE_POINTS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Finite,
    Symbolic,
    All,
}

impl Suite {
    pub fn includes(self, tier: Tier) -> bool {
        matches!(
            (self, tier),
            (Suite::All, _) | (Suite::Finite, Tier::Finite) | (Suite::Symbolic, Tier::Symbolic)
        )
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "finite" => Ok(Suite::Finite),
            "symbolic" => Ok(Suite::Symbolic),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Finite => "finite",
            Suite::Symbolic => "symbolic",
            Suite::All => "all",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Finite,
    Symbolic,
}

/// Bounds and switches for one harness run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub max_atoms: usize,
    pub max_points: usize,
    pub seed: u64,
    #[serde(skip)]
    pub exec: Exec,
    /// Wall times make reports differ between runs, so they are opt-in.
    #[serde(skip)]
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            max_atoms: 3,
            max_points: 4,
            seed: 0,
            exec: Exec::default(),
            timing: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_atoms > MAX_SUITE_ATOMS {
            return Err(Error::BoundExceeded {
                what: "max_atoms",
                got: self.max_atoms,
                limit: MAX_SUITE_ATOMS,
            });
        }
        if self.max_points > MAX_SUITE_POINTS {
            return Err(Error::BoundExceeded {
                what: "max_points",
                got: self.max_points,
                limit: MAX_SUITE_POINTS,
            });
        }
        Ok(())
    }

    /// Applies `max_atoms=2,max_points=3,seed=7` style overrides.
    pub fn apply_override(&mut self, spec: &str) -> Result<()> {
        for pair in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("override {pair:?} is not key=value")))?;
            let num = |v: &str| {
                v.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("override {key} needs an integer, got {v:?}")))
            };
            match key.trim() {
                "max_atoms" => self.max_atoms = num(value)? as usize,
                "max_points" => self.max_points = num(value)? as usize,
                "seed" => self.seed = num(value)?,
                "suite" => self.suite = value.trim().parse()?,
                other => return Err(Error::Parse(format!("unknown override key {other:?}"))),
            }
        }
        Ok(())
    }

    /// Applies [`BOUNDS_OVERRIDE_VAR`] if set.
    pub fn with_env_override(mut self) -> Result<Self> {
        if let Ok(v) = std::env::var(BOUNDS_OVERRIDE_VAR) {
            self.apply_override(&v)?;
        }
        Ok(self)
    }
}
