//! The law registry. Each law enumerates its own instances within the
//! configured bounds and returns a [`Tally`]; an `Err` from a law means the
//! law could not be evaluated at all.

mod algebra;
mod compact;
mod spaces;
mod symbolic;
mod zlaws;

use std::sync::Arc;

use super::config::{SuiteConfig, Tier};
use super::report::Tally;
use crate::boolean::BoolAlg;
use crate::error::Result;

pub type LawFn = fn(&SuiteConfig) -> Result<Tally>;

#[derive(Clone, Copy)]
pub struct LawSpec {
    pub id: &'static str,
    /// The law in plain notation.
    pub statement: &'static str,
    pub tier: Tier,
    /// The law holds for structural reasons once instances are finite.
    pub degenerate: bool,
    pub run: LawFn,
}

impl std::fmt::Debug for LawSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LawSpec").field("id", &self.id).finish_non_exhaustive()
    }
}

const fn law(id: &'static str, statement: &'static str, run: LawFn) -> LawSpec {
    LawSpec {
        id,
        statement,
        tier: Tier::Finite,
        degenerate: false,
        run,
    }
}

const fn degenerate(spec: LawSpec) -> LawSpec {
    LawSpec {
        degenerate: true,
        ..spec
    }
}

const fn symbolic_law(spec: LawSpec) -> LawSpec {
    LawSpec {
        tier: Tier::Symbolic,
        ..spec
    }
}

/// Every law, in report order. Ids are unique.
pub fn registry() -> Vec<LawSpec> {
    let mut out = Vec::new();
    out.extend(algebra::laws());
    out.extend(spaces::laws());
    out.extend(zlaws::laws());
    out.extend(compact::laws());
    out.extend(symbolic::laws());
    out
}

pub fn find(id: &str) -> Option<LawSpec> {
    registry().into_iter().find(|l| l.id == id)
}

pub(crate) fn power(n: usize) -> Arc<BoolAlg> {
    Arc::new(BoolAlg::power(n).expect("suite bounds stay below the atom limit"))
}

/// Power algebras with `0..=n` atoms.
pub(crate) fn powers(n: usize) -> Vec<Arc<BoolAlg>> {
    (0..=n).map(power).collect()
}

/// Power algebras together with every subalgebra of `P(g)` for `g ≤ ground`.
pub(crate) fn algebras(atoms: usize, ground: usize) -> Result<Vec<Arc<BoolAlg>>> {
    let mut out = powers(atoms);
    for g in 0..=ground {
        for a in crate::boolean::enumerate_subalgebras(g)? {
            if !a.is_power() {
                out.push(Arc::new(a));
            }
        }
    }
    Ok(out)
}
