//! `sdl`: run the law suite, apply functors to serialised instances, and
//! inspect the Dwinger correspondence.
//!
//! Exit codes: 0 when everything checked holds, 1 when a law or unit fails,
//! 2 for usage, parse and wrong-category errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sdl_core::error::{Error, Result};
use sdl_core::finspace::FinTopSpace;
use sdl_core::harness::ops::{dualize, dwinger, roundtrip, Functor};
use sdl_core::harness::{run_suite, Suite, SuiteConfig, BOUNDS_OVERRIDE_VAR};
use sdl_core::json::Instance;
use sdl_core::par::Exec;

#[derive(Parser, Debug)]
#[command(name = "sdl", version, about = "Finite and symbolic checks of Stone-type dualities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Which tier of laws to run.
    #[arg(long, global = true, default_value = "all", value_parser = parse_suite)]
    suite: Suite,
    /// Largest atom count of enumerated algebras.
    #[arg(long, global = true, default_value_t = 3)]
    max_atoms: usize,
    /// Largest point count of enumerated spaces.
    #[arg(long, global = true, default_value_t = 4)]
    max_points: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// `key=value` pairs applied over the flags, e.g. `max_atoms=2,max_points=3`.
    #[arg(long, global = true, env = BOUNDS_OVERRIDE_VAR, hide_env_values = true)]
    bounds_override: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every registered law within the bounds.
    Verify {
        /// Run on the calling thread only.
        #[arg(long)]
        sequential: bool,
        /// Record wall times; reports then differ between runs.
        #[arg(long)]
        timing: bool,
    },
    /// Apply one functor to a serialised object.
    Dualize {
        input: PathBuf,
        /// S, T, P, At, F, G, Fprime, Gprime, FrakF, FrakG, Phi, Psi,
        /// PhiPrime, PsiPrime, Delta or DeltaPrime.
        #[arg(long, value_parser = parse_functor)]
        functor: Functor,
        /// Boolean base for Delta; defaults to the clopen algebra.
        #[arg(long)]
        base: Option<PathBuf>,
    },
    /// Send an object through its duality and back and check the unit.
    Roundtrip { input: PathBuf },
    /// The Dwinger correspondence on a space file or a discrete space.
    Dwinger {
        input: Option<PathBuf>,
        /// Use the discrete space with this many points.
        #[arg(long, conflicts_with = "input")]
        points: Option<usize>,
        /// Also check the symbolic chain over the finitely supported points.
        #[arg(long)]
        symbolic: bool,
    },
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_functor(s: &str) -> std::result::Result<Functor, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read_instance(path: &Path) -> Result<Instance> {
    Instance::parse(&fs::read_to_string(path)?)
}

fn emit(common: &Common, text: &str) -> Result<()> {
    match &common.out {
        Some(path) => Ok(fs::write(path, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Returns whether everything checked held.
fn run(cli: Cli) -> Result<bool> {
    let c = &cli.common;
    match cli.command {
        Command::Verify { sequential, timing } => {
            let mut cfg = SuiteConfig {
                suite: c.suite,
                max_atoms: c.max_atoms,
                max_points: c.max_points,
                seed: c.seed,
                exec: if sequential { Exec::Sequential } else { Exec::Parallel },
                timing,
            };
            if let Some(o) = &c.bounds_override {
                cfg.apply_override(o)?;
            }
            let report = run_suite(&cfg)?;
            let text = match c.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            emit(c, &text)?;
            Ok(report.passed())
        }
        Command::Dualize { input, functor, base } => {
            let inst = read_instance(&input)?;
            let base = match base {
                Some(p) => match read_instance(&p)? {
                    Instance::Algebra(a) => Some(a),
                    other => {
                        return Err(Error::Parse(format!(
                            "--base expects an algebra, found {}",
                            other.kind()
                        )))
                    }
                },
                None => None,
            };
            let d = dualize(functor, &inst, base.as_ref())?;
            let text = match c.format {
                Format::Json => pretty(&d)?,
                Format::Text => format!(
                    "{} applied to {}: {} {}\n{}",
                    d.functor,
                    inst.kind(),
                    d.stamp.category,
                    if d.stamp.holds { "verified" } else { "NOT verified" },
                    pretty(&d.image)?
                ),
            };
            emit(c, &text)?;
            Ok(d.stamp.holds)
        }
        Command::Roundtrip { input } => {
            let r = roundtrip(&read_instance(&input)?)?;
            let text = match c.format {
                Format::Json => pretty(&r)?,
                Format::Text => format!(
                    "{} through {}: unit {} is {}{}\n{}",
                    r.kind,
                    r.via,
                    r.unit,
                    if r.iso { "an isomorphism" } else { "NOT an isomorphism" },
                    r.detail.as_deref().map(|d| format!(" ({d})")).unwrap_or_default(),
                    pretty(&r.image)?
                ),
            };
            emit(c, &text)?;
            Ok(r.iso)
        }
        Command::Dwinger {
            input,
            points,
            symbolic,
        } => {
            let x = match (input, points) {
                (Some(p), _) => match read_instance(&p)? {
                    Instance::Space(x) => x,
                    other => return Err(Error::Parse(format!("expected a space, found {}", other.kind()))),
                },
                (None, Some(n)) => FinTopSpace::discrete(n)?,
                (None, None) => FinTopSpace::discrete(c.max_points)?,
            };
            let r = dwinger(&x, symbolic.then_some(c.seed))?;
            let text = match c.format {
                Format::Json => pretty(&r)?,
                Format::Text => {
                    let mut s = format!("{} points, {} admissible algebras\n", r.points, r.bases.len());
                    for b in &r.bases {
                        s += &format!(
                            "  {} -> Δ′Δ {}\n",
                            serde_json::to_string(&b.algebra)?,
                            if b.retrieves { "= id" } else { "≠ id" }
                        );
                    }
                    s += &format!("order witnessed: {}\n", r.order_witnessed);
                    s += &format!("every relabelling is some Δ(A): {}\n", r.surjective_on_relabellings);
                    if let Some(sym) = &r.symbolic {
                        s += &format!("symbolic chain: {}\n", serde_json::to_string(sym)?);
                    }
                    s += if r.passed { "PASS\n" } else { "FAIL\n" };
                    s
                }
            };
            emit(c, &text)?;
            Ok(r.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
