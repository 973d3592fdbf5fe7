//! `pcm`: checks curvature identities of paracontact metric structures on
//! Lie algebras described in a small DSL.
//!
//! Exit status: 0 when every requested check holds, 1 on parse or
//! validation errors, 2 when a check fails, 3 when verdicts remain
//! conditional on free parameters.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use pcm_core::check::{CheckResult, Verdict};
use pcm_core::dhomothety::{self, DHomothetyParams};
use pcm_core::frontend::{emit_report, exit_code, parse_assignment, parse_spec_named, print_spec, Format, Report};
use pcm_core::geometry::GeometryPack;
use pcm_core::identities::{constraint_extract, run_identities, Condition};
use pcm_core::model::{check_paracontact, validate_almost_paracontact, AlgebraSpec, ValidateOptions};
use pcm_core::oracle::{random_search, SearchConfig};
use pcm_core::scalar::{fmt_rational, parse_rational};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "pcm",
    version,
    about = "Exact curvature checks for paracontact metric Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Manifold description file.
    file: PathBuf,
    /// Substitute a rational for a parameter, e.g. `--subst beta=1/2`.
    #[arg(long = "subst", value_name = "NAME=VALUE")]
    subst: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the almost paracontact and paracontact conditions.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Print scal, trl, tr h^2, c^2 and the fitted coefficients.
    Invariants {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Run the identity suite.
    Identities {
        #[command(flatten)]
        input: Input,
        /// Comma-separated check ids to keep.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Extract the parameter constraints under which a condition holds.
    Solve {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        condition: Condition,
        #[arg(long)]
        json: bool,
    },
    /// Apply a D-homothetic deformation.
    Dhomothety {
        #[command(flatten)]
        input: Input,
        /// Positive rational `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Write the deformed spec here instead of standard output.
        #[arg(long, value_name = "FILE")]
        emit: Option<PathBuf>,
        /// Check the transformation laws on the recomputed geometry.
        #[arg(long)]
        verify: bool,
    },
    /// Search the F2 bracket family for valid paracontact specs.
    Search {
        #[arg(long, default_value_t = 100)]
        budget: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Use the same value for b and c.
        #[arg(long)]
        tie: bool,
        #[arg(long)]
        json: bool,
    },
}

/// Errors that map to exit status 1.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

fn load(input: &Input) -> Result<AlgebraSpec, InputError> {
    let text = std::fs::read_to_string(&input.file).with_context(|| format!("cannot read {}", input.file.display()))?;
    let spec = parse_spec_named(&text, &input.file.display().to_string()).map_err(|e| anyhow!("{e}"))?;
    if input.subst.is_empty() {
        return Ok(spec);
    }
    let assignment = input
        .subst
        .iter()
        .map(|s| parse_assignment(s).map_err(|e| anyhow!(e)))
        .collect::<Result<Vec<_>>>()?;
    Ok(spec.specialize(&assignment)?)
}

/// Loads and rejects specs that are not almost paracontact.
fn load_valid(input: &Input) -> Result<AlgebraSpec, InputError> {
    let spec = load(input)?;
    let v = validate_almost_paracontact(&spec, ValidateOptions::default())?;
    if v.verdict == Verdict::Fails {
        let first = v
            .residual
            .first()
            .map(|r| format!(": {} = {}", r.component, r.value))
            .unwrap_or_default();
        return Err(anyhow!("spec is not almost paracontact{first}").into());
    }
    Ok(spec)
}

fn print_report(r: &Report, json: bool) {
    print!("{}", emit_report(r, if json { Format::Json } else { Format::Text }));
}

fn write_out(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, InputError> {
    match cli.command {
        Command::Check { input, json } => {
            let spec = load(&input)?;
            let mut checks = vec![validate_almost_paracontact(
                &spec,
                ValidateOptions { extract_jacobi: true },
            )?];
            checks.push(check_paracontact(&spec));
            let pack = GeometryPack::compute(&spec);
            let r = Report::new(&spec, &pack, checks);
            print_report(&r, json);
            Ok(r.exit_code())
        }
        Command::Invariants { input, json } => {
            let spec = load_valid(&input)?;
            let r = Report::new(&spec, &GeometryPack::compute(&spec), Vec::new());
            print_report(&r, json);
            Ok(0)
        }
        Command::Identities { input, only, json } => {
            let spec = load_valid(&input)?;
            let pack = GeometryPack::compute(&spec);
            let mut checks = run_identities(&pack);
            if !only.is_empty() {
                if let Some(bad) = only.iter().find(|id| !checks.iter().any(|c| &c.id == *id)) {
                    return Err(anyhow!("unknown check id `{bad}`").into());
                }
                checks.retain(|c| only.contains(&c.id));
            }
            let r = Report::new(&spec, &pack, checks);
            print_report(&r, json);
            Ok(r.exit_code())
        }
        Command::Solve { input, condition, json } => {
            let spec = load_valid(&input)?;
            let set = constraint_extract(&spec, condition);
            let verdict = if set.is_empty() {
                Verdict::Holds
            } else if set.is_inconsistent() {
                Verdict::Fails
            } else {
                Verdict::Conditional
            };
            let solutions = set.solve_univariate();
            if json {
                let v = json!({
                    "condition": condition.as_str(),
                    "manifold": spec.name(),
                    "verdict": verdict.as_str(),
                    "constraints": set.generator_strings(),
                    "solutions": solutions.iter().map(|s| json!({
                        "parameter": s.parameter,
                        "generator": s.generator,
                        "roots": s.roots.iter().map(fmt_rational).collect::<Vec<_>>(),
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("{}: {} on {}", condition, verdict, spec.name());
                println!("constraints: {set}");
                for s in &solutions {
                    let roots: Vec<String> = s.roots.iter().map(fmt_rational).collect();
                    println!("  {} = 0  =>  {} in {{{}}}", s.generator, s.parameter, roots.join(", "));
                }
            }
            Ok(exit_code(&[CheckResult {
                verdict,
                ..CheckResult::holds(condition.as_str(), condition.statement())
            }]))
        }
        Command::Dhomothety {
            input,
            alpha,
            emit,
            verify,
        } => {
            let spec = load_valid(&input)?;
            let a = parse_rational(&alpha).ok_or_else(|| anyhow!("alpha must be a rational number, got `{alpha}`"))?;
            let p = DHomothetyParams::new(a)?;
            let bar = dhomothety::apply(&spec, &p)?;
            write_out(emit.as_deref(), &print_spec(&bar))?;
            if !verify {
                return Ok(0);
            }
            let mut checks = dhomothety::verify_transform_laws(&spec, &p)?;
            checks.push(dhomothety::round_trip(&spec, &p)?);
            let r = Report::new(&bar, &GeometryPack::compute(&bar), checks);
            // keep stdout a parseable spec when it carries one
            if emit.is_some() {
                print_report(&r, false);
            } else {
                eprint!("{}", emit_report(&r, Format::Text));
            }
            Ok(r.exit_code())
        }
        Command::Search {
            budget,
            seed,
            tie,
            json,
        } => {
            let mut cfg = SearchConfig::new(budget, seed);
            cfg.tie_bc = tie;
            let hits = random_search(&cfg)?;
            if json {
                let v: Vec<_> = hits
                    .iter()
                    .map(|h| {
                        json!({
                            "b": fmt_rational(&h.b),
                            "c": fmt_rational(&h.c),
                            "h_zero": h.h_zero,
                            "spec": print_spec(&h.spec),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"budget": budget, "seed": seed, "found": v}))?
                );
            } else {
                for h in &hits {
                    println!("# {}", if h.h_zero { "h = 0" } else { "h != 0" });
                    print!("{}", print_spec(&h.spec));
                }
                eprintln!("{} valid specs from {} draws", hits.len(), budget);
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
