use clap::{Parser, Subcommand};
use num_complex::Complex64;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use varreg::checks::{run_suite, CheckConfig, SUITES};
use varreg::output::{render_boundary, write_atomic, OutputFormat};
use varreg::regions::{boundary_curve, Family, RegionSpec};
use varreg::report::{Provenance, VerificationReport};
use varreg::solvers::{lv_witness, lw_value, lw_witness};
use varreg::Error;

#[derive(Parser)]
#[command(name = "varreg", version, about = "Variability regions of close-to-convex functions")]
struct Cli {
    /// Seed for the randomized verification sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Sample count for boundary curves and sweeps.
    #[arg(long, global = true, default_value_t = 1024)]
    grid: usize,

    /// Residual tolerance for witness solvers.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Output file (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a region boundary curve.
    Boundary {
        /// Region family: U, V, W, LU, LV, or LW.
        family: String,
        /// Radius in (0, 1).
        r: f64,
        /// Output format: csv, json, or svg.
        #[arg(long, default_value = "csv")]
        format: String,
    },
    /// Run a verification suite and write the report as JSON.
    Verify {
        /// One of: all, envelope, lemmas, regions, witnesses, thresholds.
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Solve for a witness reaching the target point of a limit strip.
    Witness {
        /// Witness kind: lw or lv.
        kind: String,
        /// Real part of the target.
        re: f64,
        /// Imaginary part of the target.
        im: f64,
    },
}

fn emit(out: &Option<PathBuf>, contents: &str) -> Result<(), Error> {
    match out {
        Some(path) => write_atomic(path, contents),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

/// Exit codes: 0 ok, 1 verification failure, 2 usage/domain, 3 I/O.
fn exit_for(e: &Error) -> ExitCode {
    match e {
        Error::Io(_) => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.cmd {
        Cmd::Boundary { family, r, format } => {
            let spec = RegionSpec::new(Family::from_str(family)?, *r)?;
            let format = OutputFormat::from_str(format)?;
            let curve = boundary_curve(spec, cli.grid)?;
            emit(&cli.out, &render_boundary(spec, &curve, format)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(Error::Domain(format!(
                    "unknown suite {suite:?}; expected one of {SUITES:?}"
                )));
            }
            let cfg = CheckConfig {
                seed: cli.seed,
                grid: cli.grid,
                tol: cli.tol,
            };
            let mut report = VerificationReport::new(Provenance {
                version: varreg::VERSION.to_string(),
                suite: suite.clone(),
                seed: cfg.seed,
                grid: cfg.grid,
                tol: cfg.tol,
            });
            for result in run_suite(suite, cfg)? {
                report.push(result)?;
            }
            let ok = report.all_pass();
            let text = serde_json::to_string_pretty(&report)
                .map_err(|e| Error::Internal(format!("report encoding failed: {e}")))?;
            emit(&cli.out, &format!("{text}\n"))?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Witness { kind, re, im } => {
            let target = Complex64::new(*re, *im);
            let json = match kind.to_ascii_lowercase().as_str() {
                "lw" => {
                    let (triple, wit) = lw_witness(target, cli.tol)?;
                    let residual = (lw_value(triple.r, triple.s, triple.t) - target).norm();
                    serde_json::json!({
                        "kind": "lw",
                        "target": [target.re, target.im],
                        "residual": residual,
                        "triple": { "r": triple.r, "s": triple.s, "t": triple.t },
                        "extremal": {
                            "a": [wit.a.re, wit.a.im],
                            "b": [wit.b.re, wit.b.im],
                            "rho": wit.rho,
                        },
                    })
                }
                "lv" => {
                    let (z, w) = lv_witness(target, cli.tol)?;
                    let one = Complex64::new(1.0, 0.0);
                    let residual = ((one + z).ln() - (one + w).ln() * 3.0 - target).norm();
                    serde_json::json!({
                        "kind": "lv",
                        "target": [target.re, target.im],
                        "residual": residual,
                        "z": [z.re, z.im],
                        "w": [w.re, w.im],
                    })
                }
                other => {
                    return Err(Error::Domain(format!(
                        "unknown witness kind {other:?}; expected lw or lv"
                    )))
                }
            };
            let text = serde_json::to_string_pretty(&json)
                .map_err(|e| Error::Internal(format!("witness encoding failed: {e}")))?;
            emit(&cli.out, &format!("{text}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
