//! `linecomp`: exact analyzer for complements of unions of lines in the
//! complex projective plane.
//!
//! Loads an arrangement (from a JSON document or a built-in), computes the
//! intersection lattice, Euler characteristic, fibrations, nets, component
//! census, linear automorphism group, and every map-count bound, and prints
//! a text or JSON report.

mod formula;
mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use linecomp_core::analysis::analyze;
use linecomp_core::arrangement::{
    arrangement_from_json, builtin_arrangement, compute_lattice, Arrangement, BUILTIN_NAMES,
};
use linecomp_core::autgroup::linear_aut_group;
use linecomp_core::bounds::BigCount;
use linecomp_core::fibration::all_nets;
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "linecomp",
    version,
    about = "Exact invariants and map-count bounds for complements of line arrangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and print the report.
    Analyze(AnalyzeArgs),
    /// List the nets and their pencil fibrations.
    Nets(SourceArgs),
    /// Compute the linear automorphism group.
    Aut(SourceArgs),
    /// Print only the map-count bounds.
    Bound(AnalyzeArgs),
    /// Evaluate a single counting formula.
    Formula(formula::FormulaArgs),
    /// List the built-in arrangements.
    Builtins,
}

#[derive(Args)]
struct SourceArgs {
    /// Arrangement document (JSON) to analyze.
    #[arg(
        value_name = "FILE",
        required_unless_present = "builtin",
        conflicts_with = "builtin"
    )]
    file: Option<PathBuf>,
    /// Analyze a built-in arrangement instead of a file.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
    /// Emit a machine-readable JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Override the fiber symmetry bound of one orbit class (repeatable).
    #[arg(long = "fiber-aut", value_name = "CLASS=VALUE")]
    fiber_aut: Vec<String>,
}

/// Failures split by exit code: input problems exit 1, computation
/// failures on well-formed input exit 2.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Compute(String),
}

/// Restores the default SIGPIPE disposition so piping into `head` and
/// friends terminates the process quietly instead of panicking on a closed
/// stream.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Compute(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze(args) => {
            let analysis = run_analysis(&args)?;
            if args.source.json {
                println!("{}", report::to_json(&report::ReportDoc::new(&analysis)));
            } else {
                report::print_text(&analysis);
            }
            Ok(())
        }
        Command::Bound(args) => {
            let analysis = run_analysis(&args)?;
            if analysis.bounds.is_empty() {
                return Err(CliError::Compute(
                    "the census has no components, so no class bound applies".to_string(),
                ));
            }
            if args.source.json {
                #[derive(Serialize)]
                struct BoundsDoc {
                    name: String,
                    bounds: Vec<report::BoundDoc>,
                    warnings: Vec<report::WarningDoc>,
                }
                let doc = BoundsDoc {
                    name: analysis.arrangement.name().to_string(),
                    bounds: analysis.bounds.iter().map(report::BoundDoc::new).collect(),
                    warnings: analysis
                        .warnings
                        .iter()
                        .map(report::WarningDoc::new)
                        .collect(),
                };
                println!("{}", report::to_json(&doc));
            } else {
                report::print_bounds(&analysis.bounds);
            }
            Ok(())
        }
        Command::Nets(source) => {
            let arr = load(&source)?;
            let lattice = compute_lattice(&arr);
            let nets = all_nets(&arr, &lattice);
            if source.json {
                #[derive(Serialize)]
                struct NetsDoc {
                    name: String,
                    n_lines: usize,
                    nets: Vec<report::NetDoc>,
                }
                let doc = NetsDoc {
                    name: arr.name().to_string(),
                    n_lines: arr.n_lines(),
                    nets: nets.iter().map(|n| report::NetDoc::new(n, None)).collect(),
                };
                println!("{}", report::to_json(&doc));
            } else {
                println!("arrangement {}: {} nets", arr.name(), nets.len());
                for (i, net) in nets.iter().enumerate() {
                    let classes = net
                        .classes
                        .iter()
                        .map(|c| {
                            let inner: Vec<String> =
                                c.iter().map(|l| (l + 1).to_string()).collect();
                            format!("{{{}}}", inner.join(","))
                        })
                        .collect::<Vec<_>>()
                        .join(" ");
                    println!(
                        "  [{}] ({},{}) net {classes}: {} base points",
                        i + 1,
                        net.k,
                        net.d,
                        net.inter_points.len()
                    );
                }
            }
            Ok(())
        }
        Command::Aut(source) => {
            let arr = load(&source)?;
            let lattice = compute_lattice(&arr);
            let group =
                linear_aut_group(&arr, &lattice).map_err(|e| CliError::Compute(e.to_string()))?;
            if source.json {
                #[derive(Serialize)]
                struct GroupDoc {
                    name: String,
                    #[serde(flatten)]
                    aut: report::AutDoc,
                }
                let doc = GroupDoc {
                    name: arr.name().to_string(),
                    aut: report::AutDoc::new(&group),
                };
                println!("{}", report::to_json(&doc));
            } else {
                println!(
                    "arrangement {}: linear automorphism group of order {}",
                    arr.name(),
                    group.order()
                );
            }
            Ok(())
        }
        Command::Formula(args) => {
            let (value, notes) = formula::evaluate(&args)?;
            println!("{value}");
            for note in notes {
                eprintln!("note: {note}");
            }
            Ok(())
        }
        Command::Builtins => {
            for name in BUILTIN_NAMES {
                println!("{name}");
            }
            Ok(())
        }
    }
}

fn run_analysis(args: &AnalyzeArgs) -> Result<linecomp_core::analysis::Analysis, CliError> {
    let arr = load(&args.source)?;
    let overrides = parse_overrides(&args.fiber_aut)?;
    analyze(arr, &overrides).map_err(|e| CliError::Compute(e.to_string()))
}

fn load(source: &SourceArgs) -> Result<Arrangement, CliError> {
    match (&source.file, &source.builtin) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            arrangement_from_json(&text).map_err(|e| CliError::Input(e.to_string()))
        }
        (None, Some(name)) => builtin_arrangement(name).map_err(|e| CliError::Input(e.to_string())),
        _ => unreachable!("the argument parser enforces exactly one source"),
    }
}

/// Parses repeated `CLASS=VALUE` overrides into a class-index map.
fn parse_overrides(specs: &[String]) -> Result<BTreeMap<usize, BigCount>, CliError> {
    let mut out = BTreeMap::new();
    for spec in specs {
        let (class, value) = spec.split_once('=').ok_or_else(|| {
            CliError::Input(format!("--fiber-aut expects CLASS=VALUE, got `{spec}`"))
        })?;
        let class: usize = class.parse().map_err(|_| {
            CliError::Input(format!(
                "--fiber-aut class must be an integer, got `{class}`"
            ))
        })?;
        let value: BigCount = value.parse().map_err(|_| {
            CliError::Input(format!(
                "--fiber-aut value must be a nonnegative integer, got `{value}`"
            ))
        })?;
        if value == BigCount::from(0u32) {
            return Err(CliError::Input(
                "--fiber-aut value must be positive".to_string(),
            ));
        }
        out.insert(class, value);
    }
    Ok(out)
}
