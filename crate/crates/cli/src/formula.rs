//! The `formula` subcommand: evaluate one counting formula from exact
//! numeric arguments.

use clap::Args;
use linecomp_core::bounds::{
    aut_curve_bound, t_bounds, tc_bound, tcap, theorem_bounds, tprime, zeta_upper, BigCount,
    SurfaceInvariants, TheoremFormula,
};
use linecomp_core::exactfield::{rational_to_string, Rational};
use num::Zero;

use crate::CliError;

pub const FORMULA_NAMES: [&str; 13] = [
    "A",
    "Tc",
    "T",
    "Tprime",
    "Tcap",
    "zeta",
    "thm1",
    "thm2",
    "thm3",
    "thm4simple",
    "thm5",
    "cor1",
    "appendix",
];

#[derive(Args)]
pub struct FormulaArgs {
    /// Formula name: A, Tc, T, Tprime, Tcap, zeta, thm1, thm2, thm3,
    /// thm4simple, thm5, cor1, or appendix.
    #[arg(value_name = "NAME")]
    name: String,
    /// Fiber genus g (A, Tc, T).
    #[arg(long)]
    g: Option<u32>,
    /// Puncture count k (A).
    #[arg(long)]
    k: Option<u32>,
    /// Puncture count r (T).
    #[arg(long)]
    r: Option<u32>,
    /// Weight h: an integer for Tprime, an integer or rational a/b for Tcap.
    #[arg(long)]
    h: Option<String>,
    /// Exponent s: an integer for zeta, a rational index >= 1 for thm2.
    #[arg(long)]
    s: Option<String>,
    /// Partial-sum length for zeta (default 16).
    #[arg(long)]
    terms: Option<u32>,
    /// Component dimensions, comma-separated (thm1, thm3, cor1).
    #[arg(long, value_delimiter = ',')]
    dims: Option<Vec<usize>>,
    /// Euler characteristic of the complement (thm1, thm4simple, thm5).
    #[arg(long)]
    euler: Option<i64>,
    /// Component count n (thm2, thm5, appendix).
    #[arg(long)]
    n: Option<u64>,
    /// Count of two-dimensional components (thm4simple).
    #[arg(long)]
    ni: Option<usize>,
    /// First Betti number (thm2).
    #[arg(long)]
    h1: Option<u32>,
    /// Ambient dimension (thm2).
    #[arg(long)]
    dim: Option<u32>,
    /// Top self-intersection of the canonical class (thm2).
    #[arg(long)]
    ktop: Option<i64>,
    /// Appendix point bound: multiplicity of the projection point.
    #[arg(long)]
    d: Option<u64>,
    /// Appendix point bound: census count of the point's component.
    #[arg(long)]
    nd: Option<u64>,
    /// Appendix global bound: total census count.
    #[arg(long)]
    ns: Option<u64>,
}

fn require<T>(value: Option<T>, flag: &str, name: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Input(format!("formula {name} requires --{flag}")))
}

fn parse_u32(text: &str, flag: &str) -> Result<u32, CliError> {
    text.parse().map_err(|_| {
        CliError::Input(format!(
            "--{flag} expects a nonnegative integer, got `{text}`"
        ))
    })
}

fn parse_rational(text: &str, flag: &str) -> Result<Rational, CliError> {
    text.parse()
        .map_err(|_| CliError::Input(format!("--{flag} expects an integer or a/b, got `{text}`")))
}

fn invalid(err: impl std::fmt::Display) -> CliError {
    CliError::Input(err.to_string())
}

/// Evaluates the named formula.  Returns the exact value to print and any
/// notes (for standard error).
pub fn evaluate(args: &FormulaArgs) -> Result<(String, Vec<String>), CliError> {
    let name = args.name.as_str();
    let plain = |v: BigCount| (v.to_string(), Vec::new());
    match name {
        "A" => {
            let g = require(args.g, "g", name)?;
            let k = require(args.k, "k", name)?;
            Ok(plain(aut_curve_bound(g, k).map_err(invalid)?))
        }
        "Tc" => {
            let g = require(args.g, "g", name)?;
            Ok(plain(tc_bound(g).map_err(invalid)?))
        }
        "T" => {
            let g = require(args.g, "g", name)?;
            let r = require(args.r, "r", name)?;
            Ok(plain(t_bounds(g, r).map_err(invalid)?))
        }
        "Tprime" => {
            let h = require(args.h.as_deref(), "h", name)?;
            Ok(plain(tprime(parse_u32(h, "h")?).map_err(invalid)?))
        }
        "Tcap" => {
            let h = require(args.h.as_deref(), "h", name)?;
            let (value, rounded) = tcap(&parse_rational(h, "h")?);
            let notes = if rounded {
                vec![format!(
                    "argument {h} rounded up to the next even integer >= 4"
                )]
            } else {
                Vec::new()
            };
            Ok((value.to_string(), notes))
        }
        "zeta" => {
            let s = require(args.s.as_deref(), "s", name)?;
            let s = parse_u32(s, "s")?;
            if s < 2 {
                return Err(CliError::Input("zeta requires --s >= 2".to_string()));
            }
            let terms = args.terms.unwrap_or(16);
            if terms == 0 {
                return Err(CliError::Input("zeta requires --terms >= 1".to_string()));
            }
            Ok((rational_to_string(&zeta_upper(s, terms)), Vec::new()))
        }
        "thm1" | "thm3" | "cor1" => {
            let dims = require(args.dims.clone(), "dims", name)?;
            let mut inv = dims_invariants(dims);
            let which = match name {
                "thm1" => {
                    inv.euler = Some(require(args.euler, "euler", name)?);
                    TheoremFormula::T1
                }
                "thm3" => TheoremFormula::T3,
                _ => TheoremFormula::C1,
            };
            report(theorem_bounds(&inv, which).map_err(invalid)?)
        }
        "thm2" => {
            let inv = SurfaceInvariants {
                n_components: Some(require(args.n, "n", name)? as usize),
                dims: None,
                euler: None,
                h1: Some(require(args.h1, "h1", name)?),
                ambient_dim: Some(require(args.dim, "dim", name)?),
                index_s: Some(parse_rational(require(args.s.as_deref(), "s", name)?, "s")?),
                k_top: Some(require(args.ktop, "ktop", name)?),
            };
            report(theorem_bounds(&inv, TheoremFormula::T2).map_err(invalid)?)
        }
        "thm4simple" => {
            let ni = require(args.ni, "ni", name)?;
            let mut inv = dims_invariants(vec![2; ni]);
            inv.euler = Some(require(args.euler, "euler", name)?);
            report(theorem_bounds(&inv, TheoremFormula::T4Simple).map_err(invalid)?)
        }
        "thm5" => {
            let inv = SurfaceInvariants {
                n_components: Some(require(args.n, "n", name)? as usize),
                dims: None,
                euler: Some(require(args.euler, "euler", name)?),
                h1: None,
                ambient_dim: None,
                index_s: None,
                k_top: None,
            };
            report(theorem_bounds(&inv, TheoremFormula::T5).map_err(invalid)?)
        }
        "appendix" => appendix(args),
        _ => Err(CliError::Input(format!(
            "unknown formula `{name}` (expected one of {})",
            FORMULA_NAMES.join(", ")
        ))),
    }
}

fn dims_invariants(dims: Vec<usize>) -> SurfaceInvariants {
    SurfaceInvariants {
        n_components: Some(dims.len()),
        dims: Some(dims),
        euler: None,
        h1: None,
        ambient_dim: None,
        index_s: None,
        k_top: None,
    }
}

fn report(report: linecomp_core::bounds::BoundReport) -> Result<(String, Vec<String>), CliError> {
    Ok((report.value.to_string(), report.notes))
}

/// Point-projection bounds evaluated from raw counts: with `--n --d --nd`
/// the per-point count `25 * nd * d * (n - d + 1)`, with `--n --ns` the
/// global count `floor(25/4 * ns * (n + 1)^2)`.
fn appendix(args: &FormulaArgs) -> Result<(String, Vec<String>), CliError> {
    let n = require(args.n, "n", "appendix")?;
    if args.d.is_some() || args.nd.is_some() {
        let d = require(args.d, "d", "appendix")?;
        let nd = require(args.nd, "nd", "appendix")?;
        if d < 3 {
            return Err(CliError::Input(
                "appendix requires a point multiplicity --d >= 3".to_string(),
            ));
        }
        if d > n {
            return Err(CliError::Input(
                "appendix requires --d <= --n lines through the point".to_string(),
            ));
        }
        let value = BigCount::from(25u32)
            * BigCount::from(nd)
            * BigCount::from(d)
            * BigCount::from(n - d + 1);
        Ok((value.to_string(), Vec::new()))
    } else if let Some(ns) = args.ns {
        let raw = BigCount::from(25u32)
            * BigCount::from(ns)
            * BigCount::from(n + 1)
            * BigCount::from(n + 1);
        let rounded = !(raw.clone() % 4u32).is_zero();
        let value = raw / 4u32;
        let notes = if rounded {
            vec!["global count rounded down to an integer".to_string()]
        } else {
            Vec::new()
        };
        Ok((value.to_string(), notes))
    } else {
        Err(CliError::Input(
            "appendix needs --n --d --nd (point bound) or --n --ns (global bound)".to_string(),
        ))
    }
}
