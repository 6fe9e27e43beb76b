//! `chisel`: exact Ehrhart computations for chiseled smooth lattice
//! polytopes.
//!
//! Exit codes: 0 success, 1 computation error (invalid parameters, budget,
//! mismatches in `reproduce`), 2 usage error.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use chisel_cli::output::{
    envelope, int_str, poly_json, rational_array_json, rational_str, validation_json,
    validation_text,
};
use chisel_cli::reproduce::{self, ReproduceOptions};
use chisel_core::bvalpha::{alpha_table, reconstruct_ehrhart_from_alpha, scan_alpha_positivity};
use chisel_core::counting::{count_points, CountOptions};
use chisel_core::ehrhart::{
    ehrhart_basic, ehrhart_chisel_series, ehrhart_chiseled_cube, ehrhart_corner_chiseled_box,
    ehrhart_corner_chiseled_cube, ehrhart_cube_tower, ehrhart_cube_tower_product,
    ehrhart_hex_tower, ehrhart_hex_tower_product, product_coeffs, product_scale_bounds,
    scaled_cube, search_negative, BasicPolytope, ScaleSearch,
};
use chisel_core::poly::{hstar_transform, interpolate, Polynomial};
use chisel_core::polytope::{ChiselBase, ChiselPlan, SmoothPolytope};
use chisel_core::rational::{parse_rational, Int};
use chisel_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "chisel",
    version,
    about = "Exact Ehrhart polynomials of smooth lattice polytopes built by vertex chiseling"
)]
struct Cli {
    /// Emit one JSON object on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form Ehrhart polynomial of a named family.
    Ehrhart {
        #[command(subcommand)]
        family: Family,
    },
    /// Build a polytope, chisel it, and report its structure.
    Chisel(ChiselArgs),
    /// Count lattice points in a dilate of a polytope file.
    Count(CountArgs),
    /// Interpolate the polynomial through exact samples.
    Interp {
        /// Samples as "t=value,t=value,..." with rational values.
        #[arg(long)]
        points: String,
    },
    /// h*-vector of a polynomial.
    Hstar {
        /// Ascending-degree coefficients, e.g. "1,4,6,3" or "1,-11/7".
        #[arg(long)]
        poly: String,
    },
    /// Alpha values of cut faces for rows 1..=n.
    AlphaTable {
        #[arg(long)]
        n: usize,
    },
    /// Positivity scan of the alpha-value row n.
    AlphaScan {
        #[arg(long)]
        n: usize,
    },
    /// Rebuild the corner-chiseled cube polynomial from alpha values.
    Reconstruct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Coefficient vector of the tower-times-cube product family.
    Mu {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: String,
    },
    /// Default cube scale for the product family, with its bound checks.
    ChooseA {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
    },
    /// Search for product instances with all-negative low coefficients.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "K")]
        k_max: u32,
        /// Upper bound for the scale grid (default 1000000).
        #[arg(long)]
        a_max: Option<String>,
        /// Comma-separated explicit scales to test instead of the grid.
        #[arg(long)]
        a: Option<String>,
        /// Use the default formula scale only.
        #[arg(long, conflicts_with_all = ["a", "a_max"])]
        formula: bool,
    },
    /// Validate a polytope and report smoothness and reflexivity.
    Validate(SourceArgs),
    /// Recompute every reference value and check it exactly.
    Reproduce {
        /// Only run items whose id contains this substring.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        budget: Option<u128>,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Unit cube (or `[0,a]^n` with --a): `(a t + 1)^n`.
    #[command(alias = "c")]
    Cube {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: Option<String>,
    },
    /// Standard simplex spanned by n basis vectors (dimension n-1).
    StdSimplex {
        #[arg(long)]
        n: usize,
    },
    /// Unimodular simplex (origin plus n basis vectors).
    UnimodSimplex {
        #[arg(long)]
        n: usize,
    },
    /// Cube `[0,a]^n` with every corner chiseled at depth b.
    #[command(alias = "q", alias = "Q")]
    ChiseledCube {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Cube `[0,a]^n` with one corner chiseled at depth b.
    #[command(alias = "p-corner")]
    CornerChiseledCube {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Box with one corner chiseled at depth b.
    #[command(alias = "box-corner")]
    CornerChiseledBox {
        /// Comma-separated side lengths.
        #[arg(long)]
        sides: String,
        #[arg(long)]
        b: String,
    },
    /// Iterated chisel tower over the 3-cube at stage k.
    #[command(alias = "b", alias = "B", alias = "tower")]
    CubeTower {
        #[arg(long)]
        k: u32,
    },
    /// Iterated chisel tower over the hexagon prism at stage k.
    #[command(alias = "hex-chisel")]
    HexTower {
        #[arg(long)]
        k: u32,
    },
    /// Cube tower at stage k times `[0,a]^n`.
    #[command(alias = "p-prod")]
    CubeTowerProduct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: String,
    },
    /// Hexagon tower at stage k times `[0,a]^n`.
    #[command(alias = "q-prod")]
    HexTowerProduct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        a: String,
    },
    /// Iterated full chiseling of an arbitrary base polynomial.
    #[command(alias = "chisel-series")]
    Series {
        /// Ascending-degree base coefficients, e.g. "1,4,6,3".
        #[arg(long)]
        base_poly: String,
        /// Vertex count of the base polytope.
        #[arg(long)]
        f0: String,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        scale: String,
        /// Comma-separated chisel depths (may be empty).
        #[arg(long, default_value = "")]
        depths: String,
    },
}

#[derive(Args)]
struct ChiselArgs {
    /// Polytope file to use as the base.
    #[arg(long, conflicts_with_all = ["cube", "hexprism"])]
    file: Option<String>,
    /// Use the cube of this dimension as the base.
    #[arg(long)]
    cube: Option<usize>,
    /// Use the hexagon prism as the base.
    #[arg(long, conflicts_with = "cube")]
    hexprism: bool,
    /// Dilation of the base before chiseling.
    #[arg(long, default_value = "1")]
    scale: String,
    /// Comma-separated chisel depths applied in order (may be empty).
    #[arg(long, default_value = "")]
    depths: String,
    /// Write the resulting polytope to this file.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct CountArgs {
    /// Polytope file.
    #[arg(long)]
    file: String,
    /// Dilation factor.
    #[arg(long)]
    t: String,
    /// Count interior points only.
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    budget: Option<u128>,
}

#[derive(Args)]
struct SourceArgs {
    /// Polytope file.
    #[arg(long, conflicts_with_all = ["cube", "hexprism"])]
    file: Option<String>,
    /// The cube of this dimension.
    #[arg(long)]
    cube: Option<usize>,
    /// The hexagon prism.
    #[arg(long, conflicts_with = "cube")]
    hexprism: bool,
    /// Dilation of the built-in bases.
    #[arg(long, default_value = "1")]
    scale: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_echo: Vec<String> = std::env::args().skip(1).collect();
    let started = Instant::now();
    match dispatch(&cli.command) {
        Ok((text, result, failures)) => {
            if cli.json {
                let out = envelope(&command_echo.join(" "), result, started.elapsed().as_millis());
                println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                println!("{text}");
            }
            if failures {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

/// Returns (text output, json result, failure flag).
fn dispatch(command: &Command) -> Result<(String, Value, bool)> {
    match command {
        Command::Ehrhart { family } => {
            let (label, p) = family_polynomial(family)?;
            Ok((
                format!("{label}\n  i(t) = {p}"),
                json!({
                    "family": label,
                    "degree": p.degree().map_or("-".into(), |d| d.to_string()),
                    "polynomial": poly_json(&p),
                    "display": p.to_string(),
                }),
                false,
            ))
        }
        Command::Chisel(args) => {
            let plan = ChiselPlan {
                base: chisel_base(&args.file, &args.cube, args.hexprism, &args.scale)?,
                depths: parse_int_list(&args.depths)?,
            };
            let p = plan.apply()?;
            let report = p.validate()?;
            if let Some(path) = &args.out {
                std::fs::write(path, p.to_file_text())
                    .map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))?;
            }
            Ok((validation_text(&report), validation_json(&report), false))
        }
        Command::Count(args) => {
            let p = load_file(&args.file)?;
            let t = parse_int(&args.t)?;
            let opts = count_options(args.threads, args.budget);
            let sample = count_points(&p, &t, args.strict, &opts)?;
            Ok((
                format!(
                    "count({} * P{}) = {}",
                    sample.t,
                    if sample.strict { ", interior" } else { "" },
                    sample.count
                ),
                json!({
                    "t": int_str(&sample.t),
                    "strict": sample.strict,
                    "count": int_str(&sample.count),
                }),
                false,
            ))
        }
        Command::Interp { points } => {
            let samples = parse_points(points)?;
            let p = interpolate(&samples)?;
            Ok((
                format!("p(t) = {p}"),
                json!({
                    "polynomial": poly_json(&p),
                    "display": p.to_string(),
                }),
                false,
            ))
        }
        Command::Hstar { poly } => {
            let p = parse_poly(poly)?;
            let h = hstar_transform(&p)?;
            let rendered: Vec<String> = h.values.iter().map(rational_str).collect();
            let mut text = format!("h* = ({})", rendered.join(", "));
            if !h.integral {
                text.push_str("\nwarning: h* vector is not integral; input is not the Ehrhart polynomial of a lattice polytope");
            }
            Ok((
                text,
                json!({
                    "hstar": rational_array_json(&h.values),
                    "integral": h.integral,
                }),
                false,
            ))
        }
        Command::AlphaTable { n } => {
            let table = alpha_table(*n)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (i, row) in table.iter().enumerate() {
                let rendered: Vec<String> = row.iter().map(rational_str).collect();
                text.push_str(&format!("n={}: {}\n", i + 1, rendered.join("  ")));
                rows.push(json!({
                    "n": (i + 1).to_string(),
                    "values": rational_array_json(row),
                }));
            }
            Ok((text.trim_end().to_string(), json!({ "rows": rows }), false))
        }
        Command::AlphaScan { n } => {
            let scan = scan_alpha_positivity(*n)?;
            let negatives: Vec<Value> = scan
                .negative_entries
                .iter()
                .map(|(k, v)| json!({ "k": k.to_string(), "value": rational_str(v) }))
                .collect();
            let text = if scan.all_positive {
                format!("n={}: all alpha values positive", scan.n)
            } else {
                let rendered: Vec<String> = scan
                    .negative_entries
                    .iter()
                    .map(|(k, v)| format!("k={k}: {v}"))
                    .collect();
                format!("n={}: negative entries at {}", scan.n, rendered.join(", "))
            };
            Ok((
                text,
                json!({
                    "n": scan.n.to_string(),
                    "all_positive": scan.all_positive,
                    "negative_entries": negatives,
                }),
                false,
            ))
        }
        Command::Reconstruct { n, a, b } => {
            let a = parse_int(a)?;
            let b = parse_int(b)?;
            let p = reconstruct_ehrhart_from_alpha(*n, &a, &b)?;
            let closed = ehrhart_corner_chiseled_cube(*n, &a, &b)?;
            let matches = p == closed;
            Ok((
                format!("i(t) = {p}\nmatches closed form: {matches}"),
                json!({
                    "polynomial": poly_json(&p),
                    "display": p.to_string(),
                    "matches_closed_form": matches,
                }),
                !matches,
            ))
        }
        Command::Mu { n, k, a } => {
            let a = parse_int(a)?;
            let mu = product_coeffs(*n, *k, &a)?;
            let rendered: Vec<String> = mu.iter().map(rational_str).collect();
            Ok((
                format!("coefficients (ascending): {}", rendered.join(", ")),
                json!({ "mu": rational_array_json(&mu) }),
                false,
            ))
        }
        Command::ChooseA { n, k } => {
            let bounds = product_scale_bounds(*n, *k)?;
            Ok((
                format!(
                    "a = {}\nbounds: linear_negative={} quadratic_bounded={} cubic_bounded={} scale_large_enough={}",
                    bounds.scale,
                    bounds.linear_negative,
                    bounds.quadratic_bounded,
                    bounds.cubic_bounded,
                    bounds.scale_large_enough
                ),
                json!({
                    "a": int_str(&bounds.scale),
                    "linear_negative": bounds.linear_negative,
                    "quadratic_bounded": bounds.quadratic_bounded,
                    "cubic_bounded": bounds.cubic_bounded,
                    "scale_large_enough": bounds.scale_large_enough,
                    "all_hold": bounds.all_hold(),
                }),
                false,
            ))
        }
        Command::Search {
            n,
            k_max,
            a_max,
            a,
            formula,
        } => {
            let strategy = if *formula {
                ScaleSearch::Formula
            } else if let Some(list) = a {
                ScaleSearch::Exactly(parse_int_list(list)?)
            } else {
                let max = match a_max {
                    Some(s) => parse_int(s)?,
                    None => Int::from(1_000_000u64),
                };
                ScaleSearch::UpTo(max)
            };
            let witnesses = search_negative(*n, *k_max, &strategy)?;
            let mut text = String::new();
            let mut items = Vec::new();
            for w in &witnesses {
                let a_str = w.a.as_ref().map_or("-".to_string(), |a| a.to_string());
                let indices: Vec<String> =
                    w.negative_indices.iter().map(|j| j.to_string()).collect();
                text.push_str(&format!(
                    "k={} a={} negative coefficients at t^{{{}}}\n",
                    w.k,
                    a_str,
                    indices.join(",")
                ));
                items.push(json!({
                    "k": w.k.to_string(),
                    "a": w.a.as_ref().map(int_str),
                    "negative_indices": indices,
                }));
            }
            if witnesses.is_empty() {
                text.push_str("no witnesses found\n");
            }
            Ok((
                text.trim_end().to_string(),
                json!({ "witnesses": items }),
                false,
            ))
        }
        Command::Validate(args) => {
            let p = match chisel_base(&args.file, &args.cube, args.hexprism, &args.scale)? {
                ChiselBase::Explicit(p) => *p,
                base => ChiselPlan { base, depths: vec![] }.apply()?,
            };
            let report = p.validate()?;
            Ok((validation_text(&report), validation_json(&report), false))
        }
        Command::Reproduce {
            only,
            threads,
            budget,
        } => {
            let defaults = ReproduceOptions::default();
            let opts = ReproduceOptions {
                only: only.clone(),
                threads: threads.unwrap_or(defaults.threads),
                budget: budget.unwrap_or(defaults.budget),
            };
            let outcomes = reproduce::run(&opts);
            if outcomes.is_empty() {
                return Err(Error::InvalidParameter(format!(
                    "no reproduction item matches {:?}",
                    only.as_deref().unwrap_or("")
                )));
            }
            let mut text = String::new();
            let mut items = Vec::new();
            let mut failed = 0usize;
            for o in &outcomes {
                let status = if o.passed { "PASS" } else { "FAIL" };
                if !o.passed {
                    failed += 1;
                }
                text.push_str(&format!("[{status}] {}: {}\n", o.id, o.detail));
                items.push(json!({
                    "id": o.id,
                    "description": o.description,
                    "passed": o.passed,
                    "detail": o.detail,
                }));
            }
            text.push_str(&format!(
                "{} passed, {} failed",
                outcomes.len() - failed,
                failed
            ));
            Ok((
                text,
                json!({
                    "items": items,
                    "passed": (outcomes.len() - failed).to_string(),
                    "failed": failed.to_string(),
                }),
                failed > 0,
            ))
        }
    }
}

fn family_polynomial(family: &Family) -> Result<(String, Polynomial)> {
    Ok(match family {
        Family::Cube { n, a } => match a {
            None => (
                format!("cube, n={n}"),
                ehrhart_basic(BasicPolytope::Cube, *n)?,
            ),
            Some(a) => {
                let a = parse_int(a)?;
                if a < Int::from(1) {
                    return Err(Error::InvalidParameter("cube scale must be >= 1".into()));
                }
                (format!("cube, n={n}, a={a}"), scaled_cube(*n, &a))
            }
        },
        Family::StdSimplex { n } => (
            format!("standard simplex, n={n}"),
            ehrhart_basic(BasicPolytope::StdSimplex, *n)?,
        ),
        Family::UnimodSimplex { n } => (
            format!("unimodular simplex, n={n}"),
            ehrhart_basic(BasicPolytope::UnimodSimplex, *n)?,
        ),
        Family::ChiseledCube { n, a, b } => {
            let (a, b) = (parse_int(a)?, parse_int(b)?);
            (
                format!("chiseled cube, n={n}, a={a}, b={b}"),
                ehrhart_chiseled_cube(*n, &a, &b)?,
            )
        }
        Family::CornerChiseledCube { n, a, b } => {
            let (a, b) = (parse_int(a)?, parse_int(b)?);
            (
                format!("corner-chiseled cube, n={n}, a={a}, b={b}"),
                ehrhart_corner_chiseled_cube(*n, &a, &b)?,
            )
        }
        Family::CornerChiseledBox { sides, b } => {
            let sides = parse_int_list(sides)?;
            let b = parse_int(b)?;
            (
                format!("corner-chiseled box, sides={sides:?}, b={b}"),
                ehrhart_corner_chiseled_box(&sides, &b)?,
            )
        }
        Family::CubeTower { k } => (format!("cube tower, k={k}"), ehrhart_cube_tower(*k)?),
        Family::HexTower { k } => (format!("hexagon tower, k={k}"), ehrhart_hex_tower(*k)?),
        Family::CubeTowerProduct { n, k, a } => {
            let a = parse_int(a)?;
            (
                format!("cube tower product, n={n}, k={k}, a={a}"),
                ehrhart_cube_tower_product(*n, *k, &a)?,
            )
        }
        Family::HexTowerProduct { n, k, a } => {
            let a = parse_int(a)?;
            (
                format!("hexagon tower product, n={n}, k={k}, a={a}"),
                ehrhart_hex_tower_product(*n, *k, &a)?,
            )
        }
        Family::Series {
            base_poly,
            f0,
            dim,
            scale,
            depths,
        } => {
            let base = parse_poly(base_poly)?;
            let f0 = parse_int(f0)?;
            let scale = parse_int(scale)?;
            let depths = parse_int_list(depths)?;
            (
                format!("chisel series, dim={dim}, scale={scale}, depths={depths:?}"),
                ehrhart_chisel_series(&base, &f0, *dim, &scale, &depths)?,
            )
        }
    })
}

fn chisel_base(
    file: &Option<String>,
    cube: &Option<usize>,
    hexprism: bool,
    scale: &str,
) -> Result<ChiselBase> {
    let scale = parse_int(scale)?;
    match (file, cube, hexprism) {
        (Some(path), None, false) => {
            let p = load_file(path)?;
            let p = if scale == Int::from(1) {
                p
            } else {
                p.dilate(&scale)?
            };
            Ok(ChiselBase::Explicit(Box::new(p)))
        }
        (None, Some(dim), false) => Ok(ChiselBase::Cube { dim: *dim, scale }),
        (None, None, true) => Ok(ChiselBase::HexagonPrism { scale }),
        _ => Err(Error::InvalidParameter(
            "exactly one of --file, --cube, --hexprism is required".into(),
        )),
    }
}

fn load_file(path: &str) -> Result<SmoothPolytope> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    SmoothPolytope::from_file_text(&text)
}

fn count_options(threads: Option<usize>, budget: Option<u128>) -> CountOptions {
    let defaults = CountOptions::default();
    CountOptions {
        threads: threads.unwrap_or(defaults.threads),
        budget: budget.unwrap_or(defaults.budget),
    }
}

fn parse_int(s: &str) -> Result<Int> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

fn parse_int_list(s: &str) -> Result<Vec<Int>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_int).collect()
}

fn parse_poly(s: &str) -> Result<Polynomial> {
    let coeffs: Result<Vec<_>> = s.split(',').map(parse_rational).collect();
    Ok(Polynomial::from_coeffs(coeffs?))
}

fn parse_points(s: &str) -> Result<Vec<(Int, chisel_core::Rational)>> {
    s.split(',')
        .map(|pair| {
            let (t, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad sample {pair:?}, expected t=value")))?;
            Ok((parse_int(t)?, parse_rational(v)?))
        })
        .collect()
}
