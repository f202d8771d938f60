//! Command-line surface. The binary is a thin wrapper around [`run`],
//! which parses arguments, dispatches into the library and maps errors to
//! the exit-status contract: usage problems exit 2, numeric failures 3,
//! internal consistency violations 4.
//!
//! Identical invocations produce byte-identical output; nothing
//! time-dependent is ever printed.

use std::ffi::OsString;
use std::fs::File;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{One, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact::{rat_to_f64, Rat};
use crate::partition::{
    bounded_to_core, chain_decomposition, is_l_core, omega_conjugate, Partition,
};
use crate::symfunc::{Basis, SymFuncExpr};

const SCHEMA: &str = "kschur/1";

/// Environment variable overriding the default numeric tolerance.
pub const TOLERANCE_ENV: &str = "KSCHUR_TOL";

#[derive(Parser, Debug)]
#[command(
    name = "kschur",
    version,
    about = "k-Schur combinatorics, minimal boundary evaluation, Toeplitz reconstruction and central alcove walks",
    max_term_width = 100
)]
struct CliArgs {
    /// Residual tolerance for eigen-solves, in (0, 1e-3]; defaults to
    /// 1e-12 or the KSCHUR_TOL environment variable.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Cap for symbolic determinant work (default 3; 4 is a slow opt-in).
    #[arg(long, global = true)]
    symbolic_limit: Option<usize>,
    #[arg(long, global = true, value_enum, default_value = "pretty")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
}

#[derive(Args, Debug)]
struct Common {
    /// Level k of the k-bounded world.
    #[arg(long, short)]
    k: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Core bijection, chains and conjugation of one partition.
    Partitions {
        #[command(flatten)]
        common: Common,
        /// Comma-separated parts, e.g. 2,1,1 (empty string for ∅).
        #[arg(long, short)]
        partition: String,
    },
    /// Cover relations of B_k, or a JSON edge-list export.
    Lattice {
        #[command(flatten)]
        common: Common,
        /// Partition whose covers are listed.
        #[arg(long, short, conflicts_with = "max_size")]
        partition: Option<String>,
        /// Export all edges between partitions of size < N instead.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Expansions in the h / k-Schur / Schur bases.
    Kschur {
        #[command(flatten)]
        common: Common,
        #[command(subcommand)]
        op: KschurOp,
    },
    /// The transfer matrix, symbolic or specialized, and Ξ(T).
    Phi {
        #[command(flatten)]
        common: Common,
        /// Print the symbolic matrix and its characteristic polynomial.
        #[arg(long, conflicts_with = "at")]
        symbolic: bool,
        /// Specialize at comma-separated rectangle values (rationals).
        #[arg(long)]
        at: Option<String>,
    },
    /// Reduced word, alcove center and involution image of a partition.
    Alcove {
        #[command(flatten)]
        common: Common,
        #[arg(long, short)]
        partition: String,
    },
    /// Minimal-boundary maps.
    Boundary {
        #[command(flatten)]
        common: Common,
        #[command(subcommand)]
        op: BoundaryOp,
    },
    /// Totally nonnegative Toeplitz matrices.
    Toeplitz {
        #[command(subcommand)]
        op: ToeplitzOp,
    },
    /// Central alcove random walks.
    Walk {
        #[command(flatten)]
        common: Common,
        #[command(subcommand)]
        op: WalkOp,
    },
    /// Golden-value suite for the frozen k = 2, 3 matrices and
    /// polynomials; exits nonzero on any mismatch.
    Selftest,
}

#[derive(Subcommand, Debug)]
enum KschurOp {
    /// Expand h_δ in the k-Schur basis.
    HToKschur { delta: String },
    /// Expand s_κ^(k) in the h basis.
    ToH { kappa: String },
    /// Expand s_κ^(k) in ordinary Schur functions.
    ToSchur { kappa: String },
    /// Expand s_κ^(k) in the (k+1)-Schur basis.
    Lift { kappa: String },
    /// The Pieri product h_r · s_κ^(k).
    Pieri { r: usize, kappa: String },
    /// The product s_κ^(k) · s_δ^(k).
    Product { kappa: String, delta: String },
}

#[derive(Subcommand, Debug)]
enum BoundaryOp {
    /// f(r) = (φ(h_1), …, φ(h_k)) with the full eigen-data.
    F {
        #[arg(long)]
        r: String,
    },
    /// g(h) = rectangle minors of h, the inverse of f.
    G {
        #[arg(long)]
        h: String,
    },
    /// ζ(T) coefficients of the harmonic point on the ray of r.
    Zeta {
        #[arg(long)]
        r: String,
    },
}

#[derive(Subcommand, Debug)]
enum ToeplitzOp {
    /// Total positivity / nonnegativity of the matrix with the given h.
    Check {
        #[arg(long)]
        h: String,
    },
    /// Reconstruct the matrix from its k rectangle corner minors.
    Reconstruct {
        #[arg(long)]
        r: String,
    },
}

#[derive(Subcommand, Debug)]
enum WalkOp {
    /// Simulate a trajectory; optionally write a per-step CSV.
    Simulate {
        #[arg(long)]
        r: String,
        #[arg(long, default_value_t = 100_000)]
        steps: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        stream: u64,
        /// CSV output path (step, state index, x_1..x_k).
        #[arg(long)]
        out: Option<String>,
    },
    /// Closed-form drift against the Monte-Carlo estimate.
    Drift {
        #[arg(long)]
        r: String,
        #[arg(long, default_value_t = 1_000_000)]
        steps: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

/// Parsed global run configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub tolerance: f64,
    pub symbolic_limit: usize,
}

fn resolve_config(args: &CliArgs) -> Result<RunConfig> {
    let env_tol = std::env::var(TOLERANCE_ENV)
        .ok()
        .and_then(|s| s.parse::<f64>().ok());
    let tolerance = args
        .tolerance
        .or(env_tol)
        .unwrap_or(crate::boundary::DEFAULT_TOL);
    if !(tolerance > 0.0 && tolerance <= 1e-3) {
        return Err(Error::Domain(format!(
            "tolerance must lie in (0, 1e-3], got {tolerance}"
        )));
    }
    let symbolic_limit = args
        .symbolic_limit
        .unwrap_or(crate::transfer::DEFAULT_SYMBOLIC_LIMIT);
    Ok(RunConfig {
        tolerance,
        symbolic_limit,
    })
}

fn parse_partition(text: &str) -> Result<Partition> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "0" || trimmed == "()" {
        return Ok(Partition::empty());
    }
    let parts: std::result::Result<Vec<usize>, _> =
        trimmed.split(',').map(|s| s.trim().parse::<usize>()).collect();
    let parts = parts.map_err(|e| Error::Domain(format!("bad partition {text:?}: {e}")))?;
    Partition::new(parts)
}

/// Accepts integers, p/q fractions and plain decimals, exactly.
fn parse_rational(text: &str) -> Result<Rat> {
    let s = text.trim();
    let bad = || Error::Domain(format!("bad rational {text:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let n: i64 = num.trim().parse().map_err(|_| bad())?;
        let d: i64 = den.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Rat::new(n.into(), d.into()));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let sign = if int.trim_start().starts_with('-') { -1 } else { 1 };
        let i: i64 = if int.trim().is_empty() || int.trim() == "-" {
            0
        } else {
            int.trim().parse().map_err(|_| bad())?
        };
        let digits = frac.trim();
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let f: i64 = digits.parse().map_err(|_| bad())?;
        let scale = 10i64.pow(digits.len() as u32);
        return Ok(Rat::from_integer(i.into())
            + Rat::new((sign * f).into(), scale.into()));
    }
    let n: i64 = s.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(n.into()))
}

fn parse_rational_vec(text: &str, expected: usize) -> Result<Vec<Rat>> {
    let vals: Result<Vec<Rat>> = text.split(',').map(parse_rational).collect();
    let vals = vals?;
    if vals.len() != expected {
        return Err(Error::Domain(format!(
            "expected {expected} comma-separated values, got {}",
            vals.len()
        )));
    }
    Ok(vals)
}

fn parse_f64_vec(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| Error::Domain(format!("bad number {s:?}: {e}")))
        })
        .collect()
}

fn expr_pretty(e: &SymFuncExpr) -> String {
    format!("{e}")
}

fn print_expr(e: &SymFuncExpr, format: Format) {
    match format {
        Format::Json => println!("{}", e.to_json()),
        Format::Pretty => println!("{}", expr_pretty(e)),
    }
}

/// Parses `argv` and runs one command, returning the process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match CliArgs::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            // clap handles --help/--version as "errors" with status 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(args) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(args: CliArgs) -> Result<()> {
    let config = resolve_config(&args)?;
    let format = args.format;
    match args.command {
        Command::Partitions { common, partition } => {
            let p = parse_partition(&partition)?;
            cmd_partitions(common, format, &p)
        }
        Command::Lattice {
            common,
            partition,
            max_size,
        } => cmd_lattice(common, format, partition.as_deref(), max_size),
        Command::Kschur { common, op } => cmd_kschur(common, format, op),
        Command::Phi {
            common,
            symbolic,
            at,
        } => cmd_phi(common, format, symbolic, at.as_deref(), &config),
        Command::Alcove { common, partition } => {
            let p = parse_partition(&partition)?;
            cmd_alcove(common, format, &p)
        }
        Command::Boundary { common, op } => cmd_boundary(common, format, op, &config),
        Command::Toeplitz { op } => cmd_toeplitz(op, &config),
        Command::Walk { common, op } => cmd_walk(common, format, op),
        Command::Selftest => selftest(),
    }
}

fn cmd_partitions(common: Common, format: Format, p: &Partition) -> Result<()> {
    let k = common.k;
    let core = bounded_to_core(p, k)?;
    let omega = omega_conjugate(p, k)?;
    let chains = chain_decomposition(p, k)?;
    match format {
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "k": k,
                "partition": p.parts(),
                "size": p.size(),
                "core": core.parts(),
                "core_is_l_core": is_l_core(&core, k + 1)?,
                "omega": omega.parts(),
                "chains": chains.nonzero_chains(),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Pretty => {
            println!("partition: {p}  (size {})", p.size());
            println!("{}-core:    {core}", k + 1);
            println!("omega_{k}:   {omega}");
            let chains: Vec<String> = chains
                .nonzero_chains()
                .iter()
                .map(|c| {
                    if c.is_empty() {
                        "{}".to_string()
                    } else {
                        format!(
                            "{{{}}}",
                            c.iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(",")
                        )
                    }
                })
                .collect();
            println!("chains:    {}", chains.join(" "));
        }
    }
    Ok(())
}

fn cmd_lattice(
    common: Common,
    format: Format,
    partition: Option<&str>,
    max_size: Option<usize>,
) -> Result<()> {
    let k = common.k;
    if let Some(n) = max_size {
        println!("{}", crate::lattice::export_graph_json(k, n)?);
        return Ok(());
    }
    let p = parse_partition(partition.unwrap_or(""))?;
    let covers = crate::lattice::covers(&p, k)?;
    match format {
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "k": k,
                "partition": p.parts(),
                "irreducible": crate::lattice::is_irreducible(&p, k)?,
                "covers": covers,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Pretty => {
            for c in covers {
                println!("{} -> {}  (box in row {})", c.source, c.target, c.added_row);
            }
        }
    }
    Ok(())
}

fn cmd_kschur(common: Common, format: Format, op: KschurOp) -> Result<()> {
    let k = common.k;
    let one = Rat::one;
    let expr = match op {
        KschurOp::HToKschur { delta } => {
            let d = parse_partition(&delta)?;
            crate::symfunc::h_to_kschur(&SymFuncExpr::single(Basis::H, d, one()), k)?
        }
        KschurOp::ToH { kappa } => {
            let q = parse_partition(&kappa)?;
            crate::symfunc::kschur_to_h(&SymFuncExpr::single(Basis::KSchur(k), q, one()), k)?
        }
        KschurOp::ToSchur { kappa } => {
            crate::symfunc::kschur_to_schur(&parse_partition(&kappa)?, k)?
        }
        KschurOp::Lift { kappa } => crate::symfunc::kschur_lift(&parse_partition(&kappa)?, k)?,
        KschurOp::Pieri { r, kappa } => crate::symfunc::pieri(r, &parse_partition(&kappa)?, k)?,
        KschurOp::Product { kappa, delta } => crate::symfunc::kschur_product(
            &parse_partition(&kappa)?,
            &parse_partition(&delta)?,
            k,
        )?,
    };
    print_expr(&expr, format);
    Ok(())
}

fn cmd_phi(
    common: Common,
    format: Format,
    symbolic: bool,
    at: Option<&str>,
    config: &RunConfig,
) -> Result<()> {
    let k = common.k;
    let phi = crate::transfer::build_phi(k)?;
    if let Some(text) = at {
        let r = parse_rational_vec(text, k)?;
        let spec = crate::transfer::specialize(&phi, &r)?;
        match format {
            Format::Json => {
                let doc = json!({
                    "schema": SCHEMA,
                    "k": k,
                    "basis": spec.basis.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                    "r": r.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    "entries": spec.entries.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "irreducible": crate::transfer::graph_irreducible(&spec),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            }
            Format::Pretty => {
                println!("{}", spec.pretty());
                println!(
                    "irreducible: {}",
                    crate::transfer::graph_irreducible(&spec)
                );
            }
        }
        return Ok(());
    }
    // default to the symbolic view; the matrix itself is cheap at any k,
    // only the characteristic polynomial is gated by the symbolic limit
    let _ = symbolic;
    let xi = if k <= config.symbolic_limit {
        Some(crate::transfer::xi_char_poly_with_limit(k, config.symbolic_limit)?)
    } else {
        None
    };
    match format {
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "k": k,
                "basis": phi.basis.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>(),
                "entries": phi.entries.iter().map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "xi": xi.as_ref().map(|x| x.to_string()),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Pretty => {
            println!("basis: {}", phi.basis.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "));
            println!("{}", phi.pretty());
            match xi {
                Some(xi) => println!("Xi(T) = {xi}"),
                None => println!(
                    "Xi(T) skipped: k > symbolic limit {} (raise with --symbolic-limit)",
                    config.symbolic_limit
                ),
            }
        }
    }
    Ok(())
}

fn cmd_alcove(common: Common, format: Format, p: &Partition) -> Result<()> {
    let k = common.k;
    let word = crate::affine::reduced_word(p, k)?;
    let center = crate::affine::alcove_center(p, k)?;
    let image = if crate::lattice::is_irreducible(p, k)? {
        Some(crate::affine::involution_i(p, k)?)
    } else {
        None
    };
    match format {
        Format::Json => {
            let doc = json!({
                "schema": SCHEMA,
                "k": k,
                "partition": p.parts(),
                "word": word.letters,
                "center": center.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "irreducible": image.is_some(),
                "involution_image": image.as_ref().map(|q| q.parts().to_vec()),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Pretty => {
            let letters: Vec<String> = word.letters.iter().map(|l| l.to_string()).collect();
            println!("word:   [{}]", letters.join(" "));
            let coords: Vec<String> = center.coords.iter().map(|c| c.to_string()).collect();
            println!("center: ({})", coords.join(", "));
            match image {
                Some(q) => println!("I:      {q}"),
                None => println!("I:      - (not irreducible)"),
            }
        }
    }
    Ok(())
}

fn boundary_point_json(point: &crate::boundary::BoundaryPoint) -> serde_json::Value {
    let x: serde_json::Map<String, serde_json::Value> = point
        .basis
        .iter()
        .zip(&point.x)
        .map(|(p, v)| (p.to_string(), json!(v)))
        .collect();
    json!({
        "schema": SCHEMA,
        "k": point.k,
        "r": point.r,
        "t": point.t,
        "h": point.h,
        "nabla": point.nabla,
        "X": x,
    })
}

fn cmd_boundary(
    common: Common,
    format: Format,
    op: BoundaryOp,
    config: &RunConfig,
) -> Result<()> {
    let k = common.k;
    match op {
        BoundaryOp::F { r } => {
            let r = parse_rational_vec(&r, k)?;
            if crate::transfer::criterion_irreducible(&r, k)? {
                let point = crate::boundary::BoundaryPoint::new(k, &r, config.tolerance)?;
                match format {
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string_pretty(&boundary_point_json(&point)).unwrap()
                    ),
                    Format::Pretty => {
                        println!("t = {}", point.t);
                        println!(
                            "h = ({})",
                            point
                                .h
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(", ")
                        );
                    }
                }
            } else {
                let (h, est) = crate::boundary::f_map_with_estimate(k, &r)?;
                let doc = json!({
                    "schema": SCHEMA,
                    "k": k,
                    "h": h,
                    "limit_used": true,
                    "error_estimate": est,
                });
                match format {
                    Format::Json => {
                        println!("{}", serde_json::to_string_pretty(&doc).unwrap())
                    }
                    Format::Pretty => println!(
                        "h = ({})  [continuity limit, error ~ {:.2e}]",
                        h.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(", "),
                        est.unwrap_or(0.0)
                    ),
                }
            }
        }
        BoundaryOp::G { h } => {
            let hv = parse_f64_vec(&h)?;
            if hv.len() != k {
                return Err(Error::Domain(format!("expected {k} values")));
            }
            let r = crate::boundary::g_map(k, &hv)?;
            match format {
                Format::Json => {
                    let doc = json!({"schema": SCHEMA, "k": k, "r": r});
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Pretty => println!(
                    "r = ({})",
                    r.iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            }
        }
        BoundaryOp::Zeta { r } => {
            let rv: Vec<f64> = parse_rational_vec(&r, k)?
                .iter()
                .map(rat_to_f64)
                .collect();
            let point = crate::boundary::BoundaryPoint::normalized(k, &rv, config.tolerance)?;
            let coeffs = crate::boundary::zeta_poly(&point)?;
            match format {
                Format::Json => {
                    let doc = json!({
                        "schema": SCHEMA,
                        "k": k,
                        "r_normalized": point.r,
                        "zeta_coefficients": coeffs,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Pretty => {
                    let terms: Vec<String> = coeffs
                        .iter()
                        .enumerate()
                        .map(|(i, c)| match i {
                            0 => format!("{c}"),
                            1 => format!("{c}*T"),
                            _ => format!("{c}*T^{i}"),
                        })
                        .collect();
                    println!("zeta(T) = {}", terms.join(" + "));
                }
            }
        }
    }
    Ok(())
}

fn cmd_toeplitz(op: ToeplitzOp, config: &RunConfig) -> Result<()> {
    match op {
        ToeplitzOp::Check { h } => {
            let hv = parse_f64_vec(&h)?;
            let m = crate::toeplitz::ToeplitzMatrix::new(hv);
            println!("{}", crate::toeplitz::pretty(&m));
            println!(
                "totally positive:    {}",
                crate::toeplitz::is_totally_positive(&m)
            );
            println!(
                "totally nonnegative: {}",
                crate::toeplitz::is_totally_nonnegative(&m)
            );
        }
        ToeplitzOp::Reconstruct { r } => {
            let rv = parse_f64_vec(&r)?;
            let m = crate::toeplitz::rietsch_reconstruct(&rv, config.tolerance.max(1e-9))?;
            println!("{}", crate::toeplitz::pretty(&m));
        }
    }
    Ok(())
}

fn cmd_walk(common: Common, format: Format, op: WalkOp) -> Result<()> {
    let k = common.k;
    match op {
        WalkOp::Simulate {
            r,
            steps,
            seed,
            stream,
            out,
        } => {
            let rv = parse_f64_vec(&r)?;
            if rv.len() != k {
                return Err(Error::Domain(format!("expected {k} values")));
            }
            let (g, point, traj) = crate::walk::simulate_walk(k, &rv, steps, seed, stream)?;
            if let Some(path) = out {
                let file = File::create(&path)
                    .map_err(|e| Error::Numeric(format!("cannot write {path}: {e}")))?;
                crate::walk::write_trajectory_csv(&g, &traj, file)
                    .map_err(|e| Error::Numeric(format!("write failed: {e}")))?;
            }
            let est = crate::walk::drift_estimate(&traj)?;
            match format {
                Format::Json => {
                    let doc = json!({
                        "schema": SCHEMA,
                        "k": k,
                        "r_normalized": point.r,
                        "steps": steps,
                        "seed": seed,
                        "stream": stream,
                        "final_state": traj.states.last(),
                        "weight": traj.weight,
                        "drift_estimate": est.value,
                        "stderr": est.stderr,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Pretty => {
                    println!("normalized r: {:?}", point.r);
                    println!("final weight: {:?}", traj.weight);
                    println!("x(n)/n:       {:?}", est.value);
                }
            }
        }
        WalkOp::Drift { r, steps, seed } => {
            let rv = parse_f64_vec(&r)?;
            if rv.len() != k {
                return Err(Error::Domain(format!("expected {k} values")));
            }
            let rationals: Result<Vec<Rat>> = rv
                .iter()
                .map(|&v| {
                    num::FromPrimitive::from_f64(v)
                        .ok_or_else(|| Error::Domain(format!("bad value {v}")))
                })
                .collect();
            if !crate::transfer::criterion_irreducible(&rationals?, k)? {
                // the chain may be reducible: no simulation, the drift is
                // still defined as a continuity limit
                let v = crate::walk::drift_by_continuity(k, &rv)?;
                match format {
                    Format::Json => {
                        let doc = json!({
                            "schema": SCHEMA,
                            "k": k,
                            "drift_formula": v,
                            "continuity_limit": true,
                        });
                        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                    }
                    Format::Pretty => {
                        println!("reducible r: drift by continuity limit, no simulation");
                        for (i, value) in v.iter().enumerate() {
                            println!("x_{}         {value:<17.12}", i + 1);
                        }
                    }
                }
                return Ok(());
            }
            let (g, point, traj) = crate::walk::simulate_walk(k, &rv, steps, seed, 0)?;
            let formula = crate::walk::drift_formula(&g, &point)?;
            let est = crate::walk::drift_estimate(&traj)?;
            match format {
                Format::Json => {
                    let doc = json!({
                        "schema": SCHEMA,
                        "k": k,
                        "r_normalized": point.r,
                        "drift_formula": formula,
                        "drift_estimate": est.value,
                        "stderr": est.stderr,
                        "steps": steps,
                        "seed": seed,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Format::Pretty => {
                    println!("coordinate  formula           estimate          stderr");
                    for i in 0..k {
                        println!(
                            "x_{}         {:<17.12} {:<17.12} {:.3e}",
                            i + 1,
                            formula[i],
                            est.value[i],
                            est.stderr[i]
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

const GOLDEN_PHI_K2: &str = include_str!("../tests/golden/phi_k2.txt");
const GOLDEN_PHI_K3: &str = include_str!("../tests/golden/phi_k3.txt");
const GOLDEN_XI_K2: &str = include_str!("../tests/golden/xi_k2.txt");
const GOLDEN_XI_K3: &str = include_str!("../tests/golden/xi_k3.txt");
const GOLDEN_M_K3: &str = include_str!("../tests/golden/m_k3.txt");

/// Compares live output with the frozen golden strings.
pub fn selftest_report() -> Result<Vec<(String, bool)>> {
    let mut results = Vec::new();
    let phi2 = crate::transfer::build_phi(2)?;
    results.push((
        "phi k=2 matrix".to_string(),
        phi2.pretty() == GOLDEN_PHI_K2.trim_end(),
    ));
    let phi3 = crate::transfer::build_phi(3)?;
    results.push((
        "phi k=3 matrix".to_string(),
        phi3.pretty() == GOLDEN_PHI_K3.trim_end(),
    ));
    results.push((
        "xi k=2".to_string(),
        crate::transfer::xi_char_poly(2)?.to_string() == GOLDEN_XI_K2.trim_end(),
    ));
    results.push((
        "xi k=3".to_string(),
        crate::transfer::xi_char_poly(3)?.to_string() == GOLDEN_XI_K3.trim_end(),
    ));
    let pd = crate::transfer::primitive_data(3)?;
    results.push((
        "primitive matrix M k=3".to_string(),
        pd.pretty_m() == GOLDEN_M_K3.trim_end(),
    ));
    // numeric spot check: f(1,3) = (2, 1) for k = 2
    let h = crate::boundary::f_map(2, &[Rat::one(), Rat::from_integer(3.into())])?;
    results.push((
        "boundary f(1,3) = (2,1)".to_string(),
        (h[0] - 2.0).abs() < 1e-10 && (h[1] - 1.0).abs() < 1e-12,
    ));
    // Δ is nonnegative on the sampled orthant slice r1 ≥ r3
    let delta_ok = pd.delta.eval(&[Rat::from_integer(2.into()), Rat::zero(), Rat::one()])
        == Rat::from_integer(8.into());
    results.push(("delta k=3 at (2,0,1)".to_string(), delta_ok));
    Ok(results)
}

fn selftest() -> Result<()> {
    let results = selftest_report()?;
    let mut failed = 0;
    for (name, ok) in &results {
        println!("{} {}", if *ok { "PASS" } else { "FAIL" }, name);
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        return Err(Error::InternalConsistency(format!(
            "{failed} selftest mismatch(es)"
        )));
    }
    Ok(())
}

/// Writes the golden strings from the current implementation (used once
/// to seed tests/golden; kept for regeneration in development).
pub fn write_golden_files(dir: &std::path::Path) -> Result<()> {
    let write = |name: &str, content: String| -> Result<()> {
        let mut f = File::create(dir.join(name))
            .map_err(|e| Error::Numeric(format!("create {name}: {e}")))?;
        writeln!(f, "{content}").map_err(|e| Error::Numeric(format!("write {name}: {e}")))?;
        Ok(())
    };
    write("phi_k2.txt", crate::transfer::build_phi(2)?.pretty())?;
    write("phi_k3.txt", crate::transfer::build_phi(3)?.pretty())?;
    write("xi_k2.txt", crate::transfer::xi_char_poly(2)?.to_string())?;
    write("xi_k3.txt", crate::transfer::xi_char_poly(3)?.to_string())?;
    write("m_k3.txt", crate::transfer::primitive_data(3)?.pretty_m())?;
    Ok(())
}
