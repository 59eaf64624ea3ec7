//! Command line front end for the `elnitsky` crate.
//!
//! Every command prints one JSON document on stdout (`render` also writes an
//! SVG file). Domain errors exit with status 1 and print
//! `{"error":{"code":..,"message":..}}` on stderr; usage errors exit with 2.

pub mod json;
pub mod render;
pub mod verify;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use elnitsky::forced::{forced_tiles, tile_frequency};
use elnitsky::optimal::{catalan, enumerate_max_forced, phi, phi_inverse};
use elnitsky::tiling::{tiling_count, tilings};
use elnitsky::{Error, Limits, PerimeterType, Permutation, Theorem, ValuePair};
use serde_json::{json, Value};

pub use render::{render_svg, RenderOptions};

#[derive(Debug, Parser)]
#[command(
    name = "elnitsky",
    version,
    about = "Rhombic tilings of Elnitsky polygons and their forced perimeter tiles"
)]
pub struct Cli {
    /// Cap on tilings enumerated per permutation.
    #[arg(long, global = true, env = "ELNITSKY_MAX_TILINGS", default_value_t = Limits::DEFAULT_MAX_TILINGS)]
    pub max_tilings: usize,
    /// Cap on reduced words materialized.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_WORDS)]
    pub max_words: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count or list the tilings of X(w), sorted by canonical word.
    Tilings {
        perm: String,
        #[arg(long, conflicts_with = "list")]
        count: bool,
        #[arg(long)]
        list: bool,
        /// Accepted for symmetry; output is always JSON.
        #[arg(long)]
        json: bool,
    },
    /// Forced perimeter tiles and per-tile frequencies, by exhaustive search.
    Forced {
        perm: String,
        #[arg(long = "type", value_enum, default_value_t = TypeArg::All)]
        ty: TypeArg,
        #[arg(long)]
        json: bool,
    },
    /// Proportion of tilings in which one tile is a perimeter tile of a given type.
    Freq {
        perm: String,
        /// Tile label as `x,y`.
        #[arg(long, value_parser = parse_tile)]
        tile: (usize, usize),
        #[arg(long = "type", value_enum)]
        ty: SingleType,
    },
    /// Compare a characterization against brute force over all fully supported w.
    Verify(VerifyArgs),
    /// Permutations of S_2m with m forced right-perimeter tiles.
    Optimal {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        list: bool,
    },
    /// The map from alternating 321-avoiders of S_2m-2 into S_2m, or its inverse.
    Phi {
        perm: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Draw tilings as SVG.
    Render(RenderArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_parser = parse_theorem)]
    pub theorem: Theorem,
    #[arg(long, group = "size")]
    pub n: Option<usize>,
    #[arg(long, group = "size")]
    pub m: Option<usize>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    pub perm: String,
    /// 0-based position in the canonical-word order.
    #[arg(long, conflicts_with = "all")]
    pub tiling: Option<usize>,
    #[arg(long)]
    pub all: bool,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub shade_forced: bool,
    #[arg(long)]
    pub integer_geometry: bool,
    #[arg(long, default_value_t = 40.0, value_parser = parse_scale)]
    pub scale: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    Left,
    Right,
    Top,
    Bottom,
    All,
}

impl TypeArg {
    fn types(self) -> Vec<PerimeterType> {
        match self {
            TypeArg::Left => vec![PerimeterType::Left],
            TypeArg::Right => vec![PerimeterType::Right],
            TypeArg::Top => vec![PerimeterType::Top],
            TypeArg::Bottom => vec![PerimeterType::Bottom],
            TypeArg::All => PerimeterType::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SingleType {
    Left,
    Right,
    Top,
    Bottom,
}

impl From<SingleType> for PerimeterType {
    fn from(t: SingleType) -> Self {
        match t {
            SingleType::Left => PerimeterType::Left,
            SingleType::Right => PerimeterType::Right,
            SingleType::Top => PerimeterType::Top,
            SingleType::Bottom => PerimeterType::Bottom,
        }
    }
}

fn parse_tile(s: &str) -> Result<(usize, usize), String> {
    let (x, y) = s.split_once(',').ok_or("expected x,y")?;
    let x = x.trim().parse().map_err(|e| format!("{e}"))?;
    let y = y.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((x, y))
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Theorem::ALL.iter().map(|t| t.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

fn parse_scale(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err("scale must be a positive number".into()),
    }
}

/// Failures surfaced to the user with exit status 1.
#[derive(Debug)]
pub enum CliError {
    Domain(Error),
    Io(std::io::Error),
    Counterexamples(usize),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.code(),
            CliError::Io(_) => "IoError",
            CliError::Counterexamples(_) => "CounterexampleFound",
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Domain(e) => e.to_string(),
            CliError::Io(e) => e.to_string(),
            CliError::Counterexamples(k) => format!("{k} counterexample(s) found"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// What a successful or partially successful run prints.
pub struct Outcome {
    pub stdout: Value,
    pub error: Option<CliError>,
}

impl From<Value> for Outcome {
    fn from(stdout: Value) -> Self {
        Outcome {
            stdout,
            error: None,
        }
    }
}

fn parse_perm(s: &str) -> Result<Permutation, CliError> {
    Ok(s.parse::<Permutation>()?)
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let limits = Limits::default()
        .with_max_tilings(cli.max_tilings)
        .with_max_words(cli.max_words);
    match &cli.command {
        Command::Tilings { perm, count, .. } => {
            let w = parse_perm(perm)?;
            if *count {
                let k = tiling_count(&w, &limits)?;
                return Ok(json!({ "permutation": json::perm(&w), "tiling_count": k }).into());
            }
            let ts = tilings(&w, &limits)?;
            let list: Vec<Value> = ts
                .iter()
                .enumerate()
                .map(|(i, t)| json::tiling(i, t))
                .collect();
            Ok(
                json!({ "permutation": json::perm(&w), "tiling_count": ts.len(), "tilings": list })
                    .into(),
            )
        }
        Command::Forced { perm, ty, .. } => {
            let w = parse_perm(perm)?;
            let report = forced_tiles(&w, &limits)?;
            Ok(json::forced(&report, &ty.types()).into())
        }
        Command::Freq { perm, tile, ty } => {
            let w = parse_perm(perm)?;
            let n = w.len();
            let (x, y) = *tile;
            if x == y || !(1..=n).contains(&x) || !(1..=n).contains(&y) {
                return Err(
                    Error::DomainViolation("tile must be two distinct values in 1..n").into(),
                );
            }
            let ty = PerimeterType::from(*ty);
            let tile = ValuePair::new(x, y);
            let f = tile_frequency(&w, tile, ty, &limits)?;
            Ok(json!({
                "permutation": json::perm(&w),
                "tile": json::pair(tile),
                "type": ty.name(),
                "frequency": json::frequency(f),
            })
            .into())
        }
        Command::Verify(args) => {
            let size = match (args.theorem.sized_by_m(), args.n, args.m) {
                (false, Some(n), None) => n,
                (true, None, Some(m)) => m,
                (by_m, _, _) => {
                    let want = if by_m { "--m" } else { "--n" };
                    Cli::command()
                        .error(
                            clap::error::ErrorKind::ArgumentConflict,
                            format!("{} takes {want}", args.theorem),
                        )
                        .exit()
                }
            };
            let report = verify::verify_parallel(args.theorem, size, &limits)?;
            let bad = report.counterexamples.len();
            Ok(Outcome {
                stdout: json::verify(&report),
                error: (bad > 0).then_some(CliError::Counterexamples(bad)),
            })
        }
        Command::Optimal { m, list } => {
            let ws = enumerate_max_forced(*m, &limits)?;
            let mut out = json!({
                "m": m,
                "count": ws.len(),
                "catalan": big(catalan(*m as u32 - 1)),
            });
            if *list {
                out["permutations"] = ws.iter().map(json::perm).collect();
            }
            Ok(out.into())
        }
        Command::Phi { perm, inverse } => {
            let w = parse_perm(perm)?;
            let image = if *inverse { phi_inverse(&w)? } else { phi(&w)? };
            Ok(json!({ "input": json::perm(&w), "inverse": inverse, "output": json::perm(&image) }).into())
        }
        Command::Render(args) => render_command(args, &limits),
    }
}

fn big(x: u128) -> Value {
    u64::try_from(x)
        .map(Value::from)
        .unwrap_or_else(|_| Value::from(x.to_string()))
}

fn render_command(args: &RenderArgs, limits: &Limits) -> Result<Outcome, CliError> {
    let w = parse_perm(&args.perm)?;
    let ts = tilings(&w, limits)?;
    let chosen: Vec<_> = if args.all {
        ts.iter().collect()
    } else {
        let i = args.tiling.unwrap_or(0);
        match ts.get(i) {
            Some(t) => vec![t],
            None => return Err(Error::DomainViolation("tiling index out of range").into()),
        }
    };
    let forced: BTreeSet<ValuePair> = if args.shade_forced {
        let report = forced_tiles(&w, limits)?;
        PerimeterType::ALL
            .iter()
            .flat_map(|&ty| report.forced(ty).iter().copied())
            .collect()
    } else {
        BTreeSet::new()
    };
    let opts = RenderOptions {
        equilateral: !args.integer_geometry,
        shade_forced: args.shade_forced,
        scale: args.scale,
    };
    let svg = render_svg(&chosen, &forced, &opts);
    std::fs::write(&args.out, svg)?;
    let indices: Vec<usize> = if args.all {
        (0..ts.len()).collect()
    } else {
        vec![args.tiling.unwrap_or(0)]
    };
    Ok(json!({
        "permutation": json::perm(&w),
        "out": args.out.display().to_string(),
        "tilings": indices,
        "polygons": chosen.iter().map(|t| t.tiles.len()).sum::<usize>(),
        "shaded": json::pairs(&forced.into_iter().collect::<Vec<_>>()),
    })
    .into())
}

/// Parses `args`, runs the command, prints, and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let (stdout, error) = match execute(&cli) {
        Ok(o) => (Some(o.stdout), o.error),
        Err(e) => (None, Some(e)),
    };
    if let Some(v) = stdout {
        let mut out = std::io::stdout().lock();
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string(&v).expect("json values serialize")
        );
    }
    match error {
        None => 0,
        Some(e) => {
            eprintln!("{}", json::error(e.code(), &e.message()));
            1
        }
    }
}
