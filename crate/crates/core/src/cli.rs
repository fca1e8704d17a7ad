//! The `dyadic-atlas` command line.
//!
//! Exit codes: `certify` returns 0 for ADJACENT, 1 for NOT_ADJACENT and 2 for
//! UNDECIDED; `cover` returns 1 when no cube within the ratio cap contains the
//! query; `witness` returns 1 when the search is exhausted. Input errors
//! (unreadable or malformed files, bad flags, wrong family size) return 3.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::covering::{estimate_constant, refute, smallest_comparable, EstimateReport};
use crate::criteria::{
    check_adjacency, incompatibility_witness, project, Adjacency, AdjacencyCertificate,
    CriteriaConfig, WitnessSearch,
};
use crate::error::{Error, Result};
use crate::exact::rational::approx;
use crate::exact::{parse_rational, Rational};
use crate::grid::{drop_generations, rerepresent, Cube, GridRep};
use crate::io::{estimate_csv, family_to_json, load_family, to_json, Family};

pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dyadic-atlas",
    version,
    about = "Adjacency certificates and covering oracles for n-adic grid families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct FamilyArg {
    /// Family JSON file.
    #[arg(long)]
    pub family: PathBuf,
}

#[derive(Debug, Args)]
pub struct Depths {
    #[arg(long, default_value_t = 64)]
    pub depth_small: u64,
    /// First generation of the far-pair check.
    #[arg(long = "J", default_value_t = 8)]
    pub j: u64,
    #[arg(long, default_value_t = 64)]
    pub depth_large: u64,
}

impl Depths {
    fn config(&self) -> Result<CriteriaConfig> {
        if self.depth_small == 0 || self.depth_large == 0 || self.j == 0 {
            return Err(Error::InvalidArgument(
                "depths and J must be at least 1".into(),
            ));
        }
        Ok(CriteriaConfig {
            depth_small: self.depth_small,
            j_start: self.j,
            depth_large: self.depth_large,
            ..CriteriaConfig::default()
        })
    }
}

#[derive(Debug, Args)]
pub struct Sink {
    #[arg(long, value_enum)]
    pub output: Option<Output>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify or refute adjacency of a family.
    Certify {
        #[command(flatten)]
        family: FamilyArg,
        #[command(flatten)]
        depths: Depths,
        #[command(flatten)]
        sink: Sink,
    },
    /// Find the smallest grid cube containing an open query cube.
    Cover {
        #[command(flatten)]
        family: FamilyArg,
        /// Lower corner, comma separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        corner: String,
        #[arg(long)]
        side: String,
        #[arg(long, default_value = "1000")]
        ratio_cap: String,
        #[command(flatten)]
        sink: Sink,
    },
    /// Estimate the comparability constant from random cubes.
    Estimate {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, default_value = "-20..20", allow_hyphen_values = true)]
        scales: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "1000")]
        ratio_cap: String,
        #[command(flatten)]
        sink: Sink,
    },
    /// Search for a lattice point close to delta for two bases, or, with
    /// --family, build a cube that the family cannot cover.
    Witness {
        #[arg(long, conflicts_with_all = ["n1", "n2", "delta"])]
        family: Option<PathBuf>,
        #[arg(long)]
        n1: Option<u64>,
        #[arg(long)]
        n2: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        /// Tolerance constant C.
        #[arg(long, default_value = "1/10")]
        tolerance: String,
        #[arg(long, default_value_t = 40)]
        m_max: u64,
        /// Target ratio for the adversarial cube.
        #[arg(long, default_value = "1000")]
        ratio_cap: String,
        #[command(flatten)]
        depths: Depths,
        #[command(flatten)]
        sink: Sink,
    },
    /// Derive a family by dropping generations or shifting origins.
    Construct {
        #[command(flatten)]
        family: FamilyArg,
        /// One-based grid index; all grids when omitted.
        #[arg(long)]
        grid: Option<usize>,
        /// Keep every k-th generation.
        #[arg(long)]
        drop_generations: Option<u32>,
        /// Non-negative integer origin shift, comma separated.
        #[arg(long)]
        shift: Option<String>,
        #[arg(long, default_value_t = 16)]
        depth: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the one-dimensional family seen along a coordinate.
    Project {
        #[command(flatten)]
        family: FamilyArg,
        /// One-based coordinate.
        #[arg(long)]
        coordinate: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `LO..HI` (inclusive).
pub fn parse_scales(text: &str) -> Result<RangeInclusive<i64>> {
    let bad = || Error::InvalidArgument(format!("scales must look like LO..HI, got {text:?}"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn parse_arg_rational(what: &str, text: &str) -> Result<Rational> {
    parse_rational(text).map_err(|e| Error::InvalidArgument(format!("--{what}: {e}")))
}

fn show(x: &Rational) -> String {
    if x.is_integer() {
        x.to_string()
    } else {
        format!("{x} (~{:.6})", approx(x))
    }
}

fn load_full(arg: &FamilyArg) -> Result<Family> {
    let family = load_family(&arg.family)?;
    family.require_full()?;
    Ok(family)
}

fn emit(sink_out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidArgument(format!("cannot write output: {e}"));
    match sink_out {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => stdout.write_all(text.as_bytes()).map_err(io),
    }
}

pub fn certificate_table(cert: &AdjacencyCertificate) -> String {
    let mut s = format!(
        "family: {}\nbases: {:?}\noverall: {:?}\n",
        cert.family.join(", "),
        cert.base_set,
        cert.overall
    );
    s.push_str(
        "cond  key        kind       bound                          basis              exact\n",
    );
    for (c, e) in cert.entries() {
        let v = &e.verdict;
        s.push_str(&format!(
            "{c}     {:<10} {:<10} {:<30} {:<18} {}\n",
            e.key(),
            format!("{:?}", v.kind),
            show(&v.bound),
            format!("{:?}", v.basis),
            v.exact
        ));
    }
    if let Some(c) = &cert.comparability {
        s.push_str(&format!(
            "C1 = {}, C2 = {}, J = {}, cap = {}\n",
            show(&c.c1),
            show(&c.c2),
            c.j,
            show(&c.cap)
        ));
    }
    s
}

pub fn estimate_table(report: &EstimateReport) -> String {
    let mut s = String::from("scale  samples  failures  max_ratio\n");
    for r in &report.scales {
        s.push_str(&format!(
            "{:>5}  {:>7}  {:>8}  {}\n",
            r.scale,
            r.samples,
            r.failures.len(),
            r.max_ratio.as_ref().map(show).unwrap_or_else(|| "-".into())
        ));
    }
    s.push_str(&format!(
        "max ratio {} with {} failures at cap {}\n",
        report
            .max_ratio
            .as_ref()
            .map(show)
            .unwrap_or_else(|| "-".into()),
        report.failure_count,
        show(&report.ratio_cap)
    ));
    s
}

fn rationals(what: &str, text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .map(|x| parse_arg_rational(what, x.trim()))
        .collect()
}

/// Runs one command and returns the exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Certify {
            family,
            depths,
            sink,
        } => {
            let fam = load_full(&family)?;
            let cert = check_adjacency(&fam.grids, &depths.config()?)?;
            let text = match sink.output.unwrap_or(Output::Json) {
                Output::Table => certificate_table(&cert),
                Output::Json => to_json(&cert),
                Output::Csv => {
                    return Err(Error::InvalidArgument(
                        "certify writes json or table".into(),
                    ))
                }
            };
            emit(&sink.out, &text, stdout)?;
            Ok(cert.overall.exit_code())
        }
        Command::Cover {
            family,
            corner,
            side,
            ratio_cap,
            sink,
        } => {
            let fam = load_full(&family)?;
            let q = Cube::open(
                rationals("corner", &corner)?,
                parse_arg_rational("side", &side)?,
            )?;
            let cap = parse_arg_rational("ratio-cap", &ratio_cap)?;
            let found = smallest_comparable(&fam.grids, &q, &cap)?;
            let text = match sink.output.unwrap_or(Output::Json) {
                Output::Json => to_json(&found),
                Output::Table => match &found {
                    Some(r) => format!(
                        "query {q}\ncovered by grid {} ({}) generation {}: {}\nratio {}\n",
                        r.grid_index + 1,
                        fam.grids[r.grid_index].label(),
                        r.generation,
                        r.cube,
                        show(&r.ratio)
                    ),
                    None => format!("query {q}\nno grid cube within ratio {}\n", show(&cap)),
                },
                Output::Csv => {
                    return Err(Error::InvalidArgument("cover writes json or table".into()))
                }
            };
            emit(&sink.out, &text, stdout)?;
            Ok(if found.is_some() { 0 } else { 1 })
        }
        Command::Estimate {
            family,
            scales,
            samples,
            seed,
            ratio_cap,
            sink,
        } => {
            let fam = load_full(&family)?;
            let scales = parse_scales(&scales)?;
            let cap = parse_arg_rational("ratio-cap", &ratio_cap)?;
            let report = estimate_constant(&fam.grids, scales, samples, seed, &cap)?;
            let text = match sink.output.unwrap_or(Output::Csv) {
                Output::Csv => estimate_csv(&report)?,
                Output::Json => to_json(&report),
                Output::Table => estimate_table(&report),
            };
            emit(&sink.out, &text, stdout)?;
            Ok(0)
        }
        Command::Witness {
            family: Some(path),
            ratio_cap,
            depths,
            m_max,
            sink,
            ..
        } => {
            let fam = load_full(&FamilyArg { family: path })?;
            let cert = check_adjacency(&fam.grids, &depths.config()?)?;
            if cert.overall != Adjacency::NotAdjacent {
                let text =
                    to_json(&serde_json::json!({ "overall": cert.overall, "refutation": null }));
                emit(&sink.out, &text, stdout)?;
                return Ok(1);
            }
            let cap = parse_arg_rational("ratio-cap", &ratio_cap)?;
            let r = refute(&fam.grids, &cert, &cap, m_max)?;
            emit(&sink.out, &to_json(&r), stdout)?;
            Ok(0)
        }
        Command::Witness {
            n1,
            n2,
            delta,
            tolerance,
            m_max,
            sink,
            ..
        } => {
            let missing =
                |f: &str| Error::InvalidArgument(format!("--{f} is required without --family"));
            let n1 = n1.ok_or_else(|| missing("n1"))?;
            let n2 = n2.ok_or_else(|| missing("n2"))?;
            let delta = parse_arg_rational("delta", &delta.ok_or_else(|| missing("delta"))?)?;
            let c = parse_arg_rational("tolerance", &tolerance)?;
            let w = incompatibility_witness(n1, n2, &delta, &c, m_max)?;
            emit(&sink.out, &to_json(&w), stdout)?;
            Ok(match w {
                WitnessSearch::Found(_) => 0,
                WitnessSearch::Exhausted { .. } => 1,
            })
        }
        Command::Construct {
            family,
            grid,
            drop_generations: k,
            shift,
            depth,
            out,
        } => {
            let fam = load_family(&family.family)?;
            let targets: Vec<usize> = match grid {
                Some(i) if i >= 1 && i <= fam.grids.len() => vec![i - 1],
                Some(i) => {
                    return Err(Error::GridIndexOutOfRange {
                        index: i,
                        len: fam.grids.len(),
                    })
                }
                None => (0..fam.grids.len()).collect(),
            };
            let shift: Option<Vec<BigInt>> = shift
                .map(|s| {
                    s.split(',')
                        .map(|x| {
                            x.trim().parse::<BigInt>().map_err(|_| {
                                Error::InvalidArgument(format!("--shift: {x:?} is not an integer"))
                            })
                        })
                        .collect()
                })
                .transpose()?;
            if k.is_none() && shift.is_none() {
                return Err(Error::InvalidArgument(
                    "construct needs --drop-generations or --shift".into(),
                ));
            }
            let mut grids = fam.grids.clone();
            for i in targets {
                let mut g: GridRep = grids[i].clone();
                if let Some(k) = k {
                    g = drop_generations(&g, k)?;
                }
                if let Some(shift) = &shift {
                    g = rerepresent(&g, shift, depth)?;
                }
                grids[i] = g;
            }
            let derived = Family {
                dimension: fam.dimension,
                grids,
            };
            emit(&out, &family_to_json(&derived), stdout)?;
            Ok(0)
        }
        Command::Project {
            family,
            coordinate,
            out,
        } => {
            let fam = load_family(&family.family)?;
            if coordinate == 0 || coordinate > fam.dimension {
                return Err(Error::CoordinateOutOfRange {
                    coordinate,
                    dimension: fam.dimension,
                });
            }
            let projected = Family {
                dimension: 1,
                grids: project(&fam.grids, coordinate - 1)?,
            };
            emit(&out, &family_to_json(&projected), stdout)?;
            Ok(0)
        }
    }
}

/// Parses `args`, runs the command and maps errors to exit code 3. Error
/// messages go to `stderr`.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => EXIT_INPUT,
            };
        }
    };
    match run(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}
