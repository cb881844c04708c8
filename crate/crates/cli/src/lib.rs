//! Command-line front end for `gkdim-core`.
//!
//! Type A's `--n` is the `n` of `sl(n)`: weights have `n` coordinates and
//! `p` runs over `1..n-1`, so the rank is `n - 1`. For B, C and D `--n` is
//! the rank.

pub mod record;

use std::io::{self, Write};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use gkdim_core::closedform::{
    default_floor, first_reducible_point, first_reducible_point_searched, is_reducible,
    reducibility_set, table_value, wallach_annotation,
};
use gkdim_core::gkdim::{gkdim_general, gkdim_scalar};
use gkdim_core::rootdata::dim_nilradical;
use gkdim_core::scalar::{format_rational, parse_rational, parse_rational_list};
use gkdim_core::sweep::{self, SuiteReport, SweepConfig, ZGrid};
use gkdim_core::{LieAlgebra, LieType, ParabolicChoice, Rational, SpinConvention, Weight};

use record::{components, points, write_records, Format, OutputRecord, Source};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "gkdim",
    version,
    about = "GK dimensions and reducibility of scalar generalized Verma modules"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format for records.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,

    /// Worker threads for `table` and `selfcheck` (0 picks the core count).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    /// Report start time and elapsed time on stderr.
    #[arg(long, global = true)]
    pub timestamps: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spin {
    Uniform,
    Standard,
}

#[derive(Debug, Args)]
pub struct Algebra {
    /// Lie type: A, B, C or D.
    #[arg(long = "type", value_parser = parse_type)]
    pub lie_type: LieType,

    /// `n` of sl(n) for type A, the rank otherwise.
    #[arg(long)]
    pub n: usize,

    /// Type D spin node convention at p = n - 1.
    #[arg(long, value_enum, default_value = "uniform")]
    pub spin: Spin,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// GK dimension of L(λ) for a weight λ + ρ, or of L(z ξ_p).
    Compute {
        #[command(flatten)]
        algebra: Algebra,
        /// λ + ρ as comma-separated rationals.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_weight,
              required_unless_present = "p", conflicts_with_all = ["p", "z"])]
        weight: Option<WeightArg>,
        #[arg(long, requires = "z")]
        p: Option<usize>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat, requires = "p")]
        z: Option<Rational>,
    },
    /// Whether M_I(z ξ_p) is reducible.
    Reducible {
        #[command(flatten)]
        algebra: Algebra,
        #[arg(long)]
        p: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat)]
        z: Rational,
    },
    /// The set of z where M_I(z ξ_p) is reducible.
    Set {
        #[command(flatten)]
        algebra: Algebra,
        #[arg(long)]
        p: usize,
    },
    /// First reducible points, per lattice.
    First {
        #[command(flatten)]
        algebra: Algebra,
        #[arg(long)]
        p: usize,
        /// Scan with the GK-dimension criterion instead of the closed form.
        #[arg(long)]
        search: bool,
        /// Lower end of the scan (default -3n).
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rat, requires = "search")]
        floor: Option<Rational>,
    },
    /// One row per (n, p, component of the reducibility set).
    Table {
        #[arg(long = "type", value_parser = parse_type)]
        lie_type: LieType,
        /// A single `n` or an inclusive range `lo..hi`.
        #[arg(long, value_parser = parse_n_range)]
        n: (usize, usize),
    },
    /// Run every cross-validation suite; exit 1 on any mismatch.
    Selfcheck {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Grid of z values over [-3n, n]: items `step` or `step@offset`.
        #[arg(long, default_value = "1/2,1@1/3")]
        grid: String,
        /// Seed for the random-weight suites.
        #[arg(long, default_value_t = sweep::DEFAULT_SEED)]
        seed: u64,
    },
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// A parsed `--weight` list; wrapped so clap treats it as one value.
#[derive(Debug, Clone)]
pub struct WeightArg(pub Vec<Rational>);

fn parse_weight(s: &str) -> Result<WeightArg, String> {
    parse_rational_list(s)
        .map(WeightArg)
        .map_err(|e| e.to_string())
}

fn parse_type(s: &str) -> Result<LieType, String> {
    s.parse().map_err(|e: gkdim_core::Error| e.to_string())
}

fn parse_n_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("malformed n range `{s}`"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi)?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty n range `{s}`"));
    }
    Ok((lo, hi))
}

#[derive(Debug)]
pub enum CliError {
    Core(gkdim_core::Error),
    Io(io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<gkdim_core::Error> for CliError {
    fn from(e: gkdim_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl Algebra {
    fn algebra(&self) -> gkdim_core::Result<LieAlgebra> {
        LieAlgebra::new(self.lie_type, self.n)
    }

    fn choice(&self, p: usize) -> gkdim_core::Result<ParabolicChoice> {
        let spin = match self.spin {
            Spin::Uniform => SpinConvention::Uniform,
            Spin::Standard => SpinConvention::Standard,
        };
        Ok(ParabolicChoice::new(self.algebra()?, p)?.with_spin(spin))
    }
}

fn base_record(choice: &ParabolicChoice, source: Source) -> OutputRecord {
    OutputRecord {
        lie_type: choice.lie_type().to_string(),
        n: choice.n(),
        p: Some(choice.p()),
        branch: None,
        z: None,
        gkdim: None,
        dim_u: Some(dim_nilradical(choice)),
        reducible: None,
        first_points: None,
        wallach: None,
        set: None,
        source,
    }
}

/// GK dimension, reducibility and annotations of `L(z ξ_p)`. The closed-form
/// table branch is named whenever it covers `z`; the source is `both` when
/// its value agrees with the algorithm.
pub fn point_record(choice: &ParabolicChoice, z: &Rational) -> OutputRecord {
    let g = gkdim_scalar(choice, z);
    let mut r = base_record(choice, Source::Algorithm);
    if let Some((branch, value)) = table_value(choice, z) {
        r.branch = Some(branch.to_string());
        if value == g as i64 {
            r.source = Source::Both;
        }
    }
    r.z = Some(format_rational(z));
    r.gkdim = Some(g);
    r.reducible = Some(g < dim_nilradical(choice));
    r.wallach = wallach_annotation(choice, z);
    r
}

/// Reducibility verdict at `z`; the source is `both` when the closed-form
/// set agrees with the GK-dimension criterion.
pub fn reducible_record(choice: &ParabolicChoice, z: &Rational) -> OutputRecord {
    let verdict = is_reducible(choice, z);
    let agrees = reducibility_set::<Rational>(choice).contains(z) == verdict;
    let mut r = base_record(
        choice,
        if agrees {
            Source::Both
        } else {
            Source::Algorithm
        },
    );
    r.z = Some(format_rational(z));
    r.gkdim = Some(gkdim_scalar(choice, z));
    r.reducible = Some(verdict);
    r
}

pub fn set_record(choice: &ParabolicChoice) -> OutputRecord {
    let set = reducibility_set::<Rational>(choice);
    let mut r = base_record(choice, Source::ClosedForm);
    r.set = Some(components(&set));
    r.first_points = Some(points(&first_reducible_point(choice)));
    r
}

pub fn first_record(choice: &ParabolicChoice, search: Option<&Rational>) -> OutputRecord {
    match search {
        Some(floor) => {
            let mut r = base_record(choice, Source::Algorithm);
            r.first_points = Some(points(&first_reducible_point_searched(choice, floor)));
            r
        }
        None => {
            let mut r = base_record(choice, Source::ClosedForm);
            r.first_points = Some(points(&first_reducible_point(choice)));
            r
        }
    }
}

/// Rows for one parabolic: one per component of its reducibility set, at
/// the component's minimum.
pub fn table_rows(choice: &ParabolicChoice) -> Vec<OutputRecord> {
    let set = reducibility_set::<Rational>(choice);
    let firsts = points(&first_reducible_point(choice));
    let comps = components(&set);
    set.components()
        .iter()
        .map(|c| {
            let g = gkdim_scalar(choice, &c.base);
            let mut r = base_record(choice, Source::Both);
            r.branch = Some(c.lattice().as_str().to_string());
            r.z = Some(format_rational(&c.base));
            r.gkdim = Some(g);
            r.reducible = Some(g < dim_nilradical(choice));
            r.first_points = Some(firsts.clone());
            r.wallach = wallach_annotation(choice, &c.base);
            r.set = Some(comps.clone());
            r
        })
        .collect()
}

/// The full table for `lie_type` over `lo..=hi`, in sorted order.
pub fn table(lie_type: LieType, lo: usize, hi: usize) -> gkdim_core::Result<Vec<OutputRecord>> {
    let mut choices = Vec::new();
    for n in lo..=hi {
        choices.extend(LieAlgebra::new(lie_type, n)?.parabolics());
    }
    Ok(choices.par_iter().flat_map_iter(table_rows).collect())
}

/// Human-readable selfcheck summary.
pub fn write_summary<W: Write>(mut out: W, reports: &[SuiteReport]) -> io::Result<()> {
    for r in reports {
        let verdict = if r.ok() { "PASS" } else { "FAIL" };
        write!(
            out,
            "{verdict} {}: {} passed, {} failed",
            r.name, r.passed, r.failed
        )?;
        if r.allowed > 0 {
            write!(out, ", {} allowed as known misprints", r.allowed)?;
        }
        writeln!(out)?;
        for w in &r.counterexamples {
            writeln!(out, "  counterexample {w}")?;
        }
        for w in &r.allowed_examples {
            writeln!(out, "  allowed {w}")?;
        }
    }
    let failed = reports.iter().filter(|r| !r.ok()).count();
    writeln!(out, "{} suites, {} failed", reports.len(), failed)
}

fn emit<W: Write>(out: W, records: &[OutputRecord], format: Format) -> Result<u8, CliError> {
    write_records(out, records, format)?;
    Ok(EXIT_OK)
}

fn execute<W: Write>(cli: &Cli, out: W) -> Result<u8, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Compute {
            algebra,
            weight,
            p,
            z,
        } => {
            let record = match (weight, p, z) {
                (Some(WeightArg(coords)), _, _) => {
                    let alg = algebra.algebra()?;
                    let w = Weight::for_algebra(&alg, coords.clone())?;
                    OutputRecord {
                        lie_type: alg.lie_type().to_string(),
                        n: alg.n(),
                        p: None,
                        branch: None,
                        z: None,
                        gkdim: Some(gkdim_general(&alg, &w)?),
                        dim_u: None,
                        reducible: None,
                        first_points: None,
                        wallach: None,
                        set: None,
                        source: Source::Algorithm,
                    }
                }
                (None, Some(p), Some(z)) => point_record(&algebra.choice(*p)?, z),
                _ => unreachable!("clap enforces --weight or --p with --z"),
            };
            emit(out, &[record], format)
        }
        Command::Reducible { algebra, p, z } => {
            emit(out, &[reducible_record(&algebra.choice(*p)?, z)], format)
        }
        Command::Set { algebra, p } => emit(out, &[set_record(&algebra.choice(*p)?)], format),
        Command::First {
            algebra,
            p,
            search,
            floor,
        } => {
            let choice = algebra.choice(*p)?;
            let floor = floor.clone().unwrap_or_else(|| default_floor(&choice));
            let record = first_record(&choice, search.then_some(&floor));
            emit(out, &[record], format)
        }
        Command::Table { lie_type, n } => emit(out, &table(*lie_type, n.0, n.1)?, format),
        Command::Selfcheck { max_n, grid, seed } => {
            let mut config = SweepConfig::new(*max_n, ZGrid::parse(grid)?)?;
            config.seed = *seed;
            let reports = sweep::run_all(&config);
            write_summary(out, &reports)?;
            Ok(if reports.iter().all(SuiteReport::ok) {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }
    }
}

/// Runs a parsed command, writing results to `out` and errors to `err`.
/// Returns the process exit code.
pub fn run<W: Write, E: Write>(cli: &Cli, mut out: W, mut err: E) -> u8 {
    let started = Instant::now();
    if cli.timestamps {
        let now = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .unwrap_or_default();
        let _ = writeln!(err, "started_unix_s={}", now.as_secs());
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    // workers only compute; output is assembled on this thread
    let mut buf = Vec::new();
    let result = pool.install(|| execute(cli, &mut buf)).and_then(|code| {
        out.write_all(&buf)
            .and(out.flush())
            .map(|_| code)
            .map_err(CliError::from)
    });
    let code = match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    };
    if cli.timestamps {
        let _ = writeln!(err, "elapsed_ms={}", started.elapsed().as_millis());
    }
    code
}
