//! Command-line interface: load or generate channels, compute entropic
//! quantities, run verification suites, and sweep the (q,s) plane.
//!
//! Exit codes: 0 on success, 1 when an assertion-mode verification finds
//! violations, 2 on usage or input errors.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::map_entropy;
use crate::channel::{
    computational_pinching, haar_random_unitary, random_channel, standard_channel, ChannelKind,
    KrausSet,
};
use crate::entropy::{unified_entropy, DensityOperator, EntropyParams};
use crate::error::{QseError, Result};
use crate::exchange::{entropy_exchange, entropy_exchange_via_purification};
use crate::io::{load_object, save_kraus};
use crate::report::SuiteReport;
use crate::unraveling::{extremal_unraveling, unraveling_entropy};
use crate::verify::{default_grid, fmt_value, run_suite, scan_to_csv, SuiteConfig};

#[derive(Parser, Debug)]
#[command(
    name = "qse",
    version,
    about = "Unified (q,s)-entropies of quantum states and channels"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct ParamArgs {
    /// Entropic order q (> 0)
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    q: f64,
    /// Entropic degree s
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    s: f64,
}

impl ParamArgs {
    fn params(&self) -> Result<EntropyParams> {
        EntropyParams::new(self.q, self.s)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Entropies of a state file (or of a channel's rescaled dynamical matrix)
    Entropy {
        /// State, channel or Choi JSON file
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Map (q,s)-entropy of a channel
    MapEntropy {
        /// Channel JSON file or generator spec
        #[arg(long = "in")]
        input: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Extremal unraveling of a channel at an input state
    Extremal {
        /// Channel JSON file or generator spec
        #[arg(long = "in")]
        input: String,
        /// State JSON file (default: maximally mixed)
        #[arg(long = "in2")]
        state: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
        /// Write the extremal Kraus set to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Entropy exchange of a channel at an input state
    Exchange {
        /// Channel JSON file or generator spec
        #[arg(long = "in")]
        input: String,
        /// State JSON file (default: maximally mixed)
        #[arg(long = "in2")]
        state: Option<PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run a verification suite
    Verify {
        /// theorem1 | theorem2 | theorem4 | theorem5 | additivity | fannes | schatten | all
        suite: String,
        /// Dimension to test (default: 2 and 3)
        #[arg(long)]
        d: Option<usize>,
        /// Instances per suite and dimension
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also scan the Rényi q > 1 line for counterexamples (exploratory)
        #[arg(long = "renyi-scan", default_value_t = false)]
        renyi_scan: bool,
        /// Write the full report to this file
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Sweep the (q,s) grid comparing two channels (bounds vs observed deltas)
    Scan {
        /// First channel: JSON file or generator spec like "depolarizing:d=2,p=0.5"
        #[arg(long = "in")]
        input: String,
        /// Second channel: JSON file or generator spec
        #[arg(long = "in2")]
        input2: String,
        /// Comma-separated q grid (default standard grid)
        #[arg(long = "grid-q", allow_hyphen_values = true)]
        grid_q: Option<String>,
        /// Comma-separated s grid (default standard grid)
        #[arg(long = "grid-s", allow_hyphen_values = true)]
        grid_s: Option<String>,
        /// Output file
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate a channel file
    Gen {
        /// identity | unitary | depolarizing | pinching | amplitude-damping | phase-damping | random
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Depolarizing strength
        #[arg(long)]
        p: Option<f64>,
        /// Amplitude-damping decay probability
        #[arg(long)]
        gamma: Option<f64>,
        /// Phase-damping strength
        #[arg(long)]
        lambda: Option<f64>,
        /// Kraus rank for random channels
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file
        #[arg(long)]
        out: PathBuf,
    },
}

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Entropy { input, params } => cmd_entropy(&input, &params.params()?),
        Command::MapEntropy { input, params } => cmd_map_entropy(&input, &params.params()?),
        Command::Extremal { input, state, params, out } => {
            cmd_extremal(&input, state.as_deref(), &params.params()?, out.as_deref())
        }
        Command::Exchange { input, state, params } => {
            cmd_exchange(&input, state.as_deref(), &params.params()?)
        }
        Command::Verify { suite, d, trials, seed, renyi_scan, out, format } => {
            cmd_verify(&suite, d, trials, seed, renyi_scan, out.as_deref(), format)
        }
        Command::Scan { input, input2, grid_q, grid_s, out, format, seed } => {
            cmd_scan(&input, &input2, grid_q.as_deref(), grid_s.as_deref(), &out, format, seed)
        }
        Command::Gen { kind, d, p, gamma, lambda, rank, seed, out } => {
            cmd_gen(&kind, d, p, gamma, lambda, rank, seed, &out)
        }
    }
}

fn print_entropy_table(rho: &DensityOperator, params: &EntropyParams) {
    let spectrum: Vec<String> = rho.eigenvalues().iter().map(|&l| fmt_value(l)).collect();
    println!("spectrum: [{}]", spectrum.join(", "));
    println!("unified ({params}): {}", fmt_value(unified_entropy(rho, params)));
    let q = params.q();
    if q != 1.0 {
        let tsallis = EntropyParams::tsallis(q).expect("validated q");
        let renyi = EntropyParams::renyi(q).expect("validated q");
        println!("tsallis (q={q}): {}", fmt_value(unified_entropy(rho, &tsallis)));
        println!("renyi (q={q}): {}", fmt_value(unified_entropy(rho, &renyi)));
    }
    println!(
        "von neumann: {}",
        fmt_value(unified_entropy(rho, &EntropyParams::von_neumann()))
    );
}

fn cmd_entropy(input: &Path, params: &EntropyParams) -> Result<i32> {
    let rho = load_object(input)?.into_state()?;
    print_entropy_table(&rho, params);
    Ok(0)
}

fn cmd_map_entropy(input: &str, params: &EntropyParams) -> Result<i32> {
    let kraus = channel_source(input, 0)?;
    let choi = kraus.to_choi()?;
    println!("channel: {} (d={}, choi rank {})", kraus.label(), kraus.dim(), choi.rank());
    println!("map entropy ({params}): {}", fmt_value(map_entropy(&choi, params)));
    print_entropy_table(choi.sigma(), params);
    Ok(0)
}

fn load_state_or_mixed(state: Option<&Path>, d: usize) -> Result<DensityOperator> {
    match state {
        Some(path) => {
            let rho = load_object(path)?.into_state()?;
            if rho.dim() != d {
                return Err(QseError::DimensionMismatch(format!(
                    "state dimension {} does not match channel dimension {d}",
                    rho.dim()
                )));
            }
            Ok(rho)
        }
        None => Ok(DensityOperator::maximally_mixed(d)),
    }
}

fn cmd_extremal(
    input: &str,
    state: Option<&Path>,
    params: &EntropyParams,
    out: Option<&Path>,
) -> Result<i32> {
    let kraus = channel_source(input, 0)?;
    let rho = load_state_or_mixed(state, kraus.dim())?;
    let ex = extremal_unraveling(&kraus, &rho)?;
    let lambdas: Vec<String> =
        ex.lambdas().probabilities().iter().map(|&l| fmt_value(l)).collect();
    println!("channel: {} (d={}, {} operators)", kraus.label(), kraus.dim(), kraus.len());
    println!("effect eigenvalues: [{}]", lambdas.join(", "));
    println!(
        "unraveling entropy ({params}): {}",
        fmt_value(unraveling_entropy(&kraus, &rho, params)?)
    );
    println!("extremal entropy ({params}): {}", fmt_value(ex.entropy(params)));
    println!("input state entropy ({params}): {}", fmt_value(unified_entropy(&rho, params)));
    if let Some(path) = out {
        save_kraus(path, ex.kraus())?;
        println!("extremal unraveling written to {}", path.display());
    }
    Ok(0)
}

fn cmd_exchange(input: &str, state: Option<&Path>, params: &EntropyParams) -> Result<i32> {
    let kraus = channel_source(input, 0)?;
    let rho = load_state_or_mixed(state, kraus.dim())?;
    let via_w = entropy_exchange(&rho, &kraus, params)?;
    let via_purification = entropy_exchange_via_purification(&rho, &kraus, params)?;
    println!("channel: {} (d={})", kraus.label(), kraus.dim());
    println!("entropy exchange ({params}): {}", fmt_value(via_w));
    println!("purification-route residual: {}", fmt_value((via_w - via_purification).abs()));
    Ok(0)
}

fn cmd_verify(
    suite: &str,
    d: Option<usize>,
    trials: usize,
    seed: u64,
    renyi_scan: bool,
    out: Option<&Path>,
    format: OutputFormat,
) -> Result<i32> {
    let config = SuiteConfig {
        dims: d.map(|d| vec![d]).unwrap_or_else(|| vec![2, 3]),
        trials,
        seed,
        renyi_scan,
        grid: default_grid(),
    };
    let reports = run_suite(suite, &config)?;
    let mut violations = 0usize;
    for report in &reports {
        for check in &report.checks {
            let status = if !check.applicable {
                "n/a "
            } else if check.pass {
                "pass"
            } else {
                "FAIL"
            };
            println!(
                "[{}] {} q={} s={}: {} (max violation {}, trials {})",
                report.suite,
                check.theorem,
                check.params.q,
                check.params.s,
                status,
                fmt_value(check.max_violation),
                check.trials
            );
        }
        println!(
            "suite {}: {} ({} checks, {} violations, max violation {})",
            report.suite,
            if report.pass { "pass" } else { "FAIL" },
            report.checks.len(),
            report.violations,
            fmt_value(report.max_violation)
        );
        violations += report.violations;
    }
    if let Some(path) = out {
        write_reports(path, &reports, format)?;
        println!("report written to {}", path.display());
    }
    Ok(if violations == 0 { 0 } else { 1 })
}

fn write_reports(path: &Path, reports: &[SuiteReport], format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => {
            let mut text = serde_json::to_string_pretty(reports)?;
            text.push('\n');
            std::fs::write(path, text)?;
        }
        OutputFormat::Csv => {
            let mut text =
                String::from("suite,theorem,q,s,trials,max_violation,applicable,pass\n");
            for report in reports {
                for check in &report.checks {
                    text.push_str(&format!(
                        "{},{},{},{},{},{},{},{}\n",
                        report.suite,
                        check.theorem,
                        check.params.q,
                        check.params.s,
                        check.trials,
                        fmt_value(check.max_violation),
                        check.applicable,
                        check.pass
                    ));
                }
            }
            std::fs::write(path, text)?;
        }
    }
    Ok(())
}

fn parse_grid(text: &str, what: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map_err(|_| QseError::InvalidParameter(format!("bad {what} grid entry '{tok}'")))
        })
        .collect()
}

fn cmd_scan(
    input: &str,
    input2: &str,
    grid_q: Option<&str>,
    grid_s: Option<&str>,
    out: &Path,
    format: OutputFormat,
    seed: u64,
) -> Result<i32> {
    let k1 = channel_source(input, crate::channel::derive_seed(seed, 0))?;
    let k2 = channel_source(input2, crate::channel::derive_seed(seed, 1))?;
    let qs: Vec<f64> = match grid_q {
        Some(text) => parse_grid(text, "q")?,
        None => crate::verify::DEFAULT_GRID_Q.to_vec(),
    };
    let ss: Vec<f64> = match grid_s {
        Some(text) => parse_grid(text, "s")?,
        None => crate::verify::DEFAULT_GRID_S.to_vec(),
    };
    let mut grid = Vec::new();
    for &q in &qs {
        for &s in &ss {
            grid.push(EntropyParams::new(q, s)?);
        }
    }
    let rows = crate::verify::scan_channels(&k1, &k2, &grid)?;
    match format {
        OutputFormat::Csv => std::fs::write(out, scan_to_csv(&rows))?,
        OutputFormat::Json => {
            let mut text = serde_json::to_string_pretty(&rows)?;
            text.push('\n');
            std::fs::write(out, text)?;
        }
    }
    let unsound = rows.iter().filter(|r| !r.sound).count();
    println!("{} rows written to {} ({} unsound)", rows.len(), out.display(), unsound);
    Ok(if unsound == 0 { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    kind: &str,
    d: usize,
    p: Option<f64>,
    gamma: Option<f64>,
    lambda: Option<f64>,
    rank: Option<usize>,
    seed: u64,
    out: &Path,
) -> Result<i32> {
    let kraus = build_channel(kind, d, p, gamma, lambda, rank, seed)?;
    // validate through the Choi form before writing
    let report = kraus.to_choi()?.validate()?;
    if !report.pass {
        return Err(QseError::Validation("generated channel failed CPTP validation".into()));
    }
    save_kraus(out, &kraus)?;
    println!("channel '{}' written to {}", kraus.label(), out.display());
    Ok(0)
}

fn build_channel(
    kind: &str,
    d: usize,
    p: Option<f64>,
    gamma: Option<f64>,
    lambda: Option<f64>,
    rank: Option<usize>,
    seed: u64,
) -> Result<KrausSet> {
    match kind {
        "identity" => standard_channel(ChannelKind::Identity { d }),
        "unitary" => {
            let u = haar_random_unitary(d, seed)?;
            standard_channel(ChannelKind::Unitary(u))
        }
        "depolarizing" => {
            let p = p.ok_or_else(|| QseError::InvalidParameter("depolarizing needs --p".into()))?;
            standard_channel(ChannelKind::Depolarizing { d, p })
        }
        "pinching" => computational_pinching(d),
        "amplitude-damping" => {
            let gamma = gamma
                .ok_or_else(|| QseError::InvalidParameter("amplitude-damping needs --gamma".into()))?;
            if d != 2 {
                return Err(QseError::InvalidParameter("amplitude-damping is a qubit channel (d=2)".into()));
            }
            standard_channel(ChannelKind::AmplitudeDamping { gamma })
        }
        "phase-damping" => {
            let lambda = lambda
                .ok_or_else(|| QseError::InvalidParameter("phase-damping needs --lambda".into()))?;
            if d != 2 {
                return Err(QseError::InvalidParameter("phase-damping is a qubit channel (d=2)".into()));
            }
            standard_channel(ChannelKind::PhaseDamping { lambda })
        }
        "random" => {
            let rank = rank.unwrap_or(d * d);
            random_channel(d, rank, seed)
        }
        other => Err(QseError::InvalidParameter(format!(
            "unknown channel kind '{other}'; expected identity | unitary | depolarizing | pinching | amplitude-damping | phase-damping | random"
        ))),
    }
}

/// A channel source: either a JSON file path or a generator spec of the form
/// `kind:key=value,...`, e.g. `depolarizing:d=2,p=0.5` or `random:d=2,rank=3,seed=7`.
/// Specs without an explicit seed use `default_seed`.
pub fn channel_source(source: &str, default_seed: u64) -> Result<KrausSet> {
    let path = Path::new(source);
    if path.exists() {
        return load_object(path)?.into_kraus();
    }
    let (kind, rest) = match source.split_once(':') {
        Some((k, r)) => (k, r),
        None => (source, ""),
    };
    let mut d = 2usize;
    let mut p = None;
    let mut gamma = None;
    let mut lambda = None;
    let mut rank = None;
    let mut seed = default_seed;
    for pair in rest.split(',').filter(|s| !s.is_empty()) {
        let (key, value) = pair.split_once('=').ok_or_else(|| {
            QseError::InvalidParameter(format!("bad generator spec entry '{pair}'"))
        })?;
        let parse_err =
            || QseError::InvalidParameter(format!("bad value '{value}' for '{key}'"));
        match key.trim() {
            "d" => d = value.parse().map_err(|_| parse_err())?,
            "p" => p = Some(value.parse().map_err(|_| parse_err())?),
            "gamma" => gamma = Some(value.parse().map_err(|_| parse_err())?),
            "lambda" => lambda = Some(value.parse().map_err(|_| parse_err())?),
            "rank" => rank = Some(value.parse().map_err(|_| parse_err())?),
            "seed" => seed = value.parse().map_err(|_| parse_err())?,
            other => {
                return Err(QseError::InvalidParameter(format!(
                    "unknown generator spec key '{other}'"
                )))
            }
        }
    }
    build_channel(kind.trim(), d, p, gamma, lambda, rank, seed)
}
