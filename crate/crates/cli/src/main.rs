//! `gtpt`: batch front end for spectra, wavefunctions, thermodynamics,
//! table reproduction and oracle validation.

mod commands;

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use gtpt::potential::ParamSets;
use gtpt::report::OutputFormat;
use gtpt::{Convention, PotentialParams, ZSource};

#[derive(Debug, Parser)]
#[command(name = "gtpt", version, about = "Generalized trigonometric Pöschl-Teller spectrum and thermodynamics")]
struct Cli {
    /// TOML file with named parameter sets and an optional [sweep] table.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Parameter set to use from the config file.
    #[arg(long, global = true)]
    params: Option<String>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,

    #[command(flatten)]
    overrides: Overrides,

    #[command(subcommand)]
    command: Command,
}

/// Individual parameter overrides, applied after the config file.
#[derive(Debug, Args)]
struct Overrides {
    #[arg(long, global = true, allow_negative_numbers = true)]
    v1: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    v2: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    v3: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    v4: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    mu: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    hbar: Option<f64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energy eigenvalues for every (n, l) pair requested.
    Spectrum {
        /// Vibrational numbers (comma separated).
        #[arg(short, long, value_delimiter = ',', default_value = "0")]
        n: Vec<u32>,
        /// Orbital numbers (comma separated).
        #[arg(short, long, value_delimiter = ',', default_value = "0")]
        l: Vec<u32>,
        /// States as "Nx" labels (1s, 2p, ...) with n = N; replaces --n/--l.
        #[arg(long, value_delimiter = ',')]
        paper_labels: Option<Vec<String>>,
    },
    /// Radial wavefunction sampled on a uniform interior grid.
    Wavefunction {
        #[arg(short, long, default_value_t = 0)]
        n: u32,
        #[arg(short, long, default_value_t = 0)]
        l: u32,
        #[arg(long, default_value_t = 201)]
        points: usize,
        /// Skip normalization.
        #[arg(long)]
        raw: bool,
    },
    /// Z, F, S, U and C_v over a log-spaced beta grid.
    Thermo {
        #[command(flatten)]
        grid: BetaGrid,
        #[arg(short, long, default_value_t = 0)]
        l: u32,
        /// Highest level in Z; defaults to floor(sigma2/4).
        #[arg(long, conflicts_with = "unbounded")]
        n_max: Option<u32>,
        /// Let n run to infinity.
        #[arg(long)]
        unbounded: bool,
        #[arg(long, default_value_t = Convention::Standard)]
        convention: Convention,
        #[arg(long, default_value_t = ZSource::Closed)]
        z_source: ZSource,
    },
    /// Superstatistical functions over beta x q.
    Superstat {
        #[command(flatten)]
        grid: BetaGrid,
        #[arg(short, long, value_delimiter = ',', default_value = "0,0.1,0.5,1")]
        q: Vec<f64>,
        #[arg(short, long, default_value_t = 0)]
        l: u32,
        #[arg(long, default_value_t = Convention::Standard)]
        convention: Convention,
        /// Add the alternative closed form and its deviation from the re-derived one.
        #[arg(long)]
        paper_eq37: bool,
    },
    /// Reproduce the reference energy tables.
    Tables {
        /// 1 to 5, or "all".
        #[arg(long, default_value = "all")]
        table: String,
        /// Absolute tolerance against the printed values.
        #[arg(long)]
        tolerance: Option<f64>,
        /// Add Numerov columns to every table, not just Table 1.
        #[arg(long)]
        numerov: bool,
    },
    /// Run every oracle check; exits non-zero if a counted check fails.
    Validate {
        /// Emit only the per-section summary.
        #[arg(long)]
        summary: bool,
    },
    /// Run the [sweep] table of the config file.
    Sweep,
}

#[derive(Debug, Clone, Copy, Args)]
struct BetaGrid {
    #[arg(long, default_value_t = 1e-4)]
    beta_min: f64,
    #[arg(long, default_value_t = 10.0)]
    beta_max: f64,
    #[arg(long, default_value_t = 30)]
    points: usize,
}

impl BetaGrid {
    fn values(&self) -> Result<Vec<f64>> {
        if !(self.beta_min > 0.0 && self.beta_max >= self.beta_min && self.points > 0) {
            bail!("beta grid needs 0 < beta-min <= beta-max and points > 0");
        }
        if self.points == 1 {
            return Ok(vec![self.beta_min]);
        }
        let (a, b) = (self.beta_min.ln(), self.beta_max.ln());
        let last = (self.points - 1) as f64;
        Ok((0..self.points).map(|i| (a + (b - a) * i as f64 / last).exp()).collect())
    }
}

/// The Table 2 set.
fn default_params() -> PotentialParams {
    PotentialParams::new(5.0, 3.0, 0.0, 0.0, 0.2, 10.0, 1.0).expect("default parameters are valid")
}

fn resolve_params(cli: &Cli, text: Option<&str>, sweep_params: Option<&str>) -> Result<PotentialParams> {
    let name = cli.params.as_deref().or(sweep_params);
    let mut params = match text {
        Some(text) => {
            let sets = ParamSets::from_toml_str(text)?;
            match name {
                Some(name) => *sets.get(name).with_context(|| format!("no parameter set [{name}] in config"))?,
                None if sets.len() == 1 => *sets.get(sets.names().next().unwrap_or_default()).expect("one set"),
                None if sets.is_empty() => default_params(),
                None => bail!("config has several parameter sets; pick one with --params"),
            }
        }
        None if name.is_some() => bail!("--params needs --config"),
        None => default_params(),
    };
    let o = &cli.overrides;
    for (key, value) in [
        ("v1", o.v1),
        ("v2", o.v2),
        ("v3", o.v3),
        ("v4", o.v4),
        ("alpha", o.alpha),
        ("mu", o.mu),
        ("hbar", o.hbar),
    ] {
        if let Some(value) = value {
            params = params.with(key, value)?;
        }
    }
    Ok(params)
}

fn run(cli: &Cli) -> Result<bool> {
    let text = cli
        .config
        .as_ref()
        .map(|p| std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())))
        .transpose()?;
    let sweep = match cli.command {
        Command::Sweep => {
            let text = text.as_deref().context("sweep needs --config with a [sweep] table")?;
            Some(gtpt::report::SweepSpec::from_toml_str(text)?)
        }
        _ => None,
    };
    let params = resolve_params(cli, text.as_deref(), sweep.as_ref().and_then(|s| s.params.as_deref()))?;

    let (frames, ok) = match &cli.command {
        Command::Spectrum { n, l, paper_labels } => (vec![commands::spectrum(&params, n, l, paper_labels.as_deref())?], true),
        Command::Wavefunction { n, l, points, raw } => (vec![commands::wavefunction(&params, *n, *l, *points, !raw)?], true),
        Command::Thermo {
            grid,
            l,
            n_max,
            unbounded,
            convention,
            z_source,
        } => {
            let range = commands::level_range(&params, *l, *n_max, *unbounded)?;
            (vec![commands::thermo(&params, *l, &grid.values()?, range, *convention, *z_source)?], true)
        }
        Command::Superstat {
            grid,
            q,
            l,
            convention,
            paper_eq37,
        } => (vec![commands::superstat(&params, *l, &grid.values()?, q, *convention, *paper_eq37)?], true),
        Command::Tables { table, tolerance, numerov } => commands::tables(table, *tolerance, *numerov)?,
        Command::Validate { summary } => commands::validate(*summary)?,
        Command::Sweep => (vec![sweep.expect("parsed above").frame(&params)?], true),
    };

    let rendered = gtpt::report::render(&frames, cli.format)?;
    match &cli.out {
        Some(path) => {
            let mut file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            file.write_all(rendered.as_bytes())?;
        }
        None => io::stdout().lock().write_all(rendered.as_bytes())?,
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
