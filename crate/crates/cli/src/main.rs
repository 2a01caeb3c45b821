//! `tcycles`: cycle counts, spectra and extremal checks for tournaments.

mod commands;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tournament_cycles::cyclic_index::SearchScope;

use crate::output::Format;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "TCYCLES_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "tcycles", version, about = "Directed cycles in tournaments and tournamentons")]
struct Cli {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, env = WORKERS_ENV, default_value_t = 1)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact count, normalized density and trace density of cycles.
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long, short)]
        length: usize,
    },
    /// Eigenvalues of a tournament matrix or a complementary matrix.
    Spectrum {
        #[command(flatten)]
        source: Source,
        /// Complementary matrix in the `n` + rows text format.
        #[arg(long, conflicts_with_all = ["input", "carousel", "transitive", "random"])]
        matrix: Option<PathBuf>,
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
    },
    /// Counts of induced 4-vertex subtournaments by type.
    Profile4 {
        #[command(flatten)]
        source: Source,
    },
    /// Exhaustive cyclic-index search over skew sign matrices.
    VerifyLemma {
        #[arg(long, value_parser = ["4", "8"])]
        order: String,
        #[arg(long, value_enum, default_value_t = ScopeArg::FirstRowFixed)]
        scope: ScopeArg,
        /// Progress file; an existing one is resumed.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Densities of the extremal constructions against known values of c(l).
    Reproduce {
        #[arg(long, short, default_value_t = 512)]
        k: usize,
        #[arg(long, default_value_t = 0.02)]
        tolerance: f64,
    },
    /// The conjectured c(l) for l = 4, 8, ... with its lower bound.
    ConjectureTable {
        #[arg(long, default_value_t = 64)]
        max_length: u32,
    },
    /// Carousel tournamenton on a k x k grid: densities or the grid itself.
    Carousel {
        #[arg(long, short)]
        k: usize,
        /// Largest cycle length reported.
        #[arg(long, default_value_t = 8)]
        max_length: u32,
        /// Print the grid in the step tournamenton text format.
        #[arg(long)]
        grid: bool,
    },
    /// A random tournament, uniform or W-random for a step tournamenton.
    Sample {
        #[arg(long, short)]
        n: usize,
        /// Step tournamenton in the `k` + rows text format.
        #[arg(long)]
        w: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScopeArg {
    FirstRowFixed,
    All,
}

impl From<ScopeArg> for SearchScope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::FirstRowFixed => SearchScope::FirstRowFixed,
            ScopeArg::All => SearchScope::All,
        }
    }
}

/// Where a tournament comes from.
#[derive(Debug, Clone, Args)]
#[group(multiple = false)]
pub struct Source {
    /// Tournament in the `n` + 0/1 rows text format.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Carousel tournament on `n` vertices (odd `n`).
    #[arg(long, value_name = "N")]
    carousel: Option<usize>,
    #[arg(long, value_name = "N")]
    transitive: Option<usize>,
    /// Uniformly random tournament on `n` vertices, from `--seed`.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
}

/// Validated settings of one invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: &'static str,
    pub inputs: Vec<PathBuf>,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub workers: usize,
    pub k: Option<usize>,
    pub length: Option<usize>,
    pub format: Format,
}

impl RunConfig {
    fn validate(&self) -> Result<(), String> {
        if self.workers == 0 {
            return Err("workers must be at least 1".into());
        }
        if let Some(len) = self.length {
            if len < 3 {
                return Err(format!("cycle length must be at least 3, got {len}"));
            }
        }
        for path in &self.inputs {
            if !path.is_file() {
                return Err(format!("input file {} does not exist", path.display()));
            }
        }
        if let Some(out) = &self.output {
            check_parent(out)?;
        }
        Ok(())
    }
}

fn check_parent(path: &Path) -> Result<(), String> {
    match path.parent() {
        Some(dir) if !dir.as_os_str().is_empty() && !dir.is_dir() => {
            Err(format!("directory {} does not exist", dir.display()))
        }
        _ => Ok(()),
    }
}

/// How a command ended.
pub enum Outcome {
    Ok,
    Mismatch(Vec<String>),
}

fn config_for(cli: &Cli) -> RunConfig {
    let (command, default_format, inputs, k, length) = match &cli.command {
        Command::Count { source, length } => ("count", Format::Json, source.paths(), None, Some(*length)),
        Command::Spectrum { source, matrix, .. } => {
            let mut paths = source.paths();
            paths.extend(matrix.clone());
            ("spectrum", Format::Json, paths, None, None)
        }
        Command::Profile4 { source } => ("profile4", Format::Json, source.paths(), None, None),
        Command::VerifyLemma { .. } => ("verify-lemma", Format::Json, Vec::new(), None, None),
        Command::Reproduce { k, .. } => ("reproduce", Format::Json, Vec::new(), Some(*k), None),
        Command::ConjectureTable { .. } => ("conjecture-table", Format::Csv, Vec::new(), None, None),
        Command::Carousel { k, .. } => ("carousel", Format::Json, Vec::new(), Some(*k), None),
        Command::Sample { w, .. } => ("sample", Format::Text, w.iter().cloned().collect(), None, None),
    };
    RunConfig {
        command,
        inputs,
        output: cli.output.clone(),
        seed: cli.seed,
        workers: cli.workers,
        k,
        length,
        format: cli.format.unwrap_or(default_format),
    }
}

impl Source {
    fn paths(&self) -> Vec<PathBuf> {
        self.input.iter().cloned().collect()
    }
}

fn run(cli: Cli) -> Result<Outcome, String> {
    let config = config_for(&cli);
    config.validate()?;
    if let Command::VerifyLemma { checkpoint: Some(path), .. } = &cli.command {
        check_parent(path)?;
    }
    let (report, outcome) = match cli.command {
        Command::Count { source, length } => commands::count(&config, &source, length),
        Command::Spectrum { source, matrix, tolerance } => {
            commands::spectrum(&config, &source, matrix.as_deref(), tolerance)
        }
        Command::Profile4 { source } => commands::profile4(&config, &source),
        Command::VerifyLemma { order, scope, checkpoint } => {
            commands::verify_lemma(&config, order.parse().expect("validated"), scope.into(), checkpoint)
        }
        Command::Reproduce { k, tolerance } => commands::reproduce(k, tolerance),
        Command::ConjectureTable { max_length } => commands::conjecture_table(max_length),
        Command::Carousel { k, max_length, grid } => commands::carousel(k, max_length, grid),
        Command::Sample { n, w } => commands::sample(&config, n, w.as_deref()),
    }
    .map_err(|e| e.to_string())?;
    output::emit(&report, config.format, config.output.as_deref()).map_err(|e| e.to_string())?;
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch(diff)) => {
            for line in diff {
                eprintln!("mismatch: {line}");
            }
            ExitCode::from(2)
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
