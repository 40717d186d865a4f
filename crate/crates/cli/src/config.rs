//! Command-line grammar and the resolved run configuration.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use smartmap_core::oracle::OracleCaps;
use smartmap_core::smart::{Strategy, StrategyKind};
use thiserror::Error;

/// Environment override for the largest accepted k (default 3: failure
/// enumeration is combinatorial in k).
pub const K_CEILING_ENV: &str = "SMARTMAP_K_CEILING";
pub const DEFAULT_K_CEILING: usize = 3;

#[derive(Debug, Parser)]
#[command(
    name = "smartmap",
    version,
    about = "Survivable lightpath mapping of logical over physical topologies"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Search for a k-survivable mapping; writes a mapping file and a run log.
    Map(CommonArgs),
    /// Verify a mapping file: exit 0 when the pair is k-survivable.
    Check(CommonArgs),
    /// Decide existence: 0 proven, 1 refuted, 2 unknown.
    Decide(CommonArgs),
    /// Report the vulnerable area of an instance the mapper cannot finish.
    Trace(CommonArgs),
    /// Exhaustive ground-truth existence check: 0 found, 1 not-exists, 2 unknown.
    Oracle(CommonArgs),
}

impl Command {
    pub fn args(&self) -> &CommonArgs {
        match self {
            Command::Map(a)
            | Command::Check(a)
            | Command::Decide(a)
            | Command::Trace(a)
            | Command::Oracle(a) => a,
        }
    }

    pub fn kind(&self) -> CommandKind {
        match self {
            Command::Map(_) => CommandKind::Map,
            Command::Check(_) => CommandKind::Check,
            Command::Decide(_) => CommandKind::Decide,
            Command::Trace(_) => CommandKind::Trace,
            Command::Oracle(_) => CommandKind::Oracle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Map,
    Check,
    Decide,
    Trace,
    Oracle,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Map => "map",
            CommandKind::Check => "check",
            CommandKind::Decide => "decide",
            CommandKind::Trace => "trace",
            CommandKind::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Topology file.
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,

    /// Simultaneous physical failures to survive.
    #[arg(long, default_value_t = 1)]
    pub k: usize,

    /// Mapping file to verify (check only).
    #[arg(long, value_name = "FILE")]
    pub mapping: Option<PathBuf>,

    /// Output file (mapping for map/decide/oracle, report otherwise).
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Candidate-order seed; 0 keeps the canonical order.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Candidate subgraph family; defaults to cycles for k=1, k2 for k=2,
    /// exhaustive beyond.
    #[arg(long, value_enum)]
    pub strategy: Option<StrategyArg>,

    /// Oracle cap: candidate simple paths kept per edge.
    #[arg(long = "max-paths", value_name = "N")]
    pub max_paths: Option<usize>,

    /// Oracle cap: assignment steps before giving up.
    #[arg(long = "max-combos", value_name = "N")]
    pub max_combos: Option<u64>,

    /// Report style for check/decide/oracle; trace always emits JSON.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Skip the per-iteration and final re-verification of produced mappings.
    #[arg(long = "no-verify")]
    pub no_verify: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Cycles,
    K2,
    Exhaustive,
}

impl StrategyArg {
    fn kind(self) -> StrategyKind {
        match self {
            StrategyArg::Cycles => StrategyKind::Cycles,
            StrategyArg::K2 => StrategyKind::ThreeEdgeConnected,
            StrategyArg::Exhaustive => StrategyKind::Exhaustive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("k must be between 1 and {ceiling} (set {K_CEILING_ENV} to raise the ceiling), got {k}")]
    KOutOfRange { k: usize, ceiling: usize },
    #[error("{K_CEILING_ENV} must be a positive integer, got `{0}`")]
    BadCeiling(String),
    #[error("`check` needs --mapping <FILE>")]
    MissingMapping,
    #[error("--max-paths and --max-combos must be at least 1")]
    ZeroCap,
}

/// Everything one invocation needs, resolved and validated.
#[derive(Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub input: PathBuf,
    pub mapping: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub k: usize,
    pub strategy: Strategy,
    pub caps: OracleCaps,
    pub format: FormatArg,
    pub verify: bool,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, ConfigError> {
        let kind = cli.command.kind();
        let args = cli.command.args();
        let ceiling = k_ceiling()?;
        if args.k == 0 || args.k > ceiling {
            return Err(ConfigError::KOutOfRange {
                k: args.k,
                ceiling,
            });
        }
        if kind == CommandKind::Check && args.mapping.is_none() {
            return Err(ConfigError::MissingMapping);
        }
        if args.max_paths == Some(0) || args.max_combos == Some(0) {
            return Err(ConfigError::ZeroCap);
        }
        let strategy = match args.strategy {
            Some(arg) => Strategy::new(arg.kind(), args.seed),
            None => Strategy::for_k(args.k, args.seed),
        };
        let mut caps = OracleCaps::default();
        if let Some(p) = args.max_paths {
            caps.max_paths_per_edge = p;
        }
        if let Some(c) = args.max_combos {
            caps.max_combinations = c;
        }
        Ok(RunConfig {
            command: kind,
            input: args.input.clone(),
            mapping: args.mapping.clone(),
            out: args.out.clone(),
            k: args.k,
            strategy,
            caps,
            format: args.format,
            verify: !args.no_verify,
        })
    }
}

fn k_ceiling() -> Result<usize, ConfigError> {
    match std::env::var(K_CEILING_ENV) {
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|c| *c >= 1)
            .ok_or(ConfigError::BadCeiling(raw)),
        Err(_) => Ok(DEFAULT_K_CEILING),
    }
}
