//! Subcommand orchestration. `run_command` computes everything into an
//! [`Outputs`] value (exit code, stdout text, files to write) so tests can
//! exercise the full pipeline without spawning processes; `execute` performs
//! the IO.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use smartmap_core::oracle::{oracle_exists, OracleStatus};
use smartmap_core::smart::{self, Decision};
use smartmap_core::survivability::{components_after_failure, is_k_survivable};
use smartmap_core::topology::Topology;
use thiserror::Error;

use crate::config::{CommandKind, FormatArg, RunConfig};
use crate::format::{emit_mapping, parse_mapping, parse_topology, FormatError};
use crate::report::{
    self, contracted_json, mapping_json, oracle_stats_json, to_json_string, CheckReport,
    DecideReport, OracleReport, TraceReport, SCHEMA_VERSION,
};

/// The subcommand answered positively (mapped, survivable, proven, found;
/// for trace: nothing vulnerable).
pub const EXIT_POSITIVE: i32 = 0;
/// The subcommand answered negatively (stuck, not survivable, refuted,
/// not-exists; for trace: a vulnerability report was produced).
pub const EXIT_NEGATIVE: i32 = 1;
/// Truncated search; no definitive answer.
pub const EXIT_UNKNOWN: i32 = 2;
/// Unreadable, malformed or invalid input.
pub const EXIT_INPUT_ERROR: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    BadInput {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
    #[error(transparent)]
    Core(#[from] smartmap_core::Error),
}

/// Everything one invocation produces.
#[derive(Debug)]
pub struct Outputs {
    pub exit: i32,
    pub stdout: String,
    pub files: Vec<(PathBuf, String)>,
}

impl Outputs {
    fn new(exit: i32) -> Self {
        Outputs {
            exit,
            stdout: String::new(),
            files: Vec::new(),
        }
    }
}

/// Run a configured subcommand without touching the filesystem for output.
pub fn run_command(cfg: &RunConfig) -> Result<Outputs, CliError> {
    let text = read(&cfg.input)?;
    let (physical, logical) = parse_topology(&text).map_err(|source| CliError::BadInput {
        path: cfg.input.clone(),
        source,
    })?;
    match cfg.command {
        CommandKind::Map => run_map(cfg, &physical, &logical),
        CommandKind::Check => run_check(cfg, &physical, &logical),
        CommandKind::Decide => run_decide(cfg, &physical, &logical),
        CommandKind::Trace => run_trace(cfg, &physical, &logical),
        CommandKind::Oracle => run_oracle(cfg, &physical, &logical),
    }
}

/// Run and perform the IO; errors print to stderr and yield exit 3.
pub fn execute(cfg: &RunConfig) -> i32 {
    match run_command(cfg) {
        Ok(outputs) => {
            for (path, contents) in &outputs.files {
                if let Err(source) = std::fs::write(path, contents) {
                    eprintln!("error: {path}: {source}", path = path.display());
                    return EXIT_INPUT_ERROR;
                }
            }
            print!("{}", outputs.stdout);
            outputs.exit
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_INPUT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn run_map(cfg: &RunConfig, physical: &Topology, logical: &Topology) -> Result<Outputs, CliError> {
    let outcome = smart::run(physical, logical, cfg.k, &cfg.strategy, cfg.verify)?;
    let mapping_text = emit_mapping(&outcome.mapping);
    let log = report::run_log(&outcome, cfg.strategy.kind.name(), cfg.strategy.seed);
    let exit = if outcome.status.converged() {
        EXIT_POSITIVE
    } else {
        EXIT_NEGATIVE
    };
    let mut out = Outputs::new(exit);
    match (&cfg.out, cfg.format) {
        (Some(path), _) => {
            out.files.push((path.clone(), mapping_text));
            out.files
                .push((runlog_path(path), to_json_string(&log)));
            let _ = writeln!(
                out.stdout,
                "{}: {} of {} links mapped",
                log.status,
                outcome.mapping.len(),
                logical.edge_count()
            );
        }
        (None, FormatArg::Json) => out.stdout = to_json_string(&log),
        (None, FormatArg::Text) => out.stdout = mapping_text,
    }
    Ok(out)
}

fn runlog_path(mapping_path: &Path) -> PathBuf {
    let mut name = mapping_path.file_name().unwrap_or_default().to_os_string();
    name.push(".runlog.json");
    mapping_path.with_file_name(name)
}

fn run_check(cfg: &RunConfig, physical: &Topology, logical: &Topology) -> Result<Outputs, CliError> {
    let mapping_path = cfg.mapping.as_ref().expect("config guarantees --mapping");
    let text = read(mapping_path)?;
    let mapping = parse_mapping(&text, physical, logical).map_err(|source| CliError::BadInput {
        path: mapping_path.clone(),
        source,
    })?;
    let verdict = is_k_survivable(logical, &mapping, cfg.k, physical)?;
    let (report, exit, text_line) = match verdict.witness() {
        None => (
            CheckReport::survivable(cfg.k),
            EXIT_POSITIVE,
            format!("survivable: the mapping withstands any {} failure(s)\n", cfg.k),
        ),
        Some(w) => {
            let components = components_after_failure(logical, &mapping, w.failure.edges())?;
            let mut line = format!(
                "not survivable: failing {{{}}} disconnects {} from {}\n",
                join(w.failure.edges().iter()),
                w.separated.0,
                w.separated.1
            );
            line.push_str(&format!("components: {}\n", join_sets(&components)));
            (
                CheckReport::failed(cfg.k, w, &components),
                EXIT_NEGATIVE,
                line,
            )
        }
    };
    let rendered = match cfg.format {
        FormatArg::Json => to_json_string(&report),
        FormatArg::Text => text_line,
    };
    let mut out = Outputs::new(exit);
    out.stdout = rendered.clone();
    if let Some(path) = &cfg.out {
        out.files.push((path.clone(), rendered));
    }
    Ok(out)
}

fn run_decide(cfg: &RunConfig, physical: &Topology, logical: &Topology) -> Result<Outputs, CliError> {
    let existence = smart::decide_existence(
        physical,
        logical,
        cfg.k,
        &cfg.strategy,
        &cfg.caps,
        cfg.verify,
    )?;
    let (exit, report, text_line) = match &existence.decision {
        Decision::Proven(mapping) => (
            EXIT_POSITIVE,
            DecideReport {
                schema: SCHEMA_VERSION,
                command: "decide",
                k: cfg.k,
                decision: "proven",
                reason: None,
                mapping: Some(mapping_json(mapping)),
                remaining: None,
            },
            format!("proven: a {}-survivable mapping exists\n", cfg.k),
        ),
        Decision::Refuted(remaining) => (
            EXIT_NEGATIVE,
            DecideReport {
                schema: SCHEMA_VERSION,
                command: "decide",
                k: cfg.k,
                decision: "refuted",
                reason: None,
                mapping: None,
                remaining: Some(contracted_json(remaining)),
            },
            format!(
                "refuted: no {}-survivable mapping exists; unmappable remainder {{{}}}\n",
                cfg.k,
                join(remaining.graph().edge_ids())
            ),
        ),
        Decision::Unknown(reason) => (
            EXIT_UNKNOWN,
            DecideReport {
                schema: SCHEMA_VERSION,
                command: "decide",
                k: cfg.k,
                decision: "unknown",
                reason: Some(reason.clone()),
                mapping: None,
                remaining: None,
            },
            format!("unknown: {reason}\n"),
        ),
    };
    let mut out = Outputs::new(exit);
    out.stdout = match cfg.format {
        FormatArg::Json => to_json_string(&report),
        FormatArg::Text => text_line,
    };
    if let Decision::Proven(mapping) = &existence.decision {
        if let Some(path) = &cfg.out {
            out.files.push((path.clone(), emit_mapping(mapping)));
        }
    }
    Ok(out)
}

fn run_trace(cfg: &RunConfig, physical: &Topology, logical: &Topology) -> Result<Outputs, CliError> {
    let outcome = smart::run(physical, logical, cfg.k, &cfg.strategy, cfg.verify)?;
    let (exit, report) = if outcome.status.converged() {
        (EXIT_POSITIVE, TraceReport::converged(cfg.k))
    } else {
        let vulnerability = smart::trace_vulnerability(&outcome)?;
        (EXIT_NEGATIVE, TraceReport::vulnerable(cfg.k, &vulnerability))
    };
    // The vulnerability report is machine-oriented: always JSON.
    let rendered = to_json_string(&report);
    let mut out = Outputs::new(exit);
    out.stdout = rendered.clone();
    if let Some(path) = &cfg.out {
        out.files.push((path.clone(), rendered));
    }
    Ok(out)
}

fn run_oracle(cfg: &RunConfig, physical: &Topology, logical: &Topology) -> Result<Outputs, CliError> {
    let result = oracle_exists(physical, logical, logical, cfg.k, &cfg.caps)?;
    let (exit, mapping) = match &result.status {
        OracleStatus::Found(m) => (EXIT_POSITIVE, Some(m.clone())),
        OracleStatus::NotExists => (EXIT_NEGATIVE, None),
        OracleStatus::Unknown => (EXIT_UNKNOWN, None),
    };
    let report = OracleReport {
        schema: SCHEMA_VERSION,
        command: "oracle",
        k: cfg.k,
        result: result.status.name(),
        mapping: mapping.as_ref().map(mapping_json),
        stats: oracle_stats_json(&result.stats),
    };
    let mut out = Outputs::new(exit);
    out.stdout = match cfg.format {
        FormatArg::Json => to_json_string(&report),
        FormatArg::Text => format!("{}\n", result.describe()),
    };
    if let (Some(m), Some(path)) = (&mapping, &cfg.out) {
        out.files.push((path.clone(), emit_mapping(m)));
    }
    Ok(out)
}

fn join<'a, I, T>(items: I) -> String
where
    I: IntoIterator<Item = &'a T>,
    T: std::fmt::Display + 'a,
{
    let mut s = String::new();
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "{item}");
    }
    s
}

fn join_sets(sets: &[std::collections::BTreeSet<smartmap_core::topology::NodeId>]) -> String {
    let mut s = String::new();
    for (i, set) in sets.iter().enumerate() {
        if i > 0 {
            s.push_str(" | ");
        }
        let _ = write!(s, "{{{}}}", join(set.iter()));
    }
    s
}
