//! Machine-readable reports. Every document carries `schema: 1`; all maps
//! are ordered, so serialization is deterministic.

use std::collections::BTreeMap;

use serde::Serialize;

use smartmap_core::contraction::ContractedTopology;
use smartmap_core::mapping::Mapping;
use smartmap_core::oracle::OracleStats;
use smartmap_core::smart::{IterationRecord, SmartOutcome, VulnerabilityReport};
use smartmap_core::survivability::Witness;
use smartmap_core::topology::UNBOUNDED_CONNECTIVITY;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct ContractedJson {
    /// Contracted vertex name to its sorted origin node list.
    pub vertices: BTreeMap<String, Vec<String>>,
    /// Surviving non-loop edges with their original ids and contracted
    /// endpoints.
    pub edges: Vec<ContractedEdgeJson>,
    pub self_loops: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ContractedEdgeJson {
    pub id: String,
    pub u: String,
    pub v: String,
}

pub fn contracted_json(ct: &ContractedTopology) -> ContractedJson {
    let vertices = ct
        .origins()
        .iter()
        .map(|(v, group)| {
            (
                v.to_string(),
                group.iter().map(|n| n.to_string()).collect(),
            )
        })
        .collect();
    let loops = ct.self_loops();
    let edges = ct
        .graph()
        .edges()
        .filter(|(e, _)| !loops.contains(*e))
        .map(|(e, (u, v))| ContractedEdgeJson {
            id: e.to_string(),
            u: u.to_string(),
            v: v.to_string(),
        })
        .collect();
    ContractedJson {
        vertices,
        edges,
        self_loops: loops.iter().map(|e| e.to_string()).collect(),
    }
}

pub fn mapping_json(m: &Mapping) -> BTreeMap<String, Vec<String>> {
    m.iter()
        .map(|(e, lp)| {
            (
                e.to_string(),
                lp.walk().edges().iter().map(|p| p.to_string()).collect(),
            )
        })
        .collect()
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub schema: u32,
    pub command: &'static str,
    pub k: usize,
    pub survivable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_edges: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split_components: Option<Vec<Vec<String>>>,
}

impl CheckReport {
    pub fn survivable(k: usize) -> Self {
        CheckReport {
            schema: SCHEMA_VERSION,
            command: "check",
            k,
            survivable: true,
            witness_edges: None,
            split_components: None,
        }
    }

    pub fn failed(k: usize, witness: &Witness, components: &[std::collections::BTreeSet<smartmap_core::topology::NodeId>]) -> Self {
        CheckReport {
            schema: SCHEMA_VERSION,
            command: "check",
            k,
            survivable: false,
            witness_edges: Some(witness.failure.edges().iter().map(|e| e.to_string()).collect()),
            split_components: Some(
                components
                    .iter()
                    .map(|c| c.iter().map(|n| n.to_string()).collect())
                    .collect(),
            ),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DecideReport {
    pub schema: u32,
    pub command: &'static str,
    pub k: usize,
    pub decision: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mapping: Option<BTreeMap<String, Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remaining: Option<ContractedJson>,
}

#[derive(Debug, Serialize)]
pub struct TraceReport {
    pub schema: u32,
    pub command: &'static str,
    pub k: usize,
    pub vulnerable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<BTreeMap<String, Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unmapped: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub self_loops: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remaining_edge_connectivity: Option<usize>,
    pub required_connectivity: usize,
    pub structurally_impossible: bool,
    pub budget_limited: bool,
}

impl TraceReport {
    pub fn converged(k: usize) -> Self {
        TraceReport {
            schema: SCHEMA_VERSION,
            command: "trace",
            k,
            vulnerable: false,
            vertices: None,
            unmapped: None,
            self_loops: None,
            remaining_edge_connectivity: None,
            required_connectivity: k + 1,
            structurally_impossible: false,
            budget_limited: false,
        }
    }

    pub fn vulnerable(k: usize, report: &VulnerabilityReport) -> Self {
        TraceReport {
            schema: SCHEMA_VERSION,
            command: "trace",
            k,
            vulnerable: true,
            vertices: Some(
                report
                    .vertices
                    .iter()
                    .map(|(v, group)| {
                        (
                            v.to_string(),
                            group.iter().map(|n| n.to_string()).collect(),
                        )
                    })
                    .collect(),
            ),
            unmapped: Some(report.unmapped.iter().map(|e| e.to_string()).collect()),
            self_loops: Some(report.self_loops.iter().map(|e| e.to_string()).collect()),
            remaining_edge_connectivity: (report.remaining_edge_connectivity
                != UNBOUNDED_CONNECTIVITY)
                .then_some(report.remaining_edge_connectivity),
            required_connectivity: report.required_connectivity,
            structurally_impossible: report.structurally_impossible,
            budget_limited: report.budget_limited,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MapRunLog {
    pub schema: u32,
    pub command: &'static str,
    pub k: usize,
    pub strategy: &'static str,
    pub seed: u64,
    pub status: &'static str,
    pub budget_limited: bool,
    pub iterations: Vec<IterationJson>,
    pub mapping: BTreeMap<String, Vec<String>>,
    pub remaining: ContractedJson,
}

#[derive(Debug, Serialize)]
pub struct IterationJson {
    pub subgraph_edges: Vec<String>,
    pub mapping: BTreeMap<String, Vec<String>>,
}

pub fn run_log(outcome: &SmartOutcome, strategy_name: &'static str, seed: u64) -> MapRunLog {
    let status = if outcome.status.converged() {
        "converged"
    } else {
        "stuck"
    };
    MapRunLog {
        schema: SCHEMA_VERSION,
        command: "map",
        k: outcome.k,
        strategy: strategy_name,
        seed,
        status,
        budget_limited: outcome.status.budget_limited(),
        iterations: outcome.iterations.iter().map(iteration_json).collect(),
        mapping: mapping_json(&outcome.mapping),
        remaining: contracted_json(&outcome.remaining),
    }
}

fn iteration_json(record: &IterationRecord) -> IterationJson {
    IterationJson {
        subgraph_edges: record
            .subgraph
            .edges
            .iter()
            .map(|e| e.to_string())
            .collect(),
        mapping: mapping_json(&record.piece_mapping),
    }
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub schema: u32,
    pub command: &'static str,
    pub k: usize,
    pub result: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mapping: Option<BTreeMap<String, Vec<String>>>,
    pub stats: OracleStatsJson,
}

#[derive(Debug, Serialize)]
pub struct OracleStatsJson {
    pub paths_per_edge: BTreeMap<String, usize>,
    pub combinations_visited: u64,
    pub truncated_paths: bool,
    pub truncated_combinations: bool,
    pub refuted_structurally: bool,
}

pub fn oracle_stats_json(stats: &OracleStats) -> OracleStatsJson {
    OracleStatsJson {
        paths_per_edge: stats
            .paths_per_edge
            .iter()
            .map(|(e, n)| (e.to_string(), *n))
            .collect(),
        combinations_visited: stats.combinations_visited,
        truncated_paths: stats.truncated_paths,
        truncated_combinations: stats.truncated_combinations,
        refuted_structurally: stats.refuted_structurally,
    }
}

/// Pretty JSON plus a trailing newline; the single serialization point keeps
/// emitted bytes stable.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
