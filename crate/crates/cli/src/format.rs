//! Line-oriented topology and mapping file formats.
//!
//! Topology files declare nodes and the two edge layers:
//!
//! ```text
//! # comment
//! node <label>
//! pedge <id> <u> <v>
//! ledge <id> <u> <v>
//! ```
//!
//! Node labels must be declared before their first use. The physical
//! topology spans every declared node; the logical topology spans the nodes
//! touched by `ledge` lines. Both layers must be simple and connected, and
//! at least one logical edge is required.
//!
//! Mapping files carry one lightpath per line, in walk order:
//!
//! ```text
//! map <ledge-id> <pedge-id> <pedge-id> ...
//! ```
//!
//! Emission is canonical (sorted ids, normalized endpoint order), so
//! canonical files round-trip byte for byte.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use smartmap_core::mapping::{make_lightpath, Mapping};
use smartmap_core::topology::{validate_layer_pair, EdgeId, Layer, NodeId, Topology};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Core(#[from] smartmap_core::Error),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parse a topology file into its physical and logical layers.
pub fn parse_topology(text: &str) -> Result<(Topology, Topology), FormatError> {
    let mut nodes: BTreeSet<String> = BTreeSet::new();
    let mut pedges: Vec<(EdgeId, NodeId, NodeId)> = Vec::new();
    let mut ledges: Vec<(EdgeId, NodeId, NodeId)> = Vec::new();
    let mut seen_pairs: BTreeMap<(&'static str, String, String), ()> = BTreeMap::new();
    let mut seen_ids: BTreeSet<(&'static str, String)> = BTreeSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens[0] {
            "node" => {
                if tokens.len() != 2 {
                    return Err(parse_err(line, "expected `node <label>`"));
                }
                if !nodes.insert(tokens[1].to_string()) {
                    return Err(parse_err(line, format!("node `{}` declared twice", tokens[1])));
                }
            }
            kind @ ("pedge" | "ledge") => {
                if tokens.len() != 4 {
                    return Err(parse_err(line, format!("expected `{kind} <id> <u> <v>`")));
                }
                let (id, u, v) = (tokens[1], tokens[2], tokens[3]);
                for end in [u, v] {
                    if !nodes.contains(end) {
                        return Err(parse_err(
                            line,
                            format!("dangling endpoint: node `{end}` not declared"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop `{id}` not allowed")));
                }
                let layer_tag = if kind == "pedge" { "p" } else { "l" };
                if !seen_ids.insert((layer_tag, id.to_string())) {
                    return Err(parse_err(line, format!("duplicate {kind} id `{id}`")));
                }
                let pair_key = if u <= v {
                    (layer_tag, u.to_string(), v.to_string())
                } else {
                    (layer_tag, v.to_string(), u.to_string())
                };
                if seen_pairs.insert(pair_key, ()).is_some() {
                    return Err(parse_err(
                        line,
                        format!("parallel {kind} between `{u}` and `{v}`"),
                    ));
                }
                let entry = (EdgeId::new(id), NodeId::new(u), NodeId::new(v));
                if kind == "pedge" {
                    pedges.push(entry);
                } else {
                    ledges.push(entry);
                }
            }
            other => {
                return Err(parse_err(line, format!("unknown directive `{other}`")));
            }
        }
    }
    if ledges.is_empty() {
        return Err(parse_err(
            text.lines().count().max(1),
            "a topology file needs at least one ledge",
        ));
    }
    let physical = Topology::new(Layer::Physical, nodes.iter().map(NodeId::new), pedges)?;
    let logical_nodes: BTreeSet<NodeId> = ledges
        .iter()
        .flat_map(|(_, u, v)| [u.clone(), v.clone()])
        .collect();
    let logical = Topology::new(Layer::Logical, logical_nodes, ledges)?;
    validate_layer_pair(&physical, &logical)?;
    Ok((physical, logical))
}

/// Canonical topology file bytes: sorted nodes, then physical edges, then
/// logical edges, each sorted by id with normalized endpoints.
pub fn emit_topology(physical: &Topology, logical: &Topology) -> String {
    let mut out = String::new();
    for n in physical.nodes() {
        let _ = writeln!(out, "node {n}");
    }
    for (e, (u, v)) in physical.edges() {
        let _ = writeln!(out, "pedge {e} {u} {v}");
    }
    for (e, (u, v)) in logical.edges() {
        let _ = writeln!(out, "ledge {e} {u} {v}");
    }
    out
}

/// Parse a mapping file against its governing topologies.
pub fn parse_mapping(
    text: &str,
    physical: &Topology,
    logical: &Topology,
) -> Result<Mapping, FormatError> {
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut lightpaths = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens[0] != "map" {
            return Err(parse_err(line, format!("unknown directive `{}`", tokens[0])));
        }
        if tokens.len() < 3 {
            return Err(parse_err(
                line,
                "expected `map <ledge-id> <pedge-id> ...` with a nonempty walk",
            ));
        }
        let ledge = tokens[1];
        if !seen.insert(ledge.to_string()) {
            return Err(parse_err(line, format!("logical edge `{ledge}` mapped twice")));
        }
        let walk: Vec<EdgeId> = tokens[2..].iter().map(|t| EdgeId::new(*t)).collect();
        let lp = make_lightpath(logical, physical, &EdgeId::new(ledge), walk)
            .map_err(|e| parse_err(line, e.to_string()))?;
        lightpaths.push(lp);
    }
    Ok(Mapping::from_lightpaths(lightpaths)?)
}

/// Canonical mapping file bytes: one `map` line per logical edge in id
/// order, walk edges in traversal order.
pub fn emit_mapping(m: &Mapping) -> String {
    let mut out = String::new();
    for (e, lp) in m.iter() {
        let _ = write!(out, "map {e}");
        for pe in lp.walk().edges() {
            let _ = write!(out, " {pe}");
        }
        out.push('\n');
    }
    out
}
