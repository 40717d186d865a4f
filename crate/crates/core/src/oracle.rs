//! Exhaustive ground-truth solver: decides the existence of a k-survivable
//! mapping for a small logical or contracted-multigraph target by complete
//! backtracking over simple-lightpath assignments.
//!
//! `NotExists` is reported only when the search was complete: no per-edge
//! path list was truncated and the combination budget was not exhausted.
//! A truncated search that found nothing answers `Unknown`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mapping::{Lightpath, Mapping};
use crate::survivability::{assigned_cut_exists, is_k_survivable};
use crate::topology::{EdgeId, Path, Topology, UNBOUNDED_CONNECTIVITY};

/// Search limits. The defaults keep complete searches tractable on instances
/// of a handful of nodes and around a dozen physical edges.
#[derive(Debug, Clone)]
pub struct OracleCaps {
    pub max_paths_per_edge: usize,
    pub max_combinations: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_paths_per_edge: 64,
            max_combinations: 10_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub enum OracleStatus {
    /// A verified k-survivable mapping of the target's (non-loop) edges.
    Found(Mapping),
    /// Complete search exhausted without a solution.
    NotExists,
    /// The search was truncated before completion.
    Unknown,
}

impl OracleStatus {
    pub fn name(&self) -> &'static str {
        match self {
            OracleStatus::Found(_) => "found",
            OracleStatus::NotExists => "not-exists",
            OracleStatus::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct OracleStats {
    /// Candidate simple paths enumerated per target edge.
    pub paths_per_edge: BTreeMap<EdgeId, usize>,
    /// Assignment steps taken by the backtracking search (partial
    /// assignments count).
    pub combinations_visited: u64,
    pub truncated_paths: bool,
    pub truncated_combinations: bool,
    /// Set when the necessary edge-connectivity condition already refutes
    /// the instance without a search.
    pub refuted_structurally: bool,
}

#[derive(Debug, Clone)]
pub struct OracleResult {
    pub status: OracleStatus,
    pub stats: OracleStats,
}

impl OracleResult {
    pub fn describe(&self) -> String {
        match &self.status {
            OracleStatus::Found(m) => format!("found a mapping of {} links", m.len()),
            OracleStatus::NotExists => {
                if self.stats.refuted_structurally {
                    String::from("no mapping exists (edge connectivity below k+1)")
                } else {
                    String::from("no mapping exists (complete search)")
                }
            }
            OracleStatus::Unknown => format!(
                "search truncated after {} steps (paths truncated: {})",
                self.stats.combinations_visited, self.stats.truncated_paths
            ),
        }
    }
}

/// Decide whether the edges of `target` admit a k-survivable mapping onto
/// `physical`.
///
/// `target` is either the logical topology itself or a contracted multigraph
/// over logical edges; either way each target edge id must exist in
/// `logical`, whose endpoints tell the search where the lightpath must run.
/// Self-loop edges of a contracted target never affect connectivity and are
/// skipped; the returned mapping covers the non-loop edges.
pub fn oracle_exists(
    physical: &Topology,
    target: &Topology,
    logical: &Topology,
    k: usize,
    caps: &OracleCaps,
) -> Result<OracleResult> {
    if k == 0 {
        return Err(Error::InvalidK(0));
    }
    if caps.max_paths_per_edge == 0 {
        return Err(Error::ZeroCap("max paths per edge"));
    }
    if caps.max_combinations == 0 {
        return Err(Error::ZeroCap("max combinations"));
    }
    if !target.is_connected(&BTreeSet::new())? {
        return Err(Error::DisconnectedSubgraph);
    }
    let mut assignable: Vec<EdgeId> = Vec::new();
    for e in target.edge_ids() {
        if !logical.contains_edge(e) {
            return Err(Error::UnknownEdge(e.clone()));
        }
        if !target.is_self_loop(e)? {
            assignable.push(e.clone());
        }
    }
    let mut stats = OracleStats::default();
    if assignable.is_empty() {
        // Single vertex (possibly with self-loops): nothing to route.
        return Ok(OracleResult {
            status: OracleStatus::Found(Mapping::empty()),
            stats,
        });
    }

    // Per-edge candidate lightpaths, shortest first.
    let mut candidates: BTreeMap<EdgeId, Vec<Path>> = BTreeMap::new();
    for e in &assignable {
        let (u, v) = logical.endpoints(e)?.clone();
        for n in [&u, &v] {
            if !physical.contains_node(n) {
                return Err(Error::UnknownNode(n.clone()));
            }
        }
        let en = physical.enumerate_simple_paths(&u, &v, caps.max_paths_per_edge)?;
        stats.truncated_paths |= en.truncated;
        stats.paths_per_edge.insert(e.clone(), en.paths.len());
        candidates.insert(e.clone(), en.paths);
    }

    if physical.edge_count() < k {
        // No k-subset of physical edges exists; any assignment survives.
        let mapping = first_assignment(&assignable, &candidates, logical, physical)?;
        return Ok(OracleResult {
            status: OracleStatus::Found(mapping),
            stats,
        });
    }

    // Necessary condition: a target with an edge cut of c <= k members dies
    // to one failure per cut lightpath (padded to k), whatever the mapping.
    let target_view = nonloop_view(target)?;
    let connectivity = target_view.edge_connectivity();
    if connectivity != UNBOUNDED_CONNECTIVITY && connectivity <= k {
        stats.refuted_structurally = true;
        return Ok(OracleResult {
            status: OracleStatus::NotExists,
            stats,
        });
    }

    // Most-constrained edge first, ties by id.
    let mut order = assignable.clone();
    order.sort_by_key(|e| (candidates[e].len(), e.clone()));
    let mut search = Search {
        physical,
        logical,
        target: &target_view,
        k,
        order: &order,
        candidates: &candidates,
        budget: caps.max_combinations,
        stats: &mut stats,
    };
    let mut images: BTreeMap<EdgeId, BTreeSet<EdgeId>> = BTreeMap::new();
    let mut picks: Vec<(EdgeId, Path)> = Vec::new();
    let found = search.dive(0, &mut images, &mut picks)?;

    let status = match found {
        Some(mapping) => {
            let verdict = is_k_survivable(&target_view, &mapping, k, physical)?;
            if !verdict.survivable() {
                return Err(Error::VerificationFailed(String::from(
                    "oracle solution rejected by the survivability verifier",
                )));
            }
            OracleStatus::Found(mapping)
        }
        None if stats.truncated_paths || stats.truncated_combinations => OracleStatus::Unknown,
        None => OracleStatus::NotExists,
    };
    Ok(OracleResult { status, stats })
}

/// The target with self-loops dropped; connectivity semantics are unchanged.
fn nonloop_view(target: &Topology) -> Result<Topology> {
    let edges: Vec<_> = target
        .edges()
        .filter(|(_, (u, v))| u != v)
        .map(|(e, (u, v))| (e.clone(), u.clone(), v.clone()))
        .collect();
    Topology::new(target.layer(), target.nodes().iter().cloned(), edges)
}

fn first_assignment(
    assignable: &[EdgeId],
    candidates: &BTreeMap<EdgeId, Vec<Path>>,
    logical: &Topology,
    physical: &Topology,
) -> Result<Mapping> {
    let mut lps = Vec::new();
    for e in assignable {
        let Some(path) = candidates[e].first() else {
            let (u, v) = logical.endpoints(e)?.clone();
            return Err(Error::NoPath { from: u, to: v });
        };
        lps.push(Lightpath::new(logical, physical, e.clone(), path.clone())?);
    }
    Mapping::from_lightpaths(lps)
}

struct Search<'a> {
    physical: &'a Topology,
    logical: &'a Topology,
    target: &'a Topology,
    k: usize,
    order: &'a [EdgeId],
    candidates: &'a BTreeMap<EdgeId, Vec<Path>>,
    budget: u64,
    stats: &'a mut OracleStats,
}

impl Search<'_> {
    fn dive(
        &mut self,
        depth: usize,
        images: &mut BTreeMap<EdgeId, BTreeSet<EdgeId>>,
        picks: &mut Vec<(EdgeId, Path)>,
    ) -> Result<Option<Mapping>> {
        if depth == self.order.len() {
            // Complete assignment that survived every prune, hence every
            // k-failure among its used edges.
            let mut lps = Vec::new();
            for (e, path) in picks.iter() {
                lps.push(Lightpath::new(self.logical, self.physical, e.clone(), path.clone())?);
            }
            return Ok(Some(Mapping::from_lightpaths(lps)?));
        }
        let edge = &self.order[depth];
        for path in &self.candidates[edge] {
            if self.stats.combinations_visited >= self.budget {
                self.stats.truncated_combinations = true;
                return Ok(None);
            }
            self.stats.combinations_visited += 1;
            images.insert(edge.clone(), path.edge_set());
            picks.push((edge.clone(), path.clone()));
            let cut = assigned_cut_exists(self.target, images, self.k, self.physical.edge_count());
            if !cut {
                if let Some(found) = self.dive(depth + 1, images, picks)? {
                    return Ok(Some(found));
                }
            }
            picks.pop();
            images.remove(edge);
            if self.stats.truncated_combinations {
                return Ok(None);
            }
        }
        Ok(None)
    }
}
