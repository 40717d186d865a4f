//! The k-SMART engine: repeatedly find a subgraph of the contracted logical
//! topology that admits a k-survivable mapping, merge that mapping, contract
//! the subgraph, and start over. Convergence to a single vertex yields a
//! total k-survivable mapping; getting stuck yields a piecewise k-survivable
//! partial mapping plus the remaining contracted topology, which localizes
//! the vulnerable area and, combined with the oracle, decides existence.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::contraction::{contract, ContractedTopology};
use crate::error::{Error, Result};
use crate::mapping::{Lightpath, Mapping};
use crate::oracle::{oracle_exists, OracleCaps, OracleStatus};
use crate::survivability::{assigned_cut_exists, is_k_survivable, is_piecewise_k_survivable};
use crate::topology::{EdgeId, NodeId, Path, Subgraph, Topology, UNBOUNDED_CONNECTIVITY};

/// Families of candidate subgraphs tried in the mapping step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyKind {
    /// Simple cycles of the contracted multigraph (a pair of parallel edges
    /// counts as a 2-cycle). The natural family for k = 1.
    Cycles,
    /// Small 3-edge-connected structures: parallel triples, K4-style vertex
    /// quadruples, and unions of two cycles sharing at least two vertices.
    /// The natural family for k = 2.
    ThreeEdgeConnected,
    /// Every connected (k+1)-edge-connected subgraph, smallest edge count
    /// first. Complete but exponential; desk scale only.
    Exhaustive,
}

impl StrategyKind {
    pub fn name(self) -> &'static str {
        match self {
            StrategyKind::Cycles => "cycles",
            StrategyKind::ThreeEdgeConnected => "k2",
            StrategyKind::Exhaustive => "exhaustive",
        }
    }
}

/// Search configuration for one k-SMART run.
#[derive(Debug, Clone)]
pub struct Strategy {
    pub kind: StrategyKind,
    /// Candidate subgraphs examined per iteration.
    pub max_candidates: usize,
    /// Lightpath combination steps per candidate subgraph.
    pub max_combinations: u64,
    /// Candidate simple lightpaths kept per logical edge, shortest first.
    pub max_paths_per_edge: usize,
    /// Candidate-order seed; 0 keeps the canonical order.
    pub seed: u64,
}

impl Strategy {
    pub fn new(kind: StrategyKind, seed: u64) -> Self {
        Strategy {
            kind,
            max_candidates: 256,
            max_combinations: 20_000,
            max_paths_per_edge: 16,
            seed,
        }
    }

    /// The default family for a failure count: cycles for single failures,
    /// the 3-edge-connected family for double failures, exhaustive beyond.
    pub fn for_k(k: usize, seed: u64) -> Self {
        let kind = match k {
            0 | 1 => StrategyKind::Cycles,
            2 => StrategyKind::ThreeEdgeConnected,
            _ => StrategyKind::Exhaustive,
        };
        Strategy::new(kind, seed)
    }

    /// One-shot budget escalation used before falling back to the oracle.
    pub fn escalated(&self) -> Strategy {
        Strategy {
            kind: self.kind,
            max_candidates: self.max_candidates.saturating_mul(8),
            max_combinations: self.max_combinations.saturating_mul(8),
            max_paths_per_edge: self.max_paths_per_edge.saturating_mul(4),
            seed: self.seed,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_candidates == 0 {
            return Err(Error::ZeroCap("max candidates"));
        }
        if self.max_combinations == 0 {
            return Err(Error::ZeroCap("max combinations"));
        }
        if self.max_paths_per_edge == 0 {
            return Err(Error::ZeroCap("max paths per edge"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmartStatus {
    /// The contraction converged to a single vertex; the mapping is total
    /// and k-survivable.
    Converged,
    /// No candidate subgraph could be mapped. With `budget_limited` false
    /// the final iteration exhausted its whole candidate family and every
    /// mapping search ran to completion.
    Stuck { budget_limited: bool },
}

impl SmartStatus {
    pub fn converged(self) -> bool {
        matches!(self, SmartStatus::Converged)
    }

    pub fn budget_limited(self) -> bool {
        matches!(self, SmartStatus::Stuck { budget_limited: true })
    }
}

/// One successful iteration: the chosen subgraph and its piece mapping.
#[derive(Debug, Clone)]
pub struct IterationRecord {
    pub subgraph: Subgraph,
    pub piece_mapping: Mapping,
}

/// Result of a k-SMART run.
#[derive(Debug, Clone)]
pub struct SmartOutcome {
    pub status: SmartStatus,
    /// Total mapping when converged, the partial piecewise k-survivable
    /// mapping when stuck.
    pub mapping: Mapping,
    /// The contraction of the logical topology on the mapping's domain;
    /// a single vertex when converged.
    pub remaining: ContractedTopology,
    pub iterations: Vec<IterationRecord>,
    pub k: usize,
}

/// Run k-SMART from an empty mapping.
pub fn run(
    physical: &Topology,
    logical: &Topology,
    k: usize,
    strategy: &Strategy,
    verify: bool,
) -> Result<SmartOutcome> {
    run_from(physical, logical, k, strategy, verify, Mapping::empty())
}

/// Run k-SMART from an existing piecewise k-survivable mapping. Used by the
/// existence decision to re-enter the loop after the oracle maps the
/// remaining contracted topology.
pub fn run_from(
    physical: &Topology,
    logical: &Topology,
    k: usize,
    strategy: &Strategy,
    verify: bool,
    initial: Mapping,
) -> Result<SmartOutcome> {
    if k == 0 {
        return Err(Error::InvalidK(0));
    }
    strategy.validate()?;
    let mut mapping = initial;
    if verify && !mapping.is_empty() {
        let report = is_piecewise_k_survivable(logical, &mapping, k, physical)?;
        if !report.survivable() {
            return Err(Error::VerificationFailed(String::from(
                "initial mapping is not piecewise k-survivable",
            )));
        }
    }
    if physical.edge_count() < k {
        // No k failures can occur; any total mapping is vacuously
        // k-survivable. Route everything over shortest paths.
        for e in mapping.unmapped(logical) {
            let (u, v) = logical.endpoints(&e)?.clone();
            let walk = physical.shortest_path(&u, &v)?;
            let lp = Lightpath::new(logical, physical, e, walk)?;
            mapping = mapping.merge(&Mapping::from_lightpaths([lp])?)?;
        }
        let remaining = contract(logical, &mapping.domain_set())?;
        return Ok(SmartOutcome {
            status: SmartStatus::Converged,
            mapping,
            remaining,
            iterations: Vec::new(),
            k,
        });
    }
    let mut iterations = Vec::new();
    loop {
        let ct = contract(logical, &mapping.domain_set())?;
        if ct.is_single_vertex() {
            let total = finalize_self_loops(&mapping, &ct, physical)?;
            if verify {
                verify_converged(logical, &total, k, physical)?;
            }
            let remaining = contract(logical, &total.domain_set())?;
            return Ok(SmartOutcome {
                status: SmartStatus::Converged,
                mapping: total,
                remaining,
                iterations,
                k,
            });
        }
        let stream = candidate_subgraphs(&ct, k, strategy)?;
        let mut budget_limited = stream.truncated;
        let mut advanced = false;
        for sub in stream.subgraphs {
            let sub_topology = sub.to_topology(ct.graph())?;
            let search = map_subgraph(&sub_topology, logical, physical, k, strategy)?;
            budget_limited |= search.truncated;
            if let Some(piece) = search.mapping {
                mapping = mapping.merge(&piece)?;
                iterations.push(IterationRecord {
                    subgraph: sub,
                    piece_mapping: piece,
                });
                if verify {
                    let report = is_piecewise_k_survivable(logical, &mapping, k, physical)?;
                    if !report.survivable() {
                        return Err(Error::VerificationFailed(format!(
                            "mapping stopped being piecewise {k}-survivable after iteration {}",
                            iterations.len()
                        )));
                    }
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return Ok(SmartOutcome {
                status: SmartStatus::Stuck { budget_limited },
                mapping,
                remaining: ct,
                iterations,
                k,
            });
        }
    }
}

fn verify_converged(logical: &Topology, total: &Mapping, k: usize, physical: &Topology) -> Result<()> {
    if !total.is_total(logical) {
        return Err(Error::VerificationFailed(String::from(
            "converged mapping does not cover the logical topology",
        )));
    }
    let verdict = is_k_survivable(logical, total, k, physical)?;
    if !verdict.survivable() {
        return Err(Error::VerificationFailed(format!(
            "converged mapping rejected by the {k}-survivability verifier"
        )));
    }
    Ok(())
}

/// An ordered, possibly truncated batch of candidate subgraphs.
#[derive(Debug, Clone)]
pub struct CandidateStream {
    pub subgraphs: Vec<Subgraph>,
    pub truncated: bool,
}

/// Candidate subgraphs of the contracted topology for one iteration:
/// the strategy family filtered to connected, (k+1)-edge-connected
/// subgraphs, ordered smallest first with lexicographic tie-breaks, then
/// optionally shuffled by the seed and capped. Self-loop edges never appear
/// in candidates.
pub fn candidate_subgraphs(
    ct: &ContractedTopology,
    k: usize,
    strategy: &Strategy,
) -> Result<CandidateStream> {
    strategy.validate()?;
    let g = ct.graph();
    let mut raw: BTreeSet<BTreeSet<EdgeId>> = BTreeSet::new();
    let mut raw_truncated = false;
    match strategy.kind {
        StrategyKind::Cycles => {
            for cycle in simple_cycles(g) {
                raw.insert(cycle);
            }
        }
        StrategyKind::ThreeEdgeConnected => {
            collect_parallel_triples(g, &mut raw)?;
            collect_quadruples(g, &mut raw)?;
            let cycles = simple_cycles(g);
            collect_cycle_unions(g, &cycles, &mut raw)?;
        }
        StrategyKind::Exhaustive => {
            // Bound the raw enumeration well above the candidate cap so the
            // post-filter cap is the binding one at desk scale; a hit here
            // still surfaces as truncation.
            let raw_cap = strategy.max_candidates.saturating_mul(64).max(65_536);
            raw_truncated = collect_all_subsets(g, raw_cap, &mut raw);
        }
    }
    let mut subgraphs: Vec<Subgraph> = Vec::new();
    for edges in raw {
        let sub = Subgraph::from_edges(g, edges)?;
        let topo = sub.to_topology(g)?;
        if !topo.is_connected(&BTreeSet::new())? {
            continue;
        }
        let conn = topo.edge_connectivity();
        if conn != UNBOUNDED_CONNECTIVITY && conn < k + 1 {
            continue;
        }
        subgraphs.push(sub);
    }
    subgraphs.sort_by(|a, b| {
        (a.edges.len(), &a.edges).cmp(&(b.edges.len(), &b.edges))
    });
    if strategy.seed != 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(strategy.seed);
        subgraphs.shuffle(&mut rng);
    }
    let truncated = raw_truncated || subgraphs.len() > strategy.max_candidates;
    subgraphs.truncate(strategy.max_candidates);
    Ok(CandidateStream {
        subgraphs,
        truncated,
    })
}

/// Edge sets of the simple cycles of a multigraph. A cycle is a connected
/// 2-regular subgraph, so its edge set identifies it; two parallel edges
/// form a 2-cycle, self-loops are not cycles here.
pub fn simple_cycles(g: &Topology) -> Vec<BTreeSet<EdgeId>> {
    let mut found: BTreeSet<BTreeSet<EdgeId>> = BTreeSet::new();
    for start in g.nodes() {
        let mut visited: BTreeSet<NodeId> = BTreeSet::from([start.clone()]);
        let mut trail: Vec<EdgeId> = Vec::new();
        cycle_dfs(g, start, start, &mut visited, &mut trail, &mut found);
    }
    found.into_iter().collect()
}

fn cycle_dfs(
    g: &Topology,
    at: &NodeId,
    start: &NodeId,
    visited: &mut BTreeSet<NodeId>,
    trail: &mut Vec<EdgeId>,
    found: &mut BTreeSet<BTreeSet<EdgeId>>,
) {
    for (e, _) in g.incident(at) {
        if trail.contains(e) {
            continue;
        }
        let next = g.other_endpoint(e, at).expect("incident edge");
        if next == *start {
            if !trail.is_empty() {
                let mut cycle: BTreeSet<EdgeId> = trail.iter().cloned().collect();
                cycle.insert(e.clone());
                found.insert(cycle);
            }
            continue;
        }
        // Canonical form: enumerate each cycle from its least vertex only.
        if next < *start || visited.contains(&next) {
            continue;
        }
        visited.insert(next.clone());
        trail.push(e.clone());
        cycle_dfs(g, &next, start, visited, trail, found);
        trail.pop();
        visited.remove(&next);
    }
}

/// All 3-subsets of each parallel-edge class.
fn collect_parallel_triples(g: &Topology, out: &mut BTreeSet<BTreeSet<EdgeId>>) -> Result<()> {
    let mut classes: BTreeMap<(NodeId, NodeId), Vec<EdgeId>> = BTreeMap::new();
    for (e, (u, v)) in g.edges() {
        if u == v {
            continue;
        }
        classes
            .entry((u.clone(), v.clone()))
            .or_default()
            .push(e.clone());
    }
    for bundle in classes.values() {
        if bundle.len() < 3 {
            continue;
        }
        for i in 0..bundle.len() {
            for j in i + 1..bundle.len() {
                for l in j + 1..bundle.len() {
                    out.insert(BTreeSet::from([
                        bundle[i].clone(),
                        bundle[j].clone(),
                        bundle[l].clone(),
                    ]));
                }
            }
        }
    }
    Ok(())
}

/// K4-style candidates: vertex quadruples with every pair adjacent, taking
/// the least edge of each parallel class.
fn collect_quadruples(g: &Topology, out: &mut BTreeSet<BTreeSet<EdgeId>>) -> Result<()> {
    let nodes: Vec<&NodeId> = g.nodes().iter().collect();
    if nodes.len() < 4 {
        return Ok(());
    }
    let mut least_edge: BTreeMap<(NodeId, NodeId), EdgeId> = BTreeMap::new();
    for (e, (u, v)) in g.edges() {
        if u == v {
            continue;
        }
        let key = (u.clone(), v.clone());
        match least_edge.get(&key) {
            Some(cur) if cur <= e => {}
            _ => {
                least_edge.insert(key, e.clone());
            }
        }
    }
    let m = nodes.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    let quad = [nodes[a], nodes[b], nodes[c], nodes[d]];
                    let mut edges = BTreeSet::new();
                    let mut complete = true;
                    'pairs: for i in 0..4 {
                        for j in i + 1..4 {
                            let key = (quad[i].clone(), quad[j].clone());
                            match least_edge.get(&key) {
                                Some(e) => {
                                    edges.insert(e.clone());
                                }
                                None => {
                                    complete = false;
                                    break 'pairs;
                                }
                            }
                        }
                    }
                    if complete {
                        out.insert(edges);
                    }
                }
            }
        }
    }
    Ok(())
}

/// Unions of two distinct cycles sharing at least two vertices.
fn collect_cycle_unions(
    g: &Topology,
    cycles: &[BTreeSet<EdgeId>],
    out: &mut BTreeSet<BTreeSet<EdgeId>>,
) -> Result<()> {
    let node_sets: Vec<BTreeSet<NodeId>> = cycles
        .iter()
        .map(|cyc| {
            let mut nodes = BTreeSet::new();
            for e in cyc {
                let (u, v) = g.endpoints(e).expect("cycle edge");
                nodes.insert(u.clone());
                nodes.insert(v.clone());
            }
            nodes
        })
        .collect();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let shared = node_sets[i].intersection(&node_sets[j]).count();
            if shared < 2 {
                continue;
            }
            let union: BTreeSet<EdgeId> = cycles[i].union(&cycles[j]).cloned().collect();
            out.insert(union);
        }
    }
    Ok(())
}

/// Subsets of the non-loop edges, smallest first, up to `cap` many; the
/// caller filters for connectivity. Returns whether the cap cut the
/// enumeration short.
fn collect_all_subsets(g: &Topology, cap: usize, out: &mut BTreeSet<BTreeSet<EdgeId>>) -> bool {
    let ground: Vec<EdgeId> = g
        .edges()
        .filter(|(_, (u, v))| u != v)
        .map(|(e, _)| e.clone())
        .collect();
    for size in 2..=ground.len() {
        let mut combos = crate::survivability::KSubsets::new(ground.len(), size);
        while let Some(indices) = combos.next() {
            if out.len() >= cap {
                return true;
            }
            out.insert(indices.iter().map(|&i| ground[i].clone()).collect());
        }
    }
    false
}

/// Result of one candidate-subgraph mapping search.
#[derive(Debug, Clone)]
pub struct SubgraphSearch {
    pub mapping: Option<Mapping>,
    pub truncated: bool,
    pub steps: u64,
}

/// Search for a mapping of `g_sub`'s edges whose pair is k-survivable,
/// verified before return. Candidate lightpaths per edge are the shortest
/// simple paths between the edge's end-nodes in the base logical topology;
/// mutually edge-disjoint combinations are tried first, then the general
/// combination space with cut-based pruning.
pub fn map_subgraph(
    g_sub: &Topology,
    logical: &Topology,
    physical: &Topology,
    k: usize,
    strategy: &Strategy,
) -> Result<SubgraphSearch> {
    strategy.validate()?;
    if !g_sub.is_connected(&BTreeSet::new())? {
        return Err(Error::DisconnectedSubgraph);
    }
    // Necessary condition: below (k+1)-edge-connectivity some k failures
    // always cut the subgraph, regardless of the mapping.
    let conn = g_sub.edge_connectivity();
    if physical.edge_count() >= k && conn != UNBOUNDED_CONNECTIVITY && conn < k + 1 {
        return Ok(SubgraphSearch {
            mapping: None,
            truncated: false,
            steps: 0,
        });
    }
    let mut truncated = false;
    let mut candidates: BTreeMap<EdgeId, Vec<Path>> = BTreeMap::new();
    for e in g_sub.edge_ids() {
        let (u, v) = logical.endpoints(e)?.clone();
        let en = physical.enumerate_simple_paths(&u, &v, strategy.max_paths_per_edge)?;
        truncated |= en.truncated;
        candidates.insert(e.clone(), en.paths);
    }
    let mut order: Vec<EdgeId> = g_sub.edge_ids().cloned().collect();
    order.sort_by_key(|e| (candidates[e].len(), e.clone()));

    let mut search = PieceSearch {
        g_sub,
        logical,
        physical,
        k,
        order: &order,
        candidates: &candidates,
        budget: strategy.max_combinations,
        steps: 0,
        exhausted: false,
    };
    let mut images: BTreeMap<EdgeId, BTreeSet<EdgeId>> = BTreeMap::new();
    let mut picks: Vec<(EdgeId, Path)> = Vec::new();
    let mut found = search.dive(0, true, &mut images, &mut picks)?;
    if found.is_none() && !search.exhausted {
        images.clear();
        picks.clear();
        found = search.dive(0, false, &mut images, &mut picks)?;
    }
    truncated |= search.exhausted;
    Ok(SubgraphSearch {
        mapping: found,
        truncated,
        steps: search.steps,
    })
}

struct PieceSearch<'a> {
    g_sub: &'a Topology,
    logical: &'a Topology,
    physical: &'a Topology,
    k: usize,
    order: &'a [EdgeId],
    candidates: &'a BTreeMap<EdgeId, Vec<Path>>,
    budget: u64,
    steps: u64,
    exhausted: bool,
}

impl PieceSearch<'_> {
    fn dive(
        &mut self,
        depth: usize,
        disjoint_only: bool,
        images: &mut BTreeMap<EdgeId, BTreeSet<EdgeId>>,
        picks: &mut Vec<(EdgeId, Path)>,
    ) -> Result<Option<Mapping>> {
        if depth == self.order.len() {
            let mut lps = Vec::new();
            for (e, path) in picks.iter() {
                lps.push(Lightpath::new(self.logical, self.physical, e.clone(), path.clone())?);
            }
            let mapping = Mapping::from_lightpaths(lps)?;
            let verdict = is_k_survivable(self.g_sub, &mapping, self.k, self.physical)?;
            return Ok(verdict.survivable().then_some(mapping));
        }
        let edge = &self.order[depth];
        for path in &self.candidates[edge] {
            if self.steps >= self.budget {
                self.exhausted = true;
                return Ok(None);
            }
            if disjoint_only {
                let img = path.edge_set();
                let clash = images.values().any(|other| !other.is_disjoint(&img));
                if clash {
                    continue;
                }
            }
            self.steps += 1;
            images.insert(edge.clone(), path.edge_set());
            picks.push((edge.clone(), path.clone()));
            let prune = !disjoint_only
                && assigned_cut_exists(self.g_sub, images, self.k, self.physical.edge_count());
            if !prune {
                if let Some(found) = self.dive(depth + 1, disjoint_only, images, picks)? {
                    return Ok(Some(found));
                }
            }
            picks.pop();
            images.remove(edge);
            if self.exhausted {
                return Ok(None);
            }
        }
        Ok(None)
    }
}

/// Map the self-loop edges left on a single-vertex contraction via shortest
/// physical paths between their original end-nodes, completing the mapping.
pub fn finalize_self_loops(
    m: &Mapping,
    ct: &ContractedTopology,
    physical: &Topology,
) -> Result<Mapping> {
    if !ct.is_single_vertex() {
        return Err(Error::NotConverged);
    }
    let loops = ct.self_loops();
    let logical = ct.base();
    for e in logical.edge_ids() {
        if m.get(e).is_none() && !loops.contains(e) {
            return Err(Error::UnmappedEdge(e.clone()));
        }
    }
    let mut extra = Vec::new();
    for e in &loops {
        if m.get(e).is_some() {
            continue;
        }
        let (u, v) = logical.endpoints(e)?.clone();
        let walk = physical.shortest_path(&u, &v)?;
        extra.push(Lightpath::new(logical, physical, e.clone(), walk)?);
    }
    m.merge(&Mapping::from_lightpaths(extra)?)
}

/// Verdict of the existence decision.
#[derive(Debug, Clone)]
pub enum Decision {
    /// A verified total k-survivable mapping.
    Proven(Mapping),
    /// No k-survivable mapping exists; the remaining contracted topology
    /// localizes the obstruction.
    Refuted(ContractedTopology),
    /// The search was truncated before a definitive answer.
    Unknown(String),
}

impl Decision {
    pub fn name(&self) -> &'static str {
        match self {
            Decision::Proven(_) => "proven",
            Decision::Refuted(_) => "refuted",
            Decision::Unknown(_) => "unknown",
        }
    }
}

/// Outcome of [`decide_existence`]: the decision and the final run behind it.
#[derive(Debug, Clone)]
pub struct Existence {
    pub decision: Decision,
    pub outcome: SmartOutcome,
}

/// Decide whether a k-survivable mapping of `logical` onto `physical`
/// exists: run k-SMART; when it sticks, escalate the budget once if the
/// failure was budget-limited, then consult the oracle on the remaining
/// contracted topology. An oracle mapping is merged and the loop re-entered;
/// an oracle refutation of the remainder refutes the whole instance.
pub fn decide_existence(
    physical: &Topology,
    logical: &Topology,
    k: usize,
    strategy: &Strategy,
    caps: &OracleCaps,
    verify: bool,
) -> Result<Existence> {
    let mut outcome = run(physical, logical, k, strategy, verify)?;
    if let SmartStatus::Stuck { budget_limited: true } = outcome.status {
        outcome = run(physical, logical, k, &strategy.escalated(), verify)?;
    }
    if outcome.status.converged() {
        let mapping = outcome.mapping.clone();
        return Ok(Existence {
            decision: Decision::Proven(mapping),
            outcome,
        });
    }
    let remaining = outcome.remaining.clone();
    let oracle = oracle_exists(physical, remaining.graph(), logical, k, caps)?;
    match oracle.status {
        OracleStatus::Found(piece) => {
            let merged = outcome.mapping.merge(&piece)?;
            let resumed = run_from(physical, logical, k, strategy, verify, merged)?;
            if !resumed.status.converged() {
                return Err(Error::VerificationFailed(String::from(
                    "resumed run failed to converge after the oracle mapped the remainder",
                )));
            }
            let mapping = resumed.mapping.clone();
            Ok(Existence {
                decision: Decision::Proven(mapping),
                outcome: resumed,
            })
        }
        OracleStatus::NotExists => Ok(Existence {
            decision: Decision::Refuted(remaining),
            outcome,
        }),
        OracleStatus::Unknown => Ok(Existence {
            decision: Decision::Unknown(oracle.describe()),
            outcome,
        }),
    }
}

/// Where and why the mapper got stuck.
#[derive(Debug, Clone)]
pub struct VulnerabilityReport {
    /// Remaining contracted vertices with their origin node sets.
    pub vertices: BTreeMap<NodeId, BTreeSet<NodeId>>,
    /// Unmapped logical links (the remaining edges, self-loops included).
    pub unmapped: BTreeSet<EdgeId>,
    pub self_loops: BTreeSet<EdgeId>,
    /// Edge connectivity of the remaining contracted multigraph.
    pub remaining_edge_connectivity: usize,
    /// k + 1, what the remaining multigraph would need.
    pub required_connectivity: usize,
    /// True when the remaining multigraph itself is below the required
    /// connectivity, so no physical topology could ever map it.
    pub structurally_impossible: bool,
    pub budget_limited: bool,
}

/// Describe the vulnerable area of a stuck outcome.
pub fn trace_vulnerability(outcome: &SmartOutcome) -> Result<VulnerabilityReport> {
    let SmartStatus::Stuck { budget_limited } = outcome.status else {
        return Err(Error::NotStuck);
    };
    let remaining = &outcome.remaining;
    let connectivity = remaining.graph().edge_connectivity();
    let required = outcome.k + 1;
    Ok(VulnerabilityReport {
        vertices: remaining.origins().clone(),
        unmapped: remaining.graph().edge_id_set(),
        self_loops: remaining.self_loops(),
        remaining_edge_connectivity: connectivity,
        required_connectivity: required,
        structurally_impossible: connectivity != UNBOUNDED_CONNECTIVITY
            && connectivity < required,
        budget_limited,
    })
}
