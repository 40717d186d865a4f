//! Decision procedures for k-survivability of a (subgraph, mapping) pair and
//! piecewise k-survivability of a partial mapping, with failure-set
//! witnesses.
//!
//! A pair survives k failures when no simultaneous failure of k physical
//! links disconnects the subgraph, where a logical edge dies exactly when
//! its lightpath image intersects the failure set. Failure enumeration is
//! restricted to k-subsets of the physical edges actually used by the
//! subgraph's lightpaths: an unused edge kills nothing, so it can only pad a
//! failure set without changing its effect. When fewer than k distinct
//! physical edges are used at all, a single padded failure set killing every
//! used edge dominates all others.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::contraction::contract;
use crate::error::{Error, Result};
use crate::mapping::Mapping;
use crate::topology::{EdgeId, NodeId, Path, Topology};

/// A set of exactly k physical edges assumed to fail simultaneously.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FailureSet {
    edges: BTreeSet<EdgeId>,
}

impl FailureSet {
    pub fn new(edges: BTreeSet<EdgeId>, k: usize, physical: &Topology) -> Result<Self> {
        if edges.len() != k {
            return Err(Error::BadFailureSetSize {
                expected: k,
                found: edges.len(),
            });
        }
        for e in &edges {
            if !physical.contains_edge(e) {
                return Err(Error::UnknownEdge(e.clone()));
            }
        }
        Ok(FailureSet { edges })
    }

    fn unchecked(edges: BTreeSet<EdgeId>) -> Self {
        FailureSet { edges }
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A counterexample: the failing physical edge set and one node pair it
/// separates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub failure: FailureSet,
    pub separated: (NodeId, NodeId),
}

/// Outcome of a survivability check. A witness is present iff the pair is
/// not survivable, and replaying it through the connectivity check
/// reproduces the disconnection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    survivable: bool,
    witness: Option<Witness>,
}

impl Verdict {
    fn ok() -> Self {
        Verdict {
            survivable: true,
            witness: None,
        }
    }

    fn fail(witness: Witness) -> Self {
        Verdict {
            survivable: false,
            witness: Some(witness),
        }
    }

    pub fn survivable(&self) -> bool {
        self.survivable
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }
}

/// Per-vertex verdicts of a piecewise check, keyed by contracted vertex.
#[derive(Debug, Clone)]
pub struct PiecewiseReport {
    per_vertex: BTreeMap<NodeId, Verdict>,
}

impl PiecewiseReport {
    pub fn survivable(&self) -> bool {
        self.per_vertex.values().all(Verdict::survivable)
    }

    pub fn per_vertex(&self) -> &BTreeMap<NodeId, Verdict> {
        &self.per_vertex
    }

    /// Failing vertices with their witnesses, in vertex order.
    pub fn failures(&self) -> impl Iterator<Item = (&NodeId, &Witness)> {
        self.per_vertex
            .iter()
            .filter_map(|(v, verdict)| verdict.witness().map(|w| (v, w)))
    }
}

/// The edges of `g_sub` whose lightpath image intersects `failed`.
pub fn killed_edges(g_sub: &Topology, m: &Mapping, failed: &BTreeSet<EdgeId>) -> Result<BTreeSet<EdgeId>> {
    let mut out = BTreeSet::new();
    for e in g_sub.edge_ids() {
        let lp = m.get(e).ok_or_else(|| Error::UnmappedEdge(e.clone()))?;
        if lp.walk().edges().iter().any(|p| failed.contains(p)) {
            out.insert(e.clone());
        }
    }
    Ok(out)
}

/// Connected components of `g_sub` after the failure kills its edges.
pub fn components_after_failure(
    g_sub: &Topology,
    m: &Mapping,
    failed: &BTreeSet<EdgeId>,
) -> Result<Vec<BTreeSet<NodeId>>> {
    let killed = killed_edges(g_sub, m, failed)?;
    Ok(g_sub.components(&killed))
}

/// Decide whether the pair `[g_sub, m]` survives every simultaneous failure
/// of `k` physical links. On failure, returns the least counterexample in
/// the enumeration order (lexicographic over k-subsets of the used physical
/// edges, padded with unused edges when fewer than k are used).
pub fn is_k_survivable(g_sub: &Topology, m: &Mapping, k: usize, physical: &Topology) -> Result<Verdict> {
    if k == 0 {
        return Err(Error::InvalidK(0));
    }
    if !g_sub.is_connected(&BTreeSet::new())? {
        return Err(Error::DisconnectedSubgraph);
    }
    let sub_edges: Vec<EdgeId> = g_sub.edge_ids().cloned().collect();
    let used: BTreeSet<EdgeId> = m.image(sub_edges.iter())?;
    if physical.edge_count() < k {
        // No k failures can happen at all.
        return Ok(Verdict::ok());
    }
    if used.len() < k {
        // Any k-failure can cover every used edge, and covering all of them
        // dominates every other choice.
        let killed = killed_edges(g_sub, m, &used)?;
        return match separated_pair(g_sub, &killed) {
            None => Ok(Verdict::ok()),
            Some(separated) => {
                let failure = FailureSet::unchecked(pad_with_unused(&used, physical, k));
                Ok(Verdict::fail(Witness { failure, separated }))
            }
        };
    }
    let used_vec: Vec<EdgeId> = used.iter().cloned().collect();
    let mut subset = KSubsets::new(used_vec.len(), k);
    while let Some(indices) = subset.next() {
        let failed: BTreeSet<EdgeId> = indices.iter().map(|&i| used_vec[i].clone()).collect();
        let killed = killed_edges(g_sub, m, &failed)?;
        if let Some(separated) = separated_pair(g_sub, &killed) {
            return Ok(Verdict::fail(Witness {
                failure: FailureSet::unchecked(failed),
                separated,
            }));
        }
    }
    // Sanity check of the used-edges restriction: one failure set containing
    // an unused edge must leave the subgraph connected too.
    if let Some(probe) = probe_set_with_unused(&used, physical, k) {
        let killed = killed_edges(g_sub, m, &probe)?;
        if separated_pair(g_sub, &killed).is_some() {
            return Err(Error::VerificationFailed(format!(
                "failure set {probe:?} with unused edges disconnected a pair deemed survivable"
            )));
        }
    }
    Ok(Verdict::ok())
}

/// Piecewise check: contract the logical topology on the mapping's domain
/// and require every contracted vertex's origin to form a survivable pair
/// with the mapping.
pub fn is_piecewise_k_survivable(
    logical: &Topology,
    m: &Mapping,
    k: usize,
    physical: &Topology,
) -> Result<PiecewiseReport> {
    let domain = m.domain_set();
    for e in &domain {
        if !logical.contains_edge(e) {
            return Err(Error::UnknownEdge(e.clone()));
        }
    }
    let ct = contract(logical, &domain)?;
    let mut per_vertex = BTreeMap::new();
    for v in ct.origins().keys() {
        let piece = ct.origin_vertex(v)?;
        let verdict = is_k_survivable(&piece, m, k, physical)?;
        per_vertex.insert(v.clone(), verdict);
    }
    Ok(PiecewiseReport { per_vertex })
}

/// A path between `u` and `v` in `g_sub` using only edges whose lightpaths
/// dodge the failure set, or `None` when every route is cut.
pub fn surviving_path(
    g_sub: &Topology,
    m: &Mapping,
    u: &NodeId,
    v: &NodeId,
    f: &FailureSet,
) -> Result<Option<Path>> {
    for n in [u, v] {
        if !g_sub.contains_node(n) {
            return Err(Error::UnknownNode(n.clone()));
        }
    }
    let killed = killed_edges(g_sub, m, f.edges())?;
    let survivors: Vec<(EdgeId, NodeId, NodeId)> = g_sub
        .edges()
        .filter(|(e, _)| !killed.contains(*e))
        .map(|(e, (a, b))| (e.clone(), a.clone(), b.clone()))
        .collect();
    let survivor_graph = Topology::new(g_sub.layer(), g_sub.nodes().iter().cloned(), survivors)?;
    match survivor_graph.shortest_path(u, v) {
        Ok(p) => Ok(Some(p)),
        Err(Error::NoPath { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// True when some simultaneous failure of `k` physical links already kills a
/// set of assigned edges whose removal disconnects `target`.
///
/// `images` holds the lightpath image of every *assigned* edge; edges of
/// `target` outside `images` are treated as alive. Unassigned edges can only
/// shrink the survivor set further once they get lightpaths, so a positive
/// answer here is final for every extension of the assignment. Used by the
/// backtracking searches as a sound prune; on a full assignment it coincides
/// with the survivability semantics.
pub(crate) fn assigned_cut_exists(
    target: &Topology,
    images: &BTreeMap<EdgeId, BTreeSet<EdgeId>>,
    k: usize,
    physical_edge_count: usize,
) -> bool {
    if physical_edge_count < k {
        return false;
    }
    let used: BTreeSet<&EdgeId> = images.values().flatten().collect();
    let disconnects = |failed: &BTreeSet<&EdgeId>| {
        let killed: BTreeSet<EdgeId> = images
            .iter()
            .filter(|(_, img)| img.iter().any(|p| failed.contains(p)))
            .map(|(e, _)| e.clone())
            .collect();
        !target.is_connected(&killed).expect("killed edges are target edges")
    };
    if used.len() <= k {
        // A k-failure can cover every used edge; that case dominates.
        return disconnects(&used);
    }
    let used_vec: Vec<&EdgeId> = used.into_iter().collect();
    let mut subsets = KSubsets::new(used_vec.len(), k);
    while let Some(indices) = subsets.next() {
        let failed: BTreeSet<&EdgeId> = indices.iter().map(|&i| used_vec[i]).collect();
        if disconnects(&failed) {
            return true;
        }
    }
    false
}

/// Least separated node pair after deleting `killed`: the least node overall
/// and the least node outside its component. `None` when still connected.
fn separated_pair(g_sub: &Topology, killed: &BTreeSet<EdgeId>) -> Option<(NodeId, NodeId)> {
    let first = g_sub.nodes().iter().next()?;
    let reachable = g_sub.reachable_from(first, killed);
    g_sub
        .nodes()
        .iter()
        .find(|n| !reachable.contains(*n))
        .map(|n| (first.clone(), n.clone()))
}

/// Pad `used` with the least unused physical edges up to k members.
fn pad_with_unused(used: &BTreeSet<EdgeId>, physical: &Topology, k: usize) -> BTreeSet<EdgeId> {
    let mut out = used.clone();
    for e in physical.edge_ids() {
        if out.len() == k {
            break;
        }
        out.insert(e.clone());
    }
    out
}

/// A k-subset that mixes at least one unused edge with the greatest used
/// edges, if the physical topology offers one.
fn probe_set_with_unused(used: &BTreeSet<EdgeId>, physical: &Topology, k: usize) -> Option<BTreeSet<EdgeId>> {
    let unused = physical.edge_ids().find(|e| !used.contains(*e))?;
    let mut probe: BTreeSet<EdgeId> = BTreeSet::from([unused.clone()]);
    probe.extend(used.iter().rev().take(k - 1).cloned());
    (probe.len() == k).then_some(probe)
}

/// Lexicographic k-subset index enumerator.
pub(crate) struct KSubsets {
    n: usize,
    indices: Vec<usize>,
    started: bool,
}

impl KSubsets {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        KSubsets {
            n,
            indices: (0..k).collect(),
            started: false,
        }
    }

    pub(crate) fn next(&mut self) -> Option<&[usize]> {
        let k = self.indices.len();
        if k > self.n {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.indices);
        }
        // Advance the rightmost index that can still move.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if self.indices[i] != i + self.n - k {
                break;
            }
        }
        self.indices[i] += 1;
        for j in i + 1..k {
            self.indices[j] = self.indices[j - 1] + 1;
        }
        Some(&self.indices)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapping::make_lightpath;
    use crate::testgen::{
        bridged_districts, district_cross_mapping, district_triangle_mapping, eid, nid,
    };
    use crate::topology::Layer;

    fn edge(id: &str, u: &str, v: &str) -> (EdgeId, NodeId, NodeId) {
        (eid(id), nid(u), nid(v))
    }

    /// 4-cycle logical mapped edge-for-edge on a 4-cycle physical.
    fn ring_on_ring() -> (Topology, Topology, Mapping) {
        let nodes = ["a", "b", "c", "d"].map(nid);
        let physical = Topology::new(
            Layer::Physical,
            nodes.clone(),
            [
                edge("p1", "a", "b"),
                edge("p2", "b", "c"),
                edge("p3", "c", "d"),
                edge("p4", "d", "a"),
            ],
        )
        .unwrap();
        let logical = Topology::new(
            Layer::Logical,
            nodes,
            [
                edge("l1", "a", "b"),
                edge("l2", "b", "c"),
                edge("l3", "c", "d"),
                edge("l4", "d", "a"),
            ],
        )
        .unwrap();
        let m = Mapping::from_lightpaths((1..=4).map(|i| {
            make_lightpath(
                &logical,
                &physical,
                &eid(&alloc::format!("l{i}")),
                alloc::vec![eid(&alloc::format!("p{i}"))],
            )
            .unwrap()
        }))
        .unwrap();
        (physical, logical, m)
    }

    #[test]
    fn total_district_mapping_survives_single_failures() {
        let (physical, logical) = bridged_districts();
        let m = district_triangle_mapping(&physical, &logical)
            .merge(&district_cross_mapping(&physical, &logical))
            .unwrap();
        let verdict = is_k_survivable(&logical, &m, 1, &physical).unwrap();
        assert!(verdict.survivable());
        assert!(verdict.witness().is_none());
    }

    #[test]
    fn single_vertex_survives_any_k() {
        let (physical, _) = bridged_districts();
        let lone = Topology::new(Layer::Logical, [nid("n1")], []).unwrap();
        for k in 1..=4 {
            assert!(is_k_survivable(&lone, &Mapping::empty(), k, &physical)
                .unwrap()
                .survivable());
        }
    }

    #[test]
    fn ring_survives_one_failure_but_not_two() {
        let (physical, logical, m) = ring_on_ring();
        assert!(is_k_survivable(&logical, &m, 1, &physical).unwrap().survivable());
        let verdict = is_k_survivable(&logical, &m, 2, &physical).unwrap();
        assert!(!verdict.survivable());
        // Every 2-subset disconnects; the least is {p1, p2}.
        let w = verdict.witness().unwrap();
        assert_eq!(w.failure.edges().clone(), BTreeSet::from([eid("p1"), eid("p2")]));
        // Witness replay: deleting the killed edges splits the ring.
        let killed = killed_edges(&logical, &m, w.failure.edges()).unwrap();
        assert!(!logical.is_connected(&killed).unwrap());
        let comps = components_after_failure(&logical, &m, w.failure.edges()).unwrap();
        assert!(comps.len() >= 2);
        assert_ne!(
            comps.iter().position(|c| c.contains(&w.separated.0)),
            comps.iter().position(|c| c.contains(&w.separated.1))
        );
    }

    #[test]
    fn disjoint_cross_pair_survives_one_failure() {
        let (physical, logical) = bridged_districts();
        let a: BTreeSet<EdgeId> = ["a", "b", "c", "f", "g", "h"].map(eid).into();
        let ct = contract(&logical, &a).unwrap();
        let m = district_cross_mapping(&physical, &logical);
        assert!(is_k_survivable(ct.graph(), &m, 1, &physical).unwrap().survivable());
    }

    #[test]
    fn shared_route_cross_pair_fails_with_witness() {
        let (physical, logical) = bridged_districts();
        let a: BTreeSet<EdgeId> = ["a", "b", "c", "f", "g", "h"].map(eid).into();
        let ct = contract(&logical, &a).unwrap();
        // Route both cross links over x25.
        let m = Mapping::from_lightpaths([
            make_lightpath(
                &logical,
                &physical,
                &eid("d"),
                alloc::vec![eid("p12"), eid("x25"), eid("p45")],
            )
            .unwrap(),
            make_lightpath(&logical, &physical, &eid("e"), alloc::vec![eid("x25")]).unwrap(),
        ])
        .unwrap();
        let verdict = is_k_survivable(ct.graph(), &m, 1, &physical).unwrap();
        let w = verdict.witness().expect("shared fiber must fail");
        assert_eq!(w.failure.edges().clone(), BTreeSet::from([eid("x25")]));
    }

    #[test]
    fn unmapped_edge_is_rejected() {
        let (physical, logical) = bridged_districts();
        let m = district_triangle_mapping(&physical, &logical);
        assert_eq!(
            is_k_survivable(&logical, &m, 1, &physical).unwrap_err(),
            Error::UnmappedEdge(eid("d"))
        );
    }

    #[test]
    fn disconnected_subgraph_is_rejected() {
        let (physical, logical) = bridged_districts();
        let m = district_triangle_mapping(&physical, &logical);
        let two_islands = Topology::new(
            Layer::Logical,
            ["n1", "n2", "n4", "n5"].map(nid),
            [edge("a", "n1", "n2"), edge("f", "n4", "n5")],
        )
        .unwrap();
        assert_eq!(
            is_k_survivable(&two_islands, &m, 1, &physical).unwrap_err(),
            Error::DisconnectedSubgraph
        );
    }

    #[test]
    fn oversized_k_is_vacuously_survivable() {
        let (physical, logical, m) = ring_on_ring();
        // Only 4 physical edges exist, so no 5-subset can fail.
        assert!(is_k_survivable(&logical, &m, 5, &physical).unwrap().survivable());
        // k=3 still enumerable and fatal for the ring.
        assert!(!is_k_survivable(&logical, &m, 3, &physical).unwrap().survivable());
    }

    #[test]
    fn fewer_used_edges_than_k_pads_the_witness() {
        // Two logical edges sharing one physical bridge, k=2: the padded
        // witness must still have exactly two members.
        let physical = Topology::new(
            Layer::Physical,
            ["a", "b", "c"].map(nid),
            [edge("p1", "a", "b"), edge("p2", "b", "c"), edge("p3", "a", "c")],
        )
        .unwrap();
        let logical = Topology::new(
            Layer::Logical,
            ["a", "b"].map(nid),
            [edge("l1", "a", "b")],
        )
        .unwrap();
        let m = Mapping::from_lightpaths([
            make_lightpath(&logical, &physical, &eid("l1"), alloc::vec![eid("p1")]).unwrap()
        ])
        .unwrap();
        let verdict = is_k_survivable(&logical, &m, 2, &physical).unwrap();
        let w = verdict.witness().unwrap();
        assert_eq!(w.failure.len(), 2);
        assert!(w.failure.edges().contains(&eid("p1")));
    }

    #[test]
    fn piecewise_district_mapping_passes() {
        let (physical, logical) = bridged_districts();
        let m = district_triangle_mapping(&physical, &logical);
        let report = is_piecewise_k_survivable(&logical, &m, 1, &physical).unwrap();
        assert!(report.survivable());
        assert_eq!(report.per_vertex().len(), 2);
    }

    #[test]
    fn piecewise_empty_mapping_is_trivially_survivable() {
        let (physical, logical) = bridged_districts();
        let report =
            is_piecewise_k_survivable(&logical, &Mapping::empty(), 3, &physical).unwrap();
        assert!(report.survivable());
        // Every origin is a single node.
        assert_eq!(report.per_vertex().len(), logical.node_count());
    }

    #[test]
    fn piecewise_report_names_failing_vertex_and_witness() {
        // Ring piece whose opposite edges share a fiber, plus a tail node.
        let physical = Topology::new(
            Layer::Physical,
            ["m1", "m2", "m3", "m4", "m5"].map(nid),
            [
                edge("q1", "m1", "m2"),
                edge("q2", "m2", "m3"),
                edge("q3", "m3", "m4"),
                edge("q4", "m1", "m4"),
                edge("q5", "m4", "m5"),
                edge("q6", "m1", "m3"),
            ],
        )
        .unwrap();
        let logical = Topology::new(
            Layer::Logical,
            ["m1", "m2", "m3", "m4", "m5"].map(nid),
            [
                edge("c1", "m1", "m2"),
                edge("c2", "m2", "m3"),
                edge("c3", "m3", "m4"),
                edge("c4", "m1", "m4"),
                edge("c5", "m4", "m5"),
            ],
        )
        .unwrap();
        // c1 detours through q3, which c3 uses directly: one fiber, two links.
        let m = Mapping::from_lightpaths([
            make_lightpath(
                &logical,
                &physical,
                &eid("c1"),
                alloc::vec![eid("q4"), eid("q3"), eid("q2")],
            )
            .unwrap(),
            make_lightpath(&logical, &physical, &eid("c2"), alloc::vec![eid("q2")]).unwrap(),
            make_lightpath(&logical, &physical, &eid("c3"), alloc::vec![eid("q3")]).unwrap(),
            make_lightpath(&logical, &physical, &eid("c4"), alloc::vec![eid("q4")]).unwrap(),
        ])
        .unwrap();
        let report = is_piecewise_k_survivable(&logical, &m, 1, &physical).unwrap();
        assert!(!report.survivable());
        let failures: Vec<_> = report.failures().collect();
        assert_eq!(failures.len(), 1);
        let (vertex, witness) = failures[0];
        assert_eq!(vertex, &nid("m1"));
        // Least disconnecting used edge: q2 kills both c1 and c2.
        assert_eq!(witness.failure.edges().clone(), BTreeSet::from([eid("q2")]));
        // Replay through the independent component split.
        let piece = contract(&logical, &m.domain_set())
            .unwrap()
            .origin_vertex(&nid("m1"))
            .unwrap();
        let comps = components_after_failure(&piece, &m, witness.failure.edges()).unwrap();
        assert!(comps.len() >= 2);
    }

    #[test]
    fn surviving_path_cases() {
        let (physical, logical, m) = ring_on_ring();
        // A failure that hits nothing: the direct edge survives.
        let miss = FailureSet::new(BTreeSet::from([eid("p3")]), 1, &physical).unwrap();
        let p = surviving_path(&logical, &m, &nid("a"), &nid("b"), &miss)
            .unwrap()
            .unwrap();
        assert_eq!(p.edges(), &[eid("l1")]);
        // Identity case.
        let p = surviving_path(&logical, &m, &nid("a"), &nid("a"), &miss)
            .unwrap()
            .unwrap();
        assert!(p.is_empty());
        // Killing the direct edge forces the three-hop detour.
        let hit = FailureSet::new(BTreeSet::from([eid("p1")]), 1, &physical).unwrap();
        let p = surviving_path(&logical, &m, &nid("a"), &nid("b"), &hit)
            .unwrap()
            .unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.edges(), &[eid("l4"), eid("l3"), eid("l2")]);
    }

    #[test]
    fn surviving_path_absent_when_cut() {
        // Path graph: killing the only edge between u and v leaves nothing.
        let physical = Topology::new(
            Layer::Physical,
            ["u", "v"].map(nid),
            [edge("p1", "u", "v")],
        )
        .unwrap();
        let logical = Topology::new(
            Layer::Logical,
            ["u", "v"].map(nid),
            [edge("l1", "u", "v")],
        )
        .unwrap();
        let m = Mapping::from_lightpaths([
            make_lightpath(&logical, &physical, &eid("l1"), alloc::vec![eid("p1")]).unwrap()
        ])
        .unwrap();
        let f = FailureSet::new(BTreeSet::from([eid("p1")]), 1, &physical).unwrap();
        assert!(surviving_path(&logical, &m, &nid("u"), &nid("v"), &f)
            .unwrap()
            .is_none());
    }

    #[test]
    fn failure_set_validation() {
        let (physical, _) = bridged_districts();
        assert!(matches!(
            FailureSet::new(BTreeSet::from([eid("p12")]), 2, &physical),
            Err(Error::BadFailureSetSize { .. })
        ));
        assert!(matches!(
            FailureSet::new(BTreeSet::from([eid("nope")]), 1, &physical),
            Err(Error::UnknownEdge(_))
        ));
    }

    #[test]
    fn k_subsets_enumerate_in_lexicographic_order() {
        let mut it = KSubsets::new(4, 2);
        let mut all = Vec::new();
        while let Some(ix) = it.next() {
            all.push(ix.to_vec());
        }
        assert_eq!(
            all,
            alloc::vec![
                alloc::vec![0, 1],
                alloc::vec![0, 2],
                alloc::vec![0, 3],
                alloc::vec![1, 2],
                alloc::vec![1, 3],
                alloc::vec![2, 3]
            ]
        );
    }
}
