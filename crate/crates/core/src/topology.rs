//! Graph data model for the physical and logical layers, plus the
//! connectivity and path-enumeration primitives everything else builds on.
//!
//! All determinism in the crate bottoms out here: node labels and edge ids
//! are plain strings, every collection is ordered, and every tie is broken
//! lexicographically on those strings.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use crate::error::{Error, Result};

/// Reported by [`Topology::edge_connectivity`] for a single-node topology,
/// which no edge cut can disconnect.
pub const UNBOUNDED_CONNECTIVITY: usize = usize::MAX;

/// A node label. Ordering is lexicographic on the label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(String);

/// An edge id, unique within one topology. Ordering is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(String);

macro_rules! id_impls {
    ($ty:ident) => {
        impl $ty {
            pub fn new(s: impl Into<String>) -> Self {
                $ty(s.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $ty {
            fn from(s: &str) -> Self {
                $ty::new(s)
            }
        }

        impl From<String> for $ty {
            fn from(s: String) -> Self {
                $ty(s)
            }
        }
    };
}

id_impls!(NodeId);
id_impls!(EdgeId);

/// Which layer a topology belongs to. Physical and logical layers are simple
/// graphs; the contracted layer may hold parallel edges and self-loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layer {
    Physical,
    Logical,
    Contracted,
}

impl Layer {
    fn must_be_simple(self) -> bool {
        !matches!(self, Layer::Contracted)
    }

    pub fn name(self) -> &'static str {
        match self {
            Layer::Physical => "physical",
            Layer::Logical => "logical",
            Layer::Contracted => "contracted",
        }
    }
}

/// An undirected multigraph with named nodes and identified edges.
///
/// Endpoints are stored as a sorted pair, so `(u, v)` and `(v, u)` denote the
/// same edge. Construction validates the layer invariants: endpoints must be
/// declared nodes, ids must be unique, and non-contracted layers must be
/// simple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topology {
    layer: Layer,
    nodes: BTreeSet<NodeId>,
    edges: BTreeMap<EdgeId, (NodeId, NodeId)>,
}

impl Topology {
    pub fn new<N, E>(layer: Layer, nodes: N, edges: E) -> Result<Self>
    where
        N: IntoIterator<Item = NodeId>,
        E: IntoIterator<Item = (EdgeId, NodeId, NodeId)>,
    {
        let nodes: BTreeSet<NodeId> = nodes.into_iter().collect();
        let mut out: BTreeMap<EdgeId, (NodeId, NodeId)> = BTreeMap::new();
        let mut seen_pairs: BTreeMap<(NodeId, NodeId), EdgeId> = BTreeMap::new();
        for (id, a, b) in edges {
            let (u, v) = if a <= b { (a, b) } else { (b, a) };
            for end in [&u, &v] {
                if !nodes.contains(end) {
                    return Err(Error::DanglingEndpoint {
                        edge: id,
                        node: end.clone(),
                    });
                }
            }
            if out.contains_key(&id) {
                return Err(Error::DuplicateEdge(id));
            }
            if layer.must_be_simple() {
                if u == v {
                    return Err(Error::SelfLoop(id));
                }
                if let Some(existing) = seen_pairs.get(&(u.clone(), v.clone())) {
                    return Err(Error::ParallelEdge {
                        edge: id,
                        existing: existing.clone(),
                    });
                }
                seen_pairs.insert((u.clone(), v.clone()), id.clone());
            }
            out.insert(id, (u, v));
        }
        Ok(Topology {
            layer,
            nodes,
            edges: out,
        })
    }

    pub fn layer(&self) -> Layer {
        self.layer
    }

    pub fn nodes(&self) -> &BTreeSet<NodeId> {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_node(&self, n: &NodeId) -> bool {
        self.nodes.contains(n)
    }

    pub fn contains_edge(&self, e: &EdgeId) -> bool {
        self.edges.contains_key(e)
    }

    /// Edge ids with their (sorted) endpoint pairs, in id order.
    pub fn edges(&self) -> impl Iterator<Item = (&EdgeId, &(NodeId, NodeId))> {
        self.edges.iter()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = &EdgeId> {
        self.edges.keys()
    }

    pub fn edge_id_set(&self) -> BTreeSet<EdgeId> {
        self.edges.keys().cloned().collect()
    }

    pub fn endpoints(&self, e: &EdgeId) -> Result<&(NodeId, NodeId)> {
        self.edges.get(e).ok_or_else(|| Error::UnknownEdge(e.clone()))
    }

    pub fn is_self_loop(&self, e: &EdgeId) -> Result<bool> {
        let (u, v) = self.endpoints(e)?;
        Ok(u == v)
    }

    /// Ids of self-loop edges (possible only in the contracted layer).
    pub fn self_loops(&self) -> BTreeSet<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, (u, v))| u == v)
            .map(|(id, _)| id.clone())
            .collect()
    }

    /// Edges incident to `n`, in id order. Self-loops appear once.
    pub fn incident<'a>(
        &'a self,
        n: &'a NodeId,
    ) -> impl Iterator<Item = (&'a EdgeId, &'a (NodeId, NodeId))> + 'a {
        self.edges
            .iter()
            .filter(move |(_, (u, v))| u == n || v == n)
    }

    /// The endpoint of `e` that is not `n`; `n` itself for a self-loop.
    pub fn other_endpoint(&self, e: &EdgeId, n: &NodeId) -> Result<NodeId> {
        let (u, v) = self.endpoints(e)?;
        if u == n {
            Ok(v.clone())
        } else if v == n {
            Ok(u.clone())
        } else {
            Err(Error::BrokenWalk { edge: e.clone() })
        }
    }

    /// True iff the graph with `removed` deleted has a single connected
    /// component over its node set. The empty node set counts as connected.
    pub fn is_connected(&self, removed: &BTreeSet<EdgeId>) -> Result<bool> {
        for e in removed {
            if !self.edges.contains_key(e) {
                return Err(Error::UnknownEdge(e.clone()));
            }
        }
        let Some(start) = self.nodes.iter().next() else {
            return Ok(true);
        };
        Ok(self.reachable_from(start, removed).len() == self.nodes.len())
    }

    /// Nodes reachable from `start` when `removed` edges are deleted.
    pub fn reachable_from(&self, start: &NodeId, removed: &BTreeSet<EdgeId>) -> BTreeSet<NodeId> {
        let mut seen: BTreeSet<NodeId> = BTreeSet::new();
        if !self.nodes.contains(start) {
            return seen;
        }
        let mut stack = vec![start.clone()];
        seen.insert(start.clone());
        while let Some(n) = stack.pop() {
            for (id, _) in self.incident(&n) {
                if removed.contains(id) {
                    continue;
                }
                let next = self.other_endpoint(id, &n).expect("incident edge");
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
        seen
    }

    /// Connected components over the node set with `removed` edges deleted,
    /// ordered by their least node.
    pub fn components(&self, removed: &BTreeSet<EdgeId>) -> Vec<BTreeSet<NodeId>> {
        let mut out = Vec::new();
        let mut left: BTreeSet<NodeId> = self.nodes.clone();
        while let Some(start) = left.iter().next().cloned() {
            let comp = self.reachable_from(&start, removed);
            for n in &comp {
                left.remove(n);
            }
            out.push(comp);
        }
        out
    }

    /// Size of a minimum edge cut. Returns 0 for a disconnected graph and
    /// [`UNBOUNDED_CONNECTIVITY`] for a graph with at most one node.
    /// Self-loops never cross a cut and are ignored. Parallel edges count
    /// individually.
    pub fn edge_connectivity(&self) -> usize {
        if self.nodes.len() <= 1 {
            return UNBOUNDED_CONNECTIVITY;
        }
        if !self.is_connected(&BTreeSet::new()).expect("no removals") {
            return 0;
        }
        // Menger: min over t != s of max-flow(s, t) with unit edge capacities.
        let idx: BTreeMap<&NodeId, usize> = self.nodes.iter().zip(0..).collect();
        let mut arcs: Vec<(usize, usize)> = Vec::new(); // forward arcs; i^1 is the reverse
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for (u, v) in self.edges.values() {
            if u == v {
                continue;
            }
            let (ui, vi) = (idx[u], idx[v]);
            // Undirected unit edge: one unit each way, with residual pairing.
            for (a, b) in [(ui, vi), (vi, ui)] {
                adj[a].push(arcs.len());
                arcs.push((a, b));
            }
        }
        let s = 0usize;
        let mut best = usize::MAX;
        for t in 1..self.nodes.len() {
            best = best.min(max_flow_unit(&arcs, &adj, s, t, best));
        }
        best
    }

    /// All simple paths from `u` to `v`, shortest first, ties broken by the
    /// lexicographic edge-id sequence, truncated at `cap`.
    pub fn enumerate_simple_paths(&self, u: &NodeId, v: &NodeId, cap: usize) -> Result<PathEnumeration> {
        if cap == 0 {
            return Err(Error::ZeroCap("path cap"));
        }
        for n in [u, v] {
            if !self.nodes.contains(n) {
                return Err(Error::UnknownNode(n.clone()));
            }
        }
        if u == v {
            return Ok(PathEnumeration {
                paths: vec![Path::empty(u.clone())],
                truncated: false,
            });
        }
        let mut found: Vec<Vec<EdgeId>> = Vec::new();
        let mut visited: BTreeSet<NodeId> = BTreeSet::new();
        visited.insert(u.clone());
        let mut trail: Vec<EdgeId> = Vec::new();
        self.dfs_simple_paths(u, v, &mut visited, &mut trail, &mut found);
        found.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let truncated = found.len() > cap;
        found.truncate(cap);
        let paths = found
            .into_iter()
            .map(|edges| Path {
                edges,
                endpoints: (u.clone(), v.clone()),
            })
            .collect();
        Ok(PathEnumeration { paths, truncated })
    }

    fn dfs_simple_paths(
        &self,
        at: &NodeId,
        target: &NodeId,
        visited: &mut BTreeSet<NodeId>,
        trail: &mut Vec<EdgeId>,
        found: &mut Vec<Vec<EdgeId>>,
    ) {
        for (id, _) in self.incident(at) {
            let next = self.other_endpoint(id, at).expect("incident edge");
            if next == *target {
                trail.push(id.clone());
                found.push(trail.clone());
                trail.pop();
                continue;
            }
            if visited.contains(&next) {
                continue;
            }
            visited.insert(next.clone());
            trail.push(id.clone());
            self.dfs_simple_paths(&next, target, visited, trail, found);
            trail.pop();
            visited.remove(&next);
        }
    }

    /// A minimum-hop path from `u` to `v`; among those, the lexicographically
    /// least edge-id sequence.
    pub fn shortest_path(&self, u: &NodeId, v: &NodeId) -> Result<Path> {
        for n in [u, v] {
            if !self.nodes.contains(n) {
                return Err(Error::UnknownNode(n.clone()));
            }
        }
        if u == v {
            return Ok(Path::empty(u.clone()));
        }
        // Layered DP: best[w] = least edge sequence over all min-hop paths.
        // All sequences compared for one node have equal length, so plain
        // lexicographic comparison is well defined.
        let mut best: BTreeMap<NodeId, Vec<EdgeId>> = BTreeMap::new();
        best.insert(u.clone(), Vec::new());
        let mut frontier: BTreeSet<NodeId> = BTreeSet::new();
        frontier.insert(u.clone());
        while !frontier.is_empty() && !best.contains_key(v) {
            let mut next_best: BTreeMap<NodeId, Vec<EdgeId>> = BTreeMap::new();
            for n in &frontier {
                let prefix = best[n].clone();
                for (id, _) in self.incident(n) {
                    let m = self.other_endpoint(id, n).expect("incident edge");
                    if best.contains_key(&m) {
                        continue;
                    }
                    let mut seq = prefix.clone();
                    seq.push(id.clone());
                    match next_best.get(&m) {
                        Some(cur) if *cur <= seq => {}
                        _ => {
                            next_best.insert(m.clone(), seq);
                        }
                    }
                }
            }
            frontier = next_best.keys().cloned().collect();
            best.extend(next_best);
        }
        match best.remove(v) {
            Some(edges) => Ok(Path {
                edges,
                endpoints: (u.clone(), v.clone()),
            }),
            None => Err(Error::NoPath {
                from: u.clone(),
                to: v.clone(),
            }),
        }
    }
}

/// One unit-capacity max-flow (BFS augmentation). `arcs[i]` pairs with the
/// reverse arc `i ^ 1`. Stops early once `cap_hint` is reached.
fn max_flow_unit(arcs: &[(usize, usize)], adj: &[Vec<usize>], s: usize, t: usize, cap_hint: usize) -> usize {
    let mut used = vec![false; arcs.len()];
    let mut flow = 0usize;
    loop {
        if flow >= cap_hint {
            return flow;
        }
        // BFS for an augmenting path in the residual graph.
        let mut pred: Vec<Option<usize>> = vec![None; adj.len()];
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(s);
        let mut reached = vec![false; adj.len()];
        reached[s] = true;
        'bfs: while let Some(n) = queue.pop_front() {
            for &ai in &adj[n] {
                let (_, to) = arcs[ai];
                if used[ai] || reached[to] {
                    continue;
                }
                reached[to] = true;
                pred[to] = Some(ai);
                if to == t {
                    break 'bfs;
                }
                queue.push_back(to);
            }
        }
        if !reached[t] {
            return flow;
        }
        let mut at = t;
        while at != s {
            let ai = pred[at].expect("augmenting path");
            // Pushing against existing reverse flow cancels it.
            if used[ai ^ 1] {
                used[ai ^ 1] = false;
            } else {
                used[ai] = true;
            }
            at = arcs[ai].0;
        }
        flow += 1;
    }
}

/// An ordered walk of edge ids between two declared endpoints.
///
/// Invariants (enforced by [`Path::new`]): consecutive edges share a node,
/// the first and last edges touch the declared endpoints, and the path
/// between a node and itself is the empty sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    edges: Vec<EdgeId>,
    endpoints: (NodeId, NodeId),
}

impl Path {
    pub fn empty(at: NodeId) -> Self {
        Path {
            edges: Vec::new(),
            endpoints: (at.clone(), at),
        }
    }

    /// Validate `edges` as a walk from `from` to `to` in `host` and check it
    /// visits no node twice.
    pub fn new(host: &Topology, from: NodeId, to: NodeId, edges: Vec<EdgeId>) -> Result<Self> {
        for n in [&from, &to] {
            if !host.contains_node(n) {
                return Err(Error::UnknownNode(n.clone()));
            }
        }
        if edges.is_empty() {
            if from != to {
                return Err(Error::BadEmptyPath { from, to });
            }
            return Ok(Path::empty(from));
        }
        if from == to {
            return Err(Error::BadEmptyPath { from, to });
        }
        let mut seen: BTreeSet<NodeId> = BTreeSet::new();
        seen.insert(from.clone());
        let mut at = from.clone();
        for e in &edges {
            let next = host.other_endpoint(e, &at)?;
            if !seen.insert(next.clone()) {
                return Err(Error::NotSimple(e.clone()));
            }
            at = next;
        }
        if at != to {
            return Err(Error::EndpointMismatch {
                expected: (from.clone(), to),
                found: (from, at),
            });
        }
        Ok(Path {
            edges,
            endpoints: (from, to),
        })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn edge_set(&self) -> BTreeSet<EdgeId> {
        self.edges.iter().cloned().collect()
    }

    pub fn endpoints(&self) -> &(NodeId, NodeId) {
        &self.endpoints
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Nodes visited in order, endpoints included.
    pub fn nodes(&self, host: &Topology) -> Result<Vec<NodeId>> {
        let mut out = vec![self.endpoints.0.clone()];
        let mut at = self.endpoints.0.clone();
        for e in &self.edges {
            at = host.other_endpoint(e, &at)?;
            out.push(at.clone());
        }
        Ok(out)
    }

    pub fn reversed(&self) -> Path {
        Path {
            edges: self.edges.iter().rev().cloned().collect(),
            endpoints: (self.endpoints.1.clone(), self.endpoints.0.clone()),
        }
    }
}

/// Result of a capped simple-path enumeration.
#[derive(Debug, Clone)]
pub struct PathEnumeration {
    pub paths: Vec<Path>,
    /// True when more paths existed than the cap allowed.
    pub truncated: bool,
}

/// A (node set, edge set) selection inside a host topology.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgraph {
    pub nodes: BTreeSet<NodeId>,
    pub edges: BTreeSet<EdgeId>,
}

impl Subgraph {
    /// Build from an edge set; nodes are the touched endpoints.
    pub fn from_edges(host: &Topology, edges: BTreeSet<EdgeId>) -> Result<Self> {
        let mut nodes = BTreeSet::new();
        for e in &edges {
            let (u, v) = host.endpoints(e)?;
            nodes.insert(u.clone());
            nodes.insert(v.clone());
        }
        Ok(Subgraph { nodes, edges })
    }

    /// Validate membership in `host` and materialize as a standalone
    /// topology carrying the host's layer tag.
    pub fn to_topology(&self, host: &Topology) -> Result<Topology> {
        for n in &self.nodes {
            if !host.contains_node(n) {
                return Err(Error::NotASubgraph(format!("node `{n}` not in host")));
            }
        }
        let mut edges = Vec::new();
        for e in &self.edges {
            let (u, v) = host.endpoints(e)?;
            if !self.nodes.contains(u) || !self.nodes.contains(v) {
                return Err(Error::NotASubgraph(format!(
                    "edge `{e}` leaves the subgraph node set"
                )));
            }
            edges.push((e.clone(), u.clone(), v.clone()));
        }
        Topology::new(host.layer(), self.nodes.iter().cloned(), edges)
    }
}

/// Validate the physical/logical pairing: logical nodes must exist in the
/// physical layer and both layers must be connected.
pub fn validate_layer_pair(physical: &Topology, logical: &Topology) -> Result<()> {
    for n in logical.nodes() {
        if !physical.contains_node(n) {
            return Err(Error::NodeNotPhysical(n.clone()));
        }
    }
    if !physical.is_connected(&BTreeSet::new())? {
        return Err(Error::DisconnectedLayer("physical"));
    }
    if !logical.is_connected(&BTreeSet::new())? {
        return Err(Error::DisconnectedLayer("logical"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nid(s: &str) -> NodeId {
        NodeId::new(s)
    }

    fn eid(s: &str) -> EdgeId {
        EdgeId::new(s)
    }

    fn edge(id: &str, u: &str, v: &str) -> (EdgeId, NodeId, NodeId) {
        (eid(id), nid(u), nid(v))
    }

    /// 4-cycle a-b-c-d with edges e1(a,b) e2(b,c) e3(c,d) e4(a,d).
    fn four_cycle() -> Topology {
        Topology::new(
            Layer::Physical,
            ["a", "b", "c", "d"].map(nid),
            [
                edge("e1", "a", "b"),
                edge("e2", "b", "c"),
                edge("e3", "c", "d"),
                edge("e4", "d", "a"),
            ],
        )
        .unwrap()
    }

    fn k4() -> Topology {
        Topology::new(
            Layer::Physical,
            ["a", "b", "c", "d"].map(nid),
            [
                edge("e1", "a", "b"),
                edge("e2", "a", "c"),
                edge("e3", "a", "d"),
                edge("e4", "b", "c"),
                edge("e5", "b", "d"),
                edge("e6", "c", "d"),
            ],
        )
        .unwrap()
    }

    fn path3() -> Topology {
        Topology::new(
            Layer::Physical,
            ["u", "v", "w"].map(nid),
            [edge("p1", "u", "v"), edge("p2", "v", "w")],
        )
        .unwrap()
    }

    #[test]
    fn simple_layer_rejects_self_loop() {
        let err = Topology::new(Layer::Logical, [nid("u")], [edge("e1", "u", "u")]).unwrap_err();
        assert_eq!(err, Error::SelfLoop(eid("e1")));
    }

    #[test]
    fn simple_layer_rejects_parallel_edges() {
        let err = Topology::new(
            Layer::Physical,
            ["u", "v"].map(nid),
            [edge("e1", "u", "v"), edge("e2", "v", "u")],
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::ParallelEdge {
                edge: eid("e2"),
                existing: eid("e1")
            }
        );
    }

    #[test]
    fn contracted_layer_allows_loops_and_parallels() {
        let t = Topology::new(
            Layer::Contracted,
            ["u", "v"].map(nid),
            [
                edge("e1", "u", "v"),
                edge("e2", "v", "u"),
                edge("e3", "u", "u"),
            ],
        )
        .unwrap();
        assert_eq!(t.self_loops(), BTreeSet::from([eid("e3")]));
    }

    #[test]
    fn rejects_dangling_endpoint_and_duplicate_id() {
        let err =
            Topology::new(Layer::Physical, [nid("u")], [edge("e1", "u", "x")]).unwrap_err();
        assert_eq!(
            err,
            Error::DanglingEndpoint {
                edge: eid("e1"),
                node: nid("x")
            }
        );
        let err = Topology::new(
            Layer::Physical,
            ["u", "v", "w"].map(nid),
            [edge("e1", "u", "v"), edge("e1", "v", "w")],
        )
        .unwrap_err();
        assert_eq!(err, Error::DuplicateEdge(eid("e1")));
    }

    #[test]
    fn connectivity_on_cycle() {
        let g = four_cycle();
        assert!(g.is_connected(&BTreeSet::new()).unwrap());
        assert!(g.is_connected(&BTreeSet::from([eid("e1")])).unwrap());
        // Two non-adjacent removals split the cycle.
        assert!(!g
            .is_connected(&BTreeSet::from([eid("e1"), eid("e3")]))
            .unwrap());
    }

    #[test]
    fn bridge_removal_disconnects() {
        let g = path3();
        assert!(!g.is_connected(&BTreeSet::from([eid("p1")])).unwrap());
    }

    #[test]
    fn connectivity_rejects_unknown_removed_edge() {
        let g = path3();
        assert_eq!(
            g.is_connected(&BTreeSet::from([eid("zz")])).unwrap_err(),
            Error::UnknownEdge(eid("zz"))
        );
    }

    #[test]
    fn empty_topology_is_connected() {
        let g = Topology::new(Layer::Physical, [], []).unwrap();
        assert!(g.is_connected(&BTreeSet::new()).unwrap());
    }

    #[test]
    fn edge_connectivity_values() {
        assert_eq!(four_cycle().edge_connectivity(), 2);
        assert_eq!(k4().edge_connectivity(), 3);
        assert_eq!(path3().edge_connectivity(), 1);
        let single = Topology::new(Layer::Physical, [nid("u")], []).unwrap();
        assert_eq!(single.edge_connectivity(), UNBOUNDED_CONNECTIVITY);
        let split = Topology::new(Layer::Contracted, ["u", "v"].map(nid), []).unwrap();
        assert_eq!(split.edge_connectivity(), 0);
    }

    #[test]
    fn edge_connectivity_counts_parallel_edges_ignores_loops() {
        let t = Topology::new(
            Layer::Contracted,
            ["u", "v"].map(nid),
            [
                edge("e1", "u", "v"),
                edge("e2", "u", "v"),
                edge("e3", "u", "v"),
                edge("l1", "v", "v"),
            ],
        )
        .unwrap();
        assert_eq!(t.edge_connectivity(), 3);
    }

    #[test]
    fn simple_paths_on_cycle_opposite_corners() {
        let g = four_cycle();
        let en = g.enumerate_simple_paths(&nid("a"), &nid("c"), 10).unwrap();
        assert!(!en.truncated);
        let seqs: Vec<&[EdgeId]> = en.paths.iter().map(|p| p.edges()).collect();
        assert_eq!(
            seqs,
            vec![
                &[eid("e1"), eid("e2")][..],
                &[eid("e4"), eid("e3")][..]
            ]
        );
    }

    #[test]
    fn simple_paths_same_node_is_single_empty_path() {
        let g = four_cycle();
        let en = g.enumerate_simple_paths(&nid("a"), &nid("a"), 10).unwrap();
        assert_eq!(en.paths.len(), 1);
        assert!(en.paths[0].is_empty());
    }

    /// Independent count of simple paths by brute-force permutation check.
    fn brute_count_paths(g: &Topology, u: &NodeId, v: &NodeId) -> usize {
        fn rec(g: &Topology, at: &NodeId, v: &NodeId, seen: &mut BTreeSet<NodeId>) -> usize {
            if at == v {
                return 1;
            }
            let mut total = 0;
            for (id, _) in g.incident(at) {
                let next = g.other_endpoint(id, at).unwrap();
                if seen.contains(&next) {
                    continue;
                }
                seen.insert(next.clone());
                total += rec(g, &next, v, seen);
                seen.remove(&next);
            }
            total
        }
        let mut seen = BTreeSet::from([u.clone()]);
        rec(g, u, v, &mut seen)
    }

    #[test]
    fn k4_adjacent_nodes_have_five_simple_paths() {
        let g = k4();
        let en = g.enumerate_simple_paths(&nid("a"), &nid("b"), 10).unwrap();
        assert_eq!(en.paths.len(), 5);
        assert_eq!(brute_count_paths(&g, &nid("a"), &nid("b")), 5);
        assert!(!en.truncated);
        // Shortest first.
        assert_eq!(en.paths[0].len(), 1);
    }

    #[test]
    fn cap_truncates_and_reports() {
        let g = k4();
        let en = g.enumerate_simple_paths(&nid("a"), &nid("b"), 2).unwrap();
        assert_eq!(en.paths.len(), 2);
        assert!(en.truncated);
        assert_eq!(
            g.enumerate_simple_paths(&nid("a"), &nid("b"), 0).unwrap_err(),
            Error::ZeroCap("path cap")
        );
        assert_eq!(
            g.enumerate_simple_paths(&nid("zz"), &nid("b"), 2).unwrap_err(),
            Error::UnknownNode(nid("zz"))
        );
    }

    #[test]
    fn shortest_path_adjacent_and_identity() {
        let g = four_cycle();
        assert_eq!(
            g.shortest_path(&nid("a"), &nid("b")).unwrap().edges(),
            &[eid("e1")]
        );
        assert!(g.shortest_path(&nid("a"), &nid("a")).unwrap().is_empty());
    }

    #[test]
    fn shortest_path_breaks_ties_lexicographically() {
        let g = four_cycle();
        // Both a->c paths have two hops; ["e1","e2"] < ["e4","e3"].
        let expected = [vec![eid("e1"), eid("e2")], vec![eid("e4"), eid("e3")]]
            .into_iter()
            .min()
            .unwrap();
        assert_eq!(g.shortest_path(&nid("a"), &nid("c")).unwrap().edges(), &expected[..]);
    }

    #[test]
    fn shortest_path_errors_without_route() {
        let g = Topology::new(Layer::Contracted, ["u", "v"].map(nid), []).unwrap();
        assert_eq!(
            g.shortest_path(&nid("u"), &nid("v")).unwrap_err(),
            Error::NoPath {
                from: nid("u"),
                to: nid("v")
            }
        );
    }

    #[test]
    fn path_validation() {
        let g = four_cycle();
        let p = Path::new(&g, nid("a"), nid("c"), vec![eid("e1"), eid("e2")]).unwrap();
        assert_eq!(p.nodes(&g).unwrap(), vec![nid("a"), nid("b"), nid("c")]);
        assert_eq!(p.reversed().edges(), &[eid("e2"), eid("e1")]);
        // Wrong terminal node.
        assert!(matches!(
            Path::new(&g, nid("a"), nid("d"), vec![eid("e1"), eid("e2")]),
            Err(Error::EndpointMismatch { .. })
        ));
        // Disconnected sequence.
        assert!(matches!(
            Path::new(&g, nid("a"), nid("d"), vec![eid("e1"), eid("e3")]),
            Err(Error::BrokenWalk { .. })
        ));
        // Empty only between equal endpoints.
        assert!(matches!(
            Path::new(&g, nid("a"), nid("b"), vec![]),
            Err(Error::BadEmptyPath { .. })
        ));
        assert!(Path::new(&g, nid("a"), nid("a"), vec![]).unwrap().is_empty());
    }

    #[test]
    fn path_rejects_node_revisit() {
        // Full cycle returns to its start.
        let g = four_cycle();
        assert!(matches!(
            Path::new(
                &g,
                nid("a"),
                nid("a"),
                vec![eid("e1"), eid("e2"), eid("e3"), eid("e4")]
            ),
            Err(Error::BadEmptyPath { .. }) | Err(Error::NotSimple(_))
        ));
    }

    #[test]
    fn subgraph_roundtrip_and_validation() {
        let g = k4();
        let sub = Subgraph::from_edges(&g, BTreeSet::from([eid("e1"), eid("e2")])).unwrap();
        assert_eq!(sub.nodes, ["a", "b", "c"].map(nid).into());
        let t = sub.to_topology(&g).unwrap();
        assert_eq!(t.edge_count(), 2);
        let bad = Subgraph {
            nodes: BTreeSet::from([nid("a")]),
            edges: BTreeSet::from([eid("e1")]),
        };
        assert!(matches!(bad.to_topology(&g), Err(Error::NotASubgraph(_))));
    }

    #[test]
    fn layer_pair_validation() {
        let phys = four_cycle();
        let logical = Topology::new(
            Layer::Logical,
            ["a", "b"].map(nid),
            [edge("l1", "a", "b")],
        )
        .unwrap();
        assert!(validate_layer_pair(&phys, &logical).is_ok());
        let alien = Topology::new(
            Layer::Logical,
            ["a", "z"].map(nid),
            [edge("l1", "a", "z")],
        )
        .unwrap();
        assert_eq!(
            validate_layer_pair(&phys, &alien).unwrap_err(),
            Error::NodeNotPhysical(nid("z"))
        );
    }
}
