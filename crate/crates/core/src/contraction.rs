//! Edge contraction on multigraphs and the origin bookkeeping that maps
//! contracted vertices back to the original subgraphs they collapse.
//!
//! Contracting an edge deletes it and merges its end-nodes; contracting a set
//! of edges does this for every member, and the outcome is independent of the
//! order in which they are taken. Surviving edges keep their original ids,
//! so the contracted edge set is exactly `E \ A`. A surviving edge whose
//! endpoints fall into one contracted vertex becomes a self-loop and is kept.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::{Error, Result};
use crate::topology::{EdgeId, Layer, NodeId, Subgraph, Topology};

/// A contracted multigraph together with the origin relation and the base
/// topology it was produced from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedTopology {
    graph: Topology,
    contracted: BTreeSet<EdgeId>,
    /// Contracted vertex (named by the least original node it absorbs) to
    /// the set of original nodes it stands for. Values partition the
    /// original node set.
    origins: BTreeMap<NodeId, BTreeSet<NodeId>>,
    base: Topology,
}

/// Contract `g` on the edge set `a`.
pub fn contract(g: &Topology, a: &BTreeSet<EdgeId>) -> Result<ContractedTopology> {
    for e in a {
        if !g.contains_edge(e) {
            return Err(Error::UnknownEdge(e.clone()));
        }
    }
    // Union-find over the original nodes; only a-edges merge.
    let nodes: Vec<&NodeId> = g.nodes().iter().collect();
    let index: BTreeMap<&NodeId, usize> = nodes.iter().copied().zip(0..).collect();
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for e in a {
        let (u, v) = g.endpoints(e)?;
        let (ru, rv) = (find(&mut parent, index[u]), find(&mut parent, index[v]));
        if ru != rv {
            parent[ru] = rv;
        }
    }
    let mut groups: BTreeMap<usize, BTreeSet<NodeId>> = BTreeMap::new();
    for (i, n) in nodes.iter().enumerate() {
        groups
            .entry(find(&mut parent, i))
            .or_default()
            .insert((*n).clone());
    }
    // Canonical vertex name: the least original label in the group.
    let mut origins: BTreeMap<NodeId, BTreeSet<NodeId>> = BTreeMap::new();
    let mut vertex_of: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    for group in groups.into_values() {
        let name = group.iter().next().expect("nonempty group").clone();
        for n in &group {
            vertex_of.insert(n.clone(), name.clone());
        }
        origins.insert(name, group);
    }
    let surviving = g
        .edges()
        .filter(|(id, _)| !a.contains(*id))
        .map(|(id, (u, v))| (id.clone(), vertex_of[u].clone(), vertex_of[v].clone()));
    let graph = Topology::new(Layer::Contracted, origins.keys().cloned(), surviving)?;
    Ok(ContractedTopology {
        graph,
        contracted: a.clone(),
        origins,
        base: g.clone(),
    })
}

impl ContractedTopology {
    /// The contracted multigraph (layer `Contracted`).
    pub fn graph(&self) -> &Topology {
        &self.graph
    }

    /// The topology the contraction was applied to.
    pub fn base(&self) -> &Topology {
        &self.base
    }

    /// The contracted edge set A.
    pub fn contracted_set(&self) -> &BTreeSet<EdgeId> {
        &self.contracted
    }

    pub fn origins(&self) -> &BTreeMap<NodeId, BTreeSet<NodeId>> {
        &self.origins
    }

    pub fn origin_nodes(&self, v: &NodeId) -> Result<&BTreeSet<NodeId>> {
        self.origins
            .get(v)
            .ok_or_else(|| Error::UnknownNode(v.clone()))
    }

    /// The contracted vertex an original node was absorbed into.
    pub fn vertex_of(&self, original: &NodeId) -> Result<&NodeId> {
        self.origins
            .iter()
            .find(|(_, group)| group.contains(original))
            .map(|(name, _)| name)
            .ok_or_else(|| Error::UnknownNode(original.clone()))
    }

    pub fn is_single_vertex(&self) -> bool {
        self.graph.node_count() == 1
    }

    /// Surviving edges that became self-loops.
    pub fn self_loops(&self) -> BTreeSet<EdgeId> {
        self.graph.self_loops()
    }

    /// The maximal original subgraph collapsed into vertex `v`: its origin
    /// nodes plus the contracted edges internal to them.
    pub fn origin_vertex(&self, v: &NodeId) -> Result<Topology> {
        let nodes = self.origin_nodes(v)?;
        let edges = self
            .contracted
            .iter()
            .filter_map(|e| {
                let (u, w) = self.base.endpoints(e).expect("contracted edge in base");
                (nodes.contains(u) && nodes.contains(w))
                    .then(|| (e.clone(), u.clone(), w.clone()))
            })
            .collect::<Vec<_>>();
        Topology::new(self.base.layer(), nodes.iter().cloned(), edges)
    }

    /// The maximal original subgraph collapsed into `sub`: the union of the
    /// vertex origins plus `sub`'s own surviving edges with their original
    /// endpoints.
    pub fn origin_subgraph(&self, sub: &Subgraph) -> Result<Topology> {
        let mut nodes: BTreeSet<NodeId> = BTreeSet::new();
        let mut edges: BTreeMap<EdgeId, (NodeId, NodeId)> = BTreeMap::new();
        for v in &sub.nodes {
            let piece = self.origin_vertex(v)?;
            nodes.extend(piece.nodes().iter().cloned());
            for (id, (u, w)) in piece.edges() {
                edges.insert(id.clone(), (u.clone(), w.clone()));
            }
        }
        for e in &sub.edges {
            if !self.graph.contains_edge(e) {
                return Err(Error::UnknownEdge(e.clone()));
            }
            let (cu, cv) = self.graph.endpoints(e)?;
            if !sub.nodes.contains(cu) || !sub.nodes.contains(cv) {
                return Err(Error::NotASubgraph(alloc::format!(
                    "edge `{e}` leaves the subgraph node set"
                )));
            }
            let (u, w) = self.base.endpoints(e)?;
            edges.insert(e.clone(), (u.clone(), w.clone()));
        }
        Topology::new(
            self.base.layer(),
            nodes,
            edges.into_iter().map(|(id, (u, w))| (id, u, w)),
        )
    }

    /// Canonical text form of the contraction, self-loops excluded: one line
    /// per vertex with its sorted origin set, then one line per surviving
    /// non-loop edge with its contracted endpoints. Two contractions of the
    /// same base are equal iff their canonical forms are byte-identical.
    pub fn canonical_form(&self) -> String {
        let mut out = String::new();
        for (v, group) in &self.origins {
            let _ = write!(out, "vertex {v}:");
            for n in group {
                let _ = write!(out, " {n}");
            }
            out.push('\n');
        }
        for (e, (u, v)) in self.graph.edges() {
            if u == v {
                continue;
            }
            let _ = writeln!(out, "edge {e} {u} {v}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgen::{bridged_districts, eid, nid};

    fn edge(id: &str, u: &str, v: &str) -> (EdgeId, NodeId, NodeId) {
        (eid(id), nid(u), nid(v))
    }

    /// Triangle s-t-x contracted with the pair y-z; w stays a lone vertex.
    /// Surviving edges h(x,y), i(z,w), j(w,s) keep the graph connected.
    fn star_of_pieces() -> Topology {
        Topology::new(
            Layer::Logical,
            ["s", "t", "w", "x", "y", "z"].map(nid),
            [
                edge("a", "s", "t"),
                edge("b", "t", "x"),
                edge("c", "s", "x"),
                edge("g", "y", "z"),
                edge("h", "x", "y"),
                edge("i", "z", "w"),
                edge("j", "w", "s"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn contract_nothing_is_identity_with_singleton_origins() {
        let g = star_of_pieces();
        let ct = contract(&g, &BTreeSet::new()).unwrap();
        assert_eq!(ct.graph().node_count(), g.node_count());
        assert_eq!(ct.graph().edge_count(), g.edge_count());
        for (v, group) in ct.origins() {
            assert_eq!(group.len(), 1);
            assert!(group.contains(v));
        }
    }

    #[test]
    fn contract_merges_pieces_and_tracks_origins() {
        let g = star_of_pieces();
        let a: BTreeSet<EdgeId> = ["a", "b", "c", "g"].map(eid).into();
        let ct = contract(&g, &a).unwrap();
        // Pieces: {s,t,x} named "s", {y,z} named "y", {w} named "w".
        assert_eq!(
            ct.origins().keys().cloned().collect::<Vec<_>>(),
            ["s", "w", "y"].map(nid)
        );
        let pair_piece = ct.origin_vertex(&nid("y")).unwrap();
        assert_eq!(pair_piece.nodes().clone(), ["y", "z"].map(nid).into());
        assert_eq!(pair_piece.edge_id_set(), BTreeSet::from([eid("g")]));
        let lone = ct.origin_vertex(&nid("w")).unwrap();
        assert_eq!(lone.node_count(), 1);
        assert_eq!(lone.edge_count(), 0);
        // Surviving edges keep their ids: E^C = E \ A.
        assert_eq!(
            ct.graph().edge_id_set(),
            ["h", "i", "j"].map(eid).into()
        );
        assert_eq!(ct.vertex_of(&nid("z")).unwrap(), &nid("y"));
        assert_eq!(ct.vertex_of(&nid("t")).unwrap(), &nid("s"));
    }

    #[test]
    fn contract_everything_collapses_to_one_vertex() {
        let g = star_of_pieces();
        let all = g.edge_id_set();
        let ct = contract(&g, &all).unwrap();
        assert!(ct.is_single_vertex());
        assert_eq!(ct.graph().edge_count(), 0);
        assert_eq!(ct.origin_nodes(&nid("s")).unwrap().len(), 6);
    }

    #[test]
    fn origins_partition_the_node_set() {
        let g = star_of_pieces();
        let a: BTreeSet<EdgeId> = ["a", "g", "i"].map(eid).into();
        let ct = contract(&g, &a).unwrap();
        let mut seen: BTreeSet<NodeId> = BTreeSet::new();
        for group in ct.origins().values() {
            for n in group {
                assert!(seen.insert(n.clone()), "origin sets must be disjoint");
            }
        }
        assert_eq!(seen, g.nodes().clone());
    }

    #[test]
    fn self_loops_are_kept_and_flagged() {
        // 4-cycle with three edges contracted: the fourth becomes a loop.
        let g = Topology::new(
            Layer::Logical,
            ["a", "b", "c", "d"].map(nid),
            [
                edge("e1", "a", "b"),
                edge("e2", "b", "c"),
                edge("e3", "c", "d"),
                edge("e4", "d", "a"),
            ],
        )
        .unwrap();
        let a: BTreeSet<EdgeId> = ["e1", "e2", "e3"].map(eid).into();
        let ct = contract(&g, &a).unwrap();
        assert!(ct.is_single_vertex());
        assert_eq!(ct.self_loops(), BTreeSet::from([eid("e4")]));
        assert_eq!(ct.graph().edge_count(), 1);
    }

    #[test]
    fn district_contraction_yields_parallel_cross_links() {
        let (_, logical) = bridged_districts();
        let a: BTreeSet<EdgeId> = ["a", "b", "c", "f", "g", "h"].map(eid).into();
        let ct = contract(&logical, &a).unwrap();
        assert_eq!(ct.graph().node_count(), 2);
        assert_eq!(ct.graph().edge_id_set(), ["d", "e"].map(eid).into());
        // Both cross links run between the same contracted vertices.
        assert_eq!(
            ct.graph().endpoints(&eid("d")).unwrap(),
            ct.graph().endpoints(&eid("e")).unwrap()
        );
        assert!(ct.self_loops().is_empty());
    }

    #[test]
    fn origin_of_whole_contraction_is_the_base() {
        let (_, logical) = bridged_districts();
        let a: BTreeSet<EdgeId> = ["a", "b", "c", "f", "g", "h"].map(eid).into();
        let ct = contract(&logical, &a).unwrap();
        let whole = Subgraph::from_edges(ct.graph(), ct.graph().edge_id_set()).unwrap();
        let back = ct.origin_subgraph(&whole).unwrap();
        assert_eq!(back.nodes(), logical.nodes());
        assert_eq!(back.edge_id_set(), logical.edge_id_set());
    }

    #[test]
    fn origin_subgraph_of_single_vertex_matches_origin_vertex() {
        let g = star_of_pieces();
        let a: BTreeSet<EdgeId> = ["a", "b", "c", "g"].map(eid).into();
        let ct = contract(&g, &a).unwrap();
        let sub = Subgraph {
            nodes: BTreeSet::from([nid("y")]),
            edges: BTreeSet::new(),
        };
        assert_eq!(
            ct.origin_subgraph(&sub).unwrap(),
            ct.origin_vertex(&nid("y")).unwrap()
        );
    }

    #[test]
    fn vertex_count_matches_independent_union_find() {
        // Independent count: components of (V, A) via repeated set merging.
        let g = star_of_pieces();
        for a_ids in [
            ["a", "b"].as_slice(),
            ["a", "g", "i"].as_slice(),
            ["h", "i", "j"].as_slice(),
        ] {
            let a: BTreeSet<EdgeId> = a_ids.iter().map(|s| eid(s)).collect();
            let mut sets: Vec<BTreeSet<NodeId>> =
                g.nodes().iter().map(|n| BTreeSet::from([n.clone()])).collect();
            for e in &a {
                let (u, v) = g.endpoints(e).unwrap();
                let iu = sets.iter().position(|s| s.contains(u)).unwrap();
                let iv = sets.iter().position(|s| s.contains(v)).unwrap();
                if iu != iv {
                    let merged: BTreeSet<NodeId> =
                        sets[iu].union(&sets[iv]).cloned().collect();
                    let (lo, hi) = (iu.min(iv), iu.max(iv));
                    sets.remove(hi);
                    sets[lo] = merged;
                }
            }
            let ct = contract(&g, &a).unwrap();
            assert_eq!(ct.graph().node_count(), sets.len());
        }
    }

    #[test]
    fn canonical_form_is_stable() {
        let (_, logical) = bridged_districts();
        let a: BTreeSet<EdgeId> = ["a", "b", "c", "f", "g", "h"].map(eid).into();
        let ct = contract(&logical, &a).unwrap();
        assert_eq!(
            ct.canonical_form(),
            "vertex n1: n1 n2 n3\nvertex n4: n4 n5 n6\nedge d n1 n4\nedge e n1 n4\n"
        );
    }

    #[test]
    fn contract_rejects_unknown_edges() {
        let g = star_of_pieces();
        let err = contract(&g, &BTreeSet::from([eid("zz")])).unwrap_err();
        assert_eq!(err, Error::UnknownEdge(eid("zz")));
    }
}
