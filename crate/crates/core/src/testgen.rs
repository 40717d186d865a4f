//! Deterministic instance generators and independent reference checks.
//!
//! Everything here exists for the test suites: seeded random topology pairs,
//! a standing two-district fixture, and brute-force re-implementations of the
//! survivability semantics that deliberately share no code with the checked
//! implementations. Production code never calls into this module.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use alloc::{format, vec};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::mapping::{make_lightpath, Mapping};
use crate::topology::{EdgeId, Layer, NodeId, Topology};

pub fn nid(s: &str) -> NodeId {
    NodeId::new(s)
}

pub fn eid(s: &str) -> EdgeId {
    EdgeId::new(s)
}

fn edge(id: &str, u: &str, v: &str) -> (EdgeId, NodeId, NodeId) {
    (eid(id), nid(u), nid(v))
}

/// Two triangle districts bridged by two cross links.
///
/// ```text
/// physical: triangles p12/p23/p13 on n1..n3 and p45/p56/p46 on n4..n6,
///           crossings x14 (n1-n4) and x25 (n2-n5)
/// logical:  triangles a/b/c and f/g/h on the same nodes,
///           crossings d (n1-n4) and e (n2-n5)
/// ```
///
/// Deleting x14 leaves a single physical route between the districts, which
/// makes the two cross links impossible to map edge-disjointly.
pub fn bridged_districts() -> (Topology, Topology) {
    let nodes = ["n1", "n2", "n3", "n4", "n5", "n6"].map(nid);
    let physical = Topology::new(
        Layer::Physical,
        nodes.clone(),
        [
            edge("p12", "n1", "n2"),
            edge("p23", "n2", "n3"),
            edge("p13", "n1", "n3"),
            edge("p45", "n4", "n5"),
            edge("p56", "n5", "n6"),
            edge("p46", "n4", "n6"),
            edge("x14", "n1", "n4"),
            edge("x25", "n2", "n5"),
        ],
    )
    .expect("fixture physical");
    let logical = Topology::new(
        Layer::Logical,
        nodes,
        [
            edge("a", "n1", "n2"),
            edge("b", "n2", "n3"),
            edge("c", "n1", "n3"),
            edge("f", "n4", "n5"),
            edge("g", "n5", "n6"),
            edge("h", "n4", "n6"),
            edge("d", "n1", "n4"),
            edge("e", "n2", "n5"),
        ],
    )
    .expect("fixture logical");
    (physical, logical)
}

/// The fixture physical topology with the `x14` crossing removed.
pub fn bridged_districts_one_crossing() -> (Topology, Topology) {
    let (physical, logical) = bridged_districts();
    let edges: Vec<_> = physical
        .edges()
        .filter(|(id, _)| id.as_str() != "x14")
        .map(|(id, (u, v))| (id.clone(), u.clone(), v.clone()))
        .collect();
    let physical = Topology::new(Layer::Physical, physical.nodes().iter().cloned(), edges)
        .expect("fixture physical minus crossing");
    (physical, logical)
}

/// Identity-style mapping of the two logical triangles (a,b,c,f,g,h).
pub fn district_triangle_mapping(physical: &Topology, logical: &Topology) -> Mapping {
    let pairs = [
        ("a", "p12"),
        ("b", "p23"),
        ("c", "p13"),
        ("f", "p45"),
        ("g", "p56"),
        ("h", "p46"),
    ];
    Mapping::from_lightpaths(
        pairs
            .iter()
            .map(|(l, p)| make_lightpath(logical, physical, &eid(l), vec![eid(p)]).expect("fixture lightpath")),
    )
    .expect("fixture mapping")
}

/// Edge-disjoint mapping of the two cross links d, e.
pub fn district_cross_mapping(physical: &Topology, logical: &Topology) -> Mapping {
    Mapping::from_lightpaths([
        make_lightpath(logical, physical, &eid("d"), vec![eid("x14")]).expect("fixture lightpath"),
        make_lightpath(logical, physical, &eid("e"), vec![eid("x25")]).expect("fixture lightpath"),
    ])
    .expect("fixture mapping")
}

/// Parameters for the random instance generator.
#[derive(Debug, Clone)]
pub struct GenConfig {
    pub min_nodes: usize,
    pub max_nodes: usize,
    pub max_physical_edges: usize,
    pub max_logical_edges: usize,
    /// Extra physical edges beyond a spanning tree, upper bound.
    pub max_physical_extra: usize,
    /// Extra logical edges beyond a spanning tree, upper bound.
    pub max_logical_extra: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            min_nodes: 4,
            max_nodes: 7,
            max_physical_edges: 12,
            max_logical_edges: 10,
            max_physical_extra: 5,
            max_logical_extra: 4,
        }
    }
}

/// Seeded generator of random connected physical/logical topology pairs.
/// The logical graph lives on a random subset of the physical nodes.
pub struct InstanceGen {
    rng: ChaCha8Rng,
    cfg: GenConfig,
}

impl InstanceGen {
    pub fn new(seed: u64, cfg: GenConfig) -> Self {
        InstanceGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            cfg,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Random connected graph on `labels`: a random spanning tree plus up to
    /// `extra` additional non-parallel edges, capped at `max_edges`.
    fn connected_graph(
        &mut self,
        layer: Layer,
        labels: &[NodeId],
        prefix: &str,
        extra: usize,
        max_edges: usize,
    ) -> Topology {
        let mut order: Vec<NodeId> = labels.to_vec();
        order.shuffle(&mut self.rng);
        let mut edges: Vec<(EdgeId, NodeId, NodeId)> = Vec::new();
        let mut used: BTreeSet<(NodeId, NodeId)> = BTreeSet::new();
        let mut next_id = 0usize;
        for i in 1..order.len() {
            let j = self.rng.gen_range(0..i);
            let (u, v) = sorted_pair(&order[i], &order[j]);
            used.insert((u.clone(), v.clone()));
            edges.push((EdgeId::new(format!("{prefix}{next_id}")), u, v));
            next_id += 1;
        }
        let mut all_pairs: Vec<(NodeId, NodeId)> = Vec::new();
        for (i, u) in labels.iter().enumerate() {
            for v in &labels[i + 1..] {
                let p = sorted_pair(u, v);
                if !used.contains(&p) {
                    all_pairs.push(p);
                }
            }
        }
        all_pairs.shuffle(&mut self.rng);
        let want_extra = self.rng.gen_range(0..=extra);
        for (u, v) in all_pairs.into_iter().take(want_extra) {
            if edges.len() >= max_edges {
                break;
            }
            edges.push((EdgeId::new(format!("{prefix}{next_id}")), u, v));
            next_id += 1;
        }
        Topology::new(layer, labels.iter().cloned(), edges).expect("generated graph")
    }

    /// One random instance: connected physical graph and a connected logical
    /// graph on a node subset of size >= 3 (or 2 for tiny instances).
    pub fn instance(&mut self) -> (Topology, Topology) {
        let n = self.rng.gen_range(self.cfg.min_nodes..=self.cfg.max_nodes);
        let labels: Vec<NodeId> = (0..n).map(|i| NodeId::new(format!("v{i}"))).collect();
        let physical = self.connected_graph(
            Layer::Physical,
            &labels,
            "p",
            self.cfg.max_physical_extra,
            self.cfg.max_physical_edges,
        );
        let min_sub = 3.min(n);
        let sub_n = self.rng.gen_range(min_sub..=n);
        let mut subset = labels.clone();
        subset.shuffle(&mut self.rng);
        subset.truncate(sub_n);
        subset.sort();
        let logical = self.connected_graph(
            Layer::Logical,
            &subset,
            "l",
            self.cfg.max_logical_extra,
            self.cfg.max_logical_edges,
        );
        (physical, logical)
    }
}

fn sorted_pair(a: &NodeId, b: &NodeId) -> (NodeId, NodeId) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

/// A total mapping choosing a uniformly random simple lightpath per logical
/// edge (not survivable in general).
pub fn random_total_mapping(
    physical: &Topology,
    logical: &Topology,
    rng: &mut ChaCha8Rng,
) -> Mapping {
    let lps = logical.edges().map(|(e, (u, v))| {
        let en = physical
            .enumerate_simple_paths(u, v, usize::MAX / 2)
            .expect("path enumeration");
        let pick = rng.gen_range(0..en.paths.len());
        make_lightpath(logical, physical, e, en.paths[pick].edges().to_vec())
            .expect("generated lightpath")
    });
    Mapping::from_lightpaths(lps).expect("generated mapping")
}

// ---------------------------------------------------------------------------
// Independent reference checks (share no code with the checked paths).
// ---------------------------------------------------------------------------

/// Connectivity by a hand-rolled BFS over an explicit adjacency list.
pub fn reference_is_connected(
    nodes: &BTreeSet<NodeId>,
    edges: &BTreeMap<EdgeId, (NodeId, NodeId)>,
) -> bool {
    let Some(start) = nodes.iter().next() else {
        return true;
    };
    let mut adj: BTreeMap<&NodeId, Vec<&NodeId>> = BTreeMap::new();
    for (u, v) in edges.values() {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut seen: BTreeSet<&NodeId> = BTreeSet::new();
    let mut queue: Vec<&NodeId> = vec![start];
    seen.insert(start);
    while let Some(n) = queue.pop() {
        if let Some(nexts) = adj.get(n) {
            for m in nexts {
                if seen.insert(m) {
                    queue.push(m);
                }
            }
        }
    }
    seen.len() == nodes.len()
}

/// BFS hop distance; `None` when unreachable.
pub fn reference_bfs_distance(g: &Topology, u: &NodeId, v: &NodeId) -> Option<usize> {
    let mut dist: BTreeMap<NodeId, usize> = BTreeMap::new();
    dist.insert(u.clone(), 0);
    let mut queue = alloc::collections::VecDeque::new();
    queue.push_back(u.clone());
    while let Some(n) = queue.pop_front() {
        if n == *v {
            return Some(dist[&n]);
        }
        let d = dist[&n];
        for (id, _) in g.incident(&n) {
            let m = g.other_endpoint(id, &n).expect("incident");
            if !dist.contains_key(&m) {
                dist.insert(m.clone(), d + 1);
                queue.push_back(m);
            }
        }
    }
    None
}

/// Brute-force k-survivability over *image sets*: for every k-subset of ALL
/// physical edges (not just used ones), drop the logical edges whose image
/// intersects the subset and check connectivity of what remains.
///
/// `images` maps each logical edge of the subgraph to the physical edges its
/// lightpath occupies, which also lets the tests feed augmented (non-simple)
/// walks that the typed API would reject.
pub fn reference_k_survivable(
    sub_nodes: &BTreeSet<NodeId>,
    sub_edges: &BTreeMap<EdgeId, (NodeId, NodeId)>,
    images: &BTreeMap<EdgeId, BTreeSet<EdgeId>>,
    physical_edges: &BTreeSet<EdgeId>,
    k: usize,
) -> bool {
    struct Ctx<'a> {
        phys: Vec<&'a EdgeId>,
        k: usize,
        sub_nodes: &'a BTreeSet<NodeId>,
        sub_edges: &'a BTreeMap<EdgeId, (NodeId, NodeId)>,
        images: &'a BTreeMap<EdgeId, BTreeSet<EdgeId>>,
    }

    impl Ctx<'_> {
        fn survives_all(&self, start: usize, depth: usize, choice: &mut Vec<usize>) -> bool {
            if depth == self.k {
                let failed: BTreeSet<&EdgeId> = choice.iter().map(|&i| self.phys[i]).collect();
                let survivors: BTreeMap<EdgeId, (NodeId, NodeId)> = self
                    .sub_edges
                    .iter()
                    .filter(|(e, _)| self.images[*e].iter().all(|p| !failed.contains(p)))
                    .map(|(e, ends)| (e.clone(), ends.clone()))
                    .collect();
                return reference_is_connected(self.sub_nodes, &survivors);
            }
            for i in start..self.phys.len() {
                choice[depth] = i;
                if !self.survives_all(i + 1, depth + 1, choice) {
                    return false;
                }
            }
            true
        }
    }

    if physical_edges.len() < k {
        return true;
    }
    let ctx = Ctx {
        phys: physical_edges.iter().collect(),
        k,
        sub_nodes,
        sub_edges,
        images,
    };
    let mut choice = vec![0usize; k];
    ctx.survives_all(0, 0, &mut choice)
}

/// Optimization-free existence check: enumerate the full cartesian product of
/// per-edge simple-path image sets and test each assignment with
/// [`reference_k_survivable`]. Suitable for instances of a few nodes only.
pub fn reference_exists(physical: &Topology, logical: &Topology, k: usize) -> bool {
    let edges: Vec<(EdgeId, (NodeId, NodeId))> = logical
        .edges()
        .map(|(e, ends)| (e.clone(), ends.clone()))
        .collect();
    let mut per_edge: Vec<Vec<BTreeSet<EdgeId>>> = Vec::new();
    for (_, (u, v)) in &edges {
        let en = physical
            .enumerate_simple_paths(u, v, usize::MAX / 2)
            .expect("enumeration");
        assert!(!en.truncated);
        per_edge.push(en.paths.iter().map(|p| p.edge_set()).collect());
    }
    let sub_nodes = logical.nodes().clone();
    let sub_edges: BTreeMap<EdgeId, (NodeId, NodeId)> = edges.iter().cloned().collect();
    let phys_edges = physical.edge_id_set();
    let mut pick = vec![0usize; edges.len()];
    loop {
        let images: BTreeMap<EdgeId, BTreeSet<EdgeId>> = edges
            .iter()
            .enumerate()
            .map(|(i, (e, _))| (e.clone(), per_edge[i][pick[i]].clone()))
            .collect();
        if reference_k_survivable(&sub_nodes, &sub_edges, &images, &phys_edges, k) {
            return true;
        }
        // Odometer increment over the cartesian product.
        let mut i = 0;
        loop {
            if i == edges.len() {
                return false;
            }
            pick[i] += 1;
            if pick[i] < per_edge[i].len() {
                break;
            }
            pick[i] = 0;
            i += 1;
        }
    }
}

/// Collect a mapping's image sets keyed by logical edge, for feeding the
/// reference checks.
pub fn image_table(m: &Mapping) -> BTreeMap<EdgeId, BTreeSet<EdgeId>> {
    m.iter().map(|(e, lp)| (e.clone(), lp.image())).collect()
}
