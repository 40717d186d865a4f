//! Lightpaths and mapping algebra: construction, validation, merging and
//! image computation.
//!
//! A mapping is a partial association from logical edges to lightpaths.
//! Merging two mappings is set union on the assignments; a logical edge
//! assigned different lightpaths by the two sides is a conflict, never a
//! silent preference.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::topology::{EdgeId, Path, Topology};

/// A simple physical path realizing one logical edge.
///
/// The walk connects the logical edge's end-nodes (in either orientation)
/// and is a simple path in the physical topology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lightpath {
    logical_edge: EdgeId,
    walk: Path,
}

impl Lightpath {
    /// Validate `walk` as a lightpath for logical edge `e`.
    pub fn new(logical: &Topology, physical: &Topology, e: EdgeId, walk: Path) -> Result<Self> {
        let (u, v) = logical.endpoints(&e)?.clone();
        // Path::new re-validates contiguity and simplicity against the
        // physical topology, using the declared walk orientation.
        let (from, to) = walk.endpoints().clone();
        if !((from == u && to == v) || (from == v && to == u)) {
            return Err(Error::EndpointMismatch {
                expected: (u, v),
                found: (from, to),
            });
        }
        let walk = Path::new(physical, from, to, walk.edges().to_vec())?;
        Ok(Lightpath {
            logical_edge: e,
            walk,
        })
    }

    pub fn logical_edge(&self) -> &EdgeId {
        &self.logical_edge
    }

    pub fn walk(&self) -> &Path {
        &self.walk
    }

    /// The set of physical edges the lightpath occupies.
    pub fn image(&self) -> BTreeSet<EdgeId> {
        self.walk.edge_set()
    }
}

/// A partial association from logical edges to lightpaths. The domain is
/// exactly the key set of the assignment table.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Mapping {
    assignments: BTreeMap<EdgeId, Lightpath>,
}

impl Mapping {
    pub fn empty() -> Self {
        Mapping::default()
    }

    pub fn from_lightpaths<I>(paths: I) -> Result<Self>
    where
        I: IntoIterator<Item = Lightpath>,
    {
        let mut assignments = BTreeMap::new();
        for lp in paths {
            let key = lp.logical_edge().clone();
            if let Some(prev) = assignments.insert(key.clone(), lp) {
                let clash = assignments[&key] != prev;
                if clash {
                    return Err(Error::MergeConflict(key));
                }
            }
        }
        Ok(Mapping { assignments })
    }

    pub fn domain(&self) -> impl Iterator<Item = &EdgeId> {
        self.assignments.keys()
    }

    pub fn domain_set(&self) -> BTreeSet<EdgeId> {
        self.assignments.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn get(&self, e: &EdgeId) -> Option<&Lightpath> {
        self.assignments.get(e)
    }

    pub fn lightpaths(&self) -> impl Iterator<Item = &Lightpath> {
        self.assignments.values()
    }

    /// Union of two mappings. Overlapping logical edges must carry identical
    /// lightpaths; a disagreement is an error.
    pub fn merge(&self, other: &Mapping) -> Result<Mapping> {
        let mut assignments = self.assignments.clone();
        for (e, lp) in &other.assignments {
            match assignments.get(e) {
                Some(existing) if existing != lp => {
                    return Err(Error::MergeConflict(e.clone()));
                }
                Some(_) => {}
                None => {
                    assignments.insert(e.clone(), lp.clone());
                }
            }
        }
        Ok(Mapping { assignments })
    }

    /// Union of the physical edges occupied by the selected logical links.
    pub fn image<'a, I>(&self, links: I) -> Result<BTreeSet<EdgeId>>
    where
        I: IntoIterator<Item = &'a EdgeId>,
    {
        let mut out = BTreeSet::new();
        for e in links {
            let lp = self
                .assignments
                .get(e)
                .ok_or_else(|| Error::UnmappedEdge(e.clone()))?;
            out.extend(lp.image());
        }
        Ok(out)
    }

    /// True iff the domain covers every logical edge.
    pub fn is_total(&self, logical: &Topology) -> bool {
        logical.edge_ids().all(|e| self.assignments.contains_key(e))
    }

    /// The sub-mapping over `edges` (ignoring edges outside the domain).
    pub fn restrict<'a, I>(&self, edges: I) -> Mapping
    where
        I: IntoIterator<Item = &'a EdgeId>,
    {
        let assignments = edges
            .into_iter()
            .filter_map(|e| self.assignments.get(e).map(|lp| (e.clone(), lp.clone())))
            .collect();
        Mapping { assignments }
    }

    /// Lightpaths in a stable order, for serialization.
    pub fn iter(&self) -> impl Iterator<Item = (&EdgeId, &Lightpath)> {
        self.assignments.iter()
    }

    /// Logical edges of `logical` not covered by this mapping.
    pub fn unmapped(&self, logical: &Topology) -> BTreeSet<EdgeId> {
        logical
            .edge_ids()
            .filter(|e| !self.assignments.contains_key(*e))
            .cloned()
            .collect()
    }
}

impl FromIterator<Lightpath> for Result<Mapping> {
    fn from_iter<I: IntoIterator<Item = Lightpath>>(iter: I) -> Self {
        Mapping::from_lightpaths(iter)
    }
}

/// Convenience: build a lightpath from a raw edge sequence, inferring the
/// walk orientation from the logical edge's endpoints.
pub fn make_lightpath(
    logical: &Topology,
    physical: &Topology,
    e: &EdgeId,
    walk_edges: Vec<EdgeId>,
) -> Result<Lightpath> {
    let (u, v) = logical.endpoints(e)?.clone();
    if walk_edges.is_empty() {
        return Err(Error::BadEmptyPath { from: u, to: v });
    }
    // Try the canonical orientation first, then the reverse.
    let forward = Path::new(physical, u.clone(), v.clone(), walk_edges.clone());
    let walk = match forward {
        Ok(p) => p,
        Err(first_err) => match Path::new(physical, v, u, walk_edges) {
            Ok(p) => p,
            Err(_) => return Err(first_err),
        },
    };
    Lightpath::new(logical, physical, e.clone(), walk)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgen::{
        bridged_districts, district_cross_mapping as cross_mapping,
        district_triangle_mapping as triangle_piece_mapping, eid,
    };

    #[test]
    fn three_link_lightpath() {
        let (physical, logical) = bridged_districts();
        // d runs n1..n4; route it the long way round: n1-n2, n2-n5, n5-n4.
        let lp = make_lightpath(
            &logical,
            &physical,
            &eid("d"),
            alloc::vec![eid("p12"), eid("x25"), eid("p45")],
        )
        .unwrap();
        assert_eq!(lp.walk().len(), 3);
        assert_eq!(
            lp.image(),
            BTreeSet::from([eid("p12"), eid("x25"), eid("p45")])
        );
    }

    #[test]
    fn single_hop_lightpath_for_adjacent_endpoints() {
        let (physical, logical) = bridged_districts();
        let lp = make_lightpath(&logical, &physical, &eid("a"), alloc::vec![eid("p12")]).unwrap();
        assert_eq!(lp.walk().len(), 1);
    }

    #[test]
    fn lightpath_rejects_wrong_terminal() {
        let (physical, logical) = bridged_districts();
        // p12 then p23 runs n1..n3, but d requires n1..n4.
        let err = make_lightpath(
            &logical,
            &physical,
            &eid("d"),
            alloc::vec![eid("p12"), eid("p23")],
        )
        .unwrap_err();
        assert!(matches!(err, Error::EndpointMismatch { .. }));
    }

    #[test]
    fn lightpath_rejects_reversed_orientation_mismatch_only() {
        let (physical, logical) = bridged_districts();
        // Declared walk n4..n1 for edge d is fine; merge of orientations is
        // handled by make_lightpath.
        let lp = make_lightpath(&logical, &physical, &eid("d"), alloc::vec![eid("x14")]).unwrap();
        assert_eq!(lp.logical_edge(), &eid("d"));
    }

    #[test]
    fn merge_disjoint_domains() {
        let (physical, logical) = bridged_districts();
        let m1 = triangle_piece_mapping(&physical, &logical);
        let m2 = cross_mapping(&physical, &logical);
        let merged = m1.merge(&m2).unwrap();
        assert_eq!(merged.len(), m1.len() + m2.len());
        // Merging the piece mapping with the cross mapping covers everything.
        assert!(merged.is_total(&logical));
    }

    #[test]
    fn merge_accepts_identical_overlap_rejects_conflict() {
        let (physical, logical) = bridged_districts();
        let m1 = triangle_piece_mapping(&physical, &logical);
        let same = m1.merge(&m1.restrict([&eid("a")])).unwrap();
        assert_eq!(same.len(), m1.len());

        let conflicting = Mapping::from_lightpaths([make_lightpath(
            &logical,
            &physical,
            &eid("a"),
            alloc::vec![eid("p13"), eid("p23")],
        )
        .unwrap()])
        .unwrap();
        assert_eq!(
            m1.merge(&conflicting).unwrap_err(),
            Error::MergeConflict(eid("a"))
        );
    }

    #[test]
    fn image_unions_without_duplicates() {
        let (physical, logical) = bridged_districts();
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
        assert_eq!(
            m.image([&eid("d")].into_iter()).unwrap(),
            BTreeSet::from([eid("p12"), eid("x25"), eid("p45")])
        );
        assert_eq!(m.image([].into_iter()).unwrap(), BTreeSet::new());
        // Shared x25 appears once.
        assert_eq!(
            m.image([&eid("d"), &eid("e")].into_iter()).unwrap().len(),
            3
        );
        assert_eq!(
            m.image([&eid("zz")].into_iter()).unwrap_err(),
            Error::UnmappedEdge(eid("zz"))
        );
    }

    #[test]
    fn totality() {
        let (physical, logical) = bridged_districts();
        assert!(!Mapping::empty().is_total(&logical));
        let m1 = triangle_piece_mapping(&physical, &logical);
        assert!(!m1.is_total(&logical));
        let total = m1.merge(&cross_mapping(&physical, &logical)).unwrap();
        assert!(total.is_total(&logical));
        assert_eq!(total.unmapped(&logical), BTreeSet::new());
    }
}
