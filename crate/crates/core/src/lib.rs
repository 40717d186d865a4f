//! Survivable routing of logical (IP) topologies over physical (WDM) topologies.
//!
//! A logical link is realized as a *lightpath*: a simple path of physical
//! edges. A mapping of the whole logical topology is *k-survivable* when no
//! simultaneous failure of k physical links disconnects the logical graph.
//! This crate provides:
//!
//! - [`topology`]: the multigraph model plus connectivity, minimum-cut and
//!   path-enumeration primitives,
//! - [`mapping`]: lightpaths and mapping algebra (merge, image),
//! - [`contraction`]: the edge-contraction operator and origin bookkeeping,
//! - [`survivability`]: decision procedures for k-survivability and piecewise
//!   k-survivability with failure-set witnesses,
//! - [`smart`]: the k-SMART engine that maps survivable pieces, contracts
//!   them and repeats, plus the existence decision procedure and
//!   vulnerability tracing,
//! - [`oracle`]: an exhaustive ground-truth solver for desk-scale instances,
//! - [`testgen`]: deterministic instance generators and reference
//!   brute-force checks used by the test suites.
//!
//! The crate is `no_std` (with `alloc`); all values are immutable after
//! construction and every operation is a pure function of its inputs, so
//! results are reproducible byte for byte.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod contraction;
pub mod error;
pub mod mapping;
pub mod oracle;
pub mod smart;
pub mod survivability;
pub mod testgen;
pub mod topology;

pub use error::{Error, Result};
pub use topology::{EdgeId, Layer, NodeId, Path, Subgraph, Topology};
