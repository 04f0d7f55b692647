//! Approximation algorithms built around one idea: growing a random maximal
//! independent set, sampled proportionally to node weight, yields a
//! 2-approximate weighted vertex cover in expectation.
//!
//! The crate provides that cover construction and the classic baselines it
//! competes with, the pivot algorithm for correlation clustering together
//! with its triadic-closure labeling view, implicit variants of the cover
//! construction for three edge-deletion problems, and exact brute-force
//! solvers plus a Monte-Carlo estimator that make every approximation claim
//! checkable on desk-scale instances.
//!
//! Everything randomized is driven by a small seeded generator, so runs are
//! reproducible bit for bit. All instance types are immutable after
//! construction and safe to share across threads.
//!
//! ```
//! use covergrow::{cover, NodeWeightedGraph, RandomSource};
//!
//! let g = NodeWeightedGraph::new(3, &[(0, 1), (1, 2)], Some(&[5.0, 1.0, 5.0])).unwrap();
//! let result = cover::neighbor_cover_randomized(&g, &mut RandomSource::new(7));
//! assert!(cover::verify_cover(&g, &result.cover).unwrap());
//! assert!(cover::verify_mis(&g, &result.independent).unwrap());
//! ```

pub mod clustering;
pub mod cover;
pub mod deletion;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod sampling;

pub use clustering::{Clustering, StcLabeling};
pub use cover::{CoverResult, DualCertificate};
pub use deletion::DeletionResult;
pub use error::{Error, Result};
pub use graph::{
    EdgeColoredHypergraph, EdgeWeightedGraph, Hyperedge, Hypergraph3, Instance, NodeWeightedGraph,
    OpenWedge, WeightedDag,
};
pub use oracle::{OptResult, RatioAlgo, RatioEstimate};
pub use sampling::{Permutation, RandomSource};
