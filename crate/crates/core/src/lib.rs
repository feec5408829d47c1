//! Simplicial complexes, their vertex links, and obstructions to embedding
//! them in Euclidean space.
//!
//! - [`complex`], [`chain`]: complexes stored by facets, links, joins, and
//!   integer chains.
//! - [`graph`]: planarity with Kuratowski witnesses, subdivision and minor
//!   search for K5, K3,3 and the Petersen family, edge-count bounds.
//! - [`scan`]: necessary conditions for embeddability from triple
//!   intersections of vertex links.
//! - [`linking`]: exact PL intersection and linking numbers in R^3.
//! - [`extremal`]: set systems with bounded triple intersections and the
//!   resulting face-count exponents.
//! - [`constructions`]: generators for the standard examples.

pub mod budget;
pub mod chain;
pub mod complex;
pub mod constructions;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod linking;
pub mod scan;
pub mod scx;

pub use budget::Budget;
pub use chain::{Chain, OrientedSimplex};
pub use complex::{verify_link_count_identity, FVector, LinkCountCheck, Simplex, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use extremal::SetSystem;
pub use graph::{Graph, MinorWitness, PatternGraph, SearchOptions, SearchOutcome};
pub use linking::{EmbeddedCurves, Point3};
pub use scan::{scan, ObstructionReport, ScanMode, ScanOptions, Verdict};
