//! Exact matroid and graph invariants with log-concavity verdicts.
//!
//! The crate computes f- and h-vectors of independence and broken circuit
//! complexes, characteristic, chromatic and reliability polynomials, and
//! bounded-region counts of line arrangements, all in exact arithmetic, and
//! checks the log-concavity properties and identities that relate them.

pub mod arrangement;
pub mod bits;
pub mod complexes;
pub mod error;
pub mod fixtures;
pub mod flats;
pub mod graph;
pub mod graph_invariants;
pub mod io;
pub mod matroid;
pub mod order;
pub mod poly;
pub mod rational;
pub mod report;
pub mod sequence;

pub use bits::ElementSet;
pub use complexes::FaceComplex;
pub use error::{Error, Result};
pub use flats::FlatLattice;
pub use graph::{Multigraph, SimpleGraph};
pub use matroid::{GroundSet, Matroid};
pub use order::ElementOrder;
pub use poly::IntPolynomial;
pub use sequence::{IntSeq, LogConcavityVerdict};
