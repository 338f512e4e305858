//! Cycle and cocycle matroids, chromatic polynomials, reliability polynomials.

mod chromatic;
mod reliability;

pub use chromatic::{
    chromatic_polynomial, chromatic_polynomial_with, ChromaticCache, ChromaticData, ChromaticMethod,
};
pub use reliability::{reliability_data, ReliabilityData};

use crate::graph::Multigraph;
use crate::matroid::Matroid;
use crate::Result;

/// Matroid of forests; rank `v - c`.
pub fn cycle_matroid(g: &Multigraph) -> Result<Matroid> {
    Matroid::graphic(g.clone())
}

/// Bond matroid: the dual of the cycle matroid.
pub fn cocycle_matroid(g: &Multigraph) -> Result<Matroid> {
    Ok(cycle_matroid(g)?.dual())
}
