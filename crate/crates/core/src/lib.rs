//! Few-switch paths in 2-edge-colored graphs.
//!
//! A *switch* is a color change along a path. Given a graph `G`, an
//! automorphism `phi` and a red/blue coloring of `E(G)`, the central question
//! is how few switches are needed to get from some vertex `u` to `phi(u)`.
//! The crate builds the usual graph families (cycles, hypercubes, products of
//! cycles), the coloring families studied for the hypercube problem, the
//! monochromatic component graph, and the two constructive searches: the
//! long-cycle witness finder and the torus lazy-diagonal finder. The
//! [`harness`] module runs the exhaustive and sampled checks on top.

pub mod colorings;
pub mod compgraph;
pub mod error;
pub mod graphs;
pub mod harness;
pub mod io;
pub mod par;
pub mod rng;
pub mod switchpaths;
pub mod torus;

mod flow;
mod unionfind;

pub use colorings::{Color, EdgeColoring};
pub use compgraph::ComponentGraph;
pub use error::{Error, Result};
pub use graphs::{Automorphism, Distance, Graph, GraphSpec};
pub use switchpaths::SwitchPath;
