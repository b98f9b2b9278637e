//! Interval edge-colorings of complete multipartite graphs.
//!
//! An interval `t`-coloring assigns colors `1..=t` to the edges of a graph so
//! that no two adjacent edges share a color, every color is used, and the
//! colors incident to each vertex form a consecutive block of integers.
//!
//! For the complete tripartite graph `K_{1,m,n}` such a coloring exists
//! exactly when `gcd(m+1, n+1) = 1`. This crate provides:
//!
//! * [`graph`] — canonical complete multipartite graphs, edges, and colorings;
//! * [`verify`] — the interval-coloring validity checker;
//! * [`construct`] — the matching-based `(m+n)`-coloring of `K_{1,m,n}`;
//! * [`obstruction`] — parity certificates proving non-colorability;
//! * [`oracle`] — exhaustive backtracking search over small graphs;
//! * [`reference`] — a slow generate-and-filter oracle used for cross-checks;
//! * [`survey`] — batch sweeps that record verdicts and conjecture findings;
//! * [`json`] — the on-disk coloring document format;
//! * [`dot`] — Graphviz export of the constructor's auxiliary graph.

pub mod construct;
pub mod dot;
pub mod error;
pub mod graph;
pub mod json;
pub mod obstruction;
pub mod oracle;
pub mod reference;
pub mod survey;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CompleteMultipartite, Edge, EdgeColoring, Spectrum, VertexId};
