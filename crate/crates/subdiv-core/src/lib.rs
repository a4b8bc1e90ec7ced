//! Construction and certification of large clique subdivisions in
//! K_{s,t}-free graphs.
//!
//! The crate is organised around a pipeline: halve a graph into a bipartite
//! subgraph, extract an expander from it, then run one of three greedy
//! constructors (high-degree stars, hub/unit assembly, or sparse ball
//! growing) to connect a set of core vertices by internally disjoint paths.
//! Every constructor emits a [`verify::SubdivisionCertificate`] that an
//! independent verifier checks against the host graph.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `subdiv-cli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod expander;
pub mod generate;
pub mod graph;
pub mod highdeg;
pub mod kst;
mod math;
pub mod pipeline;
mod util;
pub mod sparse;
pub mod units;
pub mod verify;

pub use graph::{Graph, Path, Rational, Subgraph, VertexSet};
