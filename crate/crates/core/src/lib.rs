//! Exact analysis of unicast index-coding instances on small
//! side-information graphs.
//!
//! The crate computes the three standard lower bounds (maximum acyclic
//! induced subgraph, minrank over GF(2), and the entropic LP from
//! decodability plus submodularity), constructs optimal codes for every
//! graph whose MAIS is within two of its order and for every graph on at
//! most five vertices, and verifies everything by brute force. Confusion
//! graphs give the exact finite-length rate on tiny instances.

pub mod atlas;
pub mod bounds;
pub mod codes;
pub mod confusion;
pub mod digraph;
pub mod error;
pub mod exceptional;
pub mod structure;
pub mod survey;

pub use digraph::{Digraph, VertexSet};
pub use error::{Error, Result};
