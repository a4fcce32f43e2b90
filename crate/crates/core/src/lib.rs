//! Matching extension (k-extendability) and matching exclusion
//! (1-excludability) of small graphs, decided directly and through size and
//! spectral-radius thresholds, with the extremal families that attain them
//! and exhaustive sweeps that check the thresholds over all connected graphs.

pub mod cli;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod matching;
pub mod spectral;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet};
