//! Constructive embeddings of small-diameter trees and caterpillars into
//! hosts where at least half the vertices have degree at least `k`, together
//! with a brute-force oracle, extremal tightness constructions, and exhaustive
//! small-scale verification harnesses (including tree Ramsey bounds).

pub mod caterpillar;
pub mod diam5;
pub mod embedding;
pub mod extremal;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod ramsey;
pub mod sweep;
pub mod taxonomy;
pub mod tree;

mod error;

pub use error::LksError;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, LksError>;
