//! Spectra of k-token graphs: construction, spectral inclusion, equitable
//! quotients and spectral-radius bounds.

pub mod analysis;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod partitions;
pub mod report;
pub mod spectral;
pub mod subsets;
pub mod token;

pub use error::{Error, Result};
pub use generators::{generate, Family, GeneratorSpec};
pub use graph::Graph;
pub use spectral::{Spectrum, SpectrumKind};
pub use token::{token_graph, TokenGraph, TOKEN_ORDER_LIMIT};
