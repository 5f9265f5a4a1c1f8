//! Fair-and-Tolerant (FAT) graph colorings.
//!
//! A FAT `k`-coloring assigns every non-isolated vertex an `alpha` fraction of
//! its neighbors in each of the `k-1` other color classes and the remaining
//! `beta = 1 - (k-1)*alpha` fraction in its own class. This crate provides:
//!
//! - exact (rational-arithmetic) validation of FAT colorings ([`coloring`]),
//! - brute-force search over set partitions for the FAT chromatic number
//!   ([`search`]),
//! - closed forms for complete multipartite and Turán graphs
//!   ([`multipartite`]),
//! - normalized-Laplacian spectra and the spectral certificate that a
//!   partition is FAT ([`spectral`]),
//! - theorem-backed constructions that lift a FAT coloring to a derived
//!   graph: class removal, complement, and the tensor/Cartesian/strong
//!   products ([`lift`]).

pub mod coloring;
pub mod graph;
pub mod io;
pub mod lift;
pub mod multipartite;
pub mod rational;
pub mod rng;
pub mod search;
pub mod spectral;
pub mod verify;

pub use coloring::{infer_alpha, validate_fat, Coloring, FatWitness, Rejection};
pub use graph::{Graph, MultipartiteGraph, MultipartiteSpec, VertexSet};
pub use lift::{LiftResult, ProductKind, TheoremTag};
pub use multipartite::{ChromaticVerdict, MultipartiteSpectrum};
pub use rational::Rational;
pub use search::SearchReport;
pub use spectral::SpectralDecomposition;
