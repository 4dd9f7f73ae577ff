//! Exact verification toolkit for toughness-conditioned pancyclicity: graph
//! toughness and cycle spectra by exhaustive search, Bondy-Chvatal closures,
//! certified spectral radii, the associated edge/spectral thresholds, a
//! catalog of the extremal constructions, and verification pipelines that
//! sweep small orders exhaustively or scan graph6 streams.

pub mod catalog;
pub mod closure;
pub mod cycles;
pub mod degseq;
pub mod error;
pub mod format;
pub mod graph;
pub mod rng;
pub mod spectral;
pub mod toughness;
pub mod verify;

#[cfg(test)]
pub(crate) mod testutil;

pub use cycles::{cycle_spectrum, is_hamiltonian, is_pancyclic, CycleSpectrum};
pub use degseq::DegreeSequence;
pub use error::{Error, Result};
pub use graph::{Graph, MAX_VERTICES};
pub use spectral::SpectralEstimate;
pub use toughness::{Rational, ToughnessValue};
