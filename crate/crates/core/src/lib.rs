//! Local spectra, predistance polynomials and pseudo-distance-regularity of
//! connected graphs.
//!
//! The numerical layers are generic over [`Real`]; the aliases below fix the
//! scalar to `f64`, which is what the command-line tool uses.

// comparisons are written so that NaN fails them
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod audit;
pub mod error;
pub mod graph;
pub mod pdr;
pub mod predistance;
pub mod scalar;
pub mod spectral;

pub use error::{Error, ErrorClass, Result};
pub use graph::graph6::{parse_graph6, serialize_graph6};
pub use graph::Graph;
pub use scalar::{Real, Tolerances};

pub type Tolerances64 = scalar::Tolerances<f64>;
pub type SpectralDecomposition64 = spectral::SpectralDecomposition<f64>;
pub type LocalSpectrum64 = spectral::LocalSpectrum<f64>;
pub type Polynomial64 = predistance::Polynomial<f64>;
pub type PredistanceSystem64 = predistance::PredistanceSystem<f64>;
pub type QuotientMatrix64 = pdr::QuotientMatrix<f64>;
pub type PdrVertexReport64 = pdr::PdrVertexReport<f64>;
pub type Classification64 = pdr::Classification<f64>;

pub type Tolerances32 = scalar::Tolerances<f32>;
pub type SpectralDecomposition32 = spectral::SpectralDecomposition<f32>;
pub type Classification32 = pdr::Classification<f32>;
