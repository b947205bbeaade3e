//! Design and classification of plateaued Boolean functions.
//!
//! Functions are built in the spectral domain by placing a signed dual on an
//! ordered Walsh support and inverting the transform; the result is gated by
//! an exact integer check. The remaining modules classify functions by their
//! supports (trivial or not, linear structures, EA-equivalence evidence),
//! build disjoint-spectra families and their bent concatenations, and apply
//! the nonlinear input permutation of Hou and Langevin.

pub mod bits;
pub mod boolfn;
pub mod classify;
pub mod construct;
pub mod error;
pub mod format;
pub mod report;
pub mod spectral;
pub mod transform;

pub use bits::{BinaryMatrix, BitVector, MAX_VARS};
pub use boolfn::{AnfPolynomial, BooleanFunction};
pub use classify::{
    classify_plateaued, ea_equivalent_small, ea_fingerprint, find_support_relation, is_affine_subspace,
    is_partially_bent, linear_structures, support_rank, EaFingerprint, EaVerdict, PlateauedClass, SupportRelation,
};
pub use construct::{build_from_spectrum, bent_distance_to_profile, concat_bent, disjoint_family, SpectralSpec};
pub use error::{Error, Result};
pub use format::{format_anf, format_tt, parse_function};
pub use report::{analyze, AnalysisReport};
pub use spectral::{
    autocorrelation, bent_dual, extract_dual, inverse_wht, is_bent, plateaued_profile, walsh_support, wht,
    AutocorrelationSpectrum, DualFunction, PlateauedProfile, WalshSpectrum, WalshSupport,
};
pub use transform::{compose, decompose_form27, hou_langevin_transform, VectorialMap};
