//! Hierarchical Bayesian evaluation of trial-level surrogate endpoints in
//! adaptive platform trials.
//!
//! The crate is organized around the analysis pipeline:
//!
//! * [`distributions`] — the probability kernel (multivariate normal,
//!   normal-inverse-Wishart conjugacy, truncated and skew normals).
//! * [`trialgen`] — scenario generators for group-level treatment effects and
//!   an adaptive platform-trial simulator producing subject-level data.
//! * [`stage1`] — saturated-mean Gaussian regressions for the surrogate and
//!   the log-time outcome, with Gibbs updates and censoring imputation.
//! * [`dpm`] — the Dirichlet-process-mixture second stage and the full
//!   interleaved sampler, plus the parametric and surrogate-free variants.
//! * [`surrogacy`] — leave-one-out prediction, the absolute-error summaries
//!   comparing a model with and without surrogate information, cluster-label
//!   estimation, and subgroup reports.
//! * [`dataio`] — delimited-text readers/writers for datasets, group truth,
//!   posterior dumps, and evaluation reports.
//!
//! All numerics are generic over [`scalar::Scalar`] (implemented for `f32`
//! and `f64`); the aliases below fix the default `f64` instantiation.

pub mod dataio;
pub mod distributions;
pub mod dpm;
pub mod error;
pub mod scalar;
pub mod seed;
pub mod stage1;
pub mod stats;
pub mod surrogacy;
pub mod trialgen;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default scalar type for the shipped binaries and file formats.
pub type Real = f64;

pub type MvnParams = distributions::MvnParams<Real>;
pub type NiwParams = distributions::NiwParams<Real>;
pub type GammaParams = distributions::GammaParams<Real>;











