//! Probability kernel used by the samplers: multivariate normal,
//! normal-inverse-Wishart conjugacy, truncated normal, and skew normal.
//!
//! Everything here is a pure function of its parameters and an explicit RNG
//! handle, so any number of concurrent tasks can use the module as long as
//! each owns its RNG stream.

mod mvn;
mod niw;
mod skewnormal;
mod truncnorm;

pub use mvn::{mvn_condition, mvn_logpdf, mvn_logpdf_with_chol, mvn_sample, mvn_sample_with_chol, MvnParams};
pub use niw::{
    inverse_wishart_sample, niw_block_marginal_logpdf, niw_marginal_logpdf, niw_posterior,
    niw_sample, NiwParams,
};
pub use skewnormal::{skew_normal_sample, SkewNormalParams};
pub use truncnorm::{trunc_normal_sample, truncated_standard_mean};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

/// Shape/rate parameters for a gamma distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaParams<T: Scalar> {
    pub shape: T,
    pub rate: T,
}

impl<T: Scalar> GammaParams<T> {
    pub fn new(shape: T, rate: T) -> Result<Self> {
        if shape <= T::zero() || rate <= T::zero() {
            return Err(Error::InvalidConfig(
                "gamma shape and rate must be positive".into(),
            ));
        }
        Ok(Self { shape, rate })
    }

    pub fn mean(&self) -> T {
        self.shape / self.rate
    }
}
