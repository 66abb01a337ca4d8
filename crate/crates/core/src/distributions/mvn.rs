//! Multivariate normal density, sampling, and conditioning.
//!
//! All decompositions go through Cholesky; no explicit inverses are formed.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use nalgebra::{Cholesky, DMatrix, DVector, Dyn};
use rand::Rng;

/// Mean/covariance parameter pair for a multivariate normal.
#[derive(Debug, Clone, PartialEq)]
pub struct MvnParams<T: Scalar> {
    pub mean: DVector<T>,
    pub cov: DMatrix<T>,
}

impl<T: Scalar> MvnParams<T> {
    /// Validates symmetry, squareness, and positive definiteness.
    pub fn new(mean: DVector<T>, cov: DMatrix<T>) -> Result<Self> {
        if cov.nrows() != cov.ncols() || mean.len() != cov.nrows() {
            return Err(Error::Dimension {
                expected: cov.nrows(),
                got: mean.len(),
                context: "MvnParams mean/cov",
            });
        }
        check_symmetric(&cov, "MvnParams covariance")?;
        let params = Self { mean, cov };
        params.cholesky()?;
        Ok(params)
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub(crate) fn cholesky(&self) -> Result<Cholesky<T, Dyn>> {
        Cholesky::new(self.cov.clone()).ok_or(Error::NotPositiveDefinite {
            context: "MvnParams covariance",
        })
    }
}

pub(crate) fn check_symmetric<T: Scalar>(m: &DMatrix<T>, context: &'static str) -> Result<()> {
    let tol = T::cast(1e-10) * (T::one() + m.amax());
    for i in 0..m.nrows() {
        for j in (i + 1)..m.ncols() {
            if (m[(i, j)] - m[(j, i)]).abs() > tol {
                return Err(Error::NotPositiveDefinite { context });
            }
        }
    }
    Ok(())
}

/// Log density of `x` under the given multivariate normal.
pub fn mvn_logpdf<T: Scalar>(x: &DVector<T>, params: &MvnParams<T>) -> Result<T> {
    let chol = params.cholesky()?;
    Ok(mvn_logpdf_with_chol(x, &params.mean, &chol))
}

/// Log density when the Cholesky factor of the covariance is already at hand.
/// The sampler scans reuse one factorization per cluster per sweep.
pub fn mvn_logpdf_with_chol<T: Scalar>(
    x: &DVector<T>,
    mean: &DVector<T>,
    chol: &Cholesky<T, Dyn>,
) -> T {
    let p = mean.len();
    debug_assert_eq!(x.len(), p);
    let l = chol.l_dirty();
    // Solve L y = (x - mean); the quadratic form is |y|^2.
    let mut y = x - mean;
    let mut log_det = T::zero();
    for i in 0..p {
        let mut v = y[i];
        for j in 0..i {
            v -= l[(i, j)] * y[j];
        }
        y[i] = v / l[(i, i)];
        log_det += l[(i, i)].ln();
    }
    let quad = y.dot(&y);
    let half = T::cast(0.5);
    -half * T::cast_usize(p) * T::two_pi().ln() - log_det - half * quad
}

/// Draw one sample; deterministic in the RNG state.
pub fn mvn_sample<T: Scalar, R: Rng + ?Sized>(params: &MvnParams<T>, rng: &mut R) -> Result<DVector<T>> {
    let chol = params.cholesky()?;
    Ok(mvn_sample_with_chol(&params.mean, &chol, rng))
}

pub fn mvn_sample_with_chol<T: Scalar, R: Rng + ?Sized>(
    mean: &DVector<T>,
    chol: &Cholesky<T, Dyn>,
    rng: &mut R,
) -> DVector<T> {
    let p = mean.len();
    let z = DVector::from_fn(p, |_, _| T::std_normal(rng));
    mean + chol.l_dirty().lower_triangle() * z
}

/// Conditional distribution of the unobserved coordinates given
/// `x[observed_idx] = observed_values`, via the Schur complement.
///
/// With no observed indices the input is returned unchanged. Conditioning on
/// all coordinates is rejected (the result would be zero-dimensional).
pub fn mvn_condition<T: Scalar>(
    params: &MvnParams<T>,
    observed_idx: &[usize],
    observed_values: &DVector<T>,
) -> Result<MvnParams<T>> {
    let p = params.dim();
    if observed_idx.is_empty() {
        return Ok(params.clone());
    }
    if observed_idx.len() != observed_values.len() {
        return Err(Error::Dimension {
            expected: observed_idx.len(),
            got: observed_values.len(),
            context: "mvn_condition observed values",
        });
    }
    if observed_idx.len() >= p {
        return Err(Error::Dimension {
            expected: p - 1,
            got: observed_idx.len(),
            context: "mvn_condition observed indices",
        });
    }
    let mut seen = vec![false; p];
    for &i in observed_idx {
        if i >= p || seen[i] {
            return Err(Error::Dimension {
                expected: p,
                got: i,
                context: "mvn_condition index out of range or repeated",
            });
        }
        seen[i] = true;
    }
    let free_idx: Vec<usize> = (0..p).filter(|i| !seen[*i]).collect();

    let no = observed_idx.len();
    let nf = free_idx.len();
    let cov_oo = DMatrix::from_fn(no, no, |r, c| params.cov[(observed_idx[r], observed_idx[c])]);
    let cov_fo = DMatrix::from_fn(nf, no, |r, c| params.cov[(free_idx[r], observed_idx[c])]);
    let cov_ff = DMatrix::from_fn(nf, nf, |r, c| params.cov[(free_idx[r], free_idx[c])]);

    let chol_oo = Cholesky::new(cov_oo).ok_or(Error::NotPositiveDefinite {
        context: "mvn_condition observed block",
    })?;
    let delta = DVector::from_fn(no, |r, _| observed_values[r] - params.mean[observed_idx[r]]);
    // mean_f + C_fo C_oo^{-1} (x_o - mean_o)
    let solved = chol_oo.solve(&delta);
    let mean = DVector::from_fn(nf, |r, _| params.mean[free_idx[r]]) + &cov_fo * solved;
    // C_ff - C_fo C_oo^{-1} C_of
    let solved_block = chol_oo.solve(&cov_fo.transpose());
    let mut cov = cov_ff - &cov_fo * solved_block;
    // Symmetrize away factorization round-off.
    for i in 0..nf {
        for j in (i + 1)..nf {
            let avg = (cov[(i, j)] + cov[(j, i)]) / T::cast(2.0);
            cov[(i, j)] = avg;
            cov[(j, i)] = avg;
        }
    }
    MvnParams::new(mean, cov)
}
