//! Normal-inverse-Wishart conjugacy: posterior updates, the multivariate-t
//! marginal, and joint (mean, covariance) sampling.
//!
//! Parameterization: `scale_matrix` is the inverse-Wishart scale, so the
//! covariance prior is IW(dof, scale_matrix) and the mean prior given a
//! covariance is N(location, covariance / kappa). All densities and samples
//! use Cholesky factorizations only.

use crate::distributions::mvn::check_symmetric;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use nalgebra::{Cholesky, DMatrix, DVector};
use rand::Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct NiwParams<T: Scalar> {
    pub location: DVector<T>,
    pub kappa: T,
    pub dof: T,
    pub scale_matrix: DMatrix<T>,
}

impl<T: Scalar> NiwParams<T> {
    pub fn new(location: DVector<T>, kappa: T, dof: T, scale_matrix: DMatrix<T>) -> Result<Self> {
        let p = location.len();
        if scale_matrix.nrows() != p || scale_matrix.ncols() != p {
            return Err(Error::Dimension {
                expected: p,
                got: scale_matrix.nrows(),
                context: "NiwParams scale matrix",
            });
        }
        if kappa <= T::zero() {
            return Err(Error::InvalidConfig("NIW kappa must be positive".into()));
        }
        if dof.as_f64() <= p as f64 - 1.0 {
            return Err(Error::DegreesOfFreedom {
                dof: dof.as_f64(),
                min: p as f64 - 1.0,
                context: "NiwParams",
            });
        }
        check_symmetric(&scale_matrix, "NIW scale matrix")?;
        Cholesky::new(scale_matrix.clone()).ok_or(Error::NotPositiveDefinite {
            context: "NIW scale matrix",
        })?;
        Ok(Self {
            location,
            kappa,
            dof,
            scale_matrix,
        })
    }

    pub fn dim(&self) -> usize {
        self.location.len()
    }
}

/// Conjugate update with `data` as an n-rows-by-p matrix. `n = 0` returns the
/// prior unchanged.
pub fn niw_posterior<T: Scalar>(prior: &NiwParams<T>, data: &DMatrix<T>) -> Result<NiwParams<T>> {
    let p = prior.dim();
    let n = data.nrows();
    if n == 0 {
        return Ok(prior.clone());
    }
    if data.ncols() != p {
        return Err(Error::Dimension {
            expected: p,
            got: data.ncols(),
            context: "niw_posterior data columns",
        });
    }
    let n_t = T::cast_usize(n);
    let mean = data.row_mean().transpose();
    // Scatter about the sample mean.
    let mut scatter = DMatrix::zeros(p, p);
    for r in 0..n {
        let d = data.row(r).transpose() - &mean;
        scatter += &d * d.transpose();
    }
    let kappa_n = prior.kappa + n_t;
    let dof_n = prior.dof + n_t;
    let location = (&prior.location * prior.kappa + &mean * n_t) / kappa_n;
    let dm = &mean - &prior.location;
    let shrink = &dm * dm.transpose() * (prior.kappa * n_t / kappa_n);
    let scale = &prior.scale_matrix + scatter + shrink;
    NiwParams::new(location, kappa_n, dof_n, scale)
}

/// Log normalizer of the NIW distribution; the marginal likelihood of a data
/// block is a ratio of these.
fn log_normalizer<T: Scalar>(kappa: T, dof: T, scale: &DMatrix<T>) -> Result<T> {
    let p = scale.nrows();
    let p_t = T::cast_usize(p);
    let half = T::cast(0.5);
    let chol = Cholesky::new(scale.clone()).ok_or(Error::NotPositiveDefinite {
        context: "NIW scale matrix",
    })?;
    let mut log_det = T::zero();
    for i in 0..p {
        log_det += chol.l_dirty()[(i, i)].ln();
    }
    log_det += log_det; // 2 * sum(log diag L)
    Ok(half * dof * p_t * T::cast(2.0).ln() + ln_multigamma(half * dof, p)
        + half * p_t * (T::two_pi() / kappa).ln()
        - half * dof * log_det)
}

/// Multivariate log-gamma function.
fn ln_multigamma<T: Scalar>(a: T, p: usize) -> T {
    let mut s = T::cast(std::f64::consts::PI).ln()
        * T::cast(p as f64 * (p as f64 - 1.0) / 4.0);
    for i in 1..=p {
        s += (a + T::cast((1.0 - i as f64) / 2.0)).ln_gamma();
    }
    s
}

/// Log marginal likelihood of a whole data block under the NIW prior,
/// i.e. log of the normal likelihood integrated against the prior.
pub fn niw_block_marginal_logpdf<T: Scalar>(
    data: &DMatrix<T>,
    prior: &NiwParams<T>,
) -> Result<T> {
    let p = prior.dim();
    let n = data.nrows();
    if n == 0 {
        return Ok(T::zero());
    }
    let post = niw_posterior(prior, data)?;
    let half = T::cast(0.5);
    let np = T::cast_usize(n * p);
    Ok(log_normalizer(post.kappa, post.dof, &post.scale_matrix)?
        - log_normalizer(prior.kappa, prior.dof, &prior.scale_matrix)?
        - half * np * T::two_pi().ln())
}

/// Log density of the single-observation marginal (a multivariate Student-t).
pub fn niw_marginal_logpdf<T: Scalar>(x: &DVector<T>, prior: &NiwParams<T>) -> Result<T> {
    let p = prior.dim();
    if x.len() != p {
        return Err(Error::Dimension {
            expected: p,
            got: x.len(),
            context: "niw_marginal_logpdf",
        });
    }
    if prior.dof.as_f64() <= p as f64 - 1.0 {
        return Err(Error::DegreesOfFreedom {
            dof: prior.dof.as_f64(),
            min: p as f64 - 1.0,
            context: "niw_marginal_logpdf",
        });
    }
    let data = DMatrix::from_fn(1, p, |_, c| x[c]);
    niw_block_marginal_logpdf(&data, prior)
}

/// Joint draw of (mean, covariance): covariance from the inverse Wishart,
/// then the mean conditionally normal.
pub fn niw_sample<T: Scalar, R: Rng + ?Sized>(
    params: &NiwParams<T>,
    rng: &mut R,
) -> Result<(DVector<T>, DMatrix<T>)> {
    let cov = inverse_wishart_sample(params.dof, &params.scale_matrix, rng)?;
    let chol = Cholesky::new(cov.clone() / params.kappa).ok_or(Error::NotPositiveDefinite {
        context: "NIW conditional mean covariance",
    })?;
    let z = DVector::from_fn(params.dim(), |_, _| T::std_normal(rng));
    let mean = &params.location + chol.l_dirty().lower_triangle() * z;
    Ok((mean, cov))
}

/// Inverse-Wishart draw via the Bartlett decomposition: if `scale = L L'` and
/// `A` is the Bartlett factor, the draw is `M M'` with `M = L (A^{-1})'`.
pub fn inverse_wishart_sample<T: Scalar, R: Rng + ?Sized>(
    dof: T,
    scale: &DMatrix<T>,
    rng: &mut R,
) -> Result<DMatrix<T>> {
    let p = scale.nrows();
    if dof.as_f64() <= p as f64 - 1.0 {
        return Err(Error::DegreesOfFreedom {
            dof: dof.as_f64(),
            min: p as f64 - 1.0,
            context: "inverse_wishart_sample",
        });
    }
    let chol = Cholesky::new(scale.clone()).ok_or(Error::NotPositiveDefinite {
        context: "inverse Wishart scale",
    })?;
    let mut bartlett = DMatrix::zeros(p, p);
    for i in 0..p {
        let d = dof - T::cast_usize(i);
        bartlett[(i, i)] = T::chi_squared_draw(d, rng).sqrt();
        for j in 0..i {
            bartlett[(i, j)] = T::std_normal(rng);
        }
    }
    // Invert the lower-triangular Bartlett factor by forward substitution.
    let mut inv = DMatrix::zeros(p, p);
    for col in 0..p {
        inv[(col, col)] = T::one() / bartlett[(col, col)];
        for row in (col + 1)..p {
            let mut s = T::zero();
            for k in col..row {
                s += bartlett[(row, k)] * inv[(k, col)];
            }
            inv[(row, col)] = -s / bartlett[(row, row)];
        }
    }
    let m = chol.l_dirty().lower_triangle() * inv.transpose();
    let mut cov = &m * m.transpose();
    for i in 0..p {
        for j in (i + 1)..p {
            let avg = (cov[(i, j)] + cov[(j, i)]) / T::cast(2.0);
            cov[(i, j)] = avg;
            cov[(j, i)] = avg;
        }
    }
    Ok(cov)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::mvn::{mvn_logpdf, MvnParams};
    use crate::seed::task_rng;
    use approx::assert_abs_diff_eq;

    fn unit_prior(p: usize) -> NiwParams<f64> {
        NiwParams::new(
            DVector::zeros(p),
            1.0,
            p as f64 + 2.0,
            DMatrix::identity(p, p),
        )
        .unwrap()
    }

    #[test]
    fn empty_update_returns_prior() {
        let prior = unit_prior(2);
        let post = niw_posterior(&prior, &DMatrix::zeros(0, 2)).unwrap();
        assert_eq!(post, prior);
    }

    #[test]
    fn single_observation_at_location_shifts_only_counts() {
        let prior = NiwParams::new(
            DVector::from_vec(vec![1.5, -0.5]),
            2.0,
            5.0,
            DMatrix::identity(2, 2),
        )
        .unwrap();
        let data = DMatrix::from_row_slice(1, 2, &[1.5, -0.5]);
        let post = niw_posterior(&prior, &data).unwrap();
        assert_eq!(post.location, prior.location);
        assert_abs_diff_eq!(post.kappa, 3.0);
        assert_abs_diff_eq!(post.dof, 6.0);
        assert_abs_diff_eq!(
            (post.scale_matrix - prior.scale_matrix).amax(),
            0.0,
            epsilon = 1e-14
        );
    }

    /// 2-D quadrature oracle for the p=1 posterior: integrate
    /// prior(mean, var) * likelihood(x | mean, var) on a grid and compare the
    /// posterior moments with the conjugate update.
    #[test]
    fn scalar_posterior_matches_quadrature() {
        let prior = NiwParams::new(DVector::from_vec(vec![0.0_f64]), 1.0, 3.0, DMatrix::from_vec(1, 1, vec![1.0])).unwrap();
        let x = 2.0;
        let post = niw_posterior(&prior, &DMatrix::from_vec(1, 1, vec![x])).unwrap();

        // Analytic posterior moments: mean of the mean is the location; the
        // variance parameter has an inverse-gamma marginal with mean
        // scale / (dof - 2).
        let want_mean = post.location[0];
        let want_var_mean = post.scale_matrix[(0, 0)] / (post.dof - 2.0);

        // Quadrature over (standardized mean, log variance): with
        // mu = loc + sqrt(v / kappa) s and v = exp(u), a box in (s, u)
        // captures the mass at every variance scale.
        let (n_s, n_u) = (2000, 2000);
        let (s_lo, s_hi) = (-40.0, 42.0);
        let (u_lo, u_hi) = (-12.0, 12.0);
        let du = (u_hi - u_lo) / n_u as f64;
        let ds = (s_hi - s_lo) / n_s as f64;
        let (mut z, mut sum_mu, mut sum_v) = (0.0, 0.0, 0.0);
        let (a_ig, b_ig) = (prior.dof / 2.0, prior.scale_matrix[(0, 0)] / 2.0);
        let half_ln_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
        for iu in 0..n_u {
            let u = u_lo + (iu as f64 + 0.5) * du;
            let v = u.exp();
            // inverse-gamma in v, times the Jacobian v of the log substitution
            let log_ig = a_ig * b_ig.ln() - Scalar::ln_gamma(a_ig) - (a_ig + 1.0) * v.ln()
                - b_ig / v
                + v.ln();
            for is in 0..n_s {
                let s = s_lo + (is as f64 + 0.5) * ds;
                let mu = prior.location[0] + (v / prior.kappa).sqrt() * s;
                // prior on the mean in standardized coordinates is N(0, 1)
                let log_mean_prior = -half_ln_2pi - 0.5 * s * s;
                let log_lik =
                    -half_ln_2pi - 0.5 * v.ln() - 0.5 * (x - mu).powi(2) / v;
                let w = (log_ig + log_mean_prior + log_lik).exp();
                z += w;
                sum_mu += w * mu;
                sum_v += w * v;
            }
        }
        let got_mean = sum_mu / z;
        let got_var_mean = sum_v / z;
        assert_abs_diff_eq!(got_mean, want_mean, epsilon = 1e-3);
        assert_abs_diff_eq!(got_var_mean, want_var_mean, epsilon = 1e-3 * want_var_mean.max(1.0));
    }

    /// Quadrature oracle for the p=1 single-observation marginal.
    #[test]
    fn scalar_marginal_matches_quadrature() {
        let prior = NiwParams::new(DVector::from_vec(vec![0.5_f64]), 2.0, 4.0, DMatrix::from_vec(1, 1, vec![1.5])).unwrap();
        for &x in &[-1.0, 0.5, 1.7, 4.0] {
            let got = niw_marginal_logpdf(&DVector::from_vec(vec![x]), &prior).unwrap();
            let (n_s, n_u) = (2000, 2000);
            let (s_lo, s_hi) = (-42.0, 40.0);
            let (u_lo, u_hi) = (-12.0, 12.0);
            let du = (u_hi - u_lo) / n_u as f64;
            let ds = (s_hi - s_lo) / n_s as f64;
            let (a_ig, b_ig) = (prior.dof / 2.0, prior.scale_matrix[(0, 0)] / 2.0);
            let half_ln_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
            let mut z = 0.0;
            for iu in 0..n_u {
                let u = u_lo + (iu as f64 + 0.5) * du;
                let v = u.exp();
                let log_ig = a_ig * b_ig.ln() - Scalar::ln_gamma(a_ig) - (a_ig + 1.0) * v.ln()
                    - b_ig / v
                    + v.ln();
                for is in 0..n_s {
                    let s = s_lo + (is as f64 + 0.5) * ds;
                    let mu = prior.location[0] + (v / prior.kappa).sqrt() * s;
                    let log_mean_prior = -half_ln_2pi - 0.5 * s * s;
                    let log_lik =
                        -half_ln_2pi - 0.5 * v.ln() - 0.5 * (x - mu).powi(2) / v;
                    z += (log_ig + log_mean_prior + log_lik).exp();
                }
            }
            let quad = (z * du * ds).ln();
            assert_abs_diff_eq!(got, quad, epsilon = 1e-3);
        }
    }

    #[test]
    fn marginal_approaches_normal_in_the_limit() {
        let prior = NiwParams::new(
            DVector::from_vec(vec![0.3]),
            1e6,
            1e6,
            DMatrix::from_vec(1, 1, vec![1e6]),
        )
        .unwrap();
        let normal = MvnParams::new(
            DVector::from_vec(vec![0.3]),
            DMatrix::from_vec(1, 1, vec![1.0]),
        )
        .unwrap();
        for &x in &[-2.0, 0.3, 1.0, 2.5] {
            let xv = DVector::from_vec(vec![x]);
            let a = niw_marginal_logpdf(&xv, &prior).unwrap();
            let b = mvn_logpdf(&xv, &normal).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-3);
        }
    }

    #[test]
    fn marginal_is_symmetric_about_location() {
        let prior = NiwParams::new(
            DVector::from_vec(vec![1.0, -1.0]),
            0.5,
            4.0,
            DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 2.0]),
        )
        .unwrap();
        let delta = DVector::from_vec(vec![0.7, -0.2]);
        let plus = niw_marginal_logpdf(&(&prior.location + &delta), &prior).unwrap();
        let minus = niw_marginal_logpdf(&(&prior.location - &delta), &prior).unwrap();
        assert_abs_diff_eq!(plus, minus, epsilon = 1e-12);
    }

    #[test]
    fn marginal_rejects_low_dof() {
        let err = NiwParams::new(
            DVector::zeros(2),
            1.0,
            0.9,
            DMatrix::identity(2, 2),
        );
        assert!(err.is_err());
    }

    #[test]
    fn order_invariance_and_sequential_conjugacy() {
        let prior = unit_prior(2);
        let data = DMatrix::from_row_slice(4, 2, &[0.1, -0.3, 1.2, 0.7, -0.9, 0.4, 0.5, 0.5]);
        let permuted = DMatrix::from_row_slice(4, 2, &[0.5, 0.5, 0.1, -0.3, -0.9, 0.4, 1.2, 0.7]);
        let a = niw_posterior(&prior, &data).unwrap();
        let b = niw_posterior(&prior, &permuted).unwrap();
        assert!((a.location.clone() - b.location).amax() < 1e-10);
        assert!((a.scale_matrix.clone() - b.scale_matrix).amax() < 1e-10);

        let first = DMatrix::from_row_slice(2, 2, &[0.1, -0.3, 1.2, 0.7]);
        let second = DMatrix::from_row_slice(2, 2, &[-0.9, 0.4, 0.5, 0.5]);
        let seq = niw_posterior(&niw_posterior(&prior, &first).unwrap(), &second).unwrap();
        assert!((a.location.clone() - seq.location).amax() < 1e-10);
        assert_abs_diff_eq!(a.kappa, seq.kappa, epsilon = 1e-12);
        assert_abs_diff_eq!(a.dof, seq.dof, epsilon = 1e-12);
        assert!((a.scale_matrix.clone() - seq.scale_matrix).amax() < 1e-10);
    }

    #[test]
    fn block_marginal_chains_like_sequential_predictives() {
        let prior = unit_prior(2);
        let data = DMatrix::from_row_slice(3, 2, &[0.1, -0.3, 1.2, 0.7, -0.9, 0.4]);
        let block = niw_block_marginal_logpdf(&data, &prior).unwrap();
        let mut chained = 0.0;
        let mut running = prior.clone();
        for r in 0..3 {
            let x = data.row(r).transpose();
            chained += niw_marginal_logpdf(&x, &running).unwrap();
            running = niw_posterior(&running, &DMatrix::from_fn(1, 2, |_, c| x[c])).unwrap();
        }
        assert_abs_diff_eq!(block, chained, epsilon = 1e-10);
    }

    #[test]
    fn inverse_wishart_moments() {
        // E[IW(dof, S)] = S / (dof - p - 1) when dof > p + 1.
        let scale = DMatrix::from_row_slice(2, 2, &[2.0, 0.3, 0.3, 1.0]);
        let dof = 7.0;
        let mut rng = task_rng(3, &[11]);
        let n = 40_000;
        let mut acc = DMatrix::zeros(2, 2);
        for _ in 0..n {
            acc += inverse_wishart_sample(dof, &scale, &mut rng).unwrap();
        }
        let mean = acc / n as f64;
        let want = scale / (dof - 3.0);
        assert!((mean - want).amax() < 0.05);
    }

    #[test]
    fn niw_sample_is_deterministic_and_pd() {
        let prior = unit_prior(3);
        let (m1, c1) = niw_sample(&prior, &mut task_rng(5, &[2])).unwrap();
        let (m2, c2) = niw_sample(&prior, &mut task_rng(5, &[2])).unwrap();
        assert_eq!(m1, m2);
        assert_eq!(c1, c2);
        assert!(Cholesky::new(c1).is_some());
    }
}
