//! Skew-normal sampling via the two-normal representation.

use crate::scalar::Scalar;
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewNormalParams<T: Scalar> {
    pub location: T,
    pub scale: T,
    pub shape: T,
}

impl<T: Scalar> SkewNormalParams<T> {
    pub fn new(location: T, scale: T, shape: T) -> Self {
        assert!(scale > T::zero(), "skew-normal scale must be positive");
        Self {
            location,
            scale,
            shape,
        }
    }

    /// Mean: location + scale * delta * sqrt(2/pi) with
    /// delta = shape / sqrt(1 + shape^2).
    pub fn mean(&self) -> T {
        let delta = self.shape / (T::one() + self.shape * self.shape).sqrt();
        self.location
            + self.scale * delta * (T::cast(2.0) / T::cast(std::f64::consts::PI)).sqrt()
    }
}

/// Draw X = delta |Z0| + sqrt(1 - delta^2) Z1, then shift and scale.
pub fn skew_normal_sample<T: Scalar, R: Rng + ?Sized>(
    params: &SkewNormalParams<T>,
    rng: &mut R,
) -> T {
    let delta = params.shape / (T::one() + params.shape * params.shape).sqrt();
    let z0 = T::std_normal(rng);
    let z1 = T::std_normal(rng);
    let x = delta * z0.abs() + (T::one() - delta * delta).sqrt() * z1;
    params.location + params.scale * x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::task_rng;

    #[test]
    fn moments_match_analytic_mean() {
        let params = SkewNormalParams::new(0.0_f64, 1.0, 4.0);
        let mut rng = task_rng(13, &[0]);
        let n = 200_000;
        let mut sum = 0.0;
        for _ in 0..n {
            sum += skew_normal_sample(&params, &mut rng);
        }
        assert!((sum / n as f64 - params.mean()).abs() < 0.01);
    }

    #[test]
    fn zero_shape_reduces_to_normal() {
        let params = SkewNormalParams::new(1.0_f64, 2.0, 0.0);
        let mut rng = task_rng(13, &[1]);
        let n = 100_000;
        let (mut sum, mut sum_sq) = (0.0, 0.0);
        for _ in 0..n {
            let x = skew_normal_sample(&params, &mut rng);
            sum += x;
            sum_sq += x * x;
        }
        let mean = sum / n as f64;
        let var = sum_sq / n as f64 - mean * mean;
        assert!((mean - 1.0).abs() < 0.03);
        assert!((var - 4.0).abs() < 0.1);
    }
}
