//! Scalar abstraction for the numerical kernels.
//!
//! All of the math in this crate is written against [`Scalar`] so the same
//! code runs at `f32` or `f64` precision. The trait bundles the linear-algebra
//! requirements (`nalgebra::RealField`) with the random draws and special
//! functions the samplers need, so generic code never has to thread
//! distribution trait bounds around.

use nalgebra::RealField;
use num_traits::NumCast;
use rand::Rng;
use rand_distr::{Beta, ChiSquared, Distribution, Gamma};
use std::fmt::Display;

/// Floating-point scalar usable by every kernel in this crate.
pub trait Scalar: RealField + NumCast + Copy + Default + Display + Send + Sync {
    /// Conversion from `f64` constants; panics only if the value cannot be
    /// represented at all.
    fn cast(x: f64) -> Self {
        <Self as NumCast>::from(x).expect("f64 conversion")
    }

    /// Widening conversion to `f64`.
    fn as_f64(self) -> f64 {
        <f64 as NumCast>::from(self).expect("f64 conversion")
    }

    fn cast_usize(n: usize) -> Self {
        Self::cast(n as f64)
    }

    fn finite(self) -> bool;

    /// Error function.
    fn erf(self) -> Self;

    /// Complementary error function, accurate in the right tail.
    fn erfc(self) -> Self;

    /// Natural log of the gamma function.
    fn ln_gamma(self) -> Self;

    /// Standard normal draw.
    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Uniform draw on `[0, 1)`.
    fn uniform01<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Normal draw with the given mean and standard deviation.
    fn normal_draw<R: Rng + ?Sized>(mean: Self, sd: Self, rng: &mut R) -> Self {
        mean + sd * Self::std_normal(rng)
    }

    /// Gamma draw parameterized by shape and *rate*.
    fn gamma_draw<R: Rng + ?Sized>(shape: Self, rate: Self, rng: &mut R) -> Self;

    /// Beta draw.
    fn beta_draw<R: Rng + ?Sized>(a: Self, b: Self, rng: &mut R) -> Self;

    /// Chi-squared draw.
    fn chi_squared_draw<R: Rng + ?Sized>(dof: Self, rng: &mut R) -> Self;

    /// Standard normal cumulative distribution function.
    fn normal_cdf(self) -> Self {
        let half = Self::cast(0.5);
        half * (-self / Self::cast(std::f64::consts::SQRT_2)).erfc()
    }

    /// Standard normal survival function, accurate in the right tail where
    /// `1 - cdf` would cancel.
    fn normal_sf(self) -> Self {
        let half = Self::cast(0.5);
        half * (self / Self::cast(std::f64::consts::SQRT_2)).erfc()
    }

    /// Standard normal density.
    fn normal_pdf(self) -> Self {
        let two_pi = Self::two_pi();
        (-self * self / Self::cast(2.0)).exp() / two_pi.sqrt()
    }

    /// Standard normal quantile function (Acklam's rational approximation,
    /// refined by one Halley step; relative error well below 1e-9).
    fn normal_quantile(p: Self) -> Self {
        Self::cast(normal_quantile_f64(p.as_f64()))
    }
}

impl Scalar for f64 {
    fn finite(self) -> bool {
        self.is_finite()
    }

    fn erf(self) -> Self {
        statrs::function::erf::erf(self)
    }

    fn erfc(self) -> Self {
        statrs::function::erf::erfc(self)
    }

    fn ln_gamma(self) -> Self {
        statrs::function::gamma::ln_gamma(self)
    }

    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(rand_distr::StandardNormal)
    }

    fn uniform01<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random::<f64>()
    }

    fn gamma_draw<R: Rng + ?Sized>(shape: Self, rate: Self, rng: &mut R) -> Self {
        Gamma::new(shape, 1.0 / rate)
            .expect("gamma parameters")
            .sample(rng)
    }

    fn beta_draw<R: Rng + ?Sized>(a: Self, b: Self, rng: &mut R) -> Self {
        Beta::new(a, b).expect("beta parameters").sample(rng)
    }

    fn chi_squared_draw<R: Rng + ?Sized>(dof: Self, rng: &mut R) -> Self {
        ChiSquared::new(dof).expect("chi-squared dof").sample(rng)
    }
}

impl Scalar for f32 {
    fn finite(self) -> bool {
        self.is_finite()
    }

    // Special functions route through the f64 implementations; the result is
    // correctly rounded to f32 precision.
    fn erf(self) -> Self {
        statrs::function::erf::erf(self as f64) as f32
    }

    fn erfc(self) -> Self {
        statrs::function::erf::erfc(self as f64) as f32
    }

    fn ln_gamma(self) -> Self {
        statrs::function::gamma::ln_gamma(self as f64) as f32
    }

    fn std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(rand_distr::StandardNormal)
    }

    fn uniform01<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.random::<f32>()
    }

    fn gamma_draw<R: Rng + ?Sized>(shape: Self, rate: Self, rng: &mut R) -> Self {
        Gamma::new(shape, 1.0 / rate)
            .expect("gamma parameters")
            .sample(rng)
    }

    fn beta_draw<R: Rng + ?Sized>(a: Self, b: Self, rng: &mut R) -> Self {
        Beta::new(a, b).expect("beta parameters").sample(rng)
    }

    fn chi_squared_draw<R: Rng + ?Sized>(dof: Self, rng: &mut R) -> Self {
        ChiSquared::new(dof).expect("chi-squared dof").sample(rng)
    }
}

fn normal_quantile_f64(p: f64) -> f64 {
    assert!(p > 0.0 && p < 1.0, "quantile argument must be in (0, 1)");
    // Acklam 2003 coefficients.
    const A: [f64; 6] = [
        -3.969683028665376e+01,
        2.209460984245205e+02,
        -2.759285104469687e+02,
        1.383577518672690e+02,
        -3.066479806614716e+01,
        2.506628277459239e+00,
    ];
    const B: [f64; 5] = [
        -5.447609879822406e+01,
        1.615858368580409e+02,
        -1.556989798598866e+02,
        6.680131188771972e+01,
        -1.328068155288572e+01,
    ];
    const C: [f64; 6] = [
        -7.784894002430293e-03,
        -3.223964580411365e-01,
        -2.400758277161838e+00,
        -2.549732539343734e+00,
        4.374664141464968e+00,
        2.938163982698783e+00,
    ];
    const D: [f64; 4] = [
        7.784695709041462e-03,
        3.224671290700398e-01,
        2.445134137142996e+00,
        3.754408661907416e+00,
    ];
    const P_LOW: f64 = 0.02425;

    let x = if p < P_LOW {
        let q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        let q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        let q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };

    // One Halley refinement against the exact CDF.
    let e = 0.5 * statrs::function::erf::erfc(-x / std::f64::consts::SQRT_2) - p;
    let u = e * (2.0 * std::f64::consts::PI).sqrt() * (x * x / 2.0).exp();
    x - u / (1.0 + x * u / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_quantile_matches_known_values() {
        assert!((normal_quantile_f64(0.5)).abs() < 1e-12);
        assert!((normal_quantile_f64(0.975) - 1.959963984540054).abs() < 1e-9);
        assert!((normal_quantile_f64(0.0013498980316300946) + 3.0).abs() < 1e-8);
    }

    #[test]
    fn cdf_and_quantile_are_inverse() {
        for &x in &[-3.5, -1.0, 0.0, 0.7, 2.2] {
            let p = Scalar::normal_cdf(x);
            assert!((f64::normal_quantile(p) - x).abs() < 1e-8);
        }
    }

    #[test]
    fn f32_special_functions_agree_with_f64() {
        let x = 0.73_f32;
        assert!((Scalar::erf(x) as f64 - Scalar::erf(0.73_f64)).abs() < 1e-6);
        assert!((Scalar::ln_gamma(4.2_f32) as f64 - Scalar::ln_gamma(4.2_f64)).abs() < 1e-5);
    }
}
