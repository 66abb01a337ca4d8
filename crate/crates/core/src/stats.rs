//! Small statistical utilities: quantiles, summaries, Welch's t-test, and a
//! Gaussian kernel density estimate for the exported density grids.

use crate::scalar::Scalar;

/// Type-7 (linear interpolation) quantile of unsorted data.
pub fn quantile<T: Scalar>(values: &[T], p: f64) -> T {
    assert!(!values.is_empty(), "quantile of empty slice");
    assert!((0.0..=1.0).contains(&p));
    let mut sorted: Vec<T> = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("NaN in quantile input"));
    quantile_sorted(&sorted, p)
}

pub fn quantile_sorted<T: Scalar>(sorted: &[T], p: f64) -> T {
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = p * (n as f64 - 1.0);
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(n - 1);
    let w = T::cast(h - lo as f64);
    sorted[lo] + w * (sorted[hi] - sorted[lo])
}

pub fn median<T: Scalar>(values: &[T]) -> T {
    quantile(values, 0.5)
}

pub fn mean<T: Scalar>(values: &[T]) -> T {
    let mut s = T::zero();
    for v in values {
        s += *v;
    }
    s / T::cast_usize(values.len().max(1))
}

pub fn sample_variance<T: Scalar>(values: &[T]) -> T {
    let n = values.len();
    if n < 2 {
        return T::zero();
    }
    let m = mean(values);
    let mut s = T::zero();
    for v in values {
        let d = *v - m;
        s += d * d;
    }
    s / T::cast_usize(n - 1)
}

pub fn sd<T: Scalar>(values: &[T]) -> T {
    sample_variance(values).sqrt()
}

/// (min, first quartile, median, third quartile, max).
pub fn five_number_summary<T: Scalar>(values: &[T]) -> [T; 5] {
    let mut sorted: Vec<T> = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("NaN in summary input"));
    [
        sorted[0],
        quantile_sorted(&sorted, 0.25),
        quantile_sorted(&sorted, 0.5),
        quantile_sorted(&sorted, 0.75),
        sorted[sorted.len() - 1],
    ]
}

/// Pearson correlation.
pub fn correlation<T: Scalar>(x: &[T], y: &[T]) -> T {
    assert_eq!(x.len(), y.len());
    let mx = mean(x);
    let my = mean(y);
    let (mut sxy, mut sxx, mut syy) = (T::zero(), T::zero(), T::zero());
    for (a, b) in x.iter().zip(y) {
        let dx = *a - mx;
        let dy = *b - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    sxy / (sxx * syy).sqrt()
}

/// Welch's two-sided t-test. Returns (t statistic, p-value). Degenerate
/// inputs (fewer than two observations in either arm, or zero variance in
/// both) give p = 1.
pub fn welch_t_test<T: Scalar>(a: &[T], b: &[T]) -> (T, T) {
    if a.len() < 2 || b.len() < 2 {
        return (T::zero(), T::one());
    }
    let (ma, mb) = (mean(a), mean(b));
    let (va, vb) = (sample_variance(a), sample_variance(b));
    let (na, nb) = (T::cast_usize(a.len()), T::cast_usize(b.len()));
    let se2 = va / na + vb / nb;
    if se2 <= T::zero() {
        return (T::zero(), T::one());
    }
    let t = (ma - mb) / se2.sqrt();
    let dof = se2 * se2
        / (va * va / (na * na * (na - T::one())) + vb * vb / (nb * nb * (nb - T::one())));
    let p = 2.0 * student_t_sf(t.abs().as_f64(), dof.as_f64());
    (t, T::cast(p.min(1.0)))
}

/// Survival function of the Student-t distribution (f64 internally).
fn student_t_sf(t: f64, dof: f64) -> f64 {
    use statrs::distribution::{ContinuousCDF, StudentsT};
    let dist = StudentsT::new(0.0, 1.0, dof).expect("t dof");
    1.0 - dist.cdf(t)
}

/// Gaussian KDE evaluated on a regular grid; bandwidth is Silverman's rule.
/// Returns (grid, density).
pub fn kde_grid<T: Scalar>(values: &[T], n_grid: usize) -> (Vec<T>, Vec<T>) {
    assert!(!values.is_empty());
    let n = values.len();
    let s = sd(values);
    let mut sorted: Vec<T> = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("NaN in kde input"));
    let iqr = quantile_sorted(&sorted, 0.75) - quantile_sorted(&sorted, 0.25);
    let spread = if iqr > T::zero() {
        s.min(iqr / T::cast(1.34))
    } else {
        s
    };
    let bw = (T::cast(0.9) * spread * T::cast((n as f64).powf(-0.2)))
        .max(T::cast(1e-9));
    let lo = sorted[0] - T::cast(3.0) * bw;
    let hi = sorted[n - 1] + T::cast(3.0) * bw;
    let step = (hi - lo) / T::cast_usize(n_grid - 1);
    let mut grid = Vec::with_capacity(n_grid);
    let mut dens = Vec::with_capacity(n_grid);
    let norm = T::cast_usize(n) * bw * T::two_pi().sqrt();
    for i in 0..n_grid {
        let x = lo + step * T::cast_usize(i);
        let mut d = T::zero();
        for v in values {
            let z = (x - *v) / bw;
            d += (-z * z / T::cast(2.0)).exp();
        }
        grid.push(x);
        dens.push(d / norm);
    }
    (grid, dens)
}
