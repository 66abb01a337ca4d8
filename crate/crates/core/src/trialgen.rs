//! Scenario generators for true group-level effects and the adaptive
//! platform-trial simulator that produces subject-level data.
//!
//! Groups are biomarker-treatment cells indexed `j = m * K + k` (biomarker
//! major), so with K = 4 the 1-based group 9 is biomarker 3 under treatment
//! A. Subject accrual happens in batches; after every batch arm-level
//! stopping rules run and the randomization weights are refreshed from the
//! accumulated data. In the final stretch of enrollment, arms below the
//! per-group floor are topped up.

use crate::distributions::{skew_normal_sample, SkewNormalParams};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::stats::welch_t_test;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// The nine effect-generation settings plus the skewed variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scenario {
    Nonlinear,
    Linear,
    Simple,
    Null,
    Inter,
    #[serde(rename = "interhide")]
    InterHide,
    #[serde(rename = "onetrt")]
    OneTrt,
    #[serde(rename = "twotrt")]
    TwoTrt,
    #[serde(rename = "manybiom")]
    ManyBiom,
    #[serde(rename = "nonlinearskew")]
    NonlinearSkew,
}

impl Scenario {
    pub const ALL: [Scenario; 10] = [
        Scenario::Nonlinear,
        Scenario::Linear,
        Scenario::Simple,
        Scenario::Null,
        Scenario::Inter,
        Scenario::InterHide,
        Scenario::OneTrt,
        Scenario::TwoTrt,
        Scenario::ManyBiom,
        Scenario::NonlinearSkew,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Scenario::Nonlinear => "nonlinear",
            Scenario::Linear => "linear",
            Scenario::Simple => "simple",
            Scenario::Null => "null",
            Scenario::Inter => "inter",
            Scenario::InterHide => "interhide",
            Scenario::OneTrt => "onetrt",
            Scenario::TwoTrt => "twotrt",
            Scenario::ManyBiom => "manybiom",
            Scenario::NonlinearSkew => "nonlinearskew",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Scenario::ALL
            .iter()
            .copied()
            .find(|s| s.name() == name)
            .ok_or_else(|| Error::UnknownScenario(name.to_string()))
    }

    /// Settings with a ground-truth cluster structure.
    pub fn has_true_clusters(&self) -> bool {
        matches!(
            self,
            Scenario::Inter
                | Scenario::InterHide
                | Scenario::OneTrt
                | Scenario::TwoTrt
                | Scenario::ManyBiom
        )
    }
}

impl std::fmt::Display for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Effect-generation configuration for one scenario cell.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioConfig<T: Scalar> {
    pub scenario: Scenario,
    pub c_z: T,
    pub c_u: T,
    /// Number of active treatments K.
    pub n_treatments: usize,
    /// Number of biomarker signature groups M.
    pub n_biomarkers: usize,
    pub seed: u64,
    /// Shape of the skew-normal replacement draws in the skewed setting.
    pub skew_shape: T,
    /// Prevalences of the independent binary markers whose combinations
    /// define the biomarker groups (used when `n_biomarkers` is a power of
    /// two matching their count).
    pub marker_prevalences: Vec<T>,
    /// Explicit biomarker multinomial; overrides `marker_prevalences`.
    pub biomarker_probs: Option<Vec<T>>,
}

impl<T: Scalar> ScenarioConfig<T> {
    pub fn new(scenario: Scenario, c_z: f64, c_u: f64, seed: u64) -> Self {
        Self {
            scenario,
            c_z: T::cast(c_z),
            c_u: T::cast(c_u),
            n_treatments: 4,
            n_biomarkers: 16,
            seed,
            skew_shape: T::cast(4.0),
            marker_prevalences: vec![
                T::cast(0.45),
                T::cast(0.40),
                T::cast(0.35),
                T::cast(0.30),
            ],
            biomarker_probs: None,
        }
    }

    pub fn n_groups(&self) -> usize {
        self.n_treatments * self.n_biomarkers
    }

    /// Label used in table rows: `name-c_z-c_u`, e.g. `linear-0.0-0.3`.
    pub fn cell_label(&self) -> String {
        format!(
            "{}-{:.1}-{:.1}",
            self.scenario.name(),
            self.c_z.as_f64(),
            self.c_u.as_f64()
        )
    }

    /// Multinomial over biomarker groups. With M = 2^L and L configured
    /// marker prevalences, cell probabilities are the independent-marker
    /// products; otherwise uniform unless given explicitly.
    pub fn biomarker_probs(&self) -> Vec<T> {
        if let Some(p) = &self.biomarker_probs {
            assert_eq!(p.len(), self.n_biomarkers, "biomarker_probs length");
            return p.clone();
        }
        let l = self.marker_prevalences.len();
        if self.n_biomarkers == 1 << l {
            (0..self.n_biomarkers)
                .map(|cell| {
                    let mut prob = T::one();
                    for (bit, prev) in self.marker_prevalences.iter().enumerate() {
                        prob *= if cell >> bit & 1 == 1 {
                            *prev
                        } else {
                            T::one() - *prev
                        };
                    }
                    prob
                })
                .collect()
        } else {
            vec![T::one() / T::cast_usize(self.n_biomarkers); self.n_biomarkers]
        }
    }

    /// Category label (0, 1, 2) of a biomarker in the multi-biomarker
    /// setting; the split reproduces group-category sizes 20/28/16 at M=16.
    pub fn biom_category(&self, biomarker: usize) -> usize {
        let m = self.n_biomarkers;
        let n1 = ((5 * m + 8) / 16).max(1);
        let n3 = ((4 * m + 8) / 16).max(1);
        let n2 = m.saturating_sub(n1 + n3).max(1);
        if biomarker < n1 {
            0
        } else if biomarker < n1 + n2 {
            1
        } else {
            2
        }
    }
}

/// Ground truth for one biomarker-treatment group.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GroupTruth<T: Scalar> {
    /// 0-based group index `j = biomarker * K + treatment`.
    pub group: usize,
    pub biomarker: usize,
    pub treatment: usize,
    /// True effect on the surrogate.
    pub nu: T,
    /// True effect on the log-time outcome.
    pub mu: T,
    /// Observed group-level covariate.
    pub z: T,
    /// Unobserved group-level covariate.
    pub u: T,
    pub true_cluster: Option<usize>,
}

pub fn group_index(biomarker: usize, treatment: usize, n_treatments: usize) -> usize {
    biomarker * n_treatments + treatment
}

/// Monotone-increasing linear spline with knots at -1, 0, 1; the piecewise
/// slopes are 0.25, 1.0, 2.0, 0.5.
fn increasing_spline<T: Scalar>(x: T) -> T {
    let mut y = T::cast(0.25) * x;
    for (knot, coef) in [(-1.0, 0.75), (0.0, 1.0), (1.0, -1.5)] {
        let d = x - T::cast(knot);
        if d > T::zero() {
            y += T::cast(coef) * d;
        }
    }
    y
}

/// Generate the K*M true group effects for a scenario.
pub fn generate_group_effects<T: Scalar, R: Rng + ?Sized>(
    cfg: &ScenarioConfig<T>,
    rng: &mut R,
) -> Vec<GroupTruth<T>> {
    let k_trt = cfg.n_treatments;
    let n = cfg.n_groups();
    let skewed = cfg.scenario == Scenario::NonlinearSkew;
    let skew = SkewNormalParams::new(T::zero(), T::one(), cfg.skew_shape);

    let mut nu = Vec::with_capacity(n);
    let mut z = Vec::with_capacity(n);
    let mut u = Vec::with_capacity(n);
    for j in 0..n {
        let treatment = j % k_trt;
        let biomarker = j / k_trt;
        nu.push(if skewed {
            skew_normal_sample(&skew, rng)
        } else {
            T::std_normal(rng)
        });
        let z_j = match cfg.scenario {
            // Treatment-dependent covariate means so the covariate carries
            // cluster information.
            Scenario::TwoTrt => {
                let center = T::cast_usize(treatment) - T::cast((k_trt as f64 - 1.0) / 2.0);
                center + T::cast(0.5) * T::std_normal(rng)
            }
            Scenario::ManyBiom => {
                T::cast_usize(cfg.biom_category(biomarker))
                    + T::cast(0.5) * T::std_normal(rng)
            }
            _ if skewed => skew_normal_sample(&skew, rng),
            _ => T::std_normal(rng),
        };
        z.push(z_j);
        u.push(T::std_normal(rng));
    }
    let nu_min = nu
        .iter()
        .copied()
        .fold(T::cast(f64::INFINITY), |a, b| a.min(b));

    (0..n)
        .map(|j| {
            let treatment = j % k_trt;
            let biomarker = j / k_trt;
            let (c_z, c_u) = (cfg.c_z, cfg.c_u);
            let minus_one = -T::one();
            let (mu, cluster) = match cfg.scenario {
                Scenario::Nonlinear | Scenario::NonlinearSkew => (
                    minus_one + increasing_spline(nu[j]) + c_z * z[j].abs() + c_u * u[j],
                    None,
                ),
                Scenario::Linear => (minus_one + nu[j] + c_z * z[j].abs() + c_u * u[j], None),
                Scenario::Simple => (minus_one + nu[j] + c_z * z[j] + c_u * u[j], None),
                Scenario::Null => (minus_one + c_z * z[j].abs() + c_u * u[j], None),
                Scenario::Inter => {
                    let active = z[j] < T::zero();
                    (
                        if active { nu[j] } else { T::zero() } + c_u * u[j],
                        Some(active as usize),
                    )
                }
                Scenario::InterHide => {
                    let active = u[j] < T::zero();
                    (
                        if active { nu[j] } else { T::zero() } + c_z * z[j],
                        Some(active as usize),
                    )
                }
                Scenario::OneTrt => {
                    let active = treatment == 0;
                    (
                        if active { nu[j] } else { T::zero() } + c_z * z[j] + c_u * u[j],
                        Some(active as usize),
                    )
                }
                Scenario::TwoTrt => {
                    let active = treatment <= 1;
                    (
                        if active { nu[j] - nu_min } else { T::zero() }
                            + c_z * z[j]
                            + c_u * u[j],
                        Some(active as usize),
                    )
                }
                Scenario::ManyBiom => {
                    let cat = cfg.biom_category(biomarker);
                    let slope = T::cast(0.25) * (T::cast_usize(cat + 1) - T::cast(3.0));
                    (
                        slope * (nu[j] - nu_min) + c_z * z[j] + c_u * u[j],
                        Some(cat),
                    )
                }
            };
            GroupTruth {
                group: j,
                biomarker,
                treatment,
                nu: nu[j],
                mu,
                z: z[j],
                u: u[j],
                true_cluster: cluster,
            }
        })
        .collect()
}

/// One subject. Treatment `None` means standard of care.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubjectRecord<T: Scalar> {
    pub surrogate: T,
    /// Observed time (minimum of event and censoring times); positive.
    pub time: T,
    /// True when `time` is the event time rather than a censoring time.
    pub event: bool,
    pub treatment: Option<usize>,
    pub biomarker: usize,
}

impl<T: Scalar> SubjectRecord<T> {
    /// Treatment indicator vector of length K (all zero for control).
    pub fn treatment_indicators(&self, n_treatments: usize) -> Vec<u8> {
        let mut w = vec![0u8; n_treatments];
        if let Some(k) = self.treatment {
            w[k] = 1;
        }
        w
    }

    /// Biomarker indicator vector of length M (exactly one 1).
    pub fn biomarker_indicators(&self, n_biomarkers: usize) -> Vec<u8> {
        let mut b = vec![0u8; n_biomarkers];
        b[self.biomarker] = 1;
        b
    }

    pub fn group(&self, n_treatments: usize) -> Option<usize> {
        self.treatment
            .map(|k| group_index(self.biomarker, k, n_treatments))
    }
}

/// Which accumulating outcome drives stopping and randomization updates.
/// The surrogate default keeps group-size spreads identical across effect
/// scenarios, since the surrogate effect distribution never changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AdaptOn {
    Surrogate,
    LogTime,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CensorConfig<T: Scalar> {
    pub lower: T,
    pub upper: T,
}

/// Trial-design knobs for the simulator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TrialConfig<T: Scalar> {
    pub batch_size: usize,
    /// Total enrollment.
    pub horizon: usize,
    /// Floor enforced for every biomarker-treatment group in the final
    /// enrollment phase.
    pub min_group_size: usize,
    /// Two-sided p-value threshold closing an arm for benefit (positive
    /// effect) or harm (negative effect).
    pub stop_alpha_benefit: T,
    /// |t| below this after `futility_min_n` subjects closes for futility.
    pub futility_t_threshold: T,
    pub futility_min_n: usize,
    /// Minimum per-arm and control sample size before stopping tests run.
    pub stop_min_n: usize,
    /// Post-normalization lower bound on an open arm's share of its
    /// biomarker's treated mass.
    pub weight_floor: T,
    /// Fraction of enrollment during which deficient groups are topped up.
    pub final_phase_fraction: T,
    pub adapt_on: AdaptOn,
    pub sigma_s: T,
    pub sigma_y: T,
    pub censor: Option<CensorConfig<T>>,
}

impl<T: Scalar> Default for TrialConfig<T> {
    fn default() -> Self {
        Self {
            batch_size: 40,
            horizon: 1500,
            min_group_size: 2,
            stop_alpha_benefit: T::cast(0.01),
            futility_t_threshold: T::cast(0.1),
            futility_min_n: 30,
            stop_min_n: 4,
            weight_floor: T::cast(0.1),
            final_phase_fraction: T::cast(0.2),
            adapt_on: AdaptOn::Surrogate,
            sigma_s: T::one(),
            sigma_y: T::one(),
            censor: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ArmStatus {
    Open,
    ClosedBenefit,
    ClosedHarm,
    ClosedFutility,
}

#[derive(Debug, Clone)]
struct ArmState<T: Scalar> {
    status: ArmStatus,
    outcomes: Vec<T>,
}

impl<T: Scalar> ArmState<T> {
    fn new() -> Self {
        Self {
            status: ArmStatus::Open,
            outcomes: Vec::new(),
        }
    }

    fn n(&self) -> usize {
        self.outcomes.len()
    }
}

/// Simulator output: subjects plus the nuisance intercepts the data were
/// generated from (useful for fidelity checks).
#[derive(Debug, Clone)]
pub struct TrialOutput<T: Scalar> {
    pub subjects: Vec<SubjectRecord<T>>,
    pub beta_b: Vec<T>,
    pub gamma_b: Vec<T>,
}

/// Randomization weights within one biomarker stratum: index 0 is control,
/// then one weight per treatment arm. Closed arms get zero; open arms share
/// the treated mass proportionally to an approximate probability of beating
/// control, floored at `weight_floor`; control keeps `1 / (1 + #open)`.
pub fn randomization_weights<T: Scalar>(
    arm_summaries: &[(bool, Vec<T>)],
    control: &[T],
    weight_floor: T,
    stop_min_n: usize,
) -> Vec<T> {
    let n_open = arm_summaries.iter().filter(|(open, _)| *open).count();
    let mut w = vec![T::zero(); arm_summaries.len() + 1];
    if n_open == 0 {
        w[0] = T::one();
        return w;
    }
    let control_share = T::one() / (T::one() + T::cast_usize(n_open));
    w[0] = control_share;
    let mut scores = vec![T::zero(); arm_summaries.len()];
    for (k, (open, outcomes)) in arm_summaries.iter().enumerate() {
        if !*open {
            continue;
        }
        scores[k] = if outcomes.len() < stop_min_n || control.len() < stop_min_n {
            T::cast(0.5)
        } else {
            let (t, _) = welch_t_test(outcomes, control);
            t.normal_cdf()
        };
    }
    let treated_share = T::one() - control_share;
    let floor = weight_floor * treated_share;
    let open_idx: Vec<usize> = arm_summaries
        .iter()
        .enumerate()
        .filter_map(|(k, (open, _))| open.then_some(k))
        .collect();
    if floor * T::cast_usize(n_open) >= treated_share {
        for &k in &open_idx {
            w[k + 1] = treated_share / T::cast_usize(n_open);
        }
        return w;
    }
    // Waterfill: arms whose proportional share falls below the floor are
    // pinned there; the rest split the remaining mass by score.
    let mut pinned = vec![false; arm_summaries.len()];
    loop {
        let n_pinned = open_idx.iter().filter(|&&k| pinned[k]).count();
        let remaining = treated_share - floor * T::cast_usize(n_pinned);
        let score_total: T = open_idx
            .iter()
            .filter(|&&k| !pinned[k])
            .map(|&k| scores[k])
            .fold(T::zero(), |a, s| a + s);
        let mut changed = false;
        for &k in &open_idx {
            if pinned[k] {
                w[k + 1] = floor;
            } else {
                w[k + 1] = remaining * scores[k] / score_total;
                if w[k + 1] < floor {
                    pinned[k] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    w
}

/// Run the batch-adaptive trial given true group effects.
pub fn simulate_trial<T: Scalar, R: Rng + ?Sized>(
    truth: &[GroupTruth<T>],
    tcfg: &TrialConfig<T>,
    cfg: &ScenarioConfig<T>,
    rng: &mut R,
) -> Result<TrialOutput<T>> {
    let k_trt = cfg.n_treatments;
    let m_bio = cfg.n_biomarkers;
    if truth.len() != k_trt * m_bio {
        return Err(Error::Dimension {
            expected: k_trt * m_bio,
            got: truth.len(),
            context: "simulate_trial truth length",
        });
    }
    if tcfg.batch_size == 0 || tcfg.horizon == 0 {
        return Err(Error::InvalidConfig(
            "batch size and horizon must be positive".into(),
        ));
    }

    let beta_b: Vec<T> = (0..m_bio).map(|_| T::std_normal(rng)).collect();
    let gamma_b: Vec<T> = (0..m_bio).map(|_| T::std_normal(rng)).collect();

    let probs = cfg.biomarker_probs();
    let mut cum = Vec::with_capacity(m_bio);
    let mut acc = T::zero();
    for p in &probs {
        acc += *p;
        cum.push(acc);
    }

    let mut arms: Vec<Vec<ArmState<T>>> = (0..m_bio)
        .map(|_| (0..k_trt).map(|_| ArmState::new()).collect())
        .collect();
    let mut controls: Vec<Vec<T>> = vec![Vec::new(); m_bio];
    let fresh: Vec<(bool, Vec<T>)> = (0..k_trt).map(|_| (true, Vec::new())).collect();
    let mut weights: Vec<Vec<T>> = (0..m_bio)
        .map(|m| randomization_weights(&fresh, &controls[m], tcfg.weight_floor, tcfg.stop_min_n))
        .collect();

    let final_phase_start =
        ((T::one() - tcfg.final_phase_fraction).as_f64() * tcfg.horizon as f64).floor() as usize;
    let mut subjects: Vec<SubjectRecord<T>> = Vec::with_capacity(tcfg.horizon);

    for enrolled in 0..tcfg.horizon {
        // Biomarker membership is a patient characteristic, never assigned.
        let u = T::uniform01(rng);
        let m = cum.iter().position(|c| u < *c).unwrap_or(m_bio - 1);

        let assignment: Option<usize> = if controls[m].is_empty() {
            None
        } else if enrolled >= final_phase_start {
            let deficient = (0..k_trt)
                .filter(|&k| arms[m][k].n() < tcfg.min_group_size)
                .min_by_key(|&k| arms[m][k].n());
            match deficient {
                Some(k) => Some(k),
                None => draw_assignment(&weights[m], rng),
            }
        } else {
            draw_assignment(&weights[m], rng)
        };

        let (nu, mu) = match assignment {
            Some(k) => {
                let g = &truth[group_index(m, k, k_trt)];
                (g.nu, g.mu)
            }
            None => (T::zero(), T::zero()),
        };
        let surrogate = T::normal_draw(beta_b[m] + nu, tcfg.sigma_s, rng);
        let log_time = T::normal_draw(gamma_b[m] + mu, tcfg.sigma_y, rng);
        subjects.push(SubjectRecord {
            surrogate,
            time: log_time.exp(),
            event: true,
            treatment: assignment,
            biomarker: m,
        });

        let tracked = match tcfg.adapt_on {
            AdaptOn::Surrogate => surrogate,
            AdaptOn::LogTime => log_time,
        };
        match assignment {
            Some(k) => arms[m][k].outcomes.push(tracked),
            None => controls[m].push(tracked),
        }

        if (enrolled + 1) % tcfg.batch_size == 0 {
            update_closures(&mut arms, &controls, tcfg);
            for m in 0..m_bio {
                let summaries: Vec<(bool, Vec<T>)> = arms[m]
                    .iter()
                    .map(|a| (a.status == ArmStatus::Open, a.outcomes.clone()))
                    .collect();
                weights[m] = randomization_weights(
                    &summaries,
                    &controls[m],
                    tcfg.weight_floor,
                    tcfg.stop_min_n,
                );
            }
        }
    }

    for m in 0..m_bio {
        for k in 0..k_trt {
            if arms[m][k].n() < tcfg.min_group_size {
                return Err(Error::InfeasibleDesign {
                    biomarker: m,
                    treatment: k,
                    got: arms[m][k].n(),
                    need: tcfg.min_group_size,
                });
            }
        }
        if controls[m].is_empty() {
            return Err(Error::InfeasibleDesign {
                biomarker: m,
                treatment: k_trt,
                got: 0,
                need: 1,
            });
        }
    }

    if let Some(c) = &tcfg.censor {
        subjects = apply_censoring(&subjects, c.lower, c.upper, rng);
    }

    Ok(TrialOutput {
        subjects,
        beta_b,
        gamma_b,
    })
}

fn draw_assignment<T: Scalar, R: Rng + ?Sized>(weights: &[T], rng: &mut R) -> Option<usize> {
    let u = T::uniform01(rng);
    let mut acc = T::zero();
    for (idx, w) in weights.iter().enumerate() {
        acc += *w;
        if u < acc {
            return if idx == 0 { None } else { Some(idx - 1) };
        }
    }
    // Round-off fallthrough lands on the last positive weight.
    match weights.iter().rposition(|w| *w > T::zero()) {
        Some(0) | None => None,
        Some(idx) => Some(idx - 1),
    }
}

fn update_closures<T: Scalar>(
    arms: &mut [Vec<ArmState<T>>],
    controls: &[Vec<T>],
    tcfg: &TrialConfig<T>,
) {
    for (m, biomarker_arms) in arms.iter_mut().enumerate() {
        let control = &controls[m];
        if control.len() < tcfg.stop_min_n {
            continue;
        }
        for arm in biomarker_arms.iter_mut() {
            if arm.status != ArmStatus::Open || arm.n() < tcfg.stop_min_n {
                continue;
            }
            let (t, p) = welch_t_test(&arm.outcomes, control);
            if p < tcfg.stop_alpha_benefit {
                arm.status = if t > T::zero() {
                    ArmStatus::ClosedBenefit
                } else {
                    ArmStatus::ClosedHarm
                };
            } else if arm.n() >= tcfg.futility_min_n && t.abs() < tcfg.futility_t_threshold {
                arm.status = ArmStatus::ClosedFutility;
            }
        }
    }
}

/// Independent uniform censoring on `(lower, upper]`: observed times above
/// the drawn censoring time are cut and flagged as censored.
pub fn apply_censoring<T: Scalar, R: Rng + ?Sized>(
    data: &[SubjectRecord<T>],
    lower: T,
    upper: T,
    rng: &mut R,
) -> Vec<SubjectRecord<T>> {
    assert!(lower < upper, "censoring bounds must be ordered");
    data.iter()
        .map(|s| {
            let c = lower + (upper - lower) * (T::one() - T::uniform01(rng));
            if c < s.time {
                SubjectRecord {
                    time: c,
                    event: false,
                    ..*s
                }
            } else {
                *s
            }
        })
        .collect()
}

/// Per-group subject counts (treated cells only), length K*M.
pub fn group_sizes<T: Scalar>(
    subjects: &[SubjectRecord<T>],
    cfg: &ScenarioConfig<T>,
) -> Vec<usize> {
    let mut counts = vec![0usize; cfg.n_groups()];
    for s in subjects {
        if let Some(j) = s.group(cfg.n_treatments) {
            counts[j] += 1;
        }
    }
    counts
}
