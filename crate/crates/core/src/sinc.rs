//! Sinc approximation on (0, ∞) for exponentially decaying functions.
//!
//! A function `f` with algebraic growth `t^α` at 0 and exponential decay
//! `e^{-βt}` at ∞ is approximated by sampling it at the images of an
//! equispaced grid under a conformal map of the real line onto (0, ∞)
//! (see [`crate::maps`]) and interpolating with the cardinal sinc basis:
//!
//! ```text
//! f(t) ≈ Σ_{k=-M}^{N} f(map(kh)) · sinc(x/h - k),   x = map⁻¹(t).
//! ```
//!
//! [`select_params`] picks the step size `h` and the truncation indices
//! `M, N` from the decay profile so that the discretization and truncation
//! errors balance, giving root-exponential convergence in `n`.

use crate::maps::{self, MapError, MapKind};
use std::f64::consts::PI;
use thiserror::Error;

/// Wall-to-wall description of how a function behaves on (0, ∞) and where
/// it stays analytic, sufficient to drive parameter selection and the
/// a-priori error bounds.
///
/// The profile asserts `|f(z)| ≤ K |z/(1+z)|^α |e^{-z}|^β` on the image of
/// the strip `|Im w| < d` under the chosen map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayProfile {
    /// Scale constant `K > 0` of the envelope.
    pub k: f64,
    /// Algebraic order `α > 0` at the origin.
    pub alpha: f64,
    /// Exponential decay rate `β > 0` at infinity.
    pub beta: f64,
    /// Strip half-width `d` of analyticity in the map's strip coordinates.
    pub d: f64,
    /// Which conformal map the strip refers to.
    pub map_kind: MapKind,
}

/// Validation errors for [`DecayProfile::new`].
#[derive(Debug, Clone, Error, PartialEq)]
pub enum ProfileError {
    /// `k`, `alpha`, and `beta` must be positive finite numbers.
    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    /// `d` must be in `(0, π/2]` for the arcsinh map and `(0, π)` for the
    /// logistic-log map.
    #[error("strip half-width d = {d} not admissible for {kind:?} (requires 0 < d {requirement})")]
    HalfWidth {
        d: f64,
        kind: MapKind,
        requirement: &'static str,
    },
}

impl DecayProfile {
    /// Validated constructor.
    pub fn new(
        k: f64,
        alpha: f64,
        beta: f64,
        d: f64,
        map_kind: MapKind,
    ) -> Result<Self, ProfileError> {
        for (name, value) in [("k", k), ("alpha", alpha), ("beta", beta)] {
            if !(value > 0.0 && value.is_finite()) {
                return Err(ProfileError::NonPositive { name, value });
            }
        }
        let ok = match map_kind {
            MapKind::Arcsinh => d > 0.0 && d <= map_kind.strip_limit(),
            MapKind::LogisticLog => d > 0.0 && d < map_kind.strip_limit(),
        };
        if !ok {
            return Err(ProfileError::HalfWidth {
                d,
                kind: map_kind,
                requirement: match map_kind {
                    MapKind::Arcsinh => "<= pi/2",
                    MapKind::LogisticLog => "< pi",
                },
            });
        }
        Ok(DecayProfile {
            k,
            alpha,
            beta,
            d,
            map_kind,
        })
    }

    /// The effective rate `μ = min(α, β)` controlling both the step size
    /// and the convergence exponent.
    pub fn mu(&self) -> f64 {
        self.alpha.min(self.beta)
    }
}

/// Grid geometry of one approximant: step size and truncation indices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SincParams {
    /// Resolution parameter the geometry was derived from.
    pub n: u32,
    /// Grid step `h = √(πd / (μn))`.
    pub h: f64,
    /// Number of grid points below zero (indices `-m_neg ..= -1`).
    pub m_neg: u32,
    /// Number of grid points above zero (indices `1 ..= n_pos`).
    pub n_pos: u32,
}

impl SincParams {
    /// Total number of samples, `m_neg + n_pos + 1`.
    pub fn len(&self) -> usize {
        self.m_neg as usize + self.n_pos as usize + 1
    }

    /// Never empty: index 0 is always present.
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Ceiling with a guard against floating-point fuzz: quotients within
/// `1e-12` of an integer are snapped to that integer before `ceil`, so
/// analytically integral ratios (e.g. `αn/β` with `α/β = 3/4`) do not
/// round up spuriously.
fn ceil_guarded(q: f64) -> u32 {
    let r = q.round();
    let snapped = if (q - r).abs() <= 1e-12 { r } else { q };
    snapped.ceil().max(0.0) as u32
}

/// Choose the grid geometry for resolution `n ≥ 1`.
///
/// The side with the slower rate keeps all `n` points; the other side is
/// shortened proportionally: for `α ≤ β`, `M = n` and `N = ⌈αn/β⌉`, else
/// `N = n` and `M = ⌈βn/α⌉` (both at least 1). The step is
/// `h = √(πd/(μn))` with `μ = min(α, β)`.
pub fn select_params(profile: &DecayProfile, n: u32) -> SincParams {
    assert!(n >= 1, "resolution parameter n must be at least 1");
    let nf = n as f64;
    let (m_neg, n_pos) = if profile.alpha <= profile.beta {
        (n, ceil_guarded(profile.alpha * nf / profile.beta).max(1))
    } else {
        (ceil_guarded(profile.beta * nf / profile.alpha).max(1), n)
    };
    let h = (PI * profile.d / (profile.mu() * nf)).sqrt();
    SincParams { n, h, m_neg, n_pos }
}

/// Cardinal sinc basis function `sinc(x/h - k) = sin(π(x/h - k))/(π(x/h - k))`.
///
/// Arguments within `1e-14` of the node (`|x/h - k| < 1e-14`) return exactly
/// 1.0, so evaluation at a grid node reproduces the stored sample.
pub fn sinc_kernel(k: i64, h: f64, x: f64) -> f64 {
    let u = x / h - k as f64;
    if u.abs() < 1e-14 {
        return 1.0;
    }
    let pu = PI * u;
    pu.sin() / pu
}

/// Errors while sampling the target function.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum BuildError {
    /// The function returned NaN or ±∞ at a grid node.
    #[error("function returned non-finite value {value} at node k = {k} (t = {t})")]
    NonFiniteSample { k: i64, t: f64, value: f64 },
}

/// Errors while evaluating an approximant at a point.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum EvalError {
    /// Approximants live on (0, ∞).
    #[error("evaluation point t = {t} outside (0, inf)")]
    NonPositivePoint { t: f64 },
}

/// Errors while evaluating an approximant over a batch of points.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum BatchEvalError {
    /// Offending point, tagged with its index in the input slice.
    #[error("evaluation point t = {t} at index {index} outside (0, inf)")]
    NonPositivePoint { index: usize, t: f64 },
}

/// A fully sampled sinc approximant of one function on (0, ∞).
#[derive(Debug, Clone, PartialEq)]
pub struct Approximant {
    profile: DecayProfile,
    params: SincParams,
    samples: Vec<f64>,
}

impl Approximant {
    /// Sample `f` at the mapped grid nodes `map(kh)`, `k = -M..=N`.
    ///
    /// Fails if `f` returns a non-finite value at any node.
    pub fn build<F: Fn(f64) -> f64>(
        f: F,
        profile: &DecayProfile,
        n: u32,
    ) -> Result<Self, BuildError> {
        let params = select_params(profile, n);
        let mut samples = Vec::with_capacity(params.len());
        for k in -(params.m_neg as i64)..=(params.n_pos as i64) {
            let t = maps::forward(profile.map_kind, k as f64 * params.h);
            let value = f(t);
            if !value.is_finite() {
                return Err(BuildError::NonFiniteSample { k, t, value });
            }
            samples.push(value);
        }
        Ok(Approximant {
            profile: *profile,
            params,
            samples,
        })
    }

    /// The decay profile this approximant was built for.
    pub fn profile(&self) -> &DecayProfile {
        &self.profile
    }

    /// The grid geometry in use.
    pub fn params(&self) -> &SincParams {
        &self.params
    }

    /// The stored node samples, in index order `k = -M..=N`.
    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// Evaluate the approximant at `t ∈ (0, ∞)`.
    pub fn evaluate(&self, t: f64) -> Result<f64, EvalError> {
        let x = maps::inverse(self.profile.map_kind, t)
            .map_err(|_| EvalError::NonPositivePoint { t })?;
        Ok(self.sum_at(x))
    }

    /// Evaluate at many points; errors are tagged with the offending index.
    ///
    /// Point `j` of the result is bitwise identical to
    /// `self.evaluate(ts[j])` — the batch path is the same summation in the
    /// same order.
    pub fn evaluate_batch(&self, ts: &[f64]) -> Result<Vec<f64>, BatchEvalError> {
        let mut out = Vec::with_capacity(ts.len());
        for (index, &t) in ts.iter().enumerate() {
            match self.evaluate(t) {
                Ok(v) => out.push(v),
                Err(EvalError::NonPositivePoint { t }) => {
                    return Err(BatchEvalError::NonPositivePoint { index, t });
                }
            }
        }
        Ok(out)
    }

    /// Compensated (Kahan–Neumaier) sum of `sample_k · sinc(x/h - k)` in
    /// fixed index order `k = -M..=N`, for reproducibility.
    fn sum_at(&self, x: f64) -> f64 {
        let m = self.params.m_neg as i64;
        let mut sum = 0.0f64;
        let mut comp = 0.0f64;
        for (i, &w) in self.samples.iter().enumerate() {
            let term = w * sinc_kernel(i as i64 - m, self.params.h, x);
            let s = sum + term;
            comp += if sum.abs() >= term.abs() {
                (sum - s) + term
            } else {
                (term - s) + sum
            };
            sum = s;
        }
        sum + comp
    }
}

/// Convenience: map a map-level error into the eval error for a point.
impl From<MapError> for EvalError {
    fn from(e: MapError) -> Self {
        match e {
            MapError::NonPositiveInverseInput { t } => EvalError::NonPositivePoint { t },
            _ => EvalError::NonPositivePoint { t: f64::NAN },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, FRAC_PI_2, FRAC_PI_4};

    fn profile(alpha: f64, beta: f64, d: f64, kind: MapKind) -> DecayProfile {
        DecayProfile::new(1.0, alpha, beta, d, kind).unwrap()
    }

    #[test]
    fn profile_validation() {
        assert!(DecayProfile::new(1.0, 1.0, 1.0, FRAC_PI_2, MapKind::Arcsinh).is_ok());
        assert!(DecayProfile::new(1.0, 1.0, 1.0, 3.0, MapKind::LogisticLog).is_ok());
        // d beyond the strip limit
        assert!(matches!(
            DecayProfile::new(1.0, 1.0, 1.0, 1.6, MapKind::Arcsinh),
            Err(ProfileError::HalfWidth { .. })
        ));
        assert!(
            DecayProfile::new(1.0, 1.0, 1.0, std::f64::consts::PI, MapKind::LogisticLog).is_err()
        );
        assert!(DecayProfile::new(1.0, 1.0, 1.0, 0.0, MapKind::Arcsinh).is_err());
        // non-positive or non-finite shape parameters
        assert!(matches!(
            DecayProfile::new(0.0, 1.0, 1.0, 1.0, MapKind::Arcsinh),
            Err(ProfileError::NonPositive { name: "k", .. })
        ));
        assert!(DecayProfile::new(1.0, -0.5, 1.0, 1.0, MapKind::Arcsinh).is_err());
        assert!(DecayProfile::new(1.0, 1.0, f64::NAN, 1.0, MapKind::Arcsinh).is_err());
        assert!(DecayProfile::new(f64::INFINITY, 1.0, 1.0, 1.0, MapKind::Arcsinh).is_err());
    }

    #[test]
    fn parameter_selection_balances_the_two_tails() {
        // α = 1/2, β = 1: sample-heavy side is the origin side
        let p = profile(0.5, 1.0, FRAC_PI_2, MapKind::Arcsinh);
        let sp = select_params(&p, 10);
        assert_eq!((sp.m_neg, sp.n_pos), (10, 5));
        // symmetric profile keeps both sides at n
        let p = profile(1.0, 1.0, FRAC_PI_2, MapKind::Arcsinh);
        let sp = select_params(&p, 7);
        assert_eq!((sp.m_neg, sp.n_pos), (7, 7));
        // α > β mirrors the roles
        let p = profile(2.0, 1.0, 1.0, MapKind::LogisticLog);
        let sp = select_params(&p, 10);
        assert_eq!((sp.m_neg, sp.n_pos), (5, 10));
        // n_pos never drops to zero
        let p = profile(0.01, 1.0, 1.0, MapKind::LogisticLog);
        let sp = select_params(&p, 3);
        assert_eq!((sp.m_neg, sp.n_pos), (3, 1));
    }

    #[test]
    fn ceiling_guard_snaps_near_integer_ratios() {
        // α/β = (π/4)/0.875 with n = 10: quotient 8.9759... -> 9
        let p = profile(FRAC_PI_4, 0.875, 3.0, MapKind::LogisticLog);
        let sp = select_params(&p, 10);
        assert_eq!(sp.n_pos, 9);
        // plain ceiling when nothing is near an integer
        assert_eq!(ceil_guarded(8.975979010256552), 9);
        assert_eq!(ceil_guarded(0.3), 1);
        // values a hair above an integer snap down before the ceiling
        assert_eq!(ceil_guarded(3.0 + 4e-13), 3);
        assert_eq!(ceil_guarded(3.0 - 4e-13), 3);
        assert_eq!(ceil_guarded(3.1), 4);
    }

    #[test]
    fn step_size_reference_values() {
        // μn = πd exactly: h = 1
        let p = profile(FRAC_PI_4, 0.875, 3.0, MapKind::LogisticLog);
        assert_eq!(select_params(&p, 12).h, 1.0);
        // quadrupling n halves h exactly in f64
        for n in [3u32, 8, 12, 25] {
            let a = select_params(&p, n).h;
            let b = select_params(&p, 4 * n).h;
            assert_eq!(b, a / 2.0);
        }
    }

    #[test]
    fn kernel_is_cardinal_and_bounded() {
        for k in [-5i64, 0, 3] {
            // exact reproduction at the node
            assert_eq!(sinc_kernel(k, 0.5, k as f64 * 0.5), 1.0);
            // zero at other nodes
            for j in -6i64..=6 {
                if j != k {
                    assert!(sinc_kernel(k, 0.5, j as f64 * 0.5).abs() < 1e-15);
                }
            }
        }
        // |sinc| <= 1 everywhere
        for i in 0..1000 {
            let x = -20.0 + 0.04 * i as f64;
            assert!(sinc_kernel(1, 0.7, x).abs() <= 1.0);
        }
        // near-node threshold: exactly 1 inside, below 1 once the
        // quadratic term is resolvable in f64
        assert_eq!(sinc_kernel(0, 1.0, 0.9e-14), 1.0);
        assert!(sinc_kernel(0, 1.0, 1e-7) < 1.0);
    }

    #[test]
    fn approximant_reproduces_node_samples() {
        let p = profile(0.5, 1.0, 3.0, MapKind::LogisticLog);
        let f = |t: f64| (-t).exp() * (-(-t).exp_m1()).sqrt();
        for n in [4u32, 6, 8] {
            let a = Approximant::build(f, &p, n).unwrap();
            let params = *a.params();
            for k in -(params.m_neg as i64)..=(params.n_pos as i64) {
                let t = maps::forward(p.map_kind, k as f64 * params.h);
                let got = a.evaluate(t).unwrap();
                let want = f(t);
                assert!(
                    (got - want).abs() <= 1e-13 * want.abs().max(1e-300),
                    "n={n} k={k}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn approximant_converges_on_a_smooth_target() {
        let p = profile(1.0, 1.0, FRAC_PI_2, MapKind::Arcsinh);
        let f = |t: f64| t / (1.0 + t) * (-t).exp();
        let coarse = Approximant::build(f, &p, 6).unwrap();
        let fine = Approximant::build(f, &p, 48).unwrap();
        let mut worst_coarse = 0.0f64;
        let mut worst_fine = 0.0f64;
        for j in 0..=100 {
            let t = ((j - 50) as f64 / 5.0).exp2();
            worst_coarse = worst_coarse.max((coarse.evaluate(t).unwrap() - f(t)).abs());
            worst_fine = worst_fine.max((fine.evaluate(t).unwrap() - f(t)).abs());
        }
        assert!(worst_fine < 1e-6, "fine error {worst_fine}");
        assert!(worst_fine < worst_coarse * 1e-3);
    }

    #[test]
    fn build_reports_non_finite_samples() {
        let p = profile(1.0, 1.0, 1.0, MapKind::LogisticLog);
        let err = Approximant::build(|t| (t - 1.0).ln(), &p, 20).unwrap_err();
        let BuildError::NonFiniteSample { t, value, .. } = err;
        assert!(!value.is_finite());
        assert!(t > 0.0);
    }

    #[test]
    fn evaluate_rejects_points_off_the_half_line() {
        let p = profile(1.0, 1.0, 1.0, MapKind::Arcsinh);
        let a = Approximant::build(|t| (-t).exp(), &p, 5).unwrap();
        assert!(matches!(
            a.evaluate(0.0),
            Err(EvalError::NonPositivePoint { .. })
        ));
        assert!(a.evaluate(-2.0).is_err());
        assert!(a.evaluate(f64::NAN).is_err());
        let err = a.evaluate_batch(&[1.0, 2.0, -1.0]).unwrap_err();
        assert_eq!(err, BatchEvalError::NonPositivePoint { index: 2, t: -1.0 });
    }

    #[test]
    fn batch_matches_pointwise_bit_for_bit() {
        let p = profile(0.5, 1.0, 3.0, MapKind::LogisticLog);
        let f = |t: f64| (-t).exp() * (-(-t).exp_m1()).sqrt();
        let a = Approximant::build(f, &p, 24).unwrap();
        let ts: Vec<f64> = (0..=200).map(|j| ((j - 100) as f64 / 2.0).exp2()).collect();
        let batch = a.evaluate_batch(&ts).unwrap();
        for (j, &t) in ts.iter().enumerate() {
            assert_eq!(batch[j].to_bits(), a.evaluate(t).unwrap().to_bits());
        }
    }

    #[test]
    fn stored_state_is_what_build_sampled() {
        let p = DecayProfile::new(2.0, 1.0, 1.0, E.min(1.0), MapKind::LogisticLog).unwrap();
        let a = Approximant::build(|t| (-t).exp(), &p, 4).unwrap();
        assert_eq!(a.profile(), &p);
        assert_eq!(a.params().len(), a.samples().len());
        assert_eq!(a.params().n, 4);
    }
}
