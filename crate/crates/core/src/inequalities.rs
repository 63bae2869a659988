//! Numerical verification of the analytic inequalities behind the bounds.
//!
//! The explicit error constants rest on a handful of scalar inequalities
//! (moduli bounded by 1, a polynomial-exponential expression staying
//! nonnegative, decay envelopes dominating the benchmark functions on
//! their analyticity regions). Each gets a check that evaluates a margin —
//! nonnegative means the inequality held — over deterministic special
//! points (edges, removable singularities, asymptotic tails) plus a seeded,
//! reproducible random sample of its domain, and reports the worst margin
//! seen. A check passes when the worst margin is no worse than
//! `-`[`MARGIN_TOLERANCE`].
//!
//! All randomness is ChaCha8 seeded from a `u64`, so identical inputs give
//! byte-identical reports.

use crate::csvfmt;
use crate::maps::{self, MapKind};
use crate::sinc::DecayProfile;
use crate::testbed::{self, ExampleId};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{E, FRAC_PI_2, PI};
use thiserror::Error;

/// How far below zero a worst margin may fall before a check fails:
/// accounts for rounding at points of exact equality.
pub const MARGIN_TOLERANCE: f64 = 1e-12;

/// Outcome of one inequality check.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleReport {
    /// Stable identifier of the check.
    pub name: String,
    /// Number of margins evaluated (deterministic points + random samples).
    pub checked: u64,
    /// Smallest margin encountered; nonnegative means the inequality held
    /// everywhere it was sampled.
    pub worst_margin: f64,
    /// Comma-free label of the point attaining the worst margin.
    pub worst_point: String,
    /// `worst_margin >= -MARGIN_TOLERANCE`.
    pub passed: bool,
}

impl SampleReport {
    /// Header matching [`SampleReport::csv_row`].
    pub const CSV_HEADER: &'static str = "check_name,samples,worst_margin,worst_point,passed";

    /// One CSV row: `check_name,samples,worst_margin,worst_point,passed`.
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.name,
            self.checked,
            csvfmt::sci(self.worst_margin),
            self.worst_point,
            self.passed
        )
    }
}

/// Errors from checks that evaluate a caller-supplied function.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum CheckError {
    /// The function under test returned NaN or ±∞.
    #[error("function returned a non-finite value at {label}")]
    NonFiniteValue { label: String },
}

/// Running minimum of margins with lazily formatted worst-point labels.
struct MarginTracker {
    checked: u64,
    worst: f64,
    worst_point: String,
}

impl MarginTracker {
    fn new() -> Self {
        MarginTracker {
            checked: 0,
            worst: f64::INFINITY,
            worst_point: String::from("none"),
        }
    }

    fn consider<L: FnOnce() -> String>(&mut self, margin: f64, label: L) {
        self.checked += 1;
        // NaN margins count as hard violations
        let m = if margin.is_nan() {
            f64::NEG_INFINITY
        } else {
            margin
        };
        if m < self.worst {
            self.worst = m;
            self.worst_point = label();
        }
    }

    fn into_report(self, name: String) -> SampleReport {
        let passed = self.worst >= -MARGIN_TOLERANCE;
        SampleReport {
            name,
            checked: self.checked,
            worst_margin: self.worst,
            worst_point: self.worst_point,
            passed,
        }
    }
}

/// The tail-shift constant `log(e/(e-1))` appearing in the essential bound.
pub fn shift_constant() -> f64 {
    (E / (E - 1.0)).ln()
}

/// Modulus of the essential factor `L/(1+L) · (1 + e^{-l} e^{-z})` with
/// `L = log(1 + e^z)` (principal branch) and `l` the shift constant.
///
/// The core lemma asserts this is ≤ 1 on the closed strip `|Im z| ≤ π`
/// (finite everywhere there except the singularities at `z = ±iπ`).
pub fn essential_modulus(z: Complex64) -> f64 {
    let big_l = maps::logistic_log_principal(z);
    let tail = (-(z + shift_constant())).exp();
    ((big_l / (1.0 + big_l)) * (1.0 + tail)).norm()
}

/// The essential factor along the strip edges `Im z = ±π`, rewritten in
/// the edge variable `t = log(1 - e^{Re z})` (real for `Re z < 0`):
/// `|t/(1+t) · (e^{t+1}-1)/(e(e^t-1))|`.
///
/// The `expm1` form keeps the two removable singularities benign: the
/// two-sided limits are `(e-1)/e` at `t → 0`, `1/(e-1)` at `t → -1`, and
/// `1/e` as `t → -∞`.
pub fn edge_factor_reduced(t: f64) -> f64 {
    ((t / (1.0 + t)) * (t + 1.0).exp_m1() / (E * t.exp_m1())).abs()
}

/// The essential factor restricted to the real line, where it simplifies
/// to `φ(x)/(1+φ(x)) · (1 + e^{-x})` with `φ(x) = log(1+eˣ)`. Bounded by 1
/// for all real `x` (the `x → -∞` limit is 1).
pub fn real_line_modulus(x: f64) -> f64 {
    let t = maps::forward(MapKind::LogisticLog, x);
    (t / (1.0 + t)) * (1.0 + (-x).exp())
}

/// Numerator polynomial-exponential expression whose nonnegativity on
/// `[-60, 0]` underpins the monotonicity lemma:
/// `p(t) = 1 + e^t (e^{t+1} - 1 + t + t² - e(1 + t + t²))`.
///
/// Vanishes exactly (also in f64) at `t = 0` and `t = -1`.
pub fn derivative_numerator(t: f64) -> f64 {
    1.0 + t.exp() * ((t + 1.0).exp() - 1.0 + t + t * t - E * (1.0 + t + t * t))
}

/// Check `essential_modulus ≤ 1` over the closed strip `|Im z| ≤ π`,
/// `Re z ∈ [-50, 50]`.
///
/// Deterministic points: midpoint grids along both edges (straddling the
/// singularities at `z = ±iπ` without touching them), two-sided offsets
/// around the removable edge points `Re z = 0` and `Re z = -l`, the edge
/// endpoints, and the origin.
pub fn check_essential_bound(samples: u64, seed: u64) -> SampleReport {
    let mut tr = MarginTracker::new();
    let eval = |tr: &mut MarginTracker, z: Complex64| {
        tr.consider(1.0 - essential_modulus(z), || csvfmt::complex_label(z));
    };
    let x_star = -shift_constant();
    for edge in [PI, -PI] {
        for dx in [1e-7, -1e-7] {
            eval(&mut tr, Complex64::new(dx, edge));
            eval(&mut tr, Complex64::new(x_star + dx, edge));
        }
        let cells = 500;
        for i in 0..cells {
            let x = -50.0 + (i as f64 + 0.5) * 100.0 / cells as f64;
            eval(&mut tr, Complex64::new(x, edge));
        }
        eval(&mut tr, Complex64::new(-50.0, edge));
        eval(&mut tr, Complex64::new(50.0, edge));
    }
    eval(&mut tr, Complex64::new(0.0, 0.0));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = rng.gen_range(-50.0..50.0);
        let y = rng.gen_range(-PI..PI);
        eval(&mut tr, Complex64::new(x, y));
    }
    tr.into_report("essential_bound".into())
}

/// Check `real_line_modulus ≤ 1` on `x ∈ [-60, 60]`.
pub fn check_real_line_bound(samples: u64, seed: u64) -> SampleReport {
    let mut tr = MarginTracker::new();
    let eval = |tr: &mut MarginTracker, x: f64| {
        tr.consider(1.0 - real_line_modulus(x), || csvfmt::sci(x));
    };
    for x in [-60.0, -1.0, 0.0, 1.0, 60.0] {
        eval(&mut tr, x);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = rng.gen_range(-60.0..60.0);
        eval(&mut tr, x);
    }
    tr.into_report("real_line_bound".into())
}

/// Check `derivative_numerator ≥ 0` on `t ∈ [-60, 0]`.
pub fn check_derivative_numerator(samples: u64, seed: u64) -> SampleReport {
    let mut tr = MarginTracker::new();
    let eval = |tr: &mut MarginTracker, t: f64| {
        tr.consider(derivative_numerator(t), || csvfmt::sci(t));
    };
    for t in [0.0, -1.0, -0.5, -2.0, -60.0] {
        eval(&mut tr, t);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let t = rng.gen_range(-60.0..0.0);
        eval(&mut tr, t);
    }
    tr.into_report("derivative_numerator".into())
}

/// Check the exponential modulus bound `|1 + e^z| ≥ (1 + e^{Re z}) cos(Im z / 2)`
/// together with its mirror image `z → -z`, on `Re z ∈ [-50, 50]`,
/// `Im z ∈ (-π, π)`. Margins are normalized by `1 + e^{±Re z}`.
pub fn check_exp_modulus(samples: u64, seed: u64) -> SampleReport {
    let mut tr = MarginTracker::new();
    let eval = |tr: &mut MarginTracker, z: Complex64| {
        let cos_half = (0.5 * z.im).cos();
        let direct = (1.0 + z.exp()).norm() / (1.0 + z.re.exp()) - cos_half;
        let mirrored = (1.0 + (-z).exp()).norm() / (1.0 + (-z.re).exp()) - cos_half;
        tr.consider(direct.min(mirrored), || csvfmt::complex_label(z));
    };
    for (x, y) in [
        (0.0, 0.0),
        (0.0, FRAC_PI_2),
        (1.0, 2.5),
        (-1.0, -2.5),
        (50.0, 3.0),
        (-50.0, 3.0),
    ] {
        eval(&mut tr, Complex64::new(x, y));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = rng.gen_range(-50.0..50.0);
        // keep the imaginary part in the open interval (-π, π)
        let y = loop {
            let y = rng.gen_range(-PI..PI);
            if y > -PI {
                break y;
            }
        };
        eval(&mut tr, Complex64::new(x, y));
    }
    tr.into_report("exp_modulus_bound".into())
}

/// Check the decay envelope `|f(z)| ≤ K |z/(1+z)|^α e^{-β Re z}` for an
/// arbitrary analytic continuation `f` over (a) log-uniform points of the
/// half-line `t ∈ [2^{-50}, 2^{50}]` and (b) a trace of the analyticity
/// region's boundary at the profile's half-width, clipped to strip
/// coordinates `Re ∈ [-30, 30]`. Margins are normalized by `K`.
///
/// When the profile sits at the arcsinh map's limiting half-width
/// `d = π/2` the boundary degenerates into the branch cut for `Re ≥ 0`;
/// the trace then covers the left edge `Re < 0` only.
pub fn decay_margins<F: Fn(Complex64) -> Complex64>(
    f: F,
    profile: &DecayProfile,
    samples: u64,
    seed: u64,
    name: String,
) -> Result<SampleReport, CheckError> {
    let mut tr = MarginTracker::new();
    let eval = |tr: &mut MarginTracker, z: Complex64| -> Result<(), CheckError> {
        let value = f(z).norm();
        if !value.is_finite() {
            return Err(CheckError::NonFiniteValue {
                label: csvfmt::complex_label(z),
            });
        }
        let envelope = (z / (1.0 + z)).norm().powf(profile.alpha) * (-profile.beta * z.re).exp();
        tr.consider(envelope - value / profile.k, || csvfmt::complex_label(z));
        Ok(())
    };
    // anchors on the half-line
    for t in [2f64.powi(-50), 1.0, 2f64.powi(50)] {
        eval(&mut tr, Complex64::new(t, 0.0))?;
    }
    // boundary trace of the analyticity region
    let kind = profile.map_kind;
    let trace = samples.clamp(16, 100_000) as usize;
    if profile.d < kind.strip_limit() {
        let curve = maps::domain_boundary(kind, profile.d, -30.0, 30.0, trace.max(2))
            .expect("validated profile admits a boundary trace");
        for &z in &curve.upper {
            eval(&mut tr, z)?;
        }
    } else {
        // limiting half-width: trace the surviving left edge by midpoints
        for i in 0..trace {
            let x = -30.0 + (i as f64 + 0.5) * 30.0 / trace as f64;
            let z = maps::forward_complex(kind, Complex64::new(x, profile.d))
                .expect("left edge of the limiting strip is mapped");
            eval(&mut tr, z)?;
        }
    }
    // random log-uniform points on the half-line
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let u: f64 = rng.gen_range(-50.0..50.0);
        eval(&mut tr, Complex64::new(u.exp2(), 0.0))?;
    }
    Ok(tr.into_report(name))
}

/// Run [`decay_margins`] for one benchmark function under one map, using
/// its certified profile and analytic continuation.
pub fn check_decay_condition(
    id: ExampleId,
    kind: MapKind,
    samples: u64,
    seed: u64,
) -> Result<SampleReport, CheckError> {
    let ex = testbed::example(id);
    let profile = *ex.profile(kind);
    decay_margins(
        |z| ex.eval_complex(z),
        &profile,
        samples,
        seed,
        format!("decay_{}_{}", id, kind.tag()),
    )
}

/// Run the whole suite: the four scalar-inequality checks plus the decay
/// condition aggregated over all benchmark function × map combinations
/// (six runs folded into one report named `decay_condition`).
pub fn run_all(samples: u64, seed: u64) -> Vec<SampleReport> {
    let mut reports = vec![
        check_essential_bound(samples, seed),
        check_real_line_bound(samples, seed),
        check_derivative_numerator(samples, seed),
        check_exp_modulus(samples, seed),
    ];
    let mut checked = 0u64;
    let mut worst = f64::INFINITY;
    let mut worst_point = String::from("none");
    let mut passed = true;
    for id in ExampleId::ALL {
        for kind in [MapKind::Arcsinh, MapKind::LogisticLog] {
            let r = check_decay_condition(id, kind, samples, seed)
                .expect("benchmark functions are finite on the sampled sets");
            checked += r.checked;
            if r.worst_margin < worst {
                worst = r.worst_margin;
                worst_point = format!("{}@{}", r.name, r.worst_point);
            }
            passed &= r.passed;
        }
    }
    reports.push(SampleReport {
        name: "decay_condition".into(),
        checked,
        worst_margin: worst,
        worst_point,
        passed,
    });
    reports
}
