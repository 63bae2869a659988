//! Benchmark functions, evaluation grid, and convergence sweeps.
//!
//! Three exponentially decaying functions on (0, ∞) exercise the
//! approximation engine, each with certified [`DecayProfile`]s for both
//! maps (constants evaluated from closed forms at load time):
//!
//! * `f1(t) = t^{π/4} e^{-t}` — irrational algebraic order at the origin;
//! * `f2(t) = e^{-t} √(1 - e^{-t})` — square-root branch point at 0;
//! * `f3(t) = √(1 + (1 - 2e^{-t})²) · t/(1+t) · e^{-t}` — poles off the
//!   real axis limiting the arcsinh-map strip to `d = arctan 3`.
//!
//! [`convergence_sweep`] builds approximants over a range of resolutions
//! and pairs the observed worst-case grid error with the a-priori bound;
//! [`fit_rate`] extracts the empirical root-exponential rate.

use crate::bounds::{self, BoundVariant};
use crate::maps::{self, MapKind};
use crate::sinc::{Approximant, BuildError, DecayProfile};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2};
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use thiserror::Error;

/// Identifier of a benchmark function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExampleId {
    /// `t^{π/4} e^{-t}`
    F1,
    /// `e^{-t} √(1 - e^{-t})`
    F2,
    /// `√(1 + (1 - 2e^{-t})²) · t/(1+t) · e^{-t}`
    F3,
}

impl ExampleId {
    /// All benchmark functions, in order.
    pub const ALL: [ExampleId; 3] = [ExampleId::F1, ExampleId::F2, ExampleId::F3];
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExampleId::F1 => "f1",
            ExampleId::F2 => "f2",
            ExampleId::F3 => "f3",
        })
    }
}

impl FromStr for ExampleId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "f1" => Ok(ExampleId::F1),
            "f2" => Ok(ExampleId::F2),
            "f3" => Ok(ExampleId::F3),
            other => Err(format!(
                "unknown example '{other}' (expected f1, f2, or f3)"
            )),
        }
    }
}

/// A benchmark function together with its certified decay profiles.
#[derive(Debug, Clone)]
pub struct ExampleFunction {
    /// Which function this is.
    pub id: ExampleId,
    profile_arcsinh: DecayProfile,
    profile_logistic: DecayProfile,
}

impl ExampleFunction {
    /// Evaluate on the half-line (stable formulas, valid over the whole
    /// evaluation grid).
    pub fn eval(&self, t: f64) -> f64 {
        match self.id {
            ExampleId::F1 => t.powf(FRAC_PI_4) * (-t).exp(),
            ExampleId::F2 => (-t).exp() * (-(-t).exp_m1()).sqrt(),
            ExampleId::F3 => {
                let w = 1.0 - 2.0 * (-t).exp();
                (1.0 + w * w).sqrt() * (t / (1.0 + t)) * (-t).exp()
            }
        }
    }

    /// Analytic continuation used by the decay-condition checks; principal
    /// branches throughout. Intended for points in the maps' image regions
    /// (a neighbourhood of (0, ∞)).
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        match self.id {
            ExampleId::F1 => z.powf(FRAC_PI_4) * (-z).exp(),
            ExampleId::F2 => {
                if z.re > 300.0 {
                    // √(e^z - 1) e^{-3z/2} = e^{-z} √(1 - e^{-z}): avoids
                    // overflowing e^z before the decaying factor kicks in
                    (-z).exp() * (-maps::complex_expm1(-z)).sqrt()
                } else {
                    maps::complex_expm1(z).sqrt() * (-1.5 * z).exp()
                }
            }
            ExampleId::F3 => {
                let w = 1.0 - 2.0 * (-z).exp();
                (1.0 + w * w).sqrt() * (z / (1.0 + z)) * (-z).exp()
            }
        }
    }

    /// The certified profile for the given map.
    pub fn profile(&self, kind: MapKind) -> &DecayProfile {
        match kind {
            MapKind::Arcsinh => &self.profile_arcsinh,
            MapKind::LogisticLog => &self.profile_logistic,
        }
    }
}

/// Construct a benchmark function with its profiles.
///
/// All profile constants come from closed forms:
///
/// * `f1`: `α = π/4`; arcsinh map `β = 1 - α/π`, `d = π/2`,
///   `K = (1 + (π/2)²)^{π/8}`; logistic-log map `β = 1 - α/(2π)`, `d = 3`,
///   `K = ((1-γ)² + π²)^{π/8} e^{γ/8}` with `γ = -log cos(3/2)`.
/// * `f2`: `α = 1/2, β = 1`; arcsinh map `d = π/2`, `K = 2`; logistic-log
///   map `d = 3`, `K = (γ(1 + log(1+γ))/log(1+γ))^{1/2}` with
///   `γ = 1 + 1/cos(3/2)`.
/// * `f3`: `α = β = 1`; arcsinh map `d = arctan 3`, `K = √2`; logistic-log
///   map `d = π/2`, `K = 2`.
pub fn example(id: ExampleId) -> ExampleFunction {
    let (profile_arcsinh, profile_logistic) = match id {
        ExampleId::F1 => {
            let alpha = FRAC_PI_4;
            let k_psi = (1.0 + FRAC_PI_2 * FRAC_PI_2).powf(0.5 * alpha);
            let psi =
                DecayProfile::new(k_psi, alpha, 1.0 - alpha / PI, FRAC_PI_2, MapKind::Arcsinh);
            let gamma = -(1.5f64.cos().ln());
            let k_phi =
                (((1.0 - gamma) * (1.0 - gamma) + PI * PI) * (gamma / PI).exp()).powf(0.5 * alpha);
            let phi = DecayProfile::new(
                k_phi,
                alpha,
                1.0 - alpha / (2.0 * PI),
                3.0,
                MapKind::LogisticLog,
            );
            (psi, phi)
        }
        ExampleId::F2 => {
            let alpha = 0.5;
            let psi = DecayProfile::new(4f64.powf(alpha), alpha, 1.0, FRAC_PI_2, MapKind::Arcsinh);
            let gamma = 1.0 + 1.0 / 1.5f64.cos();
            let k_phi = (gamma * (1.0 + (1.0 + gamma).ln()) / (1.0 + gamma).ln()).powf(alpha);
            let phi = DecayProfile::new(k_phi, alpha, 1.0, 3.0, MapKind::LogisticLog);
            (psi, phi)
        }
        ExampleId::F3 => {
            let psi = DecayProfile::new(SQRT_2, 1.0, 1.0, 3f64.atan(), MapKind::Arcsinh);
            let phi = DecayProfile::new(2.0, 1.0, 1.0, FRAC_PI_2, MapKind::LogisticLog);
            (psi, phi)
        }
    };
    ExampleFunction {
        id,
        profile_arcsinh: profile_arcsinh.expect("closed-form arcsinh profile is valid"),
        profile_logistic: profile_logistic.expect("closed-form logistic-log profile is valid"),
    }
}

/// The fixed evaluation grid: 201 points `t = 2^{j/2}`, `j = -100..=100`,
/// covering `[2^{-50}, 2^{50}]` with two points per octave.
pub fn evaluation_grid() -> Vec<f64> {
    (0..=200).map(|j| ((j - 100) as f64 / 2.0).exp2()).collect()
}

/// Worst absolute error of an approximant against the true function over
/// the fixed evaluation grid.
pub fn observed_error(ex: &ExampleFunction, approx: &Approximant) -> f64 {
    let mut worst = 0.0f64;
    for t in evaluation_grid() {
        let err = (approx.evaluate(t).expect("grid points are positive") - ex.eval(t)).abs();
        worst = worst.max(err);
    }
    worst
}

/// One row of a convergence sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    /// Resolution parameter.
    pub n: u32,
    /// Grid step used.
    pub h: f64,
    /// Points below index zero.
    pub m_neg: u32,
    /// Points above index zero.
    pub n_pos: u32,
    /// Worst grid error of the built approximant.
    pub observed_error: f64,
    /// A-priori total error bound at this resolution.
    pub bound: f64,
}

/// Sweep failure, tagged with the resolution that failed.
#[derive(Debug, Clone, Error, PartialEq)]
#[error("convergence sweep failed at n = {n}: {source}")]
pub struct SweepError {
    /// The resolution parameter at which the build failed.
    pub n: u32,
    /// Underlying sampling failure.
    pub source: BuildError,
}

/// Build approximants of `ex` under `kind` for every resolution in `ns` and
/// report observed error vs a-priori bound.
pub fn convergence_sweep(
    ex: &ExampleFunction,
    kind: MapKind,
    ns: &[u32],
) -> Result<Vec<ErrorReport>, SweepError> {
    let profile = ex.profile(kind);
    let variant = BoundVariant::for_map(kind);
    let mut reports = Vec::with_capacity(ns.len());
    for &n in ns {
        let approx = Approximant::build(|t| ex.eval(t), profile, n)
            .map_err(|source| SweepError { n, source })?;
        let params = *approx.params();
        reports.push(ErrorReport {
            n,
            h: params.h,
            m_neg: params.m_neg,
            n_pos: params.n_pos,
            observed_error: observed_error(ex, &approx),
            bound: bounds::total_bound(profile, variant, n)
                .expect("example profiles agree with their bound variants"),
        });
    }
    Ok(reports)
}

/// Serialize sweep rows as CSV: `n,h,M,N,observed_error,bound`, floats at
/// 17 significant digits.
pub fn write_error_reports<W: Write>(reports: &[ErrorReport], w: &mut W) -> io::Result<()> {
    writeln!(w, "n,h,M,N,observed_error,bound")?;
    for r in reports {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            r.n,
            crate::csvfmt::sci(r.h),
            r.m_neg,
            r.n_pos,
            crate::csvfmt::sci(r.observed_error),
            crate::csvfmt::sci(r.bound),
        )?;
    }
    Ok(())
}

/// Least-squares slope of `log(observed_error)` against `√n`, using only
/// rows with errors in `[1e-12, 1e-2]` (above noise floor, below the
/// pre-asymptotic range). `None` if fewer than two rows qualify.
///
/// For a healthy sweep the slope is ≈ `-√(πdμ)`.
pub fn fit_rate(reports: &[ErrorReport]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = reports
        .iter()
        .filter(|r| r.observed_error >= 1e-12 && r.observed_error <= 1e-2)
        .map(|r| ((r.n as f64).sqrt(), r.observed_error.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mean_x = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    if sxx == 0.0 {
        return None;
    }
    Some(sxy / sxx)
}
