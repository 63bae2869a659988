//! Computable a-priori error bounds for the sinc approximation.
//!
//! For a function admitted by a [`DecayProfile`] and the grid geometry of
//! [`crate::sinc::select_params`], the uniform error on (0, ∞) satisfies
//!
//! ```text
//! sup |f - approximant| ≤ C √n · exp(-√(πdμn)),   μ = min(α, β),
//! ```
//!
//! with a fully explicit constant `C` ([`bound_constant`]). Each map has its
//! own constant (the [`BoundVariant`]), differing in a single envelope
//! factor. For the logistic-log map the two error sources are additionally
//! available separately: [`discretization_bound`] (strip-contour residue
//! term, any step `h`) and [`truncation_bound`] (discarded tail of the
//! infinite grid).

use crate::maps::MapKind;
use crate::sinc::DecayProfile;
use std::f64::consts::{E, PI};
use thiserror::Error;

/// Which map's error constant to use. Must agree with the profile's map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundVariant {
    /// Constant for the arcsinh map, envelope factor `2^{(α+β)/2}`.
    Arcsinh,
    /// Constant for the logistic-log map, envelope factor `(e/(e-1))^{μ/2}`.
    LogisticLog,
}

impl BoundVariant {
    /// The variant matching a map.
    pub fn for_map(kind: MapKind) -> Self {
        match kind {
            MapKind::Arcsinh => BoundVariant::Arcsinh,
            MapKind::LogisticLog => BoundVariant::LogisticLog,
        }
    }

    /// The map this variant belongs to.
    pub fn map_kind(self) -> MapKind {
        match self {
            BoundVariant::Arcsinh => MapKind::Arcsinh,
            BoundVariant::LogisticLog => MapKind::LogisticLog,
        }
    }
}

/// Errors from the bound evaluators.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum BoundError {
    /// The bound constant is only valid for the map the profile refers to.
    #[error("bound variant {variant:?} does not match the profile's map {profile_kind:?}")]
    MapMismatch {
        variant: BoundVariant,
        profile_kind: MapKind,
    },
    /// Strip half-width outside the variant's admissible range.
    #[error("strip half-width d = {d} outside the admissible range for {variant:?}")]
    HalfWidth { d: f64, variant: BoundVariant },
    /// The split into discretization and truncation parts is only available
    /// for the logistic-log map.
    #[error("bound component only available for the logistic-log map, profile uses {kind:?}")]
    LogisticLogOnly { kind: MapKind },
}

fn check_agreement(profile: &DecayProfile, variant: BoundVariant) -> Result<(), BoundError> {
    if variant.map_kind() != profile.map_kind {
        return Err(BoundError::MapMismatch {
            variant,
            profile_kind: profile.map_kind,
        });
    }
    let ok = match variant {
        BoundVariant::Arcsinh => profile.d > 0.0 && profile.d <= PI / 2.0,
        BoundVariant::LogisticLog => profile.d > 0.0 && profile.d < PI,
    };
    if !ok {
        return Err(BoundError::HalfWidth {
            d: profile.d,
            variant,
        });
    }
    Ok(())
}

/// Envelope factor distinguishing the two maps' constants.
fn envelope_factor(profile: &DecayProfile, variant: BoundVariant) -> f64 {
    match variant {
        BoundVariant::Arcsinh => 2f64.powf(0.5 * (profile.alpha + profile.beta)),
        BoundVariant::LogisticLog => (E / (E - 1.0)).powf(0.5 * profile.mu()),
    }
}

/// Root-exponential convergence rate `√(πdμ)`: the total bound decays like
/// `√n · exp(-rate · √n)`.
pub fn convergence_rate(profile: &DecayProfile) -> f64 {
    (PI * profile.d * profile.mu()).sqrt()
}

/// The explicit constant `C` of the total error bound:
///
/// ```text
/// C = (2K/s) · ( 2F / (s (1 - e^{-2s}) cos^{α+β}(d/2)) + 1 ),
/// s = √(πdμ),   F = envelope factor of the variant.
/// ```
pub fn bound_constant(profile: &DecayProfile, variant: BoundVariant) -> Result<f64, BoundError> {
    check_agreement(profile, variant)?;
    let s = convergence_rate(profile);
    let f = envelope_factor(profile, variant);
    let cos_pow = (0.5 * profile.d).cos().powf(profile.alpha + profile.beta);
    // 1 - e^{-2s} computed via expm1 to stay accurate for small rates
    let one_minus = -(-2.0 * s).exp_m1();
    Ok((2.0 * profile.k / s) * (2.0 * f / (s * one_minus * cos_pow) + 1.0))
}

/// Total uniform error bound at resolution `n`: `C √n e^{-√(πdμn)}`.
pub fn total_bound(
    profile: &DecayProfile,
    variant: BoundVariant,
    n: u32,
) -> Result<f64, BoundError> {
    let c = bound_constant(profile, variant)?;
    let nf = n as f64;
    Ok(c * nf.sqrt() * (-(PI * profile.d * profile.mu() * nf).sqrt()).exp())
}

/// Discretization part of the error for the logistic-log map at step `h`:
///
/// ```text
/// 4K F e^{-πd/h} / (πdμ (1 - e^{-2πd/h}) cos^{α+β}(d/2)),
/// F = (e/(e-1))^{μ/2}.
/// ```
pub fn discretization_bound(profile: &DecayProfile, h: f64) -> Result<f64, BoundError> {
    if profile.map_kind != MapKind::LogisticLog {
        return Err(BoundError::LogisticLogOnly {
            kind: profile.map_kind,
        });
    }
    check_agreement(profile, BoundVariant::LogisticLog)?;
    assert!(h > 0.0, "step size h must be positive");
    let q = PI * profile.d / h;
    let f = envelope_factor(profile, BoundVariant::LogisticLog);
    let cos_pow = (0.5 * profile.d).cos().powf(profile.alpha + profile.beta);
    let one_minus = -(-2.0 * q).exp_m1();
    Ok(4.0 * profile.k * f * (-q).exp() / (PI * profile.d * profile.mu() * one_minus * cos_pow))
}

/// Truncation part of the error at step `h`, keeping `n` points on the
/// slower-decaying side: `(2K/(μh)) e^{-μnh}`. Map-agnostic.
pub fn truncation_bound(profile: &DecayProfile, h: f64, n: u32) -> f64 {
    assert!(h > 0.0, "step size h must be positive");
    let mu = profile.mu();
    (2.0 * profile.k / (mu * h)) * (-mu * n as f64 * h).exp()
}

/// Strip-norm bound entering the discretization estimate for the
/// logistic-log map: `4K F / (μ cos^{α+β}(d/2))`. The discretization bound
/// factors as `n1 · e^{-πd/h} / (πd (1 - e^{-2πd/h}))`.
pub fn n1_norm_bound(profile: &DecayProfile) -> Result<f64, BoundError> {
    if profile.map_kind != MapKind::LogisticLog {
        return Err(BoundError::LogisticLogOnly {
            kind: profile.map_kind,
        });
    }
    check_agreement(profile, BoundVariant::LogisticLog)?;
    let f = envelope_factor(profile, BoundVariant::LogisticLog);
    let cos_pow = (0.5 * profile.d).cos().powf(profile.alpha + profile.beta);
    Ok(4.0 * profile.k * f / (profile.mu() * cos_pow))
}
