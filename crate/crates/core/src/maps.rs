//! Conformal maps carrying the real line onto (0, ∞).
//!
//! Two maps are provided, selected by [`MapKind`]:
//!
//! * [`MapKind::Arcsinh`]: `x ↦ arcsinh(eˣ)`, analytic on the strip
//!   `|Im z| < π/2` with branch points at `±iπ/2`.
//! * [`MapKind::LogisticLog`]: `x ↦ log(1 + eˣ)`, analytic on the wider
//!   strip `|Im z| < π` with branch points at `±iπ`.
//!
//! Both maps take a horizontal strip around the real axis to a lens-shaped
//! neighbourhood of (0, ∞); the image of the line `Im z = d` is traced by
//! [`domain_boundary`], and membership in the image region is decided by
//! [`in_domain`] through the characterizations `|arg(sinh z)| < d`
//! (arcsinh map) and `|arg(eᶻ − 1)| < d` (logistic-log map).
//!
//! All real-axis evaluations use overflow/cancellation-safe branches and are
//! reliable over at least `t ∈ [2⁻⁵⁰, 2⁵⁰]` for the inverses and
//! `|x| ≤ 700` for the forward maps.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, LN_2, PI};
use std::io::{self, Write};
use thiserror::Error;

/// Which conformal map of (0, ∞) to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapKind {
    /// `ψ(x) = arcsinh(eˣ)`, strip half-width limited to `π/2`.
    Arcsinh,
    /// `φ(x) = log(1 + eˣ)`, strip half-width limited to `π`.
    LogisticLog,
}

impl MapKind {
    /// Supremum of admissible strip half-widths `d` for this map.
    pub fn strip_limit(self) -> f64 {
        match self {
            MapKind::Arcsinh => FRAC_PI_2,
            MapKind::LogisticLog => PI,
        }
    }

    /// File-name/CLI tag for this map.
    pub fn tag(self) -> &'static str {
        match self {
            MapKind::Arcsinh => "psi",
            MapKind::LogisticLog => "phi",
        }
    }
}

/// Errors from map evaluations.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum MapError {
    /// The inverse maps are defined only for `t > 0`.
    #[error("inverse map undefined at t = {t}: requires t > 0")]
    NonPositiveInverseInput { t: f64 },
    /// Complex operations require finite components.
    #[error("complex input ({re}, {im}) has a non-finite component")]
    NonFinitePoint { re: f64, im: f64 },
    /// The point lies on the branch cut (`Im z = ±π/2, Re z ≥ 0` for the
    /// arcsinh map; `Im z = ±π, Re z ≥ 0` for the logistic-log map).
    #[error("point ({re}, {im}) lies on the map's branch cut")]
    OnBranchCut { re: f64, im: f64 },
    /// The point lies beyond the maximal strip of analyticity.
    #[error("imaginary part {im} outside the admissible strip |Im z| <= {limit}")]
    OutsideStrip { im: f64, limit: f64 },
    /// Strip half-width out of range for the requested operation.
    #[error("strip half-width d = {d} outside the admissible range (0, {limit})")]
    HalfWidthRange { d: f64, limit: f64 },
    /// Boundary traces need at least two samples.
    #[error("boundary trace needs at least 2 samples, got {count}")]
    TooFewSamples { count: usize },
    /// Boundary traces need a non-empty x-range.
    #[error("invalid x-range: x_min = {x_min} must be < x_max = {x_max}")]
    InvalidRange { x_min: f64, x_max: f64 },
    /// `in_domain` is undefined where the characterizing function vanishes
    /// (`sinh z = 0`, resp. `eᶻ = 1`).
    #[error("membership undefined at ({re}, {im}): characterizing function vanishes")]
    UndefinedArgument { re: f64, im: f64 },
}

/// Forward map: `arcsinh(eˣ)` or `log(1 + eˣ)`.
///
/// Overflow-safe for `|x| ≤ 700`; the result is positive down to the
/// underflow threshold of `eˣ`.
pub fn forward(kind: MapKind, x: f64) -> f64 {
    match kind {
        MapKind::Arcsinh => {
            if x > 0.0 {
                // arcsinh(e^x) = x + log(1 + sqrt(1 + e^{-2x}))
                x + (1.0 + (1.0 + (-2.0 * x).exp()).sqrt()).ln()
            } else {
                x.exp().asinh()
            }
        }
        MapKind::LogisticLog => {
            if x > 0.0 {
                x + (-x).exp().ln_1p()
            } else {
                x.exp().ln_1p()
            }
        }
    }
}

/// Inverse map: `log(sinh t)` or `log(eᵗ − 1)`, for `t > 0`.
///
/// Uses `expm1`-style branches near 0 and asymptotic branches for large `t`,
/// so it is stable over the whole grid range `[2⁻⁵⁰, 2⁵⁰]`.
pub fn inverse(kind: MapKind, t: f64) -> Result<f64, MapError> {
    if t.is_nan() || t <= 0.0 {
        return Err(MapError::NonPositiveInverseInput { t });
    }
    Ok(match kind {
        MapKind::Arcsinh => {
            if t <= 1.0 {
                t.sinh().ln()
            } else {
                // log(sinh t) = t - log 2 + log(1 - e^{-2t})
                t - LN_2 + (-(-2.0 * t).exp()).ln_1p()
            }
        }
        MapKind::LogisticLog => {
            if t <= 30.0 {
                t.exp_m1().ln()
            } else {
                // log(e^t - 1) = t + log(1 - e^{-t})
                t + (-(-t).exp()).ln_1p()
            }
        }
    })
}

/// Derivative of the forward map: `1/√(1 + e⁻²ˣ)` or `1/(1 + e⁻ˣ)`.
///
/// Always in `(0, 1)` mathematically; for the arcsinh map the value rounds
/// to exactly 1.0 once `e⁻²ˣ` falls below the f64 resolution (x ≳ 18).
pub fn derivative(kind: MapKind, x: f64) -> f64 {
    match kind {
        MapKind::Arcsinh => {
            if x >= 0.0 {
                1.0 / (1.0 + (-2.0 * x).exp()).sqrt()
            } else {
                x.exp() / (1.0 + (2.0 * x).exp()).sqrt()
            }
        }
        MapKind::LogisticLog => {
            if x >= 0.0 {
                1.0 / (1.0 + (-x).exp())
            } else {
                let e = x.exp();
                e / (1.0 + e)
            }
        }
    }
}

/// `log(1 + w)` for complex `w`, accurate for small `|w|`.
pub fn complex_log1p(w: Complex64) -> Complex64 {
    let (a, b) = (w.re, w.im);
    Complex64::new(0.5 * (2.0 * a + a * a + b * b).ln_1p(), b.atan2(1.0 + a))
}

/// `eʷ − 1` for complex `w`, accurate for small `|w|`.
///
/// Overflows only when `Re w` exceeds the f64 exponent range (~709).
pub fn complex_expm1(w: Complex64) -> Complex64 {
    let (a, b) = (w.re, w.im);
    let s = (0.5 * b).sin();
    Complex64::new(a.exp_m1() * b.cos() - 2.0 * s * s, a.exp() * b.sin())
}

/// Principal `arcsinh(w)`, stable for both tiny and huge `|w|`.
fn complex_asinh(w: Complex64) -> Complex64 {
    let r = w.norm();
    if r < 1e-3 {
        // arcsinh(w) = log(1 + (w + w²/(1 + √(1+w²))))
        let w2 = w * w;
        complex_log1p(w + w2 / (1.0 + (w2 + 1.0).sqrt()))
    } else if r > 1e8 {
        // arcsinh(w) = log(2w) + O(1/w²)
        (2.0 * w).ln()
    } else {
        (w + (w * w + 1.0).sqrt()).ln()
    }
}

/// Logistic-log map evaluated at a complex point with the principal branch,
/// without branch-cut policing. Stable over the whole closed strip.
pub(crate) fn logistic_log_principal(z: Complex64) -> Complex64 {
    if z.re > 0.0 {
        z + complex_log1p((-z).exp())
    } else {
        complex_log1p(z.exp())
    }
}

/// Forward map at a complex strip point, principal branch.
///
/// Errors when the point leaves the maximal strip (`|Im z| ≤ π/2` for the
/// arcsinh map, `|Im z| ≤ π` for the logistic-log map) or sits on the branch
/// cut (`Im z = ±limit` with `Re z ≥ 0`, where the image degenerates).
pub fn forward_complex(kind: MapKind, z: Complex64) -> Result<Complex64, MapError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(MapError::NonFinitePoint { re: z.re, im: z.im });
    }
    let limit = kind.strip_limit();
    if z.im.abs() > limit {
        return Err(MapError::OutsideStrip { im: z.im, limit });
    }
    if z.im.abs() == limit && z.re >= 0.0 {
        return Err(MapError::OnBranchCut { re: z.re, im: z.im });
    }
    Ok(match kind {
        MapKind::Arcsinh => complex_asinh(z.exp()),
        MapKind::LogisticLog => logistic_log_principal(z),
    })
}

/// Image of the strip boundary lines `Im z = ±d` under the forward map.
///
/// `lower` is the exact complex conjugate of `upper`, point by point.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCurve {
    /// Strip half-width that was traced.
    pub d: f64,
    /// Strip x-coordinates of the trace (equispaced, inclusive).
    pub xs: Vec<f64>,
    /// Images of `x + id`.
    pub upper: Vec<Complex64>,
    /// Images of `x - id` (conjugates of `upper`).
    pub lower: Vec<Complex64>,
}

impl BoundaryCurve {
    /// Serialize as CSV: `x_strip,re_upper,im_upper,re_lower,im_lower`,
    /// one row per sample, 17 significant digits.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "x_strip,re_upper,im_upper,re_lower,im_lower")?;
        for i in 0..self.xs.len() {
            writeln!(
                w,
                "{},{},{},{},{}",
                crate::csvfmt::sci(self.xs[i]),
                crate::csvfmt::sci(self.upper[i].re),
                crate::csvfmt::sci(self.upper[i].im),
                crate::csvfmt::sci(self.lower[i].re),
                crate::csvfmt::sci(self.lower[i].im),
            )?;
        }
        Ok(())
    }
}

/// Trace the boundary of the image region for strip half-width `d`, sampling
/// `count` equispaced points `x ∈ [x_min, x_max]`.
///
/// Requires `0 < d < π/2` (arcsinh map) resp. `0 < d < π` (logistic-log
/// map): at the limiting half-width the upper boundary degenerates into the
/// branch cut for `x ≥ 0` and cannot be traced.
pub fn domain_boundary(
    kind: MapKind,
    d: f64,
    x_min: f64,
    x_max: f64,
    count: usize,
) -> Result<BoundaryCurve, MapError> {
    let limit = kind.strip_limit();
    if !(d > 0.0 && d < limit) {
        return Err(MapError::HalfWidthRange { d, limit });
    }
    if count < 2 {
        return Err(MapError::TooFewSamples { count });
    }
    if x_min.is_nan() || x_max.is_nan() || x_min >= x_max {
        return Err(MapError::InvalidRange { x_min, x_max });
    }
    let step = (x_max - x_min) / (count - 1) as f64;
    let mut xs = Vec::with_capacity(count);
    let mut upper = Vec::with_capacity(count);
    let mut lower = Vec::with_capacity(count);
    for i in 0..count {
        let x = if i == count - 1 {
            x_max
        } else {
            x_min + i as f64 * step
        };
        let u = forward_complex(kind, Complex64::new(x, d))?;
        xs.push(x);
        lower.push(u.conj());
        upper.push(u);
    }
    Ok(BoundaryCurve {
        d,
        xs,
        upper,
        lower,
    })
}

/// Wrap an angle into the principal range `(-π, π]`.
fn wrap_angle(y: f64) -> f64 {
    let r = y.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}

/// Membership test for the image region: `|arg(sinh z)| < d` (arcsinh map)
/// or `|arg(eᶻ − 1)| < d` (logistic-log map), with principal `arg` and
/// strict inequality — boundary points are outside.
///
/// `d` must lie in the admissible range of the map's decay profiles
/// (`(0, π/2]` for arcsinh, `(0, π)` for logistic-log). Errors where the
/// characterizing function vanishes (`z = 0` in particular).
pub fn in_domain(kind: MapKind, z: Complex64, d: f64) -> Result<bool, MapError> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(MapError::NonFinitePoint { re: z.re, im: z.im });
    }
    let limit = kind.strip_limit();
    let admissible = match kind {
        MapKind::Arcsinh => d > 0.0 && d <= limit,
        MapKind::LogisticLog => d > 0.0 && d < limit,
    };
    if !admissible {
        return Err(MapError::HalfWidthRange { d, limit });
    }
    let arg = match kind {
        MapKind::Arcsinh => {
            if z.re > 50.0 {
                // sinh z ≈ e^z / 2
                wrap_angle(z.im)
            } else if z.re < -50.0 {
                // sinh z ≈ -e^{-z} / 2
                wrap_angle(PI - z.im)
            } else {
                let w = z.sinh();
                if w.re == 0.0 && w.im == 0.0 {
                    return Err(MapError::UndefinedArgument { re: z.re, im: z.im });
                }
                w.arg()
            }
        }
        MapKind::LogisticLog => {
            if z.re > 50.0 {
                // e^z - 1 ≈ e^z
                wrap_angle(z.im)
            } else {
                let w = complex_expm1(z);
                if w.re == 0.0 && w.im == 0.0 {
                    return Err(MapError::UndefinedArgument { re: z.re, im: z.im });
                }
                w.arg()
            }
        }
    };
    Ok(arg.abs() < d)
}
