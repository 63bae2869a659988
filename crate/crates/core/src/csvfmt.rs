//! Fixed-format numeric serialization shared by all CSV emitters.
//!
//! Every floating-point value written to CSV goes through [`sci`], which
//! pins the representation to 17 significant digits of scientific notation.
//! This makes output byte-identical across runs and platforms and is enough
//! digits to round-trip any f64 exactly.

use num_complex::Complex64;

/// Scientific notation with 16 fractional digits (17 significant digits).
pub(crate) fn sci(x: f64) -> String {
    format!("{:.16e}", x)
}

/// Comma-free label for a complex sample point, e.g. `1.25e0-3.5e-1i`.
pub(crate) fn complex_label(z: Complex64) -> String {
    if z.im.is_sign_negative() {
        format!("{}-{}i", sci(z.re), sci(-z.im))
    } else {
        format!("{}+{}i", sci(z.re), sci(z.im))
    }
}
