//! Sinc approximation of exponentially decaying functions on (0, ∞), with
//! computable a-priori error bounds.
//!
//! Functions that decay like `e^{-βt}` at infinity and behave like `t^α`
//! at the origin are approximated by sinc interpolation after pulling the
//! half-line back to the real axis through a conformal map. Two maps are
//! supported — the classical `arcsinh(eˣ)` and the wider-strip
//! `log(1 + eˣ)` — and for both the uniform error is bounded explicitly by
//! `C √n e^{-√(πdμn)}` with every constant computable from the function's
//! decay profile.
//!
//! Module tour:
//!
//! * [`maps`] — the conformal maps: forward/inverse/derivative on the real
//!   line, complex continuation with branch-cut policing, boundary traces
//!   of the analyticity regions, and membership tests.
//! * [`sinc`] — decay profiles, grid-geometry selection, and the sinc
//!   approximant itself (build, evaluate, batch evaluation).
//! * [`bounds`] — the explicit error constants and total/discretization/
//!   truncation bounds.
//! * [`inequalities`] — seeded numerical verification of the scalar
//!   inequalities the constants rest on.
//! * [`testbed`] — three benchmark functions with certified profiles,
//!   the fixed evaluation grid, convergence sweeps, and rate fitting.
//! * [`cli`] — the `sinc-expdecay` command-line tool built on all of the
//!   above.
//!
//! ```
//! use sinc_expdecay::{Approximant, DecayProfile, MapKind};
//!
//! // e^{-t} √(1 - e^{-t}): square-root behaviour at 0, decay rate 1
//! let profile = DecayProfile::new(2.0, 0.5, 1.0, std::f64::consts::FRAC_PI_2,
//!                                 MapKind::Arcsinh).unwrap();
//! let f = |t: f64| (-t).exp() * (-(-t).exp_m1()).sqrt();
//! let approx = Approximant::build(f, &profile, 64).unwrap();
//! let err = (approx.evaluate(0.7).unwrap() - f(0.7)).abs();
//! assert!(err < 1e-4);
//! assert!(sinc_expdecay::total_bound(&profile, sinc_expdecay::BoundVariant::Arcsinh, 64).unwrap() > err);
//! ```

pub mod bounds;
pub mod cli;
mod csvfmt;
pub mod inequalities;
pub mod maps;
pub mod sinc;
pub mod testbed;

pub use bounds::{bound_constant, convergence_rate, total_bound, BoundVariant};
pub use maps::MapKind;
pub use sinc::{select_params, Approximant, DecayProfile, SincParams};
pub use testbed::{example, ExampleFunction, ExampleId};
