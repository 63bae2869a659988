//! Python bindings for the `sinc-expdecay` library.
//!
//! Exposes the conformal maps, decay profiles, sinc approximants, a-priori
//! error bounds, benchmark functions, and the numerical inequality checks.
//! Library errors surface as `ValueError`.

// `#[pyfunction]` expands to no-op `PyErr` conversions on `PyResult` returns.
#![allow(clippy::useless_conversion)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::cell::RefCell;

use sinc_expdecay::bounds::{self, BoundVariant};
use sinc_expdecay::inequalities;
use sinc_expdecay::maps::{self, MapKind as CoreMapKind};
use sinc_expdecay::sinc;
use sinc_expdecay::testbed;

fn value_error<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// One convergence-sweep row: `(n, h, m_neg, n_pos, observed_error, bound)`.
type SweepRow = (u32, f64, u32, u32, f64, f64);

/// Which conformal map carries the uniform grid onto (0, ∞).
#[pyclass(eq)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    /// `ψ(x) = arcsinh(eˣ)`, analytic on `|Im x| < π/2`.
    Arcsinh,
    /// `φ(x) = log(1 + eˣ)`, analytic on `|Im x| < π`.
    LogisticLog,
}

impl From<MapKind> for CoreMapKind {
    fn from(kind: MapKind) -> Self {
        match kind {
            MapKind::Arcsinh => CoreMapKind::Arcsinh,
            MapKind::LogisticLog => CoreMapKind::LogisticLog,
        }
    }
}

impl From<CoreMapKind> for MapKind {
    fn from(kind: CoreMapKind) -> Self {
        match kind {
            CoreMapKind::Arcsinh => MapKind::Arcsinh,
            CoreMapKind::LogisticLog => MapKind::LogisticLog,
        }
    }
}

#[pymethods]
impl MapKind {
    /// Half-width of the maximal strip of analyticity.
    fn strip_limit(&self) -> f64 {
        CoreMapKind::from(*self).strip_limit()
    }

    /// Short ASCII tag: `psi` or `phi`.
    fn tag(&self) -> &'static str {
        CoreMapKind::from(*self).tag()
    }
}

/// Envelope `|f(z)| ≤ K |z/(1+z)|^α |e^{-z}|^β` plus the strip half-width
/// `d` on which it is certified under the chosen map.
#[pyclass(frozen)]
#[derive(Clone)]
pub struct DecayProfile {
    inner: sinc::DecayProfile,
}

#[pymethods]
impl DecayProfile {
    #[new]
    fn new(k: f64, alpha: f64, beta: f64, d: f64, map_kind: MapKind) -> PyResult<Self> {
        sinc::DecayProfile::new(k, alpha, beta, d, map_kind.into())
            .map(|inner| Self { inner })
            .map_err(value_error)
    }

    #[getter]
    fn k(&self) -> f64 {
        self.inner.k
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.inner.alpha
    }

    #[getter]
    fn beta(&self) -> f64 {
        self.inner.beta
    }

    #[getter]
    fn d(&self) -> f64 {
        self.inner.d
    }

    #[getter]
    fn map_kind(&self) -> MapKind {
        self.inner.map_kind.into()
    }

    /// `μ = min(α, β)`, the rate that controls both error terms.
    fn mu(&self) -> f64 {
        self.inner.mu()
    }

    fn __repr__(&self) -> String {
        format!(
            "DecayProfile(k={}, alpha={}, beta={}, d={}, map_kind={:?})",
            self.inner.k, self.inner.alpha, self.inner.beta, self.inner.d, self.inner.map_kind
        )
    }
}

/// Grid layout chosen for a resolution parameter `n`: step `h` and the
/// truncation indices `-M..=N`.
#[pyclass(frozen)]
#[derive(Clone)]
pub struct SincParams {
    inner: sinc::SincParams,
}

#[pymethods]
impl SincParams {
    #[getter]
    fn n(&self) -> u32 {
        self.inner.n
    }

    #[getter]
    fn h(&self) -> f64 {
        self.inner.h
    }

    #[getter]
    fn m_neg(&self) -> u32 {
        self.inner.m_neg
    }

    #[getter]
    fn n_pos(&self) -> u32 {
        self.inner.n_pos
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "SincParams(n={}, h={}, m_neg={}, n_pos={})",
            self.inner.n, self.inner.h, self.inner.m_neg, self.inner.n_pos
        )
    }
}

/// A fully sampled sinc approximant of one function on (0, ∞).
#[pyclass(frozen)]
pub struct Approximant {
    inner: sinc::Approximant,
}

#[pymethods]
impl Approximant {
    /// Sample a Python callable `f(t: float) -> float` at the mapped grid
    /// nodes. Exceptions raised by `f` propagate; non-finite samples are
    /// rejected with `ValueError`.
    #[staticmethod]
    fn build(f: &Bound<'_, PyAny>, profile: DecayProfile, n: u32) -> PyResult<Self> {
        let trapped: RefCell<Option<PyErr>> = RefCell::new(None);
        let built = sinc::Approximant::build(
            |t| {
                if trapped.borrow().is_some() {
                    return f64::NAN;
                }
                match f.call1((t,)).and_then(|v| v.extract::<f64>()) {
                    Ok(v) => v,
                    Err(e) => {
                        *trapped.borrow_mut() = Some(e);
                        f64::NAN
                    }
                }
            },
            &profile.inner,
            n,
        );
        if let Some(e) = trapped.into_inner() {
            return Err(e);
        }
        built.map(|inner| Self { inner }).map_err(value_error)
    }

    /// Evaluate at one point of (0, ∞).
    fn evaluate(&self, t: f64) -> PyResult<f64> {
        self.inner.evaluate(t).map_err(value_error)
    }

    /// Evaluate at many points; bitwise identical to pointwise calls.
    fn evaluate_batch(&self, ts: Vec<f64>) -> PyResult<Vec<f64>> {
        self.inner.evaluate_batch(&ts).map_err(value_error)
    }

    fn profile(&self) -> DecayProfile {
        DecayProfile {
            inner: *self.inner.profile(),
        }
    }

    fn params(&self) -> SincParams {
        SincParams {
            inner: *self.inner.params(),
        }
    }

    /// The raw samples `f(map(kh))`, `k = -M..=N`.
    fn samples(&self) -> Vec<f64> {
        self.inner.samples().to_vec()
    }
}

/// One of the three benchmark functions (`"f1"`, `"f2"`, `"f3"`), bundled
/// with its certified decay profiles for both maps.
#[pyclass(frozen)]
pub struct Example {
    inner: testbed::ExampleFunction,
}

#[pymethods]
impl Example {
    #[new]
    fn new(id: &str) -> PyResult<Self> {
        let id: testbed::ExampleId = id.parse().map_err(value_error)?;
        Ok(Self {
            inner: testbed::example(id),
        })
    }

    #[getter]
    fn id(&self) -> String {
        self.inner.id.to_string()
    }

    /// Evaluate the benchmark function at `t > 0`.
    fn eval(&self, t: f64) -> f64 {
        self.inner.eval(t)
    }

    /// The certified profile under the given map.
    fn profile(&self, kind: MapKind) -> DecayProfile {
        DecayProfile {
            inner: *self.inner.profile(kind.into()),
        }
    }

    fn __repr__(&self) -> String {
        format!("Example('{}')", self.inner.id)
    }
}

/// Map a strip point to (0, ∞).
#[pyfunction]
fn forward(kind: MapKind, x: f64) -> f64 {
    maps::forward(kind.into(), x)
}

/// Invert the map on (0, ∞); raises `ValueError` off the half-line.
#[pyfunction]
fn inverse(kind: MapKind, t: f64) -> PyResult<f64> {
    maps::inverse(kind.into(), t).map_err(value_error)
}

/// Derivative of the forward map; lives in (0, 1].
#[pyfunction]
fn derivative(kind: MapKind, x: f64) -> f64 {
    maps::derivative(kind.into(), x)
}

/// Balance the truncation indices against the profile and pick the step.
#[pyfunction]
fn select_params(profile: DecayProfile, n: u32) -> SincParams {
    SincParams {
        inner: sinc::select_params(&profile.inner, n),
    }
}

/// `√(π d μ)`: the total bound decays like `√n · exp(-rate · √n)`.
#[pyfunction]
fn convergence_rate(profile: DecayProfile) -> f64 {
    bounds::convergence_rate(&profile.inner)
}

/// Leading constant of the total error bound.
#[pyfunction]
fn bound_constant(profile: DecayProfile) -> PyResult<f64> {
    bounds::bound_constant(
        &profile.inner,
        BoundVariant::for_map(profile.inner.map_kind),
    )
    .map_err(value_error)
}

/// A-priori uniform error bound at resolution `n`.
#[pyfunction]
fn total_bound(profile: DecayProfile, n: u32) -> PyResult<f64> {
    bounds::total_bound(
        &profile.inner,
        BoundVariant::for_map(profile.inner.map_kind),
        n,
    )
    .map_err(value_error)
}

/// Discretization term of the split bound for step `h`.
#[pyfunction]
fn discretization_bound(profile: DecayProfile, h: f64) -> PyResult<f64> {
    bounds::discretization_bound(&profile.inner, h).map_err(value_error)
}

/// Truncation term of the split bound for step `h` at resolution `n`.
#[pyfunction]
fn truncation_bound(profile: DecayProfile, h: f64, n: u32) -> f64 {
    bounds::truncation_bound(&profile.inner, h, n)
}

/// Strip-norm bound feeding the discretization term.
#[pyfunction]
fn n1_norm_bound(profile: DecayProfile) -> PyResult<f64> {
    bounds::n1_norm_bound(&profile.inner).map_err(value_error)
}

/// The fixed 201-point geometric grid on which errors are measured.
#[pyfunction]
fn evaluation_grid() -> Vec<f64> {
    testbed::evaluation_grid()
}

/// Worst grid error of `approx` against the benchmark function.
#[pyfunction]
fn observed_error(example: &Example, approx: &Approximant) -> f64 {
    testbed::observed_error(&example.inner, &approx.inner)
}

/// Sweep resolutions and report rows `(n, h, m_neg, n_pos, observed, bound)`.
#[pyfunction]
fn convergence_sweep(example: &Example, kind: MapKind, ns: Vec<u32>) -> PyResult<Vec<SweepRow>> {
    let reports =
        testbed::convergence_sweep(&example.inner, kind.into(), &ns).map_err(value_error)?;
    Ok(reports
        .iter()
        .map(|r| (r.n, r.h, r.m_neg, r.n_pos, r.observed_error, r.bound))
        .collect())
}

/// Least-squares slope of `ln(error)` against `√n` over rows produced by
/// `convergence_sweep`; `None` when fewer than two rows fall in the fit
/// window.
#[pyfunction]
fn fit_rate(rows: Vec<SweepRow>) -> Option<f64> {
    let reports: Vec<testbed::ErrorReport> = rows
        .iter()
        .map(
            |&(n, h, m_neg, n_pos, observed_error, bound)| testbed::ErrorReport {
                n,
                h,
                m_neg,
                n_pos,
                observed_error,
                bound,
            },
        )
        .collect();
    testbed::fit_rate(&reports)
}

/// Run every numerical inequality check; rows are
/// `(check_name, samples, worst_margin, worst_point, passed)`.
#[pyfunction]
#[pyo3(signature = (samples = 100_000, seed = 42))]
fn run_checks(samples: u64, seed: u64) -> Vec<(String, u64, f64, String, bool)> {
    inequalities::run_all(samples, seed)
        .into_iter()
        .map(|r| (r.name, r.checked, r.worst_margin, r.worst_point, r.passed))
        .collect()
}

#[pymodule]
fn sinc_expdecay_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<MapKind>()?;
    m.add_class::<DecayProfile>()?;
    m.add_class::<SincParams>()?;
    m.add_class::<Approximant>()?;
    m.add_class::<Example>()?;
    m.add_function(wrap_pyfunction!(forward, m)?)?;
    m.add_function(wrap_pyfunction!(inverse, m)?)?;
    m.add_function(wrap_pyfunction!(derivative, m)?)?;
    m.add_function(wrap_pyfunction!(select_params, m)?)?;
    m.add_function(wrap_pyfunction!(convergence_rate, m)?)?;
    m.add_function(wrap_pyfunction!(bound_constant, m)?)?;
    m.add_function(wrap_pyfunction!(total_bound, m)?)?;
    m.add_function(wrap_pyfunction!(discretization_bound, m)?)?;
    m.add_function(wrap_pyfunction!(truncation_bound, m)?)?;
    m.add_function(wrap_pyfunction!(n1_norm_bound, m)?)?;
    m.add_function(wrap_pyfunction!(evaluation_grid, m)?)?;
    m.add_function(wrap_pyfunction!(observed_error, m)?)?;
    m.add_function(wrap_pyfunction!(convergence_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(fit_rate, m)?)?;
    m.add_function(wrap_pyfunction!(run_checks, m)?)?;
    m.add("MARGIN_TOLERANCE", inequalities::MARGIN_TOLERANCE)?;
    Ok(())
}
