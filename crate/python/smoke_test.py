#!/usr/bin/env python3
"""Smoke test for the sinc_expdecay_py extension module.

Build the module first:

    cargo build -p sinc-expdecay-py --release

then run this script with any Python >= 3.8:

    python3 python/smoke_test.py
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent


def locate_extension() -> Path:
    """Find the built cdylib, preferring the release profile."""
    stems = {
        "linux": ("libsinc_expdecay_py", ".so"),
        "darwin": ("libsinc_expdecay_py", ".dylib"),
        "win32": ("sinc_expdecay_py", ".dll"),
    }
    prefix, suffix = stems.get(sys.platform, ("libsinc_expdecay_py", ".so"))
    for profile in ("release", "debug"):
        candidate = REPO_ROOT / "target" / profile / f"{prefix}{suffix}"
        if candidate.exists():
            return candidate
    sys.exit(
        "extension module not found; run `cargo build -p sinc-expdecay-py --release` first"
    )


def import_module():
    src = locate_extension()
    stage = Path(tempfile.mkdtemp(prefix="sinc-smoke-"))
    ext = ".pyd" if sys.platform == "win32" else ".so"
    shutil.copy2(src, stage / f"sinc_expdecay_py{ext}")
    sys.path.insert(0, str(stage))
    import sinc_expdecay_py

    return sinc_expdecay_py


def main() -> None:
    m = import_module()
    checks = 0

    def ok(cond: bool, label: str) -> None:
        nonlocal checks
        if not cond:
            sys.exit(f"FAIL: {label}")
        checks += 1

    # --- maps: round trips and known values -------------------------------
    for kind in (m.MapKind.Arcsinh, m.MapKind.LogisticLog):
        for u in (-40.0, -3.5, 0.0, 2.25, 40.0):
            t = 2.0**u
            x = m.inverse(kind, t)
            ok(abs(m.forward(kind, x) - t) <= 1e-13 * t, f"round trip {kind} 2^{u}")
        ok(0.0 < m.derivative(kind, 1.3) <= 1.0, f"derivative range {kind}")
    ok(m.MapKind.Arcsinh.strip_limit() == math.pi / 2, "psi strip limit")
    ok(m.MapKind.LogisticLog.strip_limit() == math.pi, "phi strip limit")
    ok(m.MapKind.Arcsinh.tag() == "psi" and m.MapKind.LogisticLog.tag() == "phi", "tags")
    ok(abs(m.forward(m.MapKind.LogisticLog, 0.0) - math.log(2.0)) < 1e-16, "phi(0) = ln 2")

    # --- profile validation and parameter selection -----------------------
    try:
        m.DecayProfile(1.0, -1.0, 1.0, 1.0, m.MapKind.Arcsinh)
        sys.exit("FAIL: negative alpha accepted")
    except ValueError:
        checks += 1
    profile = m.DecayProfile(2.0, 0.5, 1.0, 3.0, m.MapKind.LogisticLog)
    ok(profile.mu() == 0.5, "mu = min(alpha, beta)")
    params = m.select_params(profile, 10)
    ok((params.m_neg, params.n_pos) == (10, 5), "asymmetric truncation")
    ok(len(params) == 16, "grid point count")
    h1, h4 = m.select_params(profile, 7).h, m.select_params(profile, 28).h
    ok(h4 == h1 / 2.0, "step halves when n quadruples")

    # --- approximant: build from a Python callable ------------------------
    ex = m.Example("f2")
    approx = m.Approximant.build(ex.eval, profile, 40)
    ok(len(approx.samples()) == len(approx.params()), "sample count")
    err = m.observed_error(ex, approx)
    bound = m.total_bound(profile, 40)
    ok(0.0 < err <= bound, f"observed {err} within bound {bound}")
    ok(err < 1e-4, f"n = 40 error small, got {err}")
    ts = [0.25, 1.0, 7.5]
    batch = approx.evaluate_batch(ts)
    ok(all(b == approx.evaluate(t) for b, t in zip(batch, ts)), "batch == pointwise")
    try:
        approx.evaluate(-1.0)
        sys.exit("FAIL: negative point accepted")
    except ValueError:
        checks += 1

    # exceptions from the callable propagate out of build
    def bomb(t: float) -> float:
        raise RuntimeError("boom")

    try:
        m.Approximant.build(bomb, profile, 4)
        sys.exit("FAIL: callable exception swallowed")
    except RuntimeError:
        checks += 1

    # --- bounds: decomposition sanity --------------------------------------
    rate = m.convergence_rate(profile)
    ok(abs(rate - math.sqrt(math.pi * 3.0 * 0.5)) < 1e-15, "rate = sqrt(pi d mu)")
    ok(m.bound_constant(profile) > 0.0, "bound constant positive")
    h = m.select_params(profile, 40).h
    split = m.discretization_bound(profile, h) + m.truncation_bound(profile, h, 40)
    ok(split <= m.total_bound(profile, 40) * (1.0 + 1e-12), "split <= total")
    ok(m.n1_norm_bound(profile) > 0.0, "strip norm positive")

    # --- sweep: the wider-strip map wins ------------------------------------
    ns = [4, 16, 36, 64]
    rows_phi = m.convergence_sweep(ex, m.MapKind.LogisticLog, ns)
    rows_psi = m.convergence_sweep(ex, m.MapKind.Arcsinh, ns)
    ok(all(r[4] <= r[5] for r in rows_phi + rows_psi), "sweep rows obey bounds")
    ok(rows_phi[-1][4] < rows_psi[-1][4], "logistic-log map converges faster")
    ok(len(m.evaluation_grid()) == 201, "evaluation grid size")
    slope = m.fit_rate(rows_phi)
    ok(slope is not None and slope < 0.0, "fitted rate is negative")

    # --- inequality checks ---------------------------------------------------
    reports = m.run_checks(samples=2000, seed=42)
    ok(len(reports) == 5, "five checks")
    for name, checked, margin, point, passed in reports:
        ok(passed and margin >= -m.MARGIN_TOLERANCE, f"check {name} at {point}")
    again = m.run_checks(samples=2000, seed=42)
    ok(reports == again, "checks are deterministic")

    print(f"PASS ({checks} assertions)")


if __name__ == "__main__":
    main()
