"""Acceptance gate: every criterion asserted at its stated tolerance and
time budget, one printed verdict line per criterion (run with ``-s`` to see
them on passing runs)."""

import math
import time

import numpy as np
import pytest
from scipy.special import j0

from umbra import catalog
from umbra import negderiv as nd
from umbra.catalog import reports_to_json
from umbra.functions import (
    cs_sn_family,
    gaussian_series,
    hermite2,
    hermite2_value,
    j0_series,
    tricomi,
)
from umbra.quadrature import integrate_finite
from umbra.series import TruncatedSeries
from umbra.transforms import TransformSpec, borel_apply, borel_integral_form

SQRT_PI = math.sqrt(math.pi)


def _verdict(num, ok, description, elapsed):
    state = "PASS" if ok else "FAIL"
    print(f"criterion {num:2d}: {state} - {description} ({elapsed:.2f} s)")
    assert ok, f"criterion {num} failed: {description}"


def _run(check_id):
    return catalog.run_check(check_id)


def test_criterion_01_coefficient_exact_transforms():
    start = time.perf_counter()
    ids = ["borel-c0-exp", "borel3-divergent", "borel-half-j0",
           "borel-leroy-ealphagamma", "bessel-wright-inverse",
           "rn-inverse-bl", "mittag-leffler"]
    reports = [_run(i) for i in ids]
    elapsed = time.perf_counter() - start
    ok = all(r.passed and r.max_rel_diff <= 1e-13 for r in reports)
    ok = ok and elapsed < 1.0
    _verdict(1, ok, "coefficient-exact transform family at 1e-13, < 1 s",
             elapsed)


def test_criterion_02_operator_integral_exp_cross_validation():
    start = time.perf_counter()
    spec = TransformSpec(alpha=1.0)
    operator_series = borel_apply(tricomi(0, 64), spec)
    sup = 0.0
    for x in np.linspace(0.0, 2.0, 21):
        x = float(x)
        op = operator_series(x).real
        quad = borel_integral_form(lambda u: j0(2.0 * math.sqrt(u)), spec, x,
                                   nodes=64)
        ref = math.exp(-x)
        sup = max(sup, abs(op - quad), abs(op - ref), abs(quad - ref))
    elapsed = time.perf_counter() - start
    _verdict(2, sup <= 1e-8 and elapsed < 1.0,
             f"operator vs 64-node integral vs exp(-x), sup {sup:.2e}", elapsed)


def test_criterion_03_j0_half_line_integral():
    start = time.perf_counter()
    report = _run("int-j0-line")
    elapsed = time.perf_counter() - start
    ok = report.passed and report.max_abs_diff <= 1e-6 and elapsed < 5.0
    _verdict(3, ok, "half-line J0 integral equals 1 within 1e-6, < 5 s",
             elapsed)


def test_criterion_04_gaussian_bessel_identity():
    start = time.perf_counter()
    report = _run("gauss-j0")
    elapsed = time.perf_counter() - start
    ok = report.passed and report.max_rel_diff <= 1e-8 and elapsed < 2.0
    _verdict(4, ok, "Gaussian-damped Bessel integral at 1e-8, < 2 s", elapsed)


def test_criterion_05_real_line_scaling():
    start = time.perf_counter()
    prop = _run("prop1")
    fwd_half = next(s for s in prop.samples if s.sample == ("fwd", 0.5))
    beta = _run("beta-prop")
    integral = next(s for s in beta.samples if s.sample == ("integral",))
    elapsed = time.perf_counter() - start
    ok = (prop.passed and beta.passed
          and abs(fwd_half.lhs - math.pi) <= 1e-5
          and abs(integral.lhs - SQRT_PI / 6.0) <= 1e-5
          and elapsed < 5.0)
    _verdict(5, ok, "real-line scaling gives pi and sqrt(pi)/6 within 1e-5, "
                    "< 5 s", elapsed)


def test_criterion_06_negative_derivative_suite():
    start = time.perf_counter()
    oracle = integrate_finite(lambda t: float(j0(t)), 0.0, 1.0,
                              1e-13).require_converged()
    value, _ = nd.negderiv_integral(nd.provider_j0(), 1.0, 30)
    ok = abs(value - oracle) <= 1e-10
    ok = ok and abs(oracle - 0.9197304101) <= 1e-9

    gauss = nd.gaussian_integral_series(0.3, 0.5, 0.8, 40)
    gauss_oracle = integrate_finite(
        lambda t: math.exp(0.3 * t * t + 0.5 * t), 0.0, 0.8,
        1e-13).require_converged()
    ok = ok and abs(gauss - gauss_oracle) <= 1e-9

    for n in (1, 2, 3):
        h = 5e-3
        def stencil(step, x=1.2):
            if n == 1:
                return (j0(x + step) - j0(x - step)) / (2 * step)
            if n == 2:
                return (j0(x + step) - 2 * j0(x) + j0(x - step)) / step ** 2
            return (j0(x + 2 * step) - 2 * j0(x + step) + 2 * j0(x - step)
                    - j0(x - 2 * step)) / (2 * step ** 3)
        richardson = (4 * stencil(h / 2) - stencil(h)) / 3
        ok = ok and abs(nd.bessel_nth_derivative(n, 1.2) - richardson) <= 1e-7

    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 2.0
    _verdict(6, ok, "integration-by-parts expansions hit 1e-10/1e-9/1e-7, "
                    "< 2 s", elapsed)


def test_criterion_07_generating_function_suite():
    start = time.perf_counter()
    ids = ["gf-tricomi", "gf-bessel", "gf-laguerre", "gf-bessel-trunc",
           "gf-lacunary-l2-ordinary", "gf-lacunary-l2-exp", "gf-lacunary-lp",
           "hermite-umbral-exp", "hermite-sqrt-identity",
           "gf-hermite-double-lacunary", "mehler", "hybrid-laguerre-hermite"]
    reports = {i: _run(i) for i in ids}
    ok = all(r.passed for r in reports.values())
    # imaginary residue of the p = 3 roots-of-unity closed form, stored
    # scaled by 100 against the 1e-8 check tolerance, i.e. a 1e-10 bound
    lacunary = reports["gf-lacunary-lp"]
    imag = [s for s in lacunary.samples if s.sample[0] == "imag-x100"]
    ok = ok and imag and all(s.lhs <= 100.0 * 1e-10 for s in imag)
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 10.0
    _verdict(7, ok, "generating-function suite at stated tolerances, < 10 s",
             elapsed)


def test_criterion_08_property_suites():
    start = time.perf_counter()
    ok = True

    # series ring laws on fixed random instances
    rng = np.random.default_rng(11)
    for _ in range(25):
        a, b, c = (TruncatedSeries(rng.uniform(-3, 3, size=17))
                   for _ in range(3))
        _, rel1 = ((a * b) * c).max_difference(a * (b * c))
        _, rel2 = (a * (b + c)).max_difference(a * b + a * c)
        ok = ok and rel1 <= 1e-12 and rel2 <= 1e-12

    # transform round trips at order 64: reciprocal maps, 1 ulp per entry
    for spec in (TransformSpec(alpha=0.5), TransformSpec(alpha=1.0, gamma=2.0),
                 TransformSpec(alpha=0.25, gamma=1.5)):
        src = gaussian_series(64)
        back = borel_apply(borel_apply(src, spec), spec.inverted())
        abs_diff, rel = back.max_difference(src)
        ok = ok and (abs_diff <= 1e-12 or rel <= 5e-16)

    # Hermite derivative ladder
    for n in range(13):
        for y in (-1.0, 1.0, 2.5):
            base = hermite2(n, y)
            stepped = base
            for s in range(1, n + 1):
                stepped = stepped.differentiate()
                factor = math.factorial(n) // math.factorial(n - s)
                expected = hermite2(n - s, y).scale(factor)
                ok = ok and stepped.isclose(expected)

    # Tricomi derivative chain
    for s in range(1, 9):
        stepped = tricomi(0, 40)
        for _ in range(s):
            stepped = stepped.differentiate()
        ok = ok and stepped.isclose(tricomi(s, 40 - s).scale((-1.0) ** s))

    # closed form of the even-derivative Gaussian family
    for p in range(5):
        for x in (-1.5, -0.5, 0.6, 1.5):
            series_val = cs_sn_family("Cs", p, 90)(x).real
            closed = ((-1) ** p) * hermite2_value(2 * p, 2 * x, -1.0) \
                * math.exp(-x * x)
            scale = max(1.0, abs(series_val), abs(closed))
            ok = ok and abs(series_val - closed) <= 1e-10 * scale

    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 5.0
    _verdict(8, ok, "ring laws, round trips, derivative chains, closed forms, "
                    "< 5 s", elapsed)


def test_criterion_09_full_default_suite_deterministic():
    start = time.perf_counter()
    first = catalog.run_all()
    second = catalog.run_all()
    elapsed = time.perf_counter() - start
    ok = (len(first) == 35 and all(r.passed for r in first)
          and reports_to_json(first) == reports_to_json(second)
          and elapsed < 60.0)
    _verdict(9, ok, "default suite green and byte-identical across runs, "
                    "< 60 s", elapsed)


def test_criterion_10_slow_checks():
    start = time.perf_counter()
    reports = [_run(i) for i in ("int-j0-xsq", "tricomi-sincos",
                                 "tricomi-j0-projection")]
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in reports) and elapsed < 300.0
    _verdict(10, ok, "slow checks pass at loosened tolerances, < 5 min",
             elapsed)
