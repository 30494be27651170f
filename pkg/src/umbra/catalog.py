"""Declarative registry of executable identity checks.

Every identity the package implements is registered here as an
:class:`IdentityCheck`: a pair of evaluators, a sample grid, a tolerance,
and a human-readable reference string. The runner produces deterministic
:class:`CheckReport` records that serialize to JSON and CSV.

Conventions:

* Checks comparing whole coefficient vectors use a single ``("coeffs", ...)``
  sample whose lhs is the worst per-coefficient deviation, measured
  relative to ``max(1, |a|, |b|)``, against an rhs of 0.
* A few samples rescale their residual so that one check-level tolerance
  can express different per-operation tolerances; those sample labels
  carry an explicit ``xNNN`` suffix.
* Checks flagged ``slow`` are skipped unless explicitly included.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from scipy.special import gamma as _sgamma
from scipy.special import j0 as _sj0
from scipy.special import j1 as _sj1

from . import functions as fn
from . import negderiv as nd
from .quadrature import OscillatorySpec, integrate_finite, integrate_oscillatory
from .series import TruncatedSeries
from .transforms import (
    TransformSpec,
    borel_apply,
    borel_integral_form,
    laplace_link_check,
    mellin_numeric,
    proposition1_check,
)
from .umbral import hermite_functional, umbral_binomial, umbral_exp

SQRT_PI = math.sqrt(math.pi)

GF_CUTOFF = 40          # truncation index for generating-function sums
GF_INCREMENT_BOUND = 1e-14


class CatalogError(Exception):
    pass


class UnknownCheckError(CatalogError):
    pass


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    description: str
    reference: str
    samples: tuple
    tolerance: float
    pair: Callable[[tuple], tuple[float, float]]
    flags: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.reference:
            raise CatalogError(f"check {self.id!r} must carry a reference string")
        if not self.samples:
            raise CatalogError(f"check {self.id!r} must declare samples")
        if not (self.tolerance > 0):
            raise CatalogError(f"check {self.id!r} needs a positive tolerance")


@dataclass(frozen=True)
class SampleResult:
    sample: tuple
    lhs: float
    rhs: float
    abs_diff: float
    rel_diff: float


@dataclass(frozen=True)
class CheckReport:
    id: str
    passed: bool
    tolerance: float
    max_abs_diff: float
    max_rel_diff: float
    samples: tuple[SampleResult, ...]
    reference: str
    runtime_ms: float

    def to_dict(self, include_runtime: bool = False) -> dict:
        out = {
            "id": self.id,
            "pass": self.passed,
            "tolerance": self.tolerance,
            "max_abs_diff": self.max_abs_diff,
            "max_rel_diff": self.max_rel_diff,
            "samples": [
                {
                    "sample": list(s.sample),
                    "lhs": s.lhs,
                    "rhs": s.rhs,
                    "abs_diff": s.abs_diff,
                    "rel_diff": s.rel_diff,
                }
                for s in self.samples
            ],
            "reference": self.reference,
        }
        if include_runtime:
            out["runtime_ms"] = self.runtime_ms
        return out


_REGISTRY: dict[str, IdentityCheck] = {}


def register(check: IdentityCheck):
    if check.id in _REGISTRY:
        raise CatalogError(f"duplicate check id {check.id!r}")
    _REGISTRY[check.id] = check


def all_ids() -> list[str]:
    return sorted(_REGISTRY)


def get_check(check_id: str) -> IdentityCheck:
    try:
        return _REGISTRY[check_id]
    except KeyError:
        raise UnknownCheckError(f"unknown check id {check_id!r}") from None


def run_check(check_id: str, *, tolerance_scale: float = 1.0) -> CheckReport:
    check = get_check(check_id)
    tol = check.tolerance * tolerance_scale
    start = time.perf_counter()
    results = []
    for sample in check.samples:
        lhs, rhs = check.pair(sample)
        lhs, rhs = float(lhs), float(rhs)
        abs_diff = abs(lhs - rhs)
        # relative to max(1, |lhs|, |rhs|): plain absolute near zero,
        # relative for large values; this is also the pass criterion
        rel_diff = abs_diff / max(1.0, abs(lhs), abs(rhs))
        results.append(SampleResult(sample, lhs, rhs, abs_diff, rel_diff))
    runtime = (time.perf_counter() - start) * 1000.0
    passed = all(r.rel_diff <= tol for r in results)
    return CheckReport(
        id=check.id,
        passed=passed,
        tolerance=tol,
        max_abs_diff=max(r.abs_diff for r in results),
        max_rel_diff=max(r.rel_diff for r in results),
        samples=tuple(results),
        reference=check.reference,
        runtime_ms=runtime,
    )


def run_all(prefix: str | None = None, *, include_slow: bool = False,
            tolerance_scale: float = 1.0) -> list[CheckReport]:
    reports = []
    for check_id in all_ids():
        check = _REGISTRY[check_id]
        if prefix and not check_id.startswith(prefix):
            continue
        if "slow" in check.flags and not include_slow:
            continue
        reports.append(run_check(check_id, tolerance_scale=tolerance_scale))
    return reports


def reports_to_json(reports: Sequence[CheckReport], *,
                    include_runtime: bool = False) -> str:
    return json.dumps([r.to_dict(include_runtime) for r in reports], indent=2)


def reports_to_csv(reports: Sequence[CheckReport], *,
                   include_runtime: bool = False) -> str:
    buf = io.StringIO()
    cols = ["id", "pass", "tolerance", "max_abs_diff", "max_rel_diff",
            "n_samples", "reference"]
    if include_runtime:
        cols.append("runtime_ms")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for r in reports:
        row = [r.id, r.passed, repr(r.tolerance), repr(r.max_abs_diff),
               repr(r.max_rel_diff), len(r.samples), r.reference]
        if include_runtime:
            row.append(f"{r.runtime_ms:.1f}")
        writer.writerow(row)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------


def _coeff_deviation(a: TruncatedSeries, b: TruncatedSeries) -> float:
    """Worst per-coefficient deviation relative to max(1, |a|, |b|)."""
    n = min(a.order, b.order)
    worst = 0.0
    for r in range(n + 1):
        ca, cb = a[r], b[r]
        dev = abs(ca - cb) / max(1.0, abs(ca), abs(cb))
        worst = max(worst, dev)
    return worst


def _gf_sum(term: Callable[[int], float], cutoff: int = GF_CUTOFF) -> float:
    """Truncated generating-function sum with a hard increment bound."""
    total = 0.0
    last = math.inf
    for k in range(cutoff + 1):
        t = term(k)
        total += t
        last = abs(t)
    if not last < GF_INCREMENT_BOUND:
        raise CatalogError(
            f"generating-function increment {last:.2e} at cutoff {cutoff} "
            f"exceeds {GF_INCREMENT_BOUND:.0e}; enlarge the cutoff")
    return total


def _exp_series(order: int = 64, sign: float = 1.0) -> TruncatedSeries:
    return TruncatedSeries.exp(order).compose_linear(sign)


def _gauss_quarter_series(order: int = 64) -> TruncatedSeries:
    """exp(-(x/2)^2) as a series."""
    return fn.gaussian_series(order).compose_linear(0.5)


def _bessel_r_series(n: int, order: int = 64) -> TruncatedSeries:
    """(x/2)^-n J_n(x) as an even series in x."""
    coeffs = [0j] * (order + 1)
    for r in range(order // 2 + 1):
        coeffs[2 * r] = ((-1) ** r) / (4 ** r * math.factorial(r)
                                       * math.factorial(n + r))
    return TruncatedSeries(coeffs)


def _richardson_derivative(f, n: int, x: float, h: float = 5e-3) -> float:
    """Central finite difference of order n, Richardson-extrapolated once."""

    def stencil(step):
        if n == 0:
            return f(x)
        if n == 1:
            return (f(x + step) - f(x - step)) / (2 * step)
        if n == 2:
            return (f(x + step) - 2 * f(x) + f(x - step)) / step ** 2
        if n == 3:
            return (f(x + 2 * step) - 2 * f(x + step) + 2 * f(x - step)
                    - f(x - 2 * step)) / (2 * step ** 3)
        raise ValueError("stencils implemented for n <= 3")

    return (4.0 * stencil(h / 2) - stencil(h)) / 3.0


def _mehler_rhs(x, y, u, v, t):
    # all three quadratic-form terms share the 1/(1-4yvt^2) denominator;
    # derived by composing the heat propagator with the plain EGF and
    # confirmed to machine precision against the truncated sum
    den = 1.0 - 4.0 * y * v * t * t
    return math.exp((u * t * x + v * t * t * x * x + y * (u * t) ** 2) / den) \
        / math.sqrt(den)


def _hermite_sum_form(x, y, t, cutoff=60):
    """exp(t y^2) sum_r x^r/(r!)^2 H_r(-2yt, t)."""
    total = 0.0
    for r in range(cutoff + 1):
        total += (x ** r) / (math.factorial(r) ** 2) \
            * fn.hermite2_value(r, -2.0 * y * t, t)
    return math.exp(t * y * y) * total


def _umbral_scalar_form(x, y, t, cutoff=60):
    """exp(t y^2) * [exp((x c)^2 t - 2 x c t y) under the 1/k! weight]."""
    total = 0.0
    for m in range(cutoff + 1):
        am = (x * x * t) ** m / math.factorial(m)
        if m > 0 and abs(am) < 1e-130:
            break
        for el in range(cutoff + 1):
            k = 2 * m + el
            if k > 170:  # 1/k! below double range
                break
            bl = (-2.0 * x * t * y) ** el / math.factorial(el)
            total += am * bl / math.factorial(k)
    return math.exp(t * y * y) * total


# ---------------------------------------------------------------------------
# Check registrations
# ---------------------------------------------------------------------------

_OSC_PI = OscillatorySpec(zero_spacing_hint=math.pi, max_partitions=200)


def _check_int_j0_line(sample):
    res = integrate_oscillatory(_sj0, _OSC_PI, tol=2e-7)
    return res.require_converged("half-line J0 integral"), 1.0


register(IdentityCheck(
    id="int-j0-line",
    description="Half-line integral of J0 equals 1",
    reference="int_0^inf J0(x) dx = 1",
    samples=((),),
    tolerance=1e-6,
    pair=_check_int_j0_line,
))


def _check_mellin_j0(sample):
    (nu,) = sample
    lhs = mellin_numeric(_sj0, nu, strip=(0.0, 1.5), oscillatory=_OSC_PI,
                         tol=1e-7)
    rhs = (2.0 ** (nu - 1.0)) * _sgamma(nu / 2.0) / _sgamma(1.0 - nu / 2.0)
    return lhs, rhs


register(IdentityCheck(
    id="mellin-j0",
    description="Mellin transform of J0 in the convergence strip",
    reference="int_0^inf J0(x) x^(nu-1) dx = 2^(nu-1) G(nu/2)/G(1-nu/2)",
    samples=((0.5,), (0.75,)),
    tolerance=1e-5,
    pair=_check_mellin_j0,
))


def _check_int_j0_xsq(sample):
    # the sign-change spacing shrinks like pi/(2x): refine the partition
    res = integrate_oscillatory(
        lambda x: _sj0(x * x),
        OscillatorySpec(zero_spacing_hint=1.3, max_partitions=400,
                        refine_zeros=True),
        tol=2e-6)
    rhs = (4.0 ** -0.75) * _sgamma(0.25) / _sgamma(0.75)
    return res.require_converged("J0(x^2) integral"), rhs


register(IdentityCheck(
    id="int-j0-xsq",
    description="Fresnel-type integral of J0 with squared argument",
    reference="int_0^inf J0(x^2) dx = 4^(-3/4) G(1/4)/G(3/4)",
    samples=((),),
    tolerance=1e-5,
    pair=_check_int_j0_xsq,
    flags=frozenset({"slow"}),
))


def _gaussian_bessel_rhs(b):
    return (SQRT_PI / 2.0) * math.exp(-b * b / 8.0) * fn.bessel_i0_value(b * b / 8.0)


def _check_gauss_j0(sample):
    (b,) = sample
    lhs = integrate_finite(lambda x: math.exp(-x * x) * _sj0(b * x),
                           0.0, 9.5, 1e-12).require_converged()
    return lhs, _gaussian_bessel_rhs(b)


register(IdentityCheck(
    id="gauss-j0",
    description="Gaussian-damped Bessel integral in closed I0 form",
    reference="int_0^inf exp(-x^2) J0(bx) dx = sqrt(pi)/2 exp(-b^2/8) I0(b^2/8)",
    samples=((0.5,), (1.0,), (2.0,)),
    tolerance=1e-8,
    pair=_check_gauss_j0,
))


def _check_hankel_gauss(sample):
    (y,) = sample
    # 0th-order Hankel transform of exp(-x^2)/x; the x weight cancels the pole
    lhs = integrate_finite(lambda x: math.exp(-x * x) * _sj0(x * y),
                           0.0, 9.5, 1e-12).require_converged()
    return lhs, _gaussian_bessel_rhs(y)


register(IdentityCheck(
    id="hankel-gauss",
    description="Hankel transform of exp(-x^2)/x reduces to the I0 closed form",
    reference="H0[exp(-x^2)/x; y] = sqrt(pi)/2 exp(-y^2/8) I0(y^2/8)",
    samples=((0.5,), (1.0,), (2.0,)),
    tolerance=1e-8,
    pair=_check_hankel_gauss,
))


def _check_j0_sincos(sample):
    x, kind = sample
    weight = math.sin if kind == "sin" else math.cos
    res = integrate_oscillatory(
        lambda u: _sj0(2.0 * math.sqrt(x * u)) * weight(u),
        OscillatorySpec(zero_spacing_hint=math.pi, max_partitions=250),
        tol=2e-6)
    rhs = math.cos(x) if kind == "sin" else math.sin(x)
    return res.require_converged("oscillatory kernel integral"), rhs


register(IdentityCheck(
    id="j0-sincos",
    description="Trig transforms of the square-root Bessel kernel",
    reference="int_0^inf J0(2 sqrt(xu)) {sin,cos}(u) du = {cos,sin}(x)",
    samples=((0.8, "sin"), (0.8, "cos"), (0.3, "sin"), (1.4, "cos")),
    tolerance=1e-5,
    pair=_check_j0_sincos,
))


def _tricomi_kernel(s, x, u):
    # u^s C_s(x u) with C_s(v) = v^(-s/2) J_s(2 sqrt(v))
    if s == 0:
        return _sj0(2.0 * math.sqrt(x * u))
    v = x * u
    if v <= 0:
        return 0.0
    return u * _sj1(2.0 * math.sqrt(v)) / math.sqrt(v)


def _check_tricomi_sincos(sample):
    s, x, kind = sample
    weight = math.sin if kind == "sin" else math.cos
    res = integrate_oscillatory(
        lambda u: _tricomi_kernel(s, x, u) * weight(u),
        OscillatorySpec(zero_spacing_hint=math.pi, max_partitions=400),
        tol=5e-6)
    phase = x + s * math.pi / 2.0
    rhs = ((-1) ** s) * (math.cos(phase) if kind == "sin" else math.sin(phase))
    return res.require_converged("Tricomi kernel integral"), rhs


register(IdentityCheck(
    id="tricomi-sincos",
    description="Trig transforms of weighted Tricomi kernels",
    reference="int_0^inf u^s C_s(xu) {sin,cos}(u) du = (-1)^s {cos,sin}(x + s pi/2)",
    samples=((0, 0.6, "sin"), (0, 0.6, "cos"), (1, 0.6, "sin"), (1, 0.6, "cos")),
    tolerance=1e-4,
    pair=_check_tricomi_sincos,
    flags=frozenset({"slow"}),
))


def _check_tricomi_j0_projection(sample):
    (x,) = sample
    res = integrate_oscillatory(
        lambda u: _sj0(2.0 * math.sqrt(x * u)) * _sj0(u),
        OscillatorySpec(zero_spacing_hint=math.pi, max_partitions=400),
        tol=5e-4)
    return res.value, fn.bessel_j_value(0, x)


register(IdentityCheck(
    id="tricomi-j0-projection",
    description="Tricomi kernel acts as a reproducing kernel on J0",
    reference="int_0^inf C0(xu) J0(u) du = J0(x)",
    samples=((1.0,), (0.5,)),
    tolerance=1e-3,
    pair=_check_tricomi_j0_projection,
    flags=frozenset({"slow"}),
))


def _check_erf_umbral(sample):
    (x,) = sample
    lhs = fn.gaussian_series(64).antidifferentiate()(x).real
    rhs = integrate_finite(lambda t: math.exp(-t * t), 0.0, x,
                           1e-13).require_converged()
    return lhs, rhs


register(IdentityCheck(
    id="erf-umbral",
    description="Termwise antiderivative of the Gaussian matches quadrature",
    reference="int_0^x exp(-t^2) dt via series antiderivative",
    samples=((0.3,), (1.0,), (2.0,)),
    tolerance=1e-10,
    pair=_check_erf_umbral,
))


def _cs_series_exact(p: int, x: Fraction, terms: int = 60) -> float:
    """Partial sum of the even-derivative Gaussian series in exact rationals.

    The coefficient of x^(2r) is (-1)^r (2(p+r))! / ((p+r)! (2r)!) exactly,
    so rational summation sidesteps the cancellation that limits the float
    series near the edge of the sample domain.
    """
    total = Fraction(0)
    xsq = x * x
    power = Fraction(1)
    for r in range(terms):
        m = p + r
        coeff = Fraction(math.factorial(2 * m),
                         math.factorial(m) * math.factorial(2 * r))
        total += ((-1) ** r) * coeff * power
        power *= xsq
    return float(total)


def _check_cs_sn_closed(sample):
    kind, p, x = sample
    if kind == "Cs":
        lhs = _cs_series_exact(p, Fraction(x).limit_denominator(100))
        rhs = ((-1) ** p) * fn.hermite2_value(2 * p, 2.0 * x, -1.0) \
            * math.exp(-x * x)
    else:
        lhs = fn.cs_sn_family("Sn", 0, order=110)(x).real
        rhs = math.exp(-x * x) * fn.erfi_series(80)(x).real
    return lhs, rhs


register(IdentityCheck(
    id="cs-sn-closed",
    description="Closed forms of the Gaussian derivative family",
    reference="Cs_{2p}(x) = (-1)^p H_{2p}(2x,-1) exp(-x^2); Sn_0 = exp(-x^2) erfi(x)",
    samples=tuple(
        [("Cs", p, x) for p in range(5) for x in (-2.0, -0.7, 0.0, 1.1, 2.0)]
        + [("Sn", 0, x) for x in (-1.5, 0.4, 2.0)]
    ),
    tolerance=1e-10,
    pair=_check_cs_sn_closed,
))


def _check_borel_c0_exp(sample):
    lhs = borel_apply(fn.tricomi(0, 64), TransformSpec(alpha=1.0))
    return _coeff_deviation(lhs, _exp_series(64, -1.0)), 0.0


register(IdentityCheck(
    id="borel-c0-exp",
    description="Transform downgrades the order-0 Tricomi series to exp(-x)",
    reference="Gamma(1 + x d/dx) C0(x) = exp(-x)",
    samples=(("coeffs",),),
    tolerance=1e-13,
    pair=_check_borel_c0_exp,
))


def _borel2_series(order=64):
    spec = TransformSpec(alpha=1.0)
    return borel_apply(borel_apply(fn.tricomi(0, order), spec), spec)


def _check_borel2_c0_geom(sample):
    if sample[0] == "coeffs":
        geometric = TruncatedSeries([(-1.0) ** r for r in range(65)])
        return _coeff_deviation(_borel2_series(64), geometric), 0.0
    _, x = sample
    lhs = _borel2_series(64)(x).real
    return lhs, 1.0 / (1.0 + x)


register(IdentityCheck(
    id="borel2-c0-geom",
    description="Twice-transformed Tricomi series is the geometric series",
    # pointwise samples keep a 2x margin inside the |x| < 1 region so the
    # order-64 truncation error stays below the stated tolerance
    reference="Gamma(1 + x d/dx)^2 C0(x) = 1/(1+x), |x| < 1",
    samples=(("coeffs",), ("eval", -0.5), ("eval", -0.35), ("eval", 0.35),
             ("eval", 0.5)),
    tolerance=1e-10,
    pair=_check_borel2_c0_geom,
))


def _check_borel3_divergent(sample):
    spec = TransformSpec(alpha=1.0)
    series = borel_apply(_borel2_series(64), spec)
    if sample[0] == "coeffs":
        expected = TruncatedSeries(
            [((-1.0) ** r) * math.factorial(r) for r in range(65)])
        return _coeff_deviation(series, expected), 0.0
    return series.radius_estimate(), 0.0


register(IdentityCheck(
    id="borel3-divergent",
    description="Third application produces the factorially divergent series",
    reference="Gamma(1 + x d/dx)^3 C0(x) = sum r! (-x)^r, radius 0",
    samples=(("coeffs",), ("radius",)),
    tolerance=1e-13,
    pair=_check_borel3_divergent,
    flags=frozenset({"divergent-aware"}),
))


def _check_borel_half_j0(sample):
    spec = TransformSpec(alpha=0.5)
    fwd = borel_apply(fn.j0_series(64), spec)
    if sample[0] == "forward":
        return _coeff_deviation(fwd, _gauss_quarter_series(64)), 0.0
    back = borel_apply(_gauss_quarter_series(64), spec.inverted())
    return _coeff_deviation(back, fn.j0_series(64)), 0.0


register(IdentityCheck(
    id="borel-half-j0",
    description="Half-index transform maps J0 to the Gaussian and back",
    reference="Gamma(1 + x/2 d/dx) J0(x) = exp(-(x/2)^2)",
    samples=(("forward",), ("inverse",)),
    tolerance=1e-13,
    pair=_check_borel_half_j0,
))


def _gauss_fn(x):
    return math.exp(-x * x)


def _check_prop1(sample):
    direction, alpha = sample
    if direction == "fwd":
        return proposition1_check(_gauss_fn, TransformSpec(alpha=alpha),
                                  SQRT_PI, tol=1e-6)
    if direction == "inv-series":
        inv = borel_apply(fn.gaussian_series(64), TransformSpec(alpha=0.5,
                                                                inverse=True))
        j0_2x = fn.j0_series(64).compose_linear(2.0)
        return _coeff_deviation(inv, j0_2x), 0.0
    # numeric inverse direction at alpha = 1/2: the inverse image of the
    # Gaussian is J0(2x) (coefficient-exact, asserted above); its real-line
    # integral must equal k / Gamma(1 - alpha).
    lhs, rhs = proposition1_check(
        lambda v: _sj0(2.0 * v),
        TransformSpec(alpha=0.5, inverse=True),
        SQRT_PI,
        tol=2e-6,
        oscillatory=OscillatorySpec(zero_spacing_hint=math.pi / 2.0,
                                    max_partitions=250),
    )
    return lhs, rhs


register(IdentityCheck(
    id="prop1",
    description="Real-line integral scaling under the index-alpha transform",
    reference="int_R T_alpha[f] = Gamma(1-alpha) int_R f, |alpha| < 1",
    samples=(("fwd", 0.25), ("fwd", 0.5), ("inv-series", 0.5), ("inv", 0.5)),
    tolerance=1e-5,
    pair=_check_prop1,
))


_LAPLACE_FNS = {
    "one": lambda u: 1.0,
    "linear": lambda u: u,
    "j0sqrt": lambda u: _sj0(2.0 * math.sqrt(u)),
}


def _check_laplace_link(sample):
    name, x = sample
    return laplace_link_check(_LAPLACE_FNS[name], x)


register(IdentityCheck(
    id="laplace-link",
    description="Transform agrees with the rescaled Laplace transform",
    reference="B[f; x] = (1/x) L[f; 1/x]",
    samples=tuple((name, x) for name in ("one", "linear", "j0sqrt")
                  for x in (0.5, 1.0, 2.0)),
    tolerance=1e-8,
    pair=_check_laplace_link,
))


def _check_mellin_link(sample):
    (x,) = sample
    lhs = borel_integral_form(lambda u: _sj0(2.0 * math.sqrt(u)),
                              TransformSpec(alpha=1.0), x, nodes=64)
    return lhs, math.exp(-x)


register(IdentityCheck(
    id="mellin-link-j0sqrt",
    description="Transform of the square-root Bessel kernel is exp(-x)",
    reference="B[J0(2 sqrt(t)); x] = exp(-x)",
    samples=((0.0,), (0.5,), (1.0,), (1.5,), (2.0,)),
    tolerance=1e-8,
    pair=_check_mellin_link,
))


def _check_gf_tricomi(sample):
    x, t, sigma = sample
    lhs = _gf_sum(lambda n: ((sigma * t) ** n) / math.factorial(n)
                  * fn.tricomi_value(n, x * t))
    rhs = fn.tricomi_value(0, (x - sigma) * t)
    return lhs, rhs


register(IdentityCheck(
    id="gf-tricomi",
    description="Exponential generating function of the Tricomi family",
    reference="sum (sigma t)^n/n! C_n(xt) = C0((x - sigma) t)",
    samples=((0.7, 1.0, 0.3), (1.2, 0.8, -0.4)),
    tolerance=1e-10,
    pair=_check_gf_tricomi,
))


def _check_gf_bessel(sample):
    x, sigma = sample
    lhs = _gf_sum(lambda n: (sigma ** n) / math.factorial(n)
                  * fn.bessel_j_value(n, x))
    rhs = fn.bessel_j_value(0, math.sqrt(x * x - 2.0 * sigma * x))
    return lhs, rhs


register(IdentityCheck(
    id="gf-bessel",
    description="Exponential generating function of integer-order Bessel J",
    reference="sum sigma^n/n! J_n(x) = J0(sqrt(x^2 - 2 sigma x))",
    samples=((1.5, 0.2), (2.0, 0.5), (1.0, -0.3)),
    tolerance=1e-9,
    pair=_check_gf_bessel,
))


def _check_gf_laguerre(sample):
    x, y, xi = sample
    lhs = _gf_sum(lambda n: (xi ** n) * fn.laguerre2_value(n, x, y))
    rhs = math.exp(-x * xi / (1.0 - y * xi)) / (1.0 - y * xi)
    return lhs, rhs


register(IdentityCheck(
    id="gf-laguerre",
    description="Ordinary generating function of two-variable Laguerre polynomials",
    reference="sum xi^n L_n(x,y) = exp(-x xi/(1-y xi))/(1-y xi)",
    samples=((0.5, 0.7, 0.4), (1.0, -0.8, 0.3)),
    tolerance=1e-10,
    pair=_check_gf_laguerre,
))


def _check_gf_bessel_trunc(sample):
    x, y, xi = sample
    lhs = _gf_sum(lambda n: (xi ** n) / math.factorial(n)
                  * fn.bessel_truncated(n, y)(x).real)
    rhs = fn.tricomi_value(0, x * xi) / (1.0 - y * xi)
    return lhs, rhs


register(IdentityCheck(
    id="gf-bessel-trunc",
    description="Generating function of the truncated Bessel polynomials",
    reference="sum xi^n/n! b_n(x,y) = C0(x xi)/(1 - y xi)",
    samples=((0.9, 0.6, 0.5), (1.4, -0.5, 0.6)),
    tolerance=1e-10,
    pair=_check_gf_bessel_trunc,
))


def _check_gf_lacunary_ordinary(sample):
    x, y, t = sample
    lhs = _gf_sum(lambda n: (t ** n) * fn.laguerre2_value(2 * n, x, y))
    rt = math.sqrt(t)
    rhs = 0.5 * (math.exp(-rt * x / (1.0 - rt * y)) / (1.0 - rt * y)
                 + math.exp(rt * x / (1.0 + rt * y)) / (1.0 + rt * y))
    return lhs, rhs


register(IdentityCheck(
    id="gf-lacunary-l2-ordinary",
    description="Ordinary generating function of even-index Laguerre polynomials",
    reference="sum t^n L_{2n}(x,y) = two-exponential square-root split",
    samples=((0.6, 0.7, 0.09), (1.0, -0.5, 0.05)),
    tolerance=1e-9,
    pair=_check_gf_lacunary_ordinary,
))


def _check_gf_lacunary_exp(sample):
    form, x, y, t = sample
    direct = _gf_sum(lambda n: (t ** n) / math.factorial(n)
                     * fn.laguerre2_value(2 * n, x, y), cutoff=60)
    if form == "umbral":
        other = _umbral_scalar_form(x, y, t)
    else:
        other = _hermite_sum_form(x, y, t)
    return other, direct


register(IdentityCheck(
    id="gf-lacunary-l2-exp",
    description="Exponential lacunary Laguerre GF: umbral and Hermite-sum forms",
    reference="sum t^n/n! L_{2n}(x,y) = e^{t y^2} e^{t(xc)^2 - 2xcty}|_{1/k!} "
              "= e^{t y^2} sum x^r/(r!)^2 H_r(-2yt, t)",
    samples=(("umbral", 0.8, 0.5, 0.3), ("hermite", 0.8, 0.5, 0.3),
             ("umbral", 1.2, -0.4, 0.25), ("hermite", 1.2, -0.4, 0.25)),
    tolerance=1e-9,
    pair=_check_gf_lacunary_exp,
))


def _lacunary_p_rhs(p, x, y, t):
    total = 0j
    tp = t ** (1.0 / p)
    for k in range(p):
        w = cmath.exp(2j * math.pi * k / p)
        den = 1.0 - tp * w * y
        total += cmath.exp(-(tp * w * x) / den) / den
    return total / p


def _check_gf_lacunary_lp(sample):
    kind, p, x, y, t = sample
    rhs = _lacunary_p_rhs(p, x, y, t)
    if kind == "imag-x100":
        return 100.0 * abs(rhs.imag), 0.0
    lhs = _gf_sum(lambda n: (t ** n) * fn.laguerre2_value(p * n, x, y))
    return lhs, rhs.real


register(IdentityCheck(
    id="gf-lacunary-lp",
    description="Roots-of-unity closed form for p-lacunary Laguerre GFs",
    reference="sum t^n L_{pn}(x,y) = (1/p) sum_k exp(-w_k t^{1/p} x / "
              "(1 - w_k t^{1/p} y))/(1 - w_k t^{1/p} y), w_k = exp(2 pi i k/p)",
    samples=(("real", 2, 0.6, 0.7, 0.04), ("imag-x100", 2, 0.6, 0.7, 0.04),
             ("real", 3, 0.6, 0.7, 0.008), ("imag-x100", 3, 0.6, 0.7, 0.008),
             ("real", 3, 1.0, -0.4, 0.004), ("imag-x100", 3, 1.0, -0.4, 0.004)),
    tolerance=1e-8,
    pair=_check_gf_lacunary_lp,
))


def _check_borel_leroy_ealphagamma(sample):
    alpha, gamma = sample
    lhs = borel_apply(fn.tricomi(int(gamma), 64),
                      TransformSpec(alpha=alpha, gamma=gamma + 1.0))
    rhs = fn.e_alpha_gamma(alpha, gamma, 64).compose_linear(-1.0)
    return _coeff_deviation(lhs, rhs), 0.0


register(IdentityCheck(
    id="borel-leroy-ealphagamma",
    description="Weighted transform of the Tricomi family gives the "
                "stretched-exponential series",
    reference="Gamma(gamma+1 + alpha x d/dx) C_gamma(x) = e_{alpha,gamma}(-x)",
    samples=((1.0, 1.0), (0.5, 2.0)),
    tolerance=1e-13,
    pair=_check_borel_leroy_ealphagamma,
))


def _check_bessel_wright_inverse(sample):
    alpha, gamma = sample
    lhs = borel_apply(_exp_series(64, -1.0),
                      TransformSpec(alpha=alpha, gamma=gamma + 1.0, inverse=True))
    rhs = fn.bessel_wright(gamma, alpha, 64)
    return _coeff_deviation(lhs, rhs), 0.0


register(IdentityCheck(
    id="bessel-wright-inverse",
    description="Inverse weighted transform of exp(-x) gives the Wright series",
    reference="Gamma(gamma+1 + alpha x d/dx)^(-1) exp(-x) = W_gamma(-x | alpha)",
    samples=((0.5, 1.0), (1.0 / 3.0, 2.0)),
    tolerance=1e-13,
    pair=_check_bessel_wright_inverse,
))


def _check_rn_inverse(sample):
    (n,) = sample
    lhs = borel_apply(_gauss_quarter_series(64),
                      TransformSpec(alpha=0.5, gamma=n + 1.0, inverse=True))
    rhs = _bessel_r_series(n, 64)
    return _coeff_deviation(lhs, rhs), 0.0


register(IdentityCheck(
    id="rn-inverse-bl",
    description="Inverse weighted half-index transform of the Gaussian gives "
                "the normalized Bessel series",
    reference="Gamma(n+1 + x/2 d/dx)^(-1) exp(-(x/2)^2) = (x/2)^(-n) J_n(x)",
    samples=((0,), (1,), (2,), (3,)),
    tolerance=1e-13,
    pair=_check_rn_inverse,
))


def _check_mittag_leffler(sample):
    kind, beta = sample
    spec = TransformSpec(alpha=1.0, gamma=1.0, beta=beta, delta=0.0)
    lhs_series = borel_apply(
        TruncatedSeries.exp(64).scale(1.0 / math.gamma(beta)), spec)
    if kind == "coeffs":
        return _coeff_deviation(lhs_series,
                                fn.mittag_leffler_1_beta(beta, 64)), 0.0
    # pointwise sanity at x = 1, where the beta = 1 series sums to e - 1
    return lhs_series(1.0).real, math.e - 1.0


register(IdentityCheck(
    id="mittag-leffler",
    description="Beta-kernel transform of exp maps to the two-parameter "
                "Mittag-Leffler series",
    reference="B(1 + x d/dx, beta) exp(x)/Gamma(beta) = E_{1, beta+1}(x)",
    samples=(("coeffs", 1.0), ("coeffs", 2.0), ("eval", 1.0)),
    tolerance=1e-13,
    pair=_check_mittag_leffler,
))


def _check_beta_prop(sample):
    kind = sample[0]
    spec = TransformSpec(alpha=3.0, gamma=1.0, beta=2.0, delta=0.0)
    if kind == "integral":
        return proposition1_check(_gauss_fn, spec, SQRT_PI, tol=1e-6)
    _, x = sample
    lhs = borel_integral_form(_gauss_fn, spec, x)
    beta_32 = math.gamma(3.0) * math.gamma(2.0) / math.gamma(5.0)
    rhs = beta_32 * fn.hyp_2f2(1.5, 2.0, 2.5, 3.0, 64)(-x * x).real
    return lhs, rhs


register(IdentityCheck(
    id="beta-prop",
    description="Real-line scaling of the beta-kernel transform and its "
                "2F2 representation",
    reference="int_R B(3 + xd, 2) exp(-x^2) = sqrt(pi) B(2,2); "
              "pointwise equals B(3,2) 2F2([3/2,2],[5/2,3]; -x^2)",
    samples=(("integral",), ("2f2", 0.5), ("2f2", 1.2)),
    tolerance=1e-5,
    pair=_check_beta_prop,
))


def _check_hermite_umbral_def(sample):
    n, y = sample
    lhs = umbral_binomial(n).evaluate(hermite_functional(y), n)
    return _coeff_deviation(lhs, fn.hermite2(n, y)), 0.0


register(IdentityCheck(
    id="hermite-umbral-def",
    description="Binomial shift-symbol powers reproduce the heat polynomials",
    reference="(x + c)^n under the even-weight functional = H_n(x, y)",
    samples=tuple((n, y) for n in range(11) for y in (-1.0, 0.5, 2.0)),
    tolerance=1e-13,
    pair=_check_hermite_umbral_def,
))


def _check_hermite_umbral_exp(sample):
    (y,) = sample
    lhs = umbral_exp(1.0, 1, 1, 40).evaluate(hermite_functional(y), 40)
    coeffs = [0j] * 41
    for r in range(21):
        coeffs[2 * r] = (y ** r) / math.factorial(r)
    return _coeff_deviation(lhs, TruncatedSeries(coeffs)), 0.0


register(IdentityCheck(
    id="hermite-umbral-exp",
    description="Shift-symbol exponential collapses to a Gaussian in x",
    reference="exp(c x) under the even-weight functional = exp(y x^2)",
    samples=((-1.0,), (0.5,), (2.0,)),
    tolerance=1e-12,
    pair=_check_hermite_umbral_exp,
))


def _check_hermite_sqrt(sample):
    if sample[0] == "coeffs":
        _, y = sample
        lhs = umbral_exp(1.0, 2, 1, 40).evaluate(hermite_functional(y), 40)
        coeffs = [math.comb(2 * r, r) * (y ** r) for r in range(41)]
        return _coeff_deviation(lhs, TruncatedSeries(coeffs)), 0.0
    _, y, x = sample
    lhs = umbral_exp(1.0, 2, 1, 120).evaluate(hermite_functional(y), 120)(x).real
    return lhs, 1.0 / math.sqrt(1.0 - 4.0 * y * x)


register(IdentityCheck(
    id="hermite-sqrt-identity",
    description="Squared-shift exponential sums to the inverse square root",
    reference="exp(c^2 x) under the even-weight functional = 1/sqrt(1-4yx)",
    samples=(("coeffs", 0.5), ("coeffs", -0.7),
             ("eval", 0.5, 0.25), ("eval", -0.7, 0.15), ("eval", 0.8, -0.15)),
    tolerance=1e-10,
    pair=_check_hermite_sqrt,
))


def _check_gf_hermite_double(sample):
    x, y, t = sample
    lhs = _gf_sum(lambda n: (t ** n) / math.factorial(n)
                  * fn.hermite2_value(2 * n, x, y))
    den = 1.0 - 4.0 * y * t
    rhs = math.exp(x * x * t / den) / math.sqrt(den)
    return lhs, rhs


register(IdentityCheck(
    id="gf-hermite-double-lacunary",
    description="Even-index exponential Hermite generating function",
    reference="sum t^n/n! H_{2n}(x,y) = exp(x^2 t/(1-4yt))/sqrt(1-4yt)",
    samples=((0.9, 0.8, 0.1), (1.1, -0.6, 0.15)),
    tolerance=1e-9,
    pair=_check_gf_hermite_double,
))


def _check_hermite_operational(sample):
    n, y = sample
    # independent route: expand exp(y d^2/dx^2) x^n by repeated series
    # differentiation, never invoking the closed coefficient formula
    monomial = TruncatedSeries([0j] * n + [1.0 + 0j])
    total = TruncatedSeries.zero(n)
    power = monomial
    factor = 1.0
    for r in range(n // 2 + 1):
        if r > 0:
            power = power.differentiate().differentiate()
            factor *= y / r
        total = total + power.scale(factor)
    return _coeff_deviation(total, fn.hermite2(n, y)), 0.0


register(IdentityCheck(
    id="hermite-operational",
    description="Heat propagator acting on monomials generates the "
                "heat polynomials",
    reference="H_n(x, y) = exp(y d^2/dx^2) x^n",
    samples=tuple((n, y) for n in range(9) for y in (-1.0, 2.0)),
    tolerance=1e-13,
    pair=_check_hermite_operational,
))


def _check_mehler(sample):
    x, y, u, v, t = sample
    lhs = _gf_sum(lambda n: (t ** n) / math.factorial(n)
                  * fn.hermite2_value(n, x, y) * fn.hermite2_value(n, u, v))
    return lhs, _mehler_rhs(x, y, u, v, t)


register(IdentityCheck(
    id="mehler",
    description="Bilinear exponential Hermite generating function",
    reference="sum t^n/n! H_n(x,y) H_n(u,v) = e^{y(ut)^2}/sqrt(1-4yvt^2) "
              "exp((utx + vt^2x^2)/(1-4yvt^2))",
    samples=((0.3, 0.2, 0.4, 0.1, 0.2), (0.5, -0.3, 0.2, 0.15, 0.3)),
    tolerance=1e-10,
    pair=_check_mehler,
))


def _check_hybrid(sample):
    x, y, u, v, t = sample
    lhs = _gf_sum(lambda n: (t ** n) / math.factorial(n)
                  * fn.laguerre2_value(n, x, y) * fn.hermite2_value(n, u, v))
    inner = _gf_sum(lambda r: (x ** r) / (math.factorial(r) ** 2)
                    * fn.hermite2_value(r, -t * u - 2.0 * y * v * t * t,
                                        v * t * t))
    rhs = math.exp(t * y * u + (t * y) ** 2 * v) * inner
    return lhs, rhs


register(IdentityCheck(
    id="hybrid-laguerre-hermite",
    description="Bilateral Laguerre-Hermite generating function",
    reference="sum t^n/n! L_n(x,y) H_n(u,v) = e^{tyu + (ty)^2 v} "
              "sum x^r/(r!)^2 H_r(-tu - 2yvt^2, vt^2)",
    samples=((0.7, 0.4, 0.3, 0.25, 0.35), (1.0, -0.5, 0.6, 0.2, 0.25)),
    tolerance=1e-9,
    pair=_check_hybrid,
))


def _check_rmt(sample):
    (nu,) = sample
    lhs = mellin_numeric(lambda x: math.exp(-x), nu, strip=(0.0, 60.0),
                         tol=1e-10)
    return lhs, _sgamma(nu)


register(IdentityCheck(
    id="rmt-footnote",
    description="Master-theorem sanity case: Mellin transform of exp(-x)",
    reference="int_0^inf x^(nu-1) exp(-x) dx = Gamma(nu)",
    samples=((0.5,), (2.0,)),
    tolerance=1e-9,
    pair=_check_rmt,
))


def _check_negderiv(sample):
    kind = sample[0]
    if kind == "j0-by-parts":  # stated tolerance 1e-10
        _, x, terms = sample
        value, _ = nd.negderiv_integral(nd.provider_j0(), x, terms)
        oracle = integrate_finite(lambda t: fn.bessel_j_value(0, t), 0.0, x,
                                  1e-13).require_converged()
        return abs(value - oracle) / 1e-10, 0.0
    if kind == "j0-ladder":  # Eq-21-style rearrangement, same 1e-10
        _, x, terms = sample
        value, _ = nd.bessel_integral_series(x, terms)
        oracle = integrate_finite(lambda t: fn.bessel_j_value(0, t), 0.0, x,
                                  1e-13).require_converged()
        return abs(value - oracle) / 1e-10, 0.0
    if kind == "gauss":  # stated tolerance 1e-9
        _, a, b, x, terms = sample
        value = nd.gaussian_integral_series(a, b, x, terms)
        oracle = integrate_finite(lambda t: math.exp(a * t * t + b * t), 0.0,
                                  x, 1e-13).require_converged()
        return abs(value - oracle) / 1e-9, 0.0
    if kind == "bessel-deriv":  # stated tolerance 1e-7
        _, n, x = sample
        value = nd.bessel_nth_derivative(n, x)
        oracle = _richardson_derivative(_sj0, n, x)
        return abs(value - oracle) / 1e-7, 0.0
    if kind == "hermite-int":  # finite sums, stated tolerance 1e-10
        _, which, n, x, y = sample
        value = nd.hermite_integral_series(which, n, x, y)
        if which == "x":
            oracle = integrate_finite(lambda t: fn.hermite2_value(n, t, y),
                                      0.0, x, 1e-13).require_converged()
        elif which == "y":
            oracle = integrate_finite(lambda t: fn.hermite2_value(n, x, t),
                                      0.0, y, 1e-13).require_converged()
        elif which == "x-cos":
            oracle = integrate_finite(
                lambda t: fn.hermite2_value(n, t, y) * math.cos(t), 0.0, x,
                1e-13).require_converged()
        else:
            oracle = integrate_finite(
                lambda t: fn.hermite2_value(n, x, t) * math.cos(t), 0.0, y,
                1e-13).require_converged()
        return abs(value - oracle) / 1e-10, 0.0
    if kind == "cos-one":  # int_0^x cos = sin lands exactly
        _, x = sample
        value = nd.negderiv_cos_integral(nd.provider_constant(1.0), x, 3)
        return abs(value - math.sin(x)) / 1e-12, 0.0
    raise CatalogError(f"unknown negderiv sample {sample!r}")


register(IdentityCheck(
    id="negderiv-suite",
    description="Integration-by-parts expansions vs quadrature, residuals "
                "normalized to each operation's stated tolerance",
    reference="int_0^x f = sum (-1)^s x^(s+1)/(s+1)! f^(s)(x) and its "
              "Hermite/Gaussian/Bessel instantiations",
    samples=(
        ("j0-by-parts", 1.0, 30),
        ("j0-ladder", 1.0, 30),
        ("j0-ladder", 0.5, 25),
        ("gauss", -1.0, 0.0, 1.0, 40),
        ("gauss", 0.3, 0.5, 0.8, 40),
        ("bessel-deriv", 1, 1.0),
        ("bessel-deriv", 2, 1.2),
        ("bessel-deriv", 3, 1.2),
        ("hermite-int", "x", 2, 1.0, 1.0),
        ("hermite-int", "y", 2, 1.0, 0.5),
        ("hermite-int", "x-cos", 2, 1.0, 1.0),
        ("hermite-int", "y-cos", 3, 0.7, 0.9),
        ("cos-one", 0.7),
    ),
    tolerance=1.0,
    pair=_check_negderiv,
))
