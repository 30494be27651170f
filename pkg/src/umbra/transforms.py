"""The Borel-type transform family as exact coefficient maps.

Acting on a power series, each member of the family multiplies (forward) or
divides (inverse) the r-th coefficient by a fixed factor:

* index-``alpha`` transform with weight exponent ``gamma``:
  ``Gamma(gamma + alpha*r)`` (plain transform is ``gamma = 1``);
* finite-interval beta-kernel variant: ``B(alpha + gamma*r, beta + delta*r)``.

Each coefficient map is paired with its defining integral form so the two
routes can be checked against each other: the half-line family integrates
``t**(gamma-1) * exp(-t) * f(t**alpha * x)`` by Gauss-Laguerre rules, the
beta-kernel family integrates ``t**(alpha-1) (1-t)**(beta-1)
f(t**gamma (1-t)**delta x)`` adaptively on (0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from scipy.special import gammaln

from .quadrature import (
    OscillatorySpec,
    QuadratureError,
    QuadratureResult,
    gauss_laguerre_nodes,
    integrate_finite,
    integrate_oscillatory,
    integrate_real_line,
)
from .series import TruncatedSeries


class TransformError(Exception):
    pass


@dataclass(frozen=True)
class TransformSpec:
    """Parameters selecting one member of the transform family.

    ``beta``/``delta`` are set together and switch to the beta-kernel
    variant; otherwise ``alpha`` (series index scale) and ``gamma``
    (kernel weight exponent) select the half-line family.
    """

    alpha: float
    gamma: float = 1.0
    beta: float | None = None
    delta: float | None = None
    inverse: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 0):
            raise TransformError("alpha must be positive and finite")
        if not (math.isfinite(self.gamma) and self.gamma > 0):
            raise TransformError("gamma must be positive and finite")
        if (self.beta is None) != (self.delta is None):
            raise TransformError("beta and delta must be set together")
        if self.beta is not None:
            if not (math.isfinite(self.beta) and self.beta > 0):
                raise TransformError("beta must be positive and finite")
            if not (math.isfinite(self.delta) and self.delta >= 0):
                raise TransformError("delta must be non-negative and finite")

    @property
    def family(self) -> str:
        if self.beta is not None:
            return "beta"
        return "borel" if self.gamma == 1.0 else "borel-leroy"

    def factor(self, r: int) -> float:
        """Coefficient factor at series index r (forward direction)."""
        if self.beta is not None:
            a = self.alpha + self.gamma * r
            b = self.beta + self.delta * r
            if a <= 0 or b <= 0:
                raise TransformError(
                    f"beta-kernel arguments ({a}, {b}) non-positive at index {r}")
            return math.exp(gammaln(a) + gammaln(b) - gammaln(a + b))
        arg = self.gamma + self.alpha * r
        if arg <= 0 and float(arg).is_integer():
            raise TransformError(f"gamma-function pole at index {r} (argument {arg})")
        if arg > 170.0:
            log = float(gammaln(arg))
            return math.inf if log > 709.0 else math.exp(log)
        return math.gamma(arg)

    def inverted(self) -> "TransformSpec":
        return TransformSpec(self.alpha, self.gamma, self.beta, self.delta,
                             not self.inverse)

    # -- serialization ---------------------------------------------------------

    def to_dict(self) -> dict:
        out = {"family": self.family, "alpha": self.alpha, "gamma": self.gamma,
               "inverse": self.inverse}
        if self.beta is not None:
            out["beta"] = self.beta
            out["delta"] = self.delta
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "TransformSpec":
        family = data.get("family", "borel")
        beta = data.get("beta")
        delta = data.get("delta")
        if family == "beta" and beta is None:
            raise TransformError("beta family requires beta and delta")
        if family != "beta" and beta is not None:
            raise TransformError(f"family {family!r} does not take beta/delta")
        return cls(
            alpha=float(data["alpha"]),
            gamma=float(data.get("gamma", 1.0)),
            beta=None if beta is None else float(beta),
            delta=None if delta is None else float(delta),
            inverse=bool(data.get("inverse", False)),
        )


def borel_apply(series: TruncatedSeries, spec: TransformSpec) -> TruncatedSeries:
    """Apply the coefficient map of ``spec`` to a truncated series.

    Forward multiplies coefficient r by the factor, inverse divides; the two
    directions are exact reciprocals, so round trips are coefficient-exact.
    """
    factors = [spec.factor(r) for r in range(series.order + 1)]
    # an exactly-zero coefficient stays zero even when the factor itself is
    # outside double range (large orders of fast-growing factors)
    if spec.inverse:
        coeffs = [0.0 if c == 0 else c / f
                  for c, f in zip(series.coeffs, factors)]
    else:
        coeffs = [0.0 if c == 0 else c * f
                  for c, f in zip(series.coeffs, factors)]
    return TruncatedSeries(coeffs)


# ---------------------------------------------------------------------------
# Integral forms
# ---------------------------------------------------------------------------


def _beta_kernel_integral(f, spec: TransformSpec, x: float,
                          tol: float) -> QuadratureResult:
    """Adaptive ``int_0^1 t^(a-1) (1-t)^(b-1) f(t^g (1-t)^d x) dt``.

    Endpoint substitutions ``t = s**(1/a)`` / ``1-t = s**(1/b)`` absorb the
    integrable singularities exactly when a < 1 or b < 1.
    """
    a, b = spec.alpha, spec.beta
    g, d = spec.gamma, spec.delta

    def arg(t):
        return (t ** g) * ((1.0 - t) ** d) * x

    # geometric ladders of breakpoints where the argument scale crosses O(1),
    # so the adaptive rule cannot step over a boundary layer at either end
    pts = []
    ax = abs(x)
    if ax > 1.0:
        t_lo = ax ** (-1.0 / g)
        while 1e-280 < t_lo < 0.45:
            pts.append(t_lo)
            t_lo *= 8.0
        if d > 0:
            t_hi = ax ** (-1.0 / d)
            while 1e-280 < t_hi < 0.45:
                pts.append(1.0 - t_hi)
                t_hi *= 8.0

    def left(s):  # t = s**(1/a) on t in (0, 1/2)
        t = s ** (1.0 / a)
        return (1.0 / a) * ((1.0 - t) ** (b - 1.0)) * f(arg(t))

    def right(s):  # 1 - t = s**(1/b) on t in (1/2, 1)
        t = 1.0 - s ** (1.0 / b)
        return (1.0 / b) * (t ** (a - 1.0)) * f(arg(t))

    lo = integrate_finite(left, 0.0, 0.5 ** a, tol / 2,
                          points=[p ** a for p in pts if p < 0.5])
    hi = integrate_finite(right, 0.0, 0.5 ** b, tol / 2,
                          points=[(1.0 - p) ** b for p in pts if p > 0.5])
    return QuadratureResult(lo.value + hi.value,
                            lo.error_estimate + hi.error_estimate,
                            lo.evaluations + hi.evaluations,
                            lo.converged and hi.converged)


def borel_integral_form(f: Callable[[float], float], spec: TransformSpec,
                        x: float, *, nodes: int = 64, tol: float = 1e-9,
                        check: bool = True) -> float:
    """Defining integral of the transform, evaluated numerically.

    Half-line family: Gauss-Laguerre with the ``t**(gamma-1)`` weight;
    a half-node-count rerun supplies a convergence diagnostic. Beta-kernel
    family: adaptive quadrature on (0, 1). Only forward transforms have an
    integral form here; inverse maps exist only as coefficient maps.
    """
    if spec.inverse:
        raise TransformError(
            "inverse transforms have no integral form here; "
            "use the coefficient map")
    if spec.beta is not None:
        res = _beta_kernel_integral(f, spec, x, tol)
        if check and not res.converged:
            raise QuadratureError(
                f"beta-kernel integral did not converge at x={x}: "
                f"error ~ {res.error_estimate:.2e}")
        return res.value

    def value_with(n):
        t, w = gauss_laguerre_nodes(n, spec.gamma)
        total = 0.0
        for ti, wi in zip(t, w):
            total += wi * f((ti ** spec.alpha) * x)
        return total

    full = value_with(nodes)
    if check:
        half = value_with(max(4, nodes // 2))
        diff = abs(full - half)
        if diff > max(tol, tol * abs(full)) * 100.0:
            raise QuadratureError(
                f"Gauss-Laguerre tail estimate {diff:.2e} above tolerance at "
                f"x={x}; raise the node count")
    return full


def transform_pointwise(f: Callable[[float], float], spec: TransformSpec,
                        x: float, tol: float = 1e-10) -> float:
    """Integral form via breakpoint-aware adaptive quadrature.

    Slower than Gauss-Laguerre but keeps full accuracy when ``x`` is large
    and the integrand collapses onto a boundary layer near t = 0.
    """
    if spec.beta is not None:
        return _beta_kernel_integral(f, spec, x, tol).value
    if spec.inverse:
        raise TransformError("inverse transforms have no integral form here")

    g, a = spec.gamma, spec.alpha
    upper = 60.0

    def integrand(t):
        if t <= 0.0:
            return 0.0
        return (t ** (g - 1.0)) * math.exp(-t) * f((t ** a) * x)

    pts = []
    ax = abs(x)
    if ax > 1.0:
        t_star = ax ** (-1.0 / a)
        while t_star < upper / 10.0:
            if t_star > 1e-280:
                pts.append(t_star)
            t_star *= 10.0
    res = integrate_finite(integrand, 0.0, upper, tol, points=pts)
    return res.value


# ---------------------------------------------------------------------------
# Identity checks built on the integral forms
# ---------------------------------------------------------------------------


def laplace_link_check(f: Callable[[float], float], x: float,
                       *, nodes: int = 64, tol: float = 1e-10):
    """Both sides of ``B[f; x] = (1/x) L[f; 1/x]``.

    The transform side uses Gauss-Laguerre, the Laplace side independent
    adaptive quadrature with an exponential cutoff.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    spec = TransformSpec(alpha=1.0)
    borel_value = borel_integral_form(f, spec, x, nodes=nodes)
    cutoff = 45.0 * x
    laplace = integrate_finite(lambda t: math.exp(-t / x) * f(t), 0.0, cutoff,
                               tol, points=[x, 5.0 * x]).value
    return borel_value, laplace / x


def proposition1_check(f: Callable[[float], float], spec: TransformSpec,
                       k_expected: float, *, tol: float = 1e-7,
                       oscillatory: OscillatorySpec | None = None):
    """Real-line integral of the transformed function vs its predicted value.

    Forward: ``lhs = int_R (T f)(x) dx`` by nested quadrature and
    ``rhs = k * Gamma(gamma - alpha)`` for the half-line family
    (``k * B(alpha - gamma, beta - delta)`` for the beta-kernel family).

    Inverse: the inverse map has no integral form, so the caller passes the
    inverse-image function itself as ``f`` (obtained, e.g., from the exact
    coefficient map); ``lhs = int_R f`` and ``rhs = k / Gamma(gamma - alpha)``.
    Returns ``(lhs, rhs)``.
    """
    if spec.beta is not None:
        if spec.inverse:
            raise TransformError("inverse direction is not defined for the "
                                 "beta-kernel variant")
        if not (spec.alpha > spec.gamma and spec.beta > spec.delta):
            raise TransformError("need alpha > gamma and beta > delta")
        rhs = k_expected * math.exp(
            gammaln(spec.alpha - spec.gamma) + gammaln(spec.beta - spec.delta)
            - gammaln(spec.alpha - spec.gamma + spec.beta - spec.delta))
        lhs = integrate_real_line(
            lambda x: _beta_kernel_integral(f, spec, x, tol / 10).value,
            tol).require_converged("transformed-function integral")
        return lhs, rhs

    if not spec.alpha < spec.gamma:
        raise TransformError(
            "alpha must be below gamma for an integrable transform family")
    scale = math.gamma(spec.gamma - spec.alpha)

    if spec.inverse:
        rhs = k_expected / scale
        if oscillatory is not None:
            pos = integrate_oscillatory(f, oscillatory, tol)
            neg = integrate_oscillatory(lambda u: f(-u), oscillatory, tol)
            lhs = pos.value + neg.value
        else:
            lhs = integrate_real_line(f, tol).require_converged(
                "inverse-image integral")
        return lhs, rhs

    rhs = k_expected * scale
    lhs = integrate_real_line(
        lambda x: transform_pointwise(f, spec, x, tol / 10),
        tol).require_converged("transformed-function integral")
    return lhs, rhs


# ---------------------------------------------------------------------------
# Mellin transform
# ---------------------------------------------------------------------------


def mellin_numeric(f: Callable[[float], float], s: float,
                   strip: tuple[float, float], *,
                   oscillatory: OscillatorySpec | None = None,
                   tol: float = 1e-9) -> float:
    """``int_0^inf x**(s-1) f(x) dx`` within a caller-declared strip.

    The head ``[0, 1]`` is computed in the substituted variable ``v = x**s``
    (which removes the endpoint singularity for s < 1); the tail is either
    partition-extrapolated (oscillatory f) or extended by interval doubling
    until the increments fall below tolerance.
    """
    lo, hi = strip
    if not (lo < s < hi):
        raise TransformError(f"s={s} outside declared convergence strip {strip}")

    head = integrate_finite(lambda v: f(v ** (1.0 / s)) / s, 0.0, 1.0,
                            tol / 2).require_converged("Mellin head")

    if oscillatory is not None:
        def shifted(u):
            x = 1.0 + u
            return (x ** (s - 1.0)) * f(x)
        tail = integrate_oscillatory(shifted, oscillatory, tol / 2)
        return head + tail.require_converged("Mellin oscillatory tail")

    total = head
    a = 1.0
    for _ in range(24):
        b = 2.0 * a
        piece = integrate_finite(lambda x: (x ** (s - 1.0)) * f(x), a, b,
                                 tol / 8).value
        total += piece
        if abs(piece) < tol / 4 and b > 32.0:
            return total
        a = b
    raise QuadratureError("Mellin tail did not fall below tolerance by x ~ 3e7")
