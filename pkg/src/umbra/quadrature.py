"""Numerical integration back end.

Three integrators cover every oracle the rest of the package needs:

* Gauss-Laguerre rules (plain and generalized weight ``t**(g-1) * exp(-t)``)
  for half-line integrals against an exponential kernel.
* A globally adaptive Gauss-Kronrod 7/15 scheme for finite intervals.
* A partition-extrapolation scheme for conditionally convergent oscillatory
  integrals on ``[0, inf)``: integrate between consecutive sign changes and
  accelerate the resulting alternating series by repeated averaging.

All routines are deterministic: interval refinement order and summation
order are fixed, so repeated runs give bitwise-identical results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy.special import roots_genlaguerre


class QuadratureError(Exception):
    """Raised when an integration routine cannot meet its contract."""


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    evaluations: int
    converged: bool

    def require_converged(self, what: str = "integral") -> float:
        if not self.converged:
            raise QuadratureError(
                f"{what} did not converge: estimate {self.value!r}, "
                f"error ~ {self.error_estimate:.3e} after {self.evaluations} evaluations"
            )
        return self.value


@dataclass(frozen=True)
class OscillatorySpec:
    """Hints for the partition-extrapolation integrator.

    ``zero_spacing_hint`` is the asymptotic distance between sign changes of
    the integrand (pi for trig kernels and Bessel J0). With ``refine_zeros``
    the partition points are located by scanning and bisection instead of the
    fixed hint-spaced grid; set it when the sign-change spacing drifts away
    from the hint (e.g. chirped arguments).
    """

    zero_spacing_hint: float = math.pi
    max_partitions: int = 200
    refine_zeros: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.zero_spacing_hint) and self.zero_spacing_hint > 0):
            raise ValueError("zero_spacing_hint must be finite and positive")
        if self.max_partitions < 4:
            raise ValueError("max_partitions must be at least 4")


# ---------------------------------------------------------------------------
# Gauss-Laguerre
# ---------------------------------------------------------------------------


@lru_cache(maxsize=64)
def _cached_laguerre(n: int, gamma: float):
    nodes, weights = roots_genlaguerre(n, gamma - 1.0)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def gauss_laguerre_nodes(n: int, gamma: float = 1.0):
    """Nodes and weights for ``int_0^inf t**(gamma-1) exp(-t) g(t) dt``.

    Exact for polynomials ``g`` of degree up to ``2n - 1``.
    """
    if n < 1:
        raise ValueError("need at least one node")
    if not (math.isfinite(gamma) and gamma > 0):
        raise ValueError("gamma must be positive and finite")
    try:
        return _cached_laguerre(int(n), float(gamma))
    except Exception as exc:  # pragma: no cover - eigensolver failure is exotic
        raise QuadratureError(f"Laguerre rule construction failed: {exc}") from exc


def gauss_laguerre_integrate(g: Callable[[float], float], n: int = 64,
                             gamma: float = 1.0) -> float:
    nodes, weights = gauss_laguerre_nodes(n, gamma)
    total = 0.0
    for t, w in zip(nodes, weights):
        total += w * g(t)
    return total


# ---------------------------------------------------------------------------
# Adaptive Gauss-Kronrod on a finite interval
# ---------------------------------------------------------------------------

# 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK constants).
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def _gk15(f, a: float, b: float):
    """One Gauss-Kronrod 7/15 panel: (estimate, error_estimate, 15)."""
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    fc = f(mid)
    res_g = _WG[3] * fc
    res_k = _WGK[7] * fc
    for j in range(7):
        x = half * _XGK[j]
        f1 = f(mid - x)
        f2 = f(mid + x)
        res_k += _WGK[j] * (f1 + f2)
        if j % 2 == 1:  # Kronrod nodes 1, 3, 5 are the Gauss nodes
            res_g += _WG[j // 2] * (f1 + f2)
    # |K15 - G7| bounds the G7 error and is a conservative proxy for K15's
    err = abs(res_k - res_g) * abs(half)
    return res_k * half, err, 15


def integrate_finite(f: Callable[[float], float], a: float, b: float,
                     tol: float = 1e-10, *, max_intervals: int = 2000,
                     points: Sequence[float] | None = None) -> QuadratureResult:
    """Globally adaptive integral of ``f`` on ``[a, b]``.

    The worst panel (largest error estimate) is bisected until the summed
    error estimate drops below ``tol`` (absolute, relaxed by the magnitude of
    the result). ``points`` inserts interior breakpoints, useful when the
    integrand has known scale changes.
    """
    if not (a <= b):
        raise ValueError("need a <= b")
    if a == b:
        return QuadratureResult(0.0, 0.0, 0, True)

    cuts = [a]
    if points:
        cuts.extend(p for p in sorted(points) if a < p < b)
    cuts.append(b)

    panels = []  # (err, left, right, value)
    evals = 0
    for left, right in zip(cuts[:-1], cuts[1:]):
        val, err, n = _gk15(f, left, right)
        evals += n
        panels.append((err, left, right, val))

    while True:
        total = math.fsum(p[3] for p in panels)
        total_err = math.fsum(p[0] for p in panels)
        goal = max(tol, tol * abs(total))
        if total_err <= goal:
            return QuadratureResult(total, total_err, evals, True)
        if len(panels) >= max_intervals:
            return QuadratureResult(total, total_err, evals, False)
        # split the worst panel; ties broken by position for determinism
        worst = max(range(len(panels)), key=lambda i: (panels[i][0], -panels[i][1]))
        _, left, right, _ = panels[worst]
        mid = 0.5 * (left + right)
        if mid <= left or mid >= right:  # interval at floating-point resolution
            return QuadratureResult(total, total_err, evals, False)
        val1, err1, n1 = _gk15(f, left, mid)
        val2, err2, n2 = _gk15(f, mid, right)
        evals += n1 + n2
        panels[worst] = (err1, left, mid, val1)
        panels.append((err2, mid, right, val2))


# ---------------------------------------------------------------------------
# Whole real line
# ---------------------------------------------------------------------------


def integrate_real_line(f: Callable[[float], float], tol: float = 1e-9) -> QuadratureResult:
    """Integral of an absolutely integrable ``f`` over the real line.

    Each half line is split as ``[0, 1]`` plus ``[1, inf)``; the unbounded
    part is compactified with ``x = 1/u`` so algebraic tails decaying at
    least as fast as ``x**-2`` (and any exponential tail) are captured.
    """

    def tail(sign: float):
        return lambda u: f(sign / u) / (u * u)

    pieces = [
        integrate_finite(f, -1.0, 1.0, tol / 4),
        integrate_finite(tail(1.0), 1e-12, 1.0, tol / 4),
        integrate_finite(tail(-1.0), 1e-12, 1.0, tol / 4),
    ]
    value = math.fsum(p.value for p in pieces)
    err = math.fsum(p.error_estimate for p in pieces)
    evals = sum(p.evaluations for p in pieces)
    return QuadratureResult(value, err, evals, all(p.converged for p in pieces))


# ---------------------------------------------------------------------------
# Oscillatory half-line integrals
# ---------------------------------------------------------------------------


def _euler_accelerate(terms: Sequence[float]):
    """Sum an (eventually) alternating sequence of partial integrals.

    Repeated averaging of the partial-sum sequence; returns (limit, spread)
    where spread is the magnitude of the last averaging correction.
    """
    if not terms:
        return 0.0, math.inf
    row = list(np.cumsum(terms))
    best = row[-1]
    spread = abs(terms[-1])
    while len(row) > 1:
        row = [0.5 * (row[i] + row[i + 1]) for i in range(len(row) - 1)]
        spread = abs(row[-1] - best)
        best = row[-1]
    return best, spread


def _next_sign_change(f, start: float, step: float, limit: float):
    """First abscissa after ``start`` where f changes sign, located by scan
    plus bisection. Returns None if no change found before ``limit``."""
    x0 = start
    f0 = f(x0)
    probe = step / 4.0
    while x0 < limit:
        x1 = min(x0 + probe, limit)
        f1 = f(x1)
        if f0 == 0.0:
            x0, f0 = x1, f1
            continue
        if f1 == 0.0 or (f0 > 0) != (f1 > 0):
            lo, hi = x0, x1
            for _ in range(80):
                mid = 0.5 * (lo + hi)
                fm = f(mid)
                if fm == 0.0:
                    return mid
                if (fm > 0) == (f0 > 0):
                    lo = mid
                else:
                    hi = mid
                if hi - lo < 1e-13 * max(1.0, hi):
                    break
            return 0.5 * (lo + hi)
        x0, f0 = x1, f1
    return None


def integrate_oscillatory(f: Callable[[float], float], spec: OscillatorySpec,
                          tol: float = 1e-6) -> QuadratureResult:
    """``int_0^inf f`` for integrands that eventually alternate in sign.

    Partition the half line, integrate each partition adaptively, and sum
    the partition series by repeated averaging. The default partition is the
    fixed grid ``k * zero_spacing_hint`` (exactly right for trig kernels and
    asymptotically right for Bessel-type ones, including products where a
    slow modulating factor lives in the partition amplitudes); with
    ``refine_zeros`` the partition follows the integrand's actual sign
    changes instead.
    """
    piece_tol = tol / 50.0
    zeros = [0.0]
    pieces: list[float] = []
    evals = 0
    spacing = spec.zero_spacing_hint
    best, spread = 0.0, math.inf
    stable_hits = 0

    while len(pieces) < spec.max_partitions:
        start = zeros[-1]
        if spec.refine_zeros:
            z = _next_sign_change(f, start + spacing / 16.0, spacing,
                                  start + 60.0 * spacing)
            if z is None:
                # integrand stopped alternating: finish with a plain tail panel
                res = integrate_finite(f, start, start + 60.0 * spacing,
                                       piece_tol)
                evals += res.evaluations
                pieces.append(res.value)
                best, spread = _euler_accelerate(pieces)
                return QuadratureResult(best, spread + res.error_estimate,
                                        evals, spread <= tol)
            if len(zeros) >= 2:
                spacing = max(z - zeros[-1], 1e-6 * spec.zero_spacing_hint)
        else:
            z = start + spacing
        res = integrate_finite(f, start, z, piece_tol)
        evals += res.evaluations
        pieces.append(res.value)
        zeros.append(z)
        if len(pieces) >= 8:
            best, spread = _euler_accelerate(pieces)
            # two consecutive small corrections guard against lucky dips
            stable_hits = stable_hits + 1 if spread <= tol / 2 else 0
            if stable_hits >= 2:
                return QuadratureResult(best, spread, evals, True)

    best, spread = _euler_accelerate(pieces)
    return QuadratureResult(best, spread, evals, spread <= tol)
