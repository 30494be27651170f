"""Integration by repeated differentiation.

An antiderivative taken from 0 can be expanded as an infinite
integration-by-parts series driven by the integrand's derivatives:

    int_0^x f = sum_s (-1)^s  x^(s+1)/(s+1)!  f^(s)(x)

and, for a cosine weight, the same expansion with the exact s+1-fold
repeated antiderivative of cos in place of ``x^(s+1)/(s+1)!``. Integrands
are supplied through a :class:`DerivativeProvider` that knows its own
derivative ladder, so the partial sums terminate for polynomials and
contract for entire functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .functions import (
    bessel_j_value,
    gaussian_hermite_derivative,
    hermite2_value,
)
from .series import TruncatedSeries


class NegDerivError(Exception):
    pass


@dataclass(frozen=True)
class DerivativeProvider:
    """s-th derivative evaluator; ``max_s=None`` means unbounded."""

    eval_deriv: Callable[[int, float], float]
    max_s: int | None = None

    def __call__(self, s: int, x: float) -> float:
        if s < 0:
            raise NegDerivError("derivative order must be non-negative")
        if self.max_s is not None and s > self.max_s:
            raise NegDerivError(f"provider bounded at derivative order {self.max_s}")
        return self.eval_deriv(s, x)


# -- providers ----------------------------------------------------------------


def provider_constant(value: float = 1.0) -> DerivativeProvider:
    return DerivativeProvider(lambda s, x: value if s == 0 else 0.0)


def provider_polynomial(series: TruncatedSeries) -> DerivativeProvider:
    """Exact derivative ladder of a polynomial given by its coefficients."""
    chain = [series]
    while chain[-1].order >= 1:
        chain.append(chain[-1].differentiate())

    def deriv(s, x):
        if s >= len(chain):
            return 0.0
        return chain[s](x).real

    return DerivativeProvider(deriv)


def provider_gaussian(a: float, b: float) -> DerivativeProvider:
    """Derivatives of ``exp(a x^2 + b x)`` via the closed Hermite form."""
    return DerivativeProvider(lambda s, x: gaussian_hermite_derivative(s, a, b, x))


def provider_hermite(n: int, y: float) -> DerivativeProvider:
    """x-derivatives of the degree-n heat polynomial (vanish past s = n)."""

    def deriv(s, x):
        if s > n:
            return 0.0
        factor = math.factorial(n) // math.factorial(n - s)
        return factor * hermite2_value(n - s, x, y)

    return DerivativeProvider(deriv)


def bessel_nth_derivative(n: int, x: float) -> float:
    """n-th derivative of the zero-order Bessel function.

    Closed form: ``(-1)^n n! sum_r (-2x)^(-r) J_{n-r}(x) / (r! (n-2r)!)``,
    singular at the origin once inverse powers of x appear.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= 1:
        return bessel_j_value(0, x) if n == 0 else -bessel_j_value(1, x)
    if x == 0.0:
        raise NegDerivError("derivative formula singular at the origin for n >= 2")
    total = 0.0
    for r in range(n // 2 + 1):
        total += ((-2.0 * x) ** (-r)) / (math.factorial(r) * math.factorial(n - 2 * r)) \
            * bessel_j_value(n - r, x)
    return ((-1) ** n) * math.factorial(n) * total


def provider_j0() -> DerivativeProvider:
    return DerivativeProvider(lambda s, x: bessel_nth_derivative(s, x))


# -- the expansions ------------------------------------------------------------


def negderiv_integral(f: DerivativeProvider, x: float, terms: int):
    """Partial sums of the integration-by-parts series for ``int_0^x f``.

    Returns ``(value, partial_sums)``; the history exposes convergence so
    callers can judge truncation quality themselves.
    """
    if terms < 1:
        raise NegDerivError("need at least one term")
    partial = []
    total = 0.0
    power = x  # x^(s+1) / (s+1)!
    for s in range(terms):
        total += ((-1) ** s) * power * f(s, x)
        partial.append(total)
        power *= x / (s + 2)
    return total, partial


def _cos_repeated_antiderivative(m: int, x: float) -> float:
    """m-fold antiderivative of cos taken from 0 each time.

    Equals ``cos(x - m pi/2)`` minus its Maclaurin polynomial of degree m-1;
    computed instead as the Taylor tail ``sum_i (-1)^i x^(m+2i)/(m+2i)!``,
    which is O(x^m/m!) without cancellation (the closed form would lose all
    relative accuracy once m! dwarfs x^m).
    """
    if m > 170:  # x^m/m! underflows for every argument of interest
        return 0.0
    term = x ** m / math.factorial(m)
    total = 0.0
    i = 0
    while True:
        total += ((-1) ** i) * term
        nxt = term * x * x / ((m + 2 * i + 1) * (m + 2 * i + 2))
        if nxt <= 1e-18 * max(abs(total), term):
            break
        term = nxt
        i += 1
        if i > 400:  # unreachable for finite x; guards infinite loops
            break
    return total


def negderiv_cos_integral(f: DerivativeProvider, x: float, terms: int) -> float:
    """Integration-by-parts series for ``int_0^x f(t) cos(t) dt``.

    Exact for polynomial integrands once the derivative ladder is exhausted.
    """
    if terms < 1:
        raise NegDerivError("need at least one term")
    total = 0.0
    for s in range(terms):
        total += ((-1) ** s) * _cos_repeated_antiderivative(s + 1, x) * f(s, x)
    return total


def hermite_integral_series(which: str, n: int, x: float, y: float) -> float:
    """Finite integration-by-parts sums for heat-polynomial integrands.

    ``which`` picks the integration variable and weight:
    ``"x"``: int_0^x H_n(t, y) dt;   ``"y"``: int_0^y H_n(x, t) dt;
    ``"x-cos"`` / ``"y-cos"``: same with a cos weight. All four are finite
    sums because the derivative ladder terminates.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if which in ("x", "x-cos"):
        upper, var = n, x
        def deriv_at(s):
            return (math.factorial(n) // math.factorial(n - s)) \
                * hermite2_value(n - s, x, y)
    elif which in ("y", "y-cos"):
        upper, var = n // 2, y
        def deriv_at(s):
            return (math.factorial(n) // math.factorial(n - 2 * s)) \
                * hermite2_value(n - 2 * s, x, y)
    else:
        raise ValueError("which must be one of 'x', 'y', 'x-cos', 'y-cos'")

    total = 0.0
    if which.endswith("-cos"):
        for s in range(upper + 1):
            total += ((-1) ** s) * _cos_repeated_antiderivative(s + 1, var) \
                * deriv_at(s)
    else:
        power = var
        for s in range(upper + 1):
            total += ((-1) ** s) * power * deriv_at(s)
            power *= var / (s + 2)
    return total


def gaussian_integral_series(a: float, b: float, x: float, terms: int,
                             *, tol: float = 1e-9) -> float:
    """``int_0^x exp(a t^2 + b t) dt`` as a Hermite-weighted series.

    ``exp(ax^2+bx) * sum_s x^(s+1)/(s+1)! H_s(-(2ax+b), a)``; the sign
    alternation of the parts integration lives in the Hermite argument.
    Raises when the final increments are not Cauchy within ``tol``.
    """
    if terms < 1:
        raise NegDerivError("need at least one term")
    u = -(2.0 * a * x + b)
    total = 0.0
    power = x
    last_increment = math.inf
    for s in range(terms):
        inc = power * hermite2_value(s, u, a)
        total += inc
        last_increment = abs(inc)
        power *= x / (s + 2)
    value = math.exp(a * x * x + b * x) * total
    if last_increment > max(tol, tol * abs(total)):
        raise NegDerivError(
            f"partial sums not Cauchy: final increment {last_increment:.2e} "
            f"after {terms} terms; add terms or reduce x")
    return value


def bessel_integral_series(x: float, terms: int):
    """``int_0^x J0`` from the Bessel derivative ladder.

    Returns ``(value, partial_sums)``. The s = 0 truncation is ``x J0(x)``.
    """
    if x == 0.0:
        raise NegDerivError("expansion point must be nonzero")
    if terms < 1:
        raise NegDerivError("need at least one term")
    partial = []
    total = 0.0
    power = x
    jcache = [bessel_j_value(k, x) for k in range(terms + 1)]
    for s in range(terms):
        inner = 0.0
        for r in range(s // 2 + 1):
            inner += ((-2.0 * x) ** (-r)) \
                / (math.factorial(r) * math.factorial(s - 2 * r)) * jcache[s - r]
        total += power * math.factorial(s) * inner
        partial.append(total)
        power *= x / (s + 2)
    return total, partial
