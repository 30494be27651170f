"""Constructors and evaluators for the named function families.

Every bivariate polynomial family is exposed as a series in ``x`` with the
second variable as a scalar parameter, because that is how all the catalog
identities consume them. Pointwise evaluators use direct term recurrences
with tail control instead of going through a fixed-order series.
"""

from __future__ import annotations

import math

from scipy.special import gammaln, rgamma

from .series import DEFAULT_ORDER, TruncatedSeries


class EvaluationError(Exception):
    pass


def _gamma(x: float) -> float:
    """Gamma for positive arguments, via log space once direct overflows."""
    if x > 170.0:
        return math.exp(gammaln(x))
    return math.gamma(x)


def _gamma_ratio(num: float, *dens: float) -> float:
    """Gamma(num) / prod(Gamma(d)), overflow-safe."""
    if num <= 170.0 and all(d <= 170.0 for d in dens):
        out = math.gamma(num)
        for d in dens:
            out /= math.gamma(d)
        return out
    return math.exp(gammaln(num) - sum(gammaln(d) for d in dens))


# ---------------------------------------------------------------------------
# Two-variable Hermite polynomials
# ---------------------------------------------------------------------------


def hermite2(n: int, y: float) -> TruncatedSeries:
    """Degree-n heat polynomial: sum_r n! y^r x^(n-2r) / ((n-2r)! r!)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = [0j] * (n + 1)
    for r in range(n // 2 + 1):
        k = n - 2 * r
        coeffs[k] = (math.factorial(n) // (math.factorial(k) * math.factorial(r))) \
            * (y ** r)
    return TruncatedSeries(coeffs)


def hermite2_value(n: int, x: float, y: float) -> float:
    total = 0.0
    for r in range(n // 2 + 1):
        k = n - 2 * r
        c = math.factorial(n) // (math.factorial(k) * math.factorial(r))
        total += c * (x ** k) * (y ** r)
    return total


def hermite2_derivative_rules(n: int, s: int, y: float,
                              wrt: str = "x") -> TruncatedSeries:
    """s-th derivative of the degree-n heat polynomial, as a series in x.

    Differentiating in x lowers the degree by one per step and scales by
    n!/(n-s)!; differentiating in y lowers it by two and scales by
    n!/(n-2s)!. Exhausted degrees give the zero series.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    if wrt == "x":
        if s > n:
            return TruncatedSeries.zero(0)
        factor = math.factorial(n) // math.factorial(n - s)
        return hermite2(n - s, y).scale(factor)
    if wrt == "y":
        if 2 * s > n:
            return TruncatedSeries.zero(0)
        factor = math.factorial(n) // math.factorial(n - 2 * s)
        return hermite2(n - 2 * s, y).scale(factor)
    raise ValueError("wrt must be 'x' or 'y'")


def gaussian_hermite_derivative(s: int, a: float, b: float, x: float) -> float:
    """s-th derivative of ``exp(a x^2 + b x)``: ``H_s(2ax + b, a)`` times it."""
    if s < 0:
        raise ValueError("s must be non-negative")
    return hermite2_value(s, 2 * a * x + b, a) * math.exp(a * x * x + b * x)


# ---------------------------------------------------------------------------
# Two-variable Laguerre polynomials and their Borel image
# ---------------------------------------------------------------------------


def laguerre2(n: int, y: float) -> TruncatedSeries:
    """sum_r binom(n,r) (-1)^r y^(n-r) x^r / r!."""
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = [0j] * (n + 1)
    for r in range(n + 1):
        coeffs[r] = math.comb(n, r) * ((-1) ** r) * (y ** (n - r)) / math.factorial(r)
    return TruncatedSeries(coeffs)


def laguerre2_value(n: int, x: float, y: float) -> float:
    total = 0.0
    for r in range(n + 1):
        total += math.comb(n, r) * ((-1) ** r) * (y ** (n - r)) \
            * (x ** r) / math.factorial(r)
    return total


def bessel_truncated(n: int, y: float) -> TruncatedSeries:
    """n! sum_r (-x)^r y^(n-r) / (r!)^2, degree-n polynomial in x."""
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = [0j] * (n + 1)
    for r in range(n + 1):
        coeffs[r] = math.factorial(n) * ((-1) ** r) * (y ** (n - r)) \
            / (math.factorial(r) ** 2)
    return TruncatedSeries(coeffs)


# ---------------------------------------------------------------------------
# Tricomi / Bessel family
# ---------------------------------------------------------------------------


def tricomi(s: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Entire series sum_r (-x)^r / (r! (r+s)!)."""
    if s < 0:
        raise ValueError("s must be non-negative")
    coeffs = [0j] * (order + 1)
    for r in range(order + 1):
        coeffs[r] = ((-1) ** r) / (math.factorial(r) * math.factorial(r + s))
    return TruncatedSeries(coeffs)


def tricomi_value(s: int, x: float, *, tol: float = 1e-15,
                  max_terms: int = 400) -> float:
    """Pointwise Tricomi evaluation by the defining series with tail control."""
    term = 1.0 / math.factorial(s)
    total = term
    peak = abs(term)
    for r in range(1, max_terms):
        term *= -x / (r * (r + s))
        total += term
        peak = max(peak, abs(term))
        if abs(term) <= tol * max(1.0, abs(total)) and r > abs(x) ** 0.5:
            break
    else:
        raise EvaluationError(
            f"Tricomi series did not converge at x={x}; increase max_terms")
    if peak > 1e13 * max(abs(total), 1e-300):
        raise EvaluationError(
            f"catastrophic cancellation evaluating Tricomi series at x={x}")
    return total


def bessel_j_value(n: int, x: float, *, order: int = 200) -> float:
    """J-type Bessel via the Tricomi reduction ``(x/2)^n C_n(x^2/4)``.

    Series route: accurate for moderate arguments (|x| up to roughly 25 in
    double precision); raises on insufficient order or precision loss.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    term = (x / 2.0) ** n / math.factorial(n)
    total = term
    peak = abs(term)
    q = x * x / 4.0
    converged = False
    for r in range(1, order + 1):
        term *= -q / (r * (r + n))
        total += term
        peak = max(peak, abs(term))
        if abs(term) <= 1e-16 * max(1.0, abs(total)) and r > abs(x) / 2:
            converged = True
            break
    if not converged:
        raise EvaluationError(
            f"Bessel series tail not converged at x={x} with order {order}; "
            "increase order")
    if peak > 1e13 * max(abs(total), 1e-300):
        raise EvaluationError(
            f"catastrophic cancellation in Bessel series at x={x}; "
            "argument too large for the series route")
    return total


def bessel_r_value(n: int, x: float, *, order: int = 200) -> float:
    """``(x/2)^-n J_n(x)`` with the limit ``1/n!`` at the origin."""
    if x == 0.0:
        return 1.0 / math.factorial(n)
    return bessel_j_value(n, x, order=order) / (x / 2.0) ** n


def bessel_i0_value(x: float, *, order: int = 200) -> float:
    """Modified Bessel I0 by its (all-positive) series."""
    term = 1.0
    total = term
    q = x * x / 4.0
    for r in range(1, order + 1):
        term *= q / (r * r)
        total += term
        if term <= 1e-17 * total:
            return total
    raise EvaluationError(f"I0 series not converged at x={x}; increase order")


def bessel_family(kind: str, n: int, x: float, *, order: int = 200) -> float:
    """Pointwise evaluator for the J / R / I0 kinds."""
    if kind == "J":
        return bessel_j_value(n, x, order=order)
    if kind == "R":
        return bessel_r_value(n, x, order=order)
    if kind == "I0":
        return bessel_i0_value(x, order=order)
    raise ValueError(f"unknown Bessel kind {kind!r}")


def j0_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """J0 as a series in x: (-1)^r x^(2r) / (4^r (r!)^2)."""
    coeffs = [0j] * (order + 1)
    for r in range(order // 2 + 1):
        coeffs[2 * r] = ((-1) ** r) / (4 ** r * math.factorial(r) ** 2)
    return TruncatedSeries(coeffs)


# ---------------------------------------------------------------------------
# Mittag-Leffler / Wright / stretched-exponential series
# ---------------------------------------------------------------------------


def mittag_leffler_1_beta(beta: float, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Coefficients ``1/Gamma(k + beta + 1)``."""
    if beta <= 0:
        raise ValueError("beta must be positive")
    return TruncatedSeries([rgamma(k + beta + 1.0) for k in range(order + 1)])


def bessel_wright(gamma: float, alpha: float,
                  order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Coefficients ``(-1)^r / (r! Gamma(alpha r + gamma + 1))``."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if gamma <= -1:
        raise ValueError("gamma must exceed -1")
    coeffs = []
    for r in range(order + 1):
        coeffs.append(((-1) ** r) * rgamma(alpha * r + gamma + 1.0)
                      / math.factorial(r))
    return TruncatedSeries(coeffs)


def e_alpha_gamma(alpha: float, gamma: float,
                  order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Coefficients ``Gamma(gamma + alpha r + 1) / (r! Gamma(gamma + r + 1))``.

    The underlying function converges only for alpha <= 2; larger alpha is
    allowed (the truncation is always finite) but the series is then purely
    formal.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    coeffs = []
    for r in range(order + 1):
        coeffs.append(_gamma_ratio(gamma + alpha * r + 1.0,
                                   r + 1.0, gamma + r + 1.0))
    return TruncatedSeries(coeffs)


def hyp_2f2(a1: float, a2: float, b1: float, b2: float,
            order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Coefficients ``(a1)_k (a2)_k / ((b1)_k (b2)_k k!)``."""
    for b in (b1, b2):
        if b <= 0 and float(b).is_integer():
            raise ValueError(f"denominator parameter {b} hits a Pochhammer pole")
    coeffs = [0j] * (order + 1)
    c = 1.0
    for k in range(order + 1):
        coeffs[k] = c
        den = (b1 + k) * (b2 + k) * (k + 1)
        if den == 0:
            raise ValueError(f"Pochhammer pole in denominator at k={k + 1}")
        c *= (a1 + k) * (a2 + k) / den
    return TruncatedSeries(coeffs)


# ---------------------------------------------------------------------------
# Gaussian-reduction trigonometric-like family
# ---------------------------------------------------------------------------


def epsilon_half(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Coefficients ``(-1)^r / Gamma(r/2 + 1)``."""
    return TruncatedSeries([((-1) ** r) * rgamma(r / 2.0 + 1.0)
                            for r in range(order + 1)])


def gaussian_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``exp(-x^2)`` as a series."""
    coeffs = [0j] * (order + 1)
    for r in range(order // 2 + 1):
        coeffs[2 * r] = ((-1) ** r) / math.factorial(r)
    return TruncatedSeries(coeffs)


def erfi_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Imaginary error function: 2/sqrt(pi) sum_r x^(2r+1)/(r!(2r+1))."""
    coeffs = [0j] * (order + 1)
    for r in range((order - 1) // 2 + 1):
        coeffs[2 * r + 1] = 2.0 / math.sqrt(math.pi) \
            / (math.factorial(r) * (2 * r + 1))
    return TruncatedSeries(coeffs)


def cs_sn_family(kind: str, p: int, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Even-derivative family of the Gaussian and its complement.

    ``Cs``: even series ``4^p (-1)^r (2x)^(2r) Gamma(r+p+1/2)/(sqrt(pi)(2r)!)``;
    ``Sn``: odd series ``4^p (-1)^r (2x)^(2r+1) (r+p)!/(sqrt(pi)(2r+1)!)``.
    p = 0 reduces to ``exp(-x^2)`` and ``exp(-x^2)*erfi(x)``.
    """
    if p < 0:
        raise ValueError("p must be non-negative")
    if kind not in ("Cs", "Sn"):
        raise ValueError("kind must be 'Cs' or 'Sn'")
    coeffs = [0j] * (order + 1)
    pref = 4 ** p / math.sqrt(math.pi)
    if kind == "Cs":
        for r in range(order // 2 + 1):
            coeffs[2 * r] = pref * ((-1) ** r) * (4 ** r) \
                * _gamma(r + p + 0.5) / math.factorial(2 * r)
    else:
        for r in range((order - 1) // 2 + 1):
            coeffs[2 * r + 1] = pref * ((-1) ** r) * (2 ** (2 * r + 1)) \
                * math.factorial(r + p) / math.factorial(2 * r + 1)
    return TruncatedSeries(coeffs)
