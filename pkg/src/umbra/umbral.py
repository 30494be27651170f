"""Formal shift-symbol expressions and their coefficient functionals.

An :class:`UmbralExpression` is a finite sum of terms ``coeff * c**mu * x**k``
in a formal symbol ``c`` obeying ``c**a * c**b == c**(a+b)`` with exact
rational exponents. Evaluating an expression through an
:class:`UmbralFunctional` replaces each power ``c**mu`` by a numeric weight
``w(mu)``, which collapses the expression to an ordinary
:class:`~umbra.series.TruncatedSeries` in ``x``.

Two functionals ship with the package:

* ``laguerre``: ``mu -> 1/Gamma(1 + mu)`` (zero at the reciprocal-gamma
  poles), the weight that sends a Gaussian in ``c*x**2`` to a Bessel-type
  series.
* ``hermite:y=<v>``: defined on non-negative integers, zero for odd ``k``
  and ``v**r * (2r)!/r!`` for ``k = 2r``, the weight that turns powers of
  ``(x + c)`` into two-variable Hermite polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from scipy.special import rgamma

from .series import TruncatedSeries

RationalLike = Union[int, Fraction]


class UmbralError(Exception):
    pass


class FunctionalDomainError(UmbralError):
    """A functional was asked for a weight outside its declared domain."""


def _as_fraction(value: RationalLike) -> Fraction:
    frac = Fraction(value)
    if frac < 0:
        raise UmbralError(f"c-exponent must be non-negative, got {frac}")
    return frac


@dataclass(frozen=True)
class UmbralTerm:
    coeff: complex
    c_exp: Fraction
    x_exp: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", complex(self.coeff))
        object.__setattr__(self, "c_exp", _as_fraction(self.c_exp))
        if not isinstance(self.x_exp, int) or self.x_exp < 0:
            raise UmbralError("x-exponent must be a non-negative integer")


class UmbralFunctional:
    """Named weight map from rational exponents to real values."""

    def __init__(self, name: str, weight: Callable[[Fraction], float]):
        self.name = name
        self._weight = weight

    def weight(self, mu: RationalLike) -> float:
        return self._weight(_as_fraction(mu))

    def __repr__(self):
        return f"UmbralFunctional({self.name!r})"


def _laguerre_weight(mu: Fraction) -> float:
    if mu.denominator == 1:
        return 1.0 / math.factorial(int(mu))  # exact at the integers
    return float(rgamma(1.0 + float(mu)))


def laguerre_functional() -> UmbralFunctional:
    """``mu -> 1/Gamma(1 + mu)``; defined for every rational ``mu >= 0``."""
    return UmbralFunctional("laguerre", _laguerre_weight)


def hermite_functional(y: float) -> UmbralFunctional:
    """Integer-only weight: 0 for odd k, ``y**r * (2r)!/r!`` for k = 2r."""

    def weight(mu: Fraction) -> float:
        if mu.denominator != 1:
            raise FunctionalDomainError(
                f"hermite functional is defined on integers only, got exponent {mu}"
            )
        k = int(mu)
        if k % 2 == 1:
            return 0.0
        r = k // 2
        if r <= 100:  # exact integer ratio, then a single float rounding
            return (y ** r) * float(math.factorial(2 * r) // math.factorial(r))
        log_mag = r * math.log(abs(y)) if y != 0 else -math.inf
        log_mag += math.lgamma(2 * r + 1) - math.lgamma(r + 1)
        if log_mag > 700.0:
            raise FunctionalDomainError(
                f"hermite weight at exponent {k} exceeds double range")
        sign = -1.0 if (y < 0 and r % 2 == 1) else 1.0
        return sign * math.exp(log_mag)

    return UmbralFunctional(f"hermite:y={y!r}", weight)


def functional_by_name(name: str) -> UmbralFunctional:
    """Resolve ``"laguerre"`` or ``"hermite:y=<real>"``."""
    if name == "laguerre":
        return laguerre_functional()
    if name.startswith("hermite:y="):
        return hermite_functional(float(name[len("hermite:y="):]))
    raise UmbralError(f"unknown functional {name!r}")


class UmbralExpression:
    """Normalized finite sum of ``coeff * c**mu * x**k`` terms.

    Terms sharing the same ``(mu, k)`` pair are merged; terms with ``x``
    degree above ``max_x_exp`` are dropped at construction, which keeps every
    expression finite and evaluation total.
    """

    __slots__ = ("_terms", "max_x_exp")

    def __init__(self, terms, max_x_exp: int):
        if max_x_exp < 0:
            raise UmbralError("max_x_exp must be non-negative")
        merged: dict[tuple[Fraction, int], complex] = {}
        for term in terms:
            if not isinstance(term, UmbralTerm):
                term = UmbralTerm(*term)
            if term.x_exp > max_x_exp:
                continue
            key = (term.c_exp, term.x_exp)
            merged[key] = merged.get(key, 0j) + term.coeff
        self._terms = {k: v for k, v in sorted(merged.items()) if v != 0}
        self.max_x_exp = max_x_exp

    @property
    def terms(self) -> tuple[UmbralTerm, ...]:
        return tuple(UmbralTerm(v, k[0], k[1]) for k, v in self._terms.items())

    def __len__(self):
        return len(self._terms)

    def __mul__(self, other):
        if not isinstance(other, UmbralExpression):
            return NotImplemented
        cutoff = min(self.max_x_exp, other.max_x_exp)
        prods = []
        for (mu_a, k_a), ca in self._terms.items():
            for (mu_b, k_b), cb in other._terms.items():
                if k_a + k_b <= cutoff:
                    prods.append(UmbralTerm(ca * cb, mu_a + mu_b, k_a + k_b))
        return UmbralExpression(prods, cutoff)

    def scale(self, s: complex) -> "UmbralExpression":
        return UmbralExpression(
            [UmbralTerm(c * s, mu, k) for (mu, k), c in self._terms.items()],
            self.max_x_exp,
        )

    def evaluate(self, functional: UmbralFunctional,
                 order: int) -> TruncatedSeries:
        """Collapse ``c`` powers to weights, producing a series in ``x``."""
        if order < 0:
            raise UmbralError("order must be non-negative")
        coeffs = [0j] * (order + 1)
        for (mu, k), c in self._terms.items():
            if k > order:
                continue
            try:
                w = functional.weight(mu)
            except FunctionalDomainError as exc:
                raise FunctionalDomainError(
                    f"term with c-exponent {mu} and x-exponent {k}: {exc}"
                ) from exc
            coeffs[k] += c * w
        return TruncatedSeries(coeffs)

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "terms": [
                {
                    "coeff": [c.real, c.imag],
                    "c": [mu.numerator, mu.denominator],
                    "x": k,
                }
                for (mu, k), c in self._terms.items()
            ],
            "max_x_exp": self.max_x_exp,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "UmbralExpression":
        terms = [
            UmbralTerm(
                complex(t["coeff"][0], t["coeff"][1]),
                Fraction(t["c"][0], t["c"][1]),
                int(t["x"]),
            )
            for t in data["terms"]
        ]
        max_x = data.get("max_x_exp")
        if max_x is None:
            max_x = max((t.x_exp for t in terms), default=0)
        return cls(terms, max_x)


# ---------------------------------------------------------------------------
# Expression builders
# ---------------------------------------------------------------------------


def umbral_exp(coeff: complex, c_power: RationalLike, x_power: int,
               order: int) -> UmbralExpression:
    """``exp(coeff * c**c_power * x**x_power)`` expanded to x-degree ``order``.

    ``x_power`` must be positive so the expansion is finite.
    """
    if x_power < 1:
        raise UmbralError("x_power must be >= 1 for a finite expansion")
    c_power = _as_fraction(c_power)
    terms = []
    r = 0
    f = 1.0
    while r * x_power <= order:
        c = complex(coeff) ** r / f
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            break  # past double-precision range; the terms are 0 or junk
        terms.append(UmbralTerm(c, c_power * r, r * x_power))
        r += 1
        f *= r
    return UmbralExpression(terms, order)


def umbral_exp_gaussian(scale: complex, order: int) -> UmbralExpression:
    """``exp(-scale * c * x**2)``: terms ``(-scale)**r/r! * c**r * x**(2r)``."""
    return umbral_exp(-complex(scale), 1, 2, order)


def umbral_binomial(n: int) -> UmbralExpression:
    """``(x + c)**n`` expanded exactly."""
    if n < 0:
        raise UmbralError("n must be non-negative")
    terms = [UmbralTerm(float(math.comb(n, k)), Fraction(k), n - k)
             for k in range(n + 1)]
    return UmbralExpression(terms, n)


def umbral_geometric(c_power: RationalLike, sign: int,
                     order: int) -> UmbralExpression:
    """Geometric expansion of ``1/(1 + sign * c**c_power * x)``."""
    if sign not in (1, -1):
        raise UmbralError("sign must be +1 or -1")
    c_power = _as_fraction(c_power)
    terms = [UmbralTerm(float((-sign) ** r), c_power * r, r)
             for r in range(order + 1)]
    return UmbralExpression(terms, order)
