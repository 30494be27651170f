"""Truncated formal power series with complex coefficients.

A :class:`TruncatedSeries` is an immutable list of coefficients for powers
``x**0 .. x**N``. Binary operations truncate to the smaller order rather
than inventing coefficients. This is the value type every transform and
special-function constructor in the package produces and consumes.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, NamedTuple

import numpy as np

DEFAULT_ORDER = 64

# per-coefficient equality: absolute 1e-12 or relative 1e-10, whichever is looser
ABS_TOL = 1e-12
REL_TOL = 1e-10


class SeriesError(Exception):
    pass


class DivergentSeriesError(SeriesError):
    """Evaluation of a zero-radius series outside its optimal truncation."""


class EvalResult(NamedTuple):
    value: complex
    tail: float  # magnitude of the last included term, a truncation diagnostic


class TruncatedSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[complex]):
        arr = np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                         dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise SeriesError("coefficients must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(arr.view(np.float64))):
            raise SeriesError("coefficients must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        self._coeffs = arr

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls(np.zeros(order + 1, dtype=np.complex128))

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = 1.0
        return cls(c)

    @classmethod
    def from_coefficient_fn(cls, fn, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([fn(k) for k in range(order + 1)])

    @classmethod
    def exp(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        c = np.empty(order + 1, dtype=np.complex128)
        term = 1.0
        for k in range(order + 1):
            c[k] = term
            term /= (k + 1)
        return cls(c)

    # -- basic protocol -------------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def __len__(self):
        return self._coeffs.size

    def __getitem__(self, k: int) -> complex:
        return complex(self._coeffs[k])

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self._coeffs[:4])
        more = ", ..." if self.order > 3 else ""
        return f"TruncatedSeries(order={self.order}, [{head}{more}])"

    # -- ring operations (truncate to the smaller order) ----------------------

    def _common(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common(other)
        return TruncatedSeries(self._coeffs[: n + 1] + other._coeffs[: n + 1])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = self._common(other)
        return TruncatedSeries(self._coeffs[: n + 1] - other._coeffs[: n + 1])

    def __neg__(self):
        return TruncatedSeries(-self._coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = self._common(other)
            a = self._coeffs[: n + 1]
            b = other._coeffs[: n + 1]
            return TruncatedSeries(np.convolve(a, b)[: n + 1])
        if isinstance(other, (int, float, complex)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def scale(self, s: complex) -> "TruncatedSeries":
        return TruncatedSeries(self._coeffs * complex(s))

    def differentiate(self) -> "TruncatedSeries":
        if self.order < 1:
            raise SeriesError("cannot differentiate constant-only series")
        k = np.arange(1, self.order + 1)
        return TruncatedSeries(self._coeffs[1:] * k)

    def antidifferentiate(self) -> "TruncatedSeries":
        out = np.empty(self._coeffs.size + 1, dtype=np.complex128)
        out[0] = 0.0
        out[1:] = self._coeffs / np.arange(1, self._coeffs.size + 1)
        return TruncatedSeries(out)

    def compose_linear(self, s: complex) -> "TruncatedSeries":
        """Substitute ``x -> s*x``: coefficient k picks up ``s**k``."""
        powers = np.power(complex(s), np.arange(self._coeffs.size))
        return TruncatedSeries(self._coeffs * powers)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self._coeffs[: order + 1])

    # -- evaluation ------------------------------------------------------------

    def __call__(self, x: complex) -> complex:
        return self.eval(x).value

    def eval(self, x: complex, *, allow_divergent: bool = False) -> EvalResult:
        """Horner evaluation with a tail diagnostic.

        A series flagged divergent (zero radius estimate) refuses plain
        evaluation at nonzero ``x``; with ``allow_divergent`` it instead sums
        up to the smallest term (optimal asymptotic truncation).
        """
        x = complex(x)
        if x != 0 and self.is_divergent:
            if not allow_divergent:
                raise DivergentSeriesError(
                    "series has zero estimated radius of convergence; "
                    "evaluate with allow_divergent=True to sum to the smallest term"
                )
            return self._eval_smallest_term(x)
        acc = 0j
        for c in self._coeffs[::-1]:
            acc = acc * x + c
        # last two terms, so lacunary series (every other coefficient zero)
        # still report a meaningful truncation diagnostic
        ax = abs(x)
        tail = abs(self._coeffs[-1]) * ax ** self.order
        if self.order >= 1:
            tail = max(tail, abs(self._coeffs[-2]) * ax ** (self.order - 1))
        return EvalResult(acc, tail)

    def _eval_smallest_term(self, x: complex) -> EvalResult:
        terms = self._coeffs * np.power(x, np.arange(self._coeffs.size))
        mags = np.abs(terms)
        nz = np.nonzero(mags)[0]
        if nz.size == 0:
            return EvalResult(0j, 0.0)
        cut = nz[int(np.argmin(mags[nz]))]
        value = complex(np.sum(terms[: cut + 1]))
        return EvalResult(value, float(mags[cut]))

    def eval_terms(self, x: complex) -> complex:
        """Plain term-by-term summation (independent of the Horner path)."""
        total = 0j
        xp = 1.0 + 0j
        for c in self._coeffs:
            total += c * xp
            xp *= x
        return total

    # -- convergence diagnostics -------------------------------------------------

    def radius_estimate(self) -> float:
        """Crude radius-of-convergence estimate from tail coefficient ratios.

        Returns 0.0 when the tail growth rate is itself still accelerating
        (factorial-type coefficients); otherwise the reciprocal of the tail's
        geometric growth rate, with ``inf`` for rapidly decaying tails.
        """
        mags = np.abs(self._coeffs)
        nz = np.nonzero(mags)[0]
        if nz.size < 6:
            return math.inf
        # growth rate between consecutive nonzero coefficients, gap-normalized
        rates = []
        for i, j in zip(nz[:-1], nz[1:]):
            rates.append((mags[j] / mags[i]) ** (1.0 / (j - i)))
        tail = rates[len(rates) // 2:]
        mid = tail[: max(1, len(tail) // 2)]
        end = tail[-max(1, len(tail) // 4):]
        mid_rate = float(np.median(mid))
        end_rate = float(np.median(end))
        # factorial-type divergence: a long tail whose growth rate is itself
        # large and still steadily accelerating (noise on short series is not
        # enough evidence to declare a zero radius, and a geometric tail has
        # flat rates, failing the strict-increase count)
        if len(tail) >= 8 and end_rate > 1.5 and end_rate >= 1.02 * mid_rate:
            steps = sum(1 for a, b in zip(tail[:-1], tail[1:]) if b > a)
            if steps >= 0.8 * (len(tail) - 1):
                return 0.0
        if end_rate == 0.0:
            return math.inf
        r = 1.0 / end_rate
        return math.inf if r > 1e12 else r

    @property
    def is_divergent(self) -> bool:
        return self.radius_estimate() == 0.0

    # -- comparison ------------------------------------------------------------

    def isclose(self, other: "TruncatedSeries", *, abs_tol: float = ABS_TOL,
                rel_tol: float = REL_TOL) -> bool:
        """Per-coefficient equality: absolute or relative, whichever is looser."""
        if self.order != other.order:
            return False
        for a, b in zip(self._coeffs, other._coeffs):
            allowed = max(abs_tol, rel_tol * max(abs(a), abs(b)))
            if abs(a - b) > allowed:
                return False
        return True

    def max_difference(self, other: "TruncatedSeries"):
        """(max absolute, max relative) coefficient difference up to the
        common order."""
        n = self._common(other)
        a = self._coeffs[: n + 1]
        b = other._coeffs[: n + 1]
        diff = np.abs(a - b)
        scale = np.maximum(np.abs(a), np.abs(b))
        rel = np.where(scale > 0, diff / np.where(scale > 0, scale, 1.0), 0.0)
        return float(diff.max()), float(rel.max())

    # -- serialization ----------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[float(c.real), float(c.imag)] for c in self._coeffs],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "TruncatedSeries":
        coeffs = [complex(re, im) for re, im in data["coeffs"]]
        s = cls(coeffs)
        if s.order != data["order"]:
            raise SeriesError("order field does not match coefficient count")
        return s

    @classmethod
    def from_json(cls, text: str) -> "TruncatedSeries":
        return cls.from_dict(json.loads(text))
