import math

import pytest
from scipy.special import j0, jv

from umbra import negderiv as nd
from umbra.functions import hermite2_value
from umbra.quadrature import integrate_finite
from umbra.series import TruncatedSeries


def quad(f, a, b):
    return integrate_finite(f, a, b, 1e-13).require_converged()


class TestByPartsSeries:
    def test_constant_integrand(self):
        value, partial = nd.negderiv_integral(nd.provider_constant(1.0), 2.5, 10)
        assert value == pytest.approx(2.5, abs=1e-15)
        assert partial[0] == pytest.approx(2.5)

    def test_polynomial_exact_at_degree_plus_one(self):
        poly = TruncatedSeries([3.0, -1.0, 0.5, 2.0])  # degree 3
        provider = nd.provider_polynomial(poly)
        x = 1.3
        exact = quad(lambda t: poly(t).real, 0.0, x)
        value_min, _ = nd.negderiv_integral(provider, x, 4)
        assert value_min == pytest.approx(exact, abs=1e-13)
        for extra in (5, 9, 20):
            value, _ = nd.negderiv_integral(provider, x, extra)
            assert value == value_min  # invariant under further terms

    def test_j0_reaches_reference_by_30_terms(self):
        value, partial = nd.negderiv_integral(nd.provider_j0(), 1.0, 30)
        assert value == pytest.approx(0.9197304101, abs=1e-10)
        increments = [abs(b - a) for a, b in zip(partial[:-1], partial[1:])]
        assert increments[-1] < 1e-12  # eventually contracting

    def test_gaussian_partial_sums_contract(self):
        value, partial = nd.negderiv_integral(nd.provider_gaussian(-1.0, 0.0),
                                              1.0, 32)
        assert abs(partial[-1] - partial[-2]) < 1e-12
        assert value == pytest.approx(quad(lambda t: math.exp(-t * t), 0, 1),
                                      abs=1e-10)

    def test_bounded_provider_enforced(self):
        provider = nd.DerivativeProvider(lambda s, x: 1.0, max_s=3)
        with pytest.raises(nd.NegDerivError):
            nd.negderiv_integral(provider, 1.0, 10)


class TestCosineWeight:
    def test_constant_gives_sine(self):
        value = nd.negderiv_cos_integral(nd.provider_constant(1.0), 0.7, 3)
        assert value == pytest.approx(math.sin(0.7), abs=1e-15)

    def test_zero_upper_limit(self):
        assert nd.negderiv_cos_integral(nd.provider_constant(1.0), 0.0, 4) == 0.0

    def test_hermite_vs_quadrature(self):
        value = nd.negderiv_cos_integral(nd.provider_hermite(2, 1.0), 1.0, 3)
        oracle = quad(lambda t: hermite2_value(2, t, 1.0) * math.cos(t), 0, 1)
        assert value == pytest.approx(oracle, abs=1e-12)

    def test_entire_integrand_converges(self):
        value = nd.negderiv_cos_integral(nd.provider_gaussian(-0.5, 0.0),
                                         0.8, 30)
        oracle = quad(lambda t: math.exp(-0.5 * t * t) * math.cos(t), 0, 0.8)
        assert value == pytest.approx(oracle, abs=1e-11)


class TestHermiteIntegralSums:
    def test_plain_n0(self):
        assert nd.hermite_integral_series("x", 0, 1.7, 0.3) == pytest.approx(1.7)

    def test_plain_n2(self):
        # int_0^1 (t^2 + 2) dt = 7/3
        assert nd.hermite_integral_series("x", 2, 1.0, 1.0) == \
            pytest.approx(7.0 / 3.0, abs=1e-14)

    def test_second_slot(self):
        # int_0^(1/2) (1 + 2 eta) deta = 3/4
        assert nd.hermite_integral_series("y", 2, 1.0, 0.5) == \
            pytest.approx(0.75, abs=1e-15)

    def test_all_variants_match_quadrature(self):
        n, x, y = 3, 0.9, 0.7
        cases = {
            "x": quad(lambda t: hermite2_value(n, t, y), 0, x),
            "y": quad(lambda t: hermite2_value(n, x, t), 0, y),
            "x-cos": quad(lambda t: hermite2_value(n, t, y) * math.cos(t), 0, x),
            "y-cos": quad(lambda t: hermite2_value(n, x, t) * math.cos(t), 0, y),
        }
        for which, oracle in cases.items():
            assert nd.hermite_integral_series(which, n, x, y) == \
                pytest.approx(oracle, abs=1e-12), which


class TestGaussianIntegral:
    def test_trivial_flat(self):
        assert nd.gaussian_integral_series(0.0, 0.0, 1.3, 5) == \
            pytest.approx(1.3, abs=1e-15)

    def test_erf_case(self):
        value = nd.gaussian_integral_series(-1.0, 0.0, 1.0, 40)
        assert value == pytest.approx(0.7468241328, abs=1e-9)

    def test_generic_case_vs_quadrature(self):
        value = nd.gaussian_integral_series(0.3, 0.5, 0.8, 40)
        oracle = quad(lambda t: math.exp(0.3 * t * t + 0.5 * t), 0, 0.8)
        assert value == pytest.approx(oracle, abs=1e-9)

    def test_non_cauchy_raises(self):
        with pytest.raises(nd.NegDerivError):
            nd.gaussian_integral_series(1.0, 0.0, 3.0, 6)


class TestBesselDerivatives:
    def test_order_zero_and_one(self):
        assert nd.bessel_nth_derivative(0, 1.3) == pytest.approx(
            float(j0(1.3)), abs=1e-13)
        assert nd.bessel_nth_derivative(1, 1.0) == pytest.approx(
            -0.4400505857, abs=1e-9)

    def test_matches_series_differentiation(self):
        from umbra.functions import j0_series
        for n in range(1, 6):
            stepped = j0_series(80)
            for _ in range(n):
                stepped = stepped.differentiate()
            for x in (0.5, 1.0, 1.5, 2.0):
                assert nd.bessel_nth_derivative(n, x) == pytest.approx(
                    stepped(x).real, abs=1e-9)

    def test_richardson_oracle(self):
        for n in (1, 2, 3):
            h = 5e-3
            def stencil(step, x=1.2):
                if n == 1:
                    return (j0(x + step) - j0(x - step)) / (2 * step)
                if n == 2:
                    return (j0(x + step) - 2 * j0(x) + j0(x - step)) / step ** 2
                return (j0(x + 2 * step) - 2 * j0(x + step)
                        + 2 * j0(x - step) - j0(x - 2 * step)) / (2 * step ** 3)
            oracle = (4 * stencil(h / 2) - stencil(h)) / 3
            assert nd.bessel_nth_derivative(n, 1.2) == pytest.approx(
                oracle, abs=1e-7)

    def test_origin_singularity(self):
        with pytest.raises(nd.NegDerivError):
            nd.bessel_nth_derivative(2, 0.0)


class TestBesselIntegralSeries:
    def test_single_term_truncation(self):
        value, _ = nd.bessel_integral_series(0.9, 1)
        assert value == pytest.approx(0.9 * float(j0(0.9)), rel=1e-12)

    def test_x_one(self):
        value, partial = nd.bessel_integral_series(1.0, 30)
        assert value == pytest.approx(0.9197304101, abs=1e-10)
        assert abs(partial[-1] - partial[-2]) < 1e-12

    def test_x_half_vs_quadrature(self):
        value, _ = nd.bessel_integral_series(0.5, 25)
        oracle = quad(lambda t: float(j0(t)), 0.0, 0.5)
        assert value == pytest.approx(oracle, abs=1e-9)

    def test_zero_expansion_point_rejected(self):
        with pytest.raises(nd.NegDerivError):
            nd.bessel_integral_series(0.0, 5)
