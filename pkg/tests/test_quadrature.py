import math
from fractions import Fraction

import numpy as np
import pytest

from conformable_harmonics.harmonics import harmonic_evaluate, make_harmonic
from conformable_harmonics.quadrature import (
    ConformableMeasure,
    conformable_integrate,
    direct_weighted_integrate,
    gauss_legendre,
    gram_matrix,
    legendre_orthogonality,
    paper_orthogonality_diagonal,
    solid_angle_integrate,
)

ALPHAS = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)]
PI = math.pi


class TestRule:
    @pytest.mark.parametrize("order", [2, 5, 16, 64])
    def test_monomial_exactness(self, order):
        rule = gauss_legendre(order)
        assert np.all(rule.weights > 0) and len(rule.nodes) == len(rule.weights) == order
        for k in range(2 * order):
            exact = 0.0 if k % 2 else 2.0 / (k + 1)
            assert np.sum(rule.weights * rule.nodes**k) == pytest.approx(exact, abs=1e-12)

    def test_order_too_small(self):
        with pytest.raises(ValueError):
            gauss_legendre(1)
        with pytest.raises(ValueError):
            conformable_integrate(np.cos, ConformableMeasure(1, 0, 1), order=1)


class TestMeasure:
    def test_invalid(self):
        with pytest.raises(ValueError):
            ConformableMeasure(Fraction(1, 2), 2.0, 1.0)
        with pytest.raises(ValueError):
            ConformableMeasure(Fraction(3, 2), 0.0, 1.0)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_normalisation(self, alpha):
        a = float(alpha)
        for T in (1.0, PI ** (1 / a), 2 * PI):
            M = ConformableMeasure(alpha, 0.0, T)
            got = conformable_integrate(lambda t: np.ones_like(t), M)
            assert got == pytest.approx(T**a / a, rel=1e-12)
            assert M.total() == pytest.approx(T**a / a, rel=1e-14)


class TestConformableIntegrate:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_phi_factor(self, alpha):
        a = float(alpha)
        got = conformable_integrate(lambda t: 1.0, ConformableMeasure(alpha, 0, 2 * PI))
        assert got == pytest.approx((2 * PI) ** a / a, rel=1e-13)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_sine_weight(self, alpha):
        a = float(alpha)
        M = ConformableMeasure(alpha, 0, PI ** (1 / a))
        f = lambda t: np.sin(t**a)
        got = conformable_integrate(f, M)
        assert got == pytest.approx(2 / a, rel=1e-12)
        assert direct_weighted_integrate(f, M) == pytest.approx(got, rel=1e-10)

    def test_classical(self):
        assert conformable_integrate(lambda t: 1.0, ConformableMeasure(1, 0, 1)) == pytest.approx(1.0)

    @pytest.mark.parametrize("alpha", ALPHAS)
    @pytest.mark.parametrize("f", [np.cos, lambda t: np.exp(-t), lambda t: 1 / (1 + t * t), lambda t: t**3 - t])
    @pytest.mark.parametrize("interval", [(0.0, 1.0), (0.0, 4.0), (0.5, 3.0)])
    def test_substitution_consistency(self, alpha, f, interval):
        M = ConformableMeasure(alpha, *interval)
        got = conformable_integrate(f, M)
        ref = direct_weighted_integrate(f, M)
        assert abs(got - ref) <= 1e-8 * max(1.0, abs(ref))

    def test_complex_integrand(self):
        M = ConformableMeasure(Fraction(1, 2), 0, 1)
        got = conformable_integrate(lambda t: np.exp(1j * t**0.5), M)
        # (1/a) int_0^1 e^{iw} dw with a = 1/2
        assert got == pytest.approx(2 * (np.exp(1j) - 1) / 1j, rel=1e-12)


class TestSolidAngle:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_unit(self, alpha):
        a = float(alpha)
        got = solid_angle_integrate(lambda t, p: np.ones_like(t * p), alpha)
        assert got == pytest.approx(2 * (2 * PI) ** a / (a * a), rel=1e-12)
        Y00 = make_harmonic(0, 0, alpha)
        assert got * abs(harmonic_evaluate(Y00, (1.0, 1.0))) ** 2 == pytest.approx(1.0)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_y00_normalised_and_orthogonal_to_y10(self, alpha):
        Y00, Y10 = make_harmonic(0, 0, alpha), make_harmonic(1, 0, alpha)
        norm = solid_angle_integrate(lambda t, p: np.abs(harmonic_evaluate(Y00, (t, p))) ** 2, alpha)
        cross = solid_angle_integrate(
            lambda t, p: harmonic_evaluate(Y10, (t, p)) * np.conj(harmonic_evaluate(Y00, (t, p))), alpha)
        assert norm == pytest.approx(1.0, abs=1e-12)
        assert abs(cross) <= 1e-10

    def test_against_scipy_dblquad(self):
        # independent route in the original (theta, phi) variables
        from scipy import integrate

        alpha = Fraction(1, 2)
        a = 0.5
        g = lambda t, p: np.cos(t**a) ** 2 * (1 + np.sin(p**a))
        ref, _ = integrate.dblquad(
            lambda t, p: g(t, p) * np.sin(t**a) * t ** (a - 1) * p ** (a - 1),
            0, 2 * PI, 0, PI ** (1 / a), epsabs=1e-11, epsrel=1e-11)
        got = solid_angle_integrate(g, alpha)
        assert got.real == pytest.approx(ref, rel=1e-7)


class TestOrthogonality:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_diagonal_examples(self, alpha):
        a = float(alpha)
        assert legendre_orthogonality(0, 0, 0, alpha) == pytest.approx(2 * (2 * PI) ** a / a**2, rel=1e-12)
        assert legendre_orthogonality(1, 1, 1, alpha) == pytest.approx(4 * (2 * PI) ** a / 3, rel=1e-12)
        assert abs(legendre_orthogonality(2, 0, 0, alpha)) <= 1e-10

    def test_diagonal_formula(self):
        for alpha in ALPHAS:
            for l in range(5):
                for m in range(-l, l + 1):
                    want = paper_orthogonality_diagonal(l, m, alpha)
                    assert legendre_orthogonality(l, l, m, alpha) == pytest.approx(want, rel=1e-8)

    def test_m_too_large(self):
        with pytest.raises(ValueError):
            legendre_orthogonality(1, 3, 2, 1)


class TestGram:
    def test_single(self):
        g = gram_matrix(0, 0, Fraction(1, 3))
        assert g.matrix.shape == (1, 1)
        assert abs(g.matrix[0, 0] - 1) <= 1e-10

    @pytest.mark.parametrize("m,alpha", [(1, Fraction(1)), (2, Fraction(1, 2)), (-3, Fraction(1, 4))])
    def test_identity(self, m, alpha):
        g = gram_matrix(3, m, alpha)
        assert g.ls == tuple(range(abs(m), 4))
        assert g.deviation <= 1e-8
        assert g.max_off_diagonal <= 1e-8 and g.max_diagonal_deviation <= 1e-8
        assert g.hermitian_defect <= 1e-12
