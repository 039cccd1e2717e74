from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conformable_harmonics.alpha_calculus import (
    AlphaPoly,
    IncompatibleAlphaError,
    as_alpha,
    conformable_derive,
    conformable_derive_n,
    evaluate_at_t,
    evaluate_at_u,
    leibniz_expand,
    limit_derivative,
    poly_add,
    poly_mul,
    poly_pow,
)

HALF = Fraction(1, 2)
ALPHAS = [Fraction(1, 4), HALF, Fraction(3, 4), Fraction(1)]


def P(alpha, *coeffs):
    return AlphaPoly.from_coefficients(alpha, coeffs)


def test_as_alpha_parsing():
    assert as_alpha("3/4") == Fraction(3, 4)
    assert as_alpha("0.1") == Fraction(1, 10)
    assert as_alpha(0.3) == Fraction(3, 10)
    assert as_alpha(1) == 1
    for bad in (0, "-1/2", 1.5):
        with pytest.raises(ValueError):
            as_alpha(bad)


def test_zero_coefficients_are_pruned():
    p = AlphaPoly(HALF, {0: 1, 3: 0, 2: Fraction(0)})
    assert p.terms == {0: 1}
    assert AlphaPoly(HALF).degree == -1


class TestArithmetic:
    def test_add(self):
        assert poly_add(P(HALF, 1, 0, 1), P(HALF, -1)) == P(HALF, 0, 0, 1)
        p = P(HALF, 3, 2)
        assert poly_add(p, AlphaPoly(HALF)) == p
        assert poly_add(P(HALF, -1, 0, 1), P(HALF, 1, 0, 1)) == P(HALF, 0, 0, 2)

    def test_mul(self):
        assert poly_mul(P(HALF, -1, 1), P(HALF, 1, 1)) == P(HALF, -1, 0, 1)
        p = P(HALF, 3, 0, Fraction(1, 7))
        assert poly_mul(p, P(HALF, 1)) == p
        assert poly_mul(P(HALF, -1, 0, 1), P(HALF, -1, 0, 1)) == P(HALF, 1, 0, -2, 0, 1)

    def test_pow(self):
        base = P(HALF, -1, 0, 1)
        assert poly_pow(base, 0) == P(HALF, 1)
        assert poly_pow(base, 1) == base
        assert poly_pow(base, 3) == P(HALF, -1, 0, 3, 0, -3, 0, 1)

    def test_mismatched_alpha(self):
        with pytest.raises(IncompatibleAlphaError):
            poly_add(P(HALF, 1), P(Fraction(1, 3), 1))
        with pytest.raises(IncompatibleAlphaError):
            poly_mul(P(HALF, 1), P(1, 1))
        with pytest.raises(IncompatibleAlphaError):
            leibniz_expand(P(HALF, 1), P(1, 1), 2)


class TestDerivative:
    def test_constant(self):
        assert conformable_derive(P(HALF, 5)).is_zero()

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_against_limit_oracle(self, alpha):
        a = float(alpha)
        cases = [
            (P(alpha, -1, 0, 1), lambda t: t ** (2 * a) - 1),
            (P(alpha, 1, 0, -2, 0, 1), lambda t: t ** (4 * a) - 2 * t ** (2 * a) + 1),
        ]
        for p, f in cases:
            d = conformable_derive(p)
            for t in (0.3, 1.0, 2.5):
                assert limit_derivative(f, t, alpha, 1e-7) == pytest.approx(
                    float(evaluate_at_t(d, t)), abs=1e-5)
        # exact closed forms: 2a u and 4a u^3 - 4a u
        assert conformable_derive(cases[0][0]) == P(alpha, 0, 2 * alpha)
        assert conformable_derive(cases[1][0]) == P(alpha, 0, -4 * alpha, 0, 4 * alpha)

    def test_nth(self):
        p = P(HALF, 1, 2, 3)
        assert conformable_derive_n(p, 0) == p
        u2 = AlphaPoly.monomial(HALF, 2)
        assert conformable_derive_n(u2, 2) == P(HALF, Fraction(1, 2))
        assert conformable_derive_n(u2, 3).is_zero()

    def test_nth_against_iterated_limit(self):
        # D^{2a} u^2 = 2 a^2, with the two limit quotients done in 40-digit arithmetic
        alpha = Fraction(3, 4)
        with mpmath.workdps(40):
            a = mpmath.mpf(3) / 4
            eps = mpmath.mpf("1e-12")
            f = lambda t: t ** (2 * a)
            g = lambda t: limit_derivative(f, t, alpha, eps)
            val = limit_derivative(g, mpmath.mpf("1.3"), alpha, eps)
        assert float(val) == pytest.approx(2 * 0.75**2, abs=1e-9)

    @pytest.mark.parametrize("r,k", [(2, 3), (0, 1), (4, 7)])
    def test_vanishing(self, r, k):
        assert conformable_derive_n(AlphaPoly.monomial(HALF, r), k).is_zero()

    def test_pure_power_rule(self):
        from math import factorial

        a = Fraction(2, 5)
        for l in range(7):
            for k in range(l + 1):
                want = a**k * Fraction(factorial(l), factorial(l - k))
                assert conformable_derive_n(AlphaPoly.monomial(a, l), k) == AlphaPoly.monomial(a, l - k, want)


class TestLimitDerivative:
    def test_constant(self):
        assert limit_derivative(lambda t: 4.2, 1.7, HALF) == 0.0

    def test_half_order(self):
        val = limit_derivative(lambda t: t, 1.0, HALF, 1e-6)
        # f(t) = t^{2a} with a = 1/2; exact 2a t^a = 1
        assert val == pytest.approx(1.0, abs=1e-5)

    @pytest.mark.parametrize("t", [0.2, 1.0, 7.0])
    def test_classical(self, t):
        assert limit_derivative(lambda s: s, t, 1, 1e-6) == pytest.approx(1.0, abs=1e-6)

    def test_richardson_is_more_accurate(self):
        f = lambda t: np.exp(t)
        exact = 2.0**0.5 * np.exp(2.0)  # t^{1-a} f'(t), a = 1/2
        plain = abs(limit_derivative(f, 2.0, HALF, 1e-3) - exact)
        rich = abs(limit_derivative(f, 2.0, HALF, 1e-3, richardson=True) - exact)
        assert rich < plain / 100

    def test_rejects_non_positive_t(self):
        with pytest.raises(ValueError):
            limit_derivative(lambda t: t, 0.0, HALF)

    def test_propagates_evaluation_errors(self):
        def boom(t):
            raise ZeroDivisionError

        with pytest.raises(ZeroDivisionError):
            limit_derivative(boom, 1.0, HALF)


class TestLeibniz:
    def test_zeroth(self):
        p, q = P(HALF, 1, 2), P(HALF, 0, 3, 1)
        assert leibniz_expand(p, q, 0) == p * q

    def test_u_times_u(self):
        u = AlphaPoly.monomial(HALF, 1)
        assert leibniz_expand(u, u, 2) == P(HALF, Fraction(1, 2))

    def test_factored_generating_polynomial(self):
        a = Fraction(1, 3)
        f, g = P(a, -1, 1) ** 2, P(a, 1, 1) ** 2
        assert leibniz_expand(f, g, 3) == conformable_derive_n(P(a, -1, 0, 1) ** 2, 3)


class TestEvaluate:
    def test_u(self):
        p = P(HALF, -1, 0, 1)
        assert evaluate_at_u(p, 1.0) == 0.0
        assert evaluate_at_u(p, 0.0) == -1.0
        assert evaluate_at_u(P(Fraction(3, 4), 0, Fraction(3, 2)), 0.5) == pytest.approx(0.75)

    def test_vectorised(self):
        p = P(HALF, 1, 1)
        np.testing.assert_allclose(evaluate_at_u(p, np.array([0.0, 1.0])), [1.0, 2.0])
        np.testing.assert_allclose(evaluate_at_u(AlphaPoly(HALF), np.ones(3)), 0.0)

    def test_t(self):
        p = P(HALF, 1, 2, 3)
        assert evaluate_at_t(p, 1.0) == pytest.approx(6.0)
        assert evaluate_at_t(AlphaPoly.monomial(HALF, 2), 4.0) == pytest.approx(4.0)
        assert evaluate_at_t(AlphaPoly.monomial(HALF, 1), 0.0) == 0.0
        with pytest.raises(ValueError):
            evaluate_at_t(p, -1.0)


# --- properties --------------------------------------------------------------

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
alphas = st.sampled_from(ALPHAS + [Fraction(2, 7)])


@st.composite
def poly_pairs(draw):
    a = draw(alphas)
    coeffs = st.dictionaries(st.integers(0, 7), fractions, max_size=6)
    return AlphaPoly(a, draw(coeffs)), AlphaPoly(a, draw(coeffs))


@given(poly_pairs(), fractions, fractions)
def test_linearity(pq, c1, c2):
    p, q = pq
    lhs = conformable_derive(c1 * p + c2 * q)
    assert lhs == c1 * conformable_derive(p) + c2 * conformable_derive(q)


@given(poly_pairs(), st.integers(0, 8))
def test_product_rule(pq, n):
    p, q = pq
    assert leibniz_expand(p, q, n) == conformable_derive_n(p * q, n)


@given(st.integers(0, 10), st.integers(0, 15))
def test_vanishing_property(r, k):
    d = conformable_derive_n(AlphaPoly.monomial(Fraction(3, 5), r), k)
    assert d.is_zero() == (k > r)


@given(st.dictionaries(st.integers(0, 7), fractions, max_size=6))
def test_classical_limit(terms):
    x = sympy.Symbol("x")
    p = AlphaPoly(1, terms)
    expr = sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in p.terms.items())
    want = sympy.Poly(sympy.diff(expr, x), x) if expr != 0 else sympy.Poly(0, x)
    got = conformable_derive(p)
    assert {k: sympy.Rational(c.numerator, c.denominator) for k, c in got.terms.items()} == {
        m[0]: c for m, c in zip(want.monoms(), want.coeffs()) if c != 0}


@settings(max_examples=60)
@given(st.dictionaries(st.integers(0, 5), st.integers(-5, 5), max_size=5),
       st.sampled_from(ALPHAS), st.floats(0.1, 3.0))
def test_limit_oracle_agreement(terms, alpha, t):
    p = AlphaPoly(alpha, terms)
    a = float(alpha)
    eps = 1e-6
    f = lambda s: sum(float(c) * s ** (a * k) for k, c in p.terms.items())
    exact = float(evaluate_at_t(conformable_derive(p), t))
    # forward-difference bound: eps * s^2 / 2 * max|f''| plus round-off
    s = t ** (1 - a)
    f2 = lambda x: sum(abs(float(c)) * abs(a * k * (a * k - 1)) * x ** (a * k - 2)
                       for k, c in p.terms.items())
    trunc = 0.5 * eps * s * s * max(f2(t), f2(t + eps * s))
    roundoff = 8e-16 * (1 + sum(abs(float(c)) * t ** (a * k) for k, c in p.terms.items())) / eps
    assert abs(limit_derivative(f, t, alpha, eps) - exact) <= 1.5 * trunc + roundoff
