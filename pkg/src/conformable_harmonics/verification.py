"""Invariant suite behind ``conformable-harmonics verify``.

Each check returns a :class:`CheckResult` holding the worst deviation seen and
the tolerance it was judged against. Exact (rational) checks report 0 on
success and ``inf`` on any mismatch.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .alpha_calculus import AlphaPoly, as_alpha, conformable_derive_n, leibniz_expand
from .harmonics import (
    AngularPoint,
    IllConditionedPointError,
    TableMismatchError,
    angular_eigenvalue,
    azimuthal_residual,
    conjugation_check,
    harmonic_evaluate,
    make_harmonic,
    table_closed_forms,
)
from .legendre import (
    AssociatedLegendre,
    classical_associated_legendre,
    generating_poly,
    negative_m_factor,
    ode_residual,
    rodrigues,
)
from .quadrature import gram_matrix, legendre_orthogonality, paper_orthogonality_diagonal

DEFAULT_ALPHAS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))

TOLERANCES = {
    "table": 0.0,
    "leibniz": 0.0,
    "negative_m": 0.0,
    "ode_residual": 1e-9,
    "conjugation": 1e-12,
    "gram": 1e-8,
    "orthogonality_diagonal": 1e-8,
    "eigenvalue": 1e-3,
    "azimuthal": 1e-4,
    "classical_limit": 1e-10,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    deviation: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.detail})" if self.detail else ""
        return f"[{status}] {self.name:<24} max deviation {self.deviation:.3e}  tol {self.tolerance:.1e}{extra}"


def classical_harmonic(l: int, m: int, theta, phi):
    """Textbook Y_l^m (Condon-Shortley phase) from the recurrence-based P_l^m."""
    norm = math.sqrt((2 * l + 1) / (4 * math.pi) * math.factorial(l - m) / math.factorial(l + m))
    return norm * np.exp(1j * m * np.asarray(phi)) * classical_associated_legendre(l, m, np.cos(theta))


def random_alpha_poly(rng, alpha, max_degree: int = 6) -> AlphaPoly:
    deg = int(rng.integers(0, max_degree + 1))
    coeffs = {k: Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6))) for k in range(deg + 1)}
    return AlphaPoly(alpha, coeffs)


def random_points(rng, alpha, n: int, margin: float = 0.0):
    a = float(alpha)
    v = rng.uniform(margin, math.pi - margin, n)
    phi = rng.uniform(0.0, 2.0 * math.pi, n)
    return AngularPoint(v ** (1.0 / a), phi)


def check_table() -> CheckResult:
    try:
        table_closed_forms()
    except TableMismatchError as exc:
        return CheckResult("table", math.inf, 0.0, str(exc))
    return CheckResult("table", 0.0, 0.0, "9 rows")


def check_leibniz(alphas, l_max: int, pairs: int = 200, seed: int = 0) -> CheckResult:
    rng = np.random.default_rng(seed)
    bad = 0
    for i in range(pairs):
        alpha = alphas[i % len(alphas)]
        p, q = random_alpha_poly(rng, alpha), random_alpha_poly(rng, alpha)
        n = int(rng.integers(0, 9))
        bad += leibniz_expand(p, q, n) != conformable_derive_n(p * q, n)
    # the derivative relation between D^{(l-m)a} and D^{(l+m)a}
    for alpha in alphas:
        for l in range(min(l_max, 6) + 1):
            base = generating_poly(l, alpha)
            for m in range(l + 1):
                lhs = conformable_derive_n(base, l - m)
                rhs = (Fraction(math.factorial(l - m), math.factorial(l + m)) / alpha ** (2 * m)
                       * generating_poly(1, alpha) ** m * conformable_derive_n(base, l + m))
                bad += lhs != rhs
    return CheckResult("leibniz", math.inf if bad else 0.0, 0.0, f"{pairs} random pairs")


def check_negative_m(alphas, l_max: int) -> CheckResult:
    bad = 0
    for alpha in alphas:
        for l in range(l_max + 1):
            for m in range(l + 1):
                neg = rodrigues(l, -m, alpha).form
                pos = rodrigues(l, m, alpha)
                scaled = pos.form.__class__(pos.edge_exponent, negative_m_factor(l, m, alpha) * pos.body)
                bad += not neg.same_function(scaled)
    return CheckResult("negative_m", math.inf if bad else 0.0, 0.0)


def check_ode(alphas, l_max: int, n_points: int = 50, seed: int = 1) -> tuple[CheckResult, CheckResult]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    control = math.inf
    for alpha in alphas:
        us = rng.uniform(-0.99, 0.99, n_points)
        for l in range(l_max + 1):
            for m in range(-l, l + 1):
                P = rodrigues(l, m, alpha)
                worst = max(worst, max(ode_residual(P, u).relative for u in us))
        # X = u declared as (l=2, m=0) must fail
        fake = AssociatedLegendre(2, 0, alpha, 0, AlphaPoly.monomial(alpha, 1))
        a2 = float(alpha) ** 2
        control = min(control, abs(ode_residual(fake, 0.5).residual) / (0.1 * a2))
    neg = CheckResult("ode_negative_control", 0.0 if control > 1 else math.inf, 0.0,
                      f"mismatch residual / (0.1 a^2) >= {control:.3g}")
    return CheckResult("ode_residual", worst, TOLERANCES["ode_residual"]), neg


def check_conjugation(alphas, l_max: int, seed: int = 2) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for alpha in alphas:
        pts = random_points(rng, alpha, 100)
        for l in range(l_max + 1):
            for m in range(l + 1):
                worst = max(worst, conjugation_check(l, m, alpha, zip(*pts)))
    return CheckResult("conjugation", worst, TOLERANCES["conjugation"])


def check_gram(alphas, l_max: int) -> CheckResult:
    worst = 0.0
    for alpha in alphas:
        for m in range(-l_max, l_max + 1):
            worst = max(worst, gram_matrix(l_max, m, alpha).deviation)
    return CheckResult("gram", worst, TOLERANCES["gram"])


def check_orthogonality_diagonal(alphas, l_max: int) -> CheckResult:
    worst = 0.0
    for alpha in alphas:
        for l in range(l_max + 1):
            for m in range(-l, l + 1):
                want = paper_orthogonality_diagonal(l, m, alpha)
                got = legendre_orthogonality(l, l, m, alpha)
                worst = max(worst, abs(got - want) / abs(want))
    return CheckResult("orthogonality_diagonal", worst, TOLERANCES["orthogonality_diagonal"])


def eigenvalue_points(Y, n: int, seed: int = 3):
    """``n`` interior points where the eigenvalue estimate is well conditioned."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        theta, phi = random_points(rng, Y.alpha, 1, margin=0.15)
        pt = (float(theta[0]), float(phi[0]))
        try:
            angular_eigenvalue(Y, pt)
        except IllConditionedPointError:
            continue
        out.append(pt)
    return out


def check_eigenvalue(alphas, l_max: int, n_points: int = 20) -> CheckResult:
    worst = 0.0
    for alpha in alphas:
        a2 = float(alpha) ** 2
        for l in range(min(l_max, 3) + 1):
            want = -a2 * l * (l + 1)
            for m in range(-l, l + 1):
                Y = make_harmonic(l, m, alpha)
                for pt in eigenvalue_points(Y, n_points):
                    got = angular_eigenvalue(Y, pt)
                    worst = max(worst, abs(got - want) / (abs(want) if want else a2))
    return CheckResult("eigenvalue", worst, TOLERANCES["eigenvalue"])


def check_azimuthal(alphas, l_max: int) -> CheckResult:
    # truncation error of the nested one-sided quotient grows like m^3
    worst = 0.0
    top = min(l_max, 3)
    for alpha in alphas:
        for m in range(-top, top + 1):
            for phi in (0.5, 1.0, 2.0, 5.0):
                worst = max(worst, abs(azimuthal_residual(m, alpha, phi)))
    return CheckResult("azimuthal", worst, TOLERANCES["azimuthal"], "eps = 1e-6")


def check_classical(l_max: int, seed: int = 4) -> CheckResult:
    rng = np.random.default_rng(seed)
    pts = random_points(rng, 1, 100)
    worst = 0.0
    for l in range(l_max + 1):
        for m in range(-l, l + 1):
            ours = harmonic_evaluate(make_harmonic(l, m, 1), pts)
            if m >= 0:
                ref = classical_harmonic(l, m, *pts)
            else:
                ref = (-1) ** m * np.conj(classical_harmonic(l, -m, *pts))
            worst = max(worst, float(np.max(np.abs(ours - ref))))
    return CheckResult("classical_limit", worst, TOLERANCES["classical_limit"])


def run_suite(l_max: int = 4, alphas=DEFAULT_ALPHAS, tolerance: float | None = None) -> list[CheckResult]:
    alphas = tuple(as_alpha(a) for a in alphas)
    results = [
        check_table(),
        check_leibniz(alphas, l_max),
        check_negative_m(alphas, l_max),
        *check_ode(alphas, l_max),
        check_conjugation(alphas, l_max),
        check_gram(alphas, l_max),
        check_orthogonality_diagonal(alphas, l_max),
        check_eigenvalue(alphas, l_max),
        check_azimuthal(alphas, l_max),
        check_classical(l_max),
    ]
    if tolerance is not None:
        results = [CheckResult(r.name, r.deviation, tolerance, r.detail) for r in results]
    return results
