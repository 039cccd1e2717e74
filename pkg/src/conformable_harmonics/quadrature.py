"""Integration against the deformed measures d^a t = t^(a-1) dt and d^a Omega."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import integrate

from .alpha_calculus import as_alpha
from .harmonics import harmonic_evaluate, make_harmonic
from .legendre import rodrigues

__all__ = [
    "QuadratureRule",
    "ConformableMeasure",
    "GramReport",
    "gauss_legendre",
    "conformable_integrate",
    "direct_weighted_integrate",
    "solid_angle_integrate",
    "legendre_orthogonality",
    "paper_orthogonality_diagonal",
    "gram_matrix",
]

DEFAULT_ORDER = 64
MAX_ORDER = 512
AGREE_TOL = 1e-10


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes and weights on [-1, 1]."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int

    def mapped(self, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
        half = 0.5 * (b - a)
        return a + half * (self.nodes + 1.0), half * self.weights


@lru_cache(maxsize=None)
def gauss_legendre(order: int) -> QuadratureRule:
    if order < 2:
        raise ValueError("quadrature order must be at least 2")
    x, w = np.polynomial.legendre.leggauss(order)
    x.setflags(write=False)
    w.setflags(write=False)
    return QuadratureRule(x, w, order)


@dataclass(frozen=True)
class ConformableMeasure:
    alpha: Fraction
    lower: float
    upper: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_alpha(self.alpha))
        if not 0 <= self.lower < self.upper:
            raise ValueError("measure needs 0 <= lower < upper")

    def total(self) -> float:
        """Exact measure of the interval, (upper^a - lower^a)/a."""
        a = float(self.alpha)
        return (self.upper**a - self.lower**a) / a


def _adaptive(evaluate, order, adaptive):
    if order < 2:
        raise ValueError("quadrature order must be at least 2")
    prev = evaluate(order)
    if not adaptive:
        return prev
    while order < MAX_ORDER:
        order *= 2
        cur = evaluate(order)
        if abs(cur - prev) <= AGREE_TOL * max(1.0, abs(cur)):
            return cur
        prev = cur
    return prev


def conformable_integrate(f, measure: ConformableMeasure, order: int = DEFAULT_ORDER,
                          adaptive: bool = True):
    """Integrate ``f(t) t^(a-1) dt`` over the measure's interval.

    Uses ``w = t^a`` so the integral becomes ``(1/a) * int f(w^(1/a)) dw``, which
    is smooth at the origin. ``f`` is called with a numpy array of nodes. The
    order is doubled (up to 512) until successive results agree to 1e-10.
    """
    a = float(measure.alpha)
    lo, hi = measure.lower**a, measure.upper**a

    def run(n):
        w, wt = gauss_legendre(n).mapped(lo, hi)
        vals = np.broadcast_to(f(w ** (1.0 / a)), w.shape)
        return np.sum(wt * vals) / a

    out = _adaptive(run, order, adaptive)
    return complex(out) if np.iscomplexobj(out) else float(out)


def direct_weighted_integrate(f, measure: ConformableMeasure) -> float:
    """Cross-check route: ``int f(t) t^(a-1) dt`` with no change of variable.

    A lower limit of 0 goes through QUADPACK's algebraic-singularity weight,
    so no node is ever placed at t = 0.
    """
    a = float(measure.alpha)
    g = lambda t: float(f(t))
    if measure.lower == 0 and a != 1:
        val, _ = integrate.quad(g, 0.0, measure.upper, weight="alg", wvar=(a - 1.0, 0.0),
                                epsabs=1e-13, epsrel=1e-12, limit=200)
        return val
    val, _ = integrate.quad(lambda t: g(t) * t ** (a - 1.0), measure.lower, measure.upper,
                            epsabs=1e-13, epsrel=1e-12, limit=200)
    return val


def solid_angle_integrate(g, alpha, order: int = DEFAULT_ORDER, adaptive: bool = True) -> complex:
    """Integrate ``g(theta, phi)`` against d^a Omega = sin(theta^a) d^a theta d^a phi.

    theta runs over [0, pi^(1/a)] and phi over [0, 2 pi]. The theta integral is
    carried out in ``u = cos(theta^a)``, where the sine weight cancels, and the
    phi integral in ``w = phi^a``. ``g`` receives 2-D numpy arrays.
    """
    a = float(as_alpha(alpha))
    wmax = (2.0 * math.pi) ** a

    def run(n):
        rule = gauss_legendre(n)
        u, wu = rule.nodes, rule.weights
        w, ww = rule.mapped(0.0, wmax)
        theta = np.arccos(u) ** (1.0 / a)
        phi = w ** (1.0 / a)
        vals = np.broadcast_to(g(theta[:, None], phi[None, :]), (n, n))
        return wu @ vals @ ww / (a * a)

    return complex(_adaptive(run, order, adaptive))


def paper_orthogonality_diagonal(l: int, m: int, alpha) -> float:
    """(2 pi)^a / a * a^(2m-1) * 2 (l+m)! / ((2l+1) (l-m)!)."""
    a = as_alpha(alpha)
    rational = Fraction(2 * math.factorial(l + m), (2 * l + 1) * math.factorial(l - m)) * a ** (2 * m - 2)
    return float(rational) * (2.0 * math.pi) ** float(a)


def legendre_orthogonality(l: int, l_prime: int, m: int, alpha, order: int = DEFAULT_ORDER) -> float:
    """Full solid-angle integral of P_{l' a}^{m a} P_{l a}^{m a}."""
    if abs(m) > min(l, l_prime):
        raise ValueError("m exceeds min(l, l_prime)")
    a = float(as_alpha(alpha))
    P = rodrigues(l, m, alpha).form.canonical()
    Q = rodrigues(l_prime, m, alpha).form.canonical()

    def g(theta, phi):
        v = theta**a
        u, s = np.cos(v), np.abs(np.sin(v))
        return P.evaluate(u, s) * Q.evaluate(u, s) + 0.0 * phi

    return solid_angle_integrate(g, alpha, order).real


@dataclass(frozen=True)
class GramReport:
    """Inner products <Y_l, Y_l'> for l, l' in ``ls`` at fixed m and alpha."""

    ls: tuple[int, ...]
    m: int
    alpha: Fraction
    matrix: np.ndarray

    @property
    def max_off_diagonal(self) -> float:
        off = self.matrix - np.diag(np.diag(self.matrix))
        return float(np.max(np.abs(off), initial=0.0))

    @property
    def max_diagonal_deviation(self) -> float:
        return float(np.max(np.abs(np.diag(self.matrix) - 1.0), initial=0.0))

    @property
    def deviation(self) -> float:
        """Largest entry of |G - I|."""
        return float(np.max(np.abs(self.matrix - np.eye(len(self.ls))), initial=0.0))

    @property
    def hermitian_defect(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T), initial=0.0))


def gram_matrix(l_max: int, m: int, alpha, order: int = DEFAULT_ORDER) -> GramReport:
    if abs(m) > l_max:
        raise ValueError("m exceeds l_max")
    alpha = as_alpha(alpha)
    ls = tuple(range(abs(m), l_max + 1))
    harmonics = [make_harmonic(l, m, alpha) for l in ls]
    n = len(ls)
    G = np.zeros((n, n), dtype=complex)
    for i, Yi in enumerate(harmonics):
        for j, Yj in enumerate(harmonics):
            G[i, j] = solid_angle_integrate(
                lambda t, p: harmonic_evaluate(Yi, (t, p)) * np.conj(harmonic_evaluate(Yj, (t, p))),
                alpha, order)
    return GramReport(ls, m, alpha, G)
