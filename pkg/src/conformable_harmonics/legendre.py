"""Conformable associated Legendre functions built from a Rodrigues-type formula.

Every object here is a product ``(1 - u**2)**(e/2) * body(u)`` with ``body`` an
exact :class:`~conformable_harmonics.alpha_calculus.AlphaPoly` and ``u`` the
evaluation variable ``x**alpha = cos(theta**alpha)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from .alpha_calculus import (
    AlphaPoly,
    as_alpha,
    conformable_derive,
    conformable_derive_n,
    evaluate_at_u,
    poly_pow,
)

__all__ = [
    "SingularPointError",
    "EdgeForm",
    "AssociatedLegendre",
    "OdeResidualReport",
    "generating_poly",
    "rodrigues",
    "negative_m_factor",
    "ode_residual",
    "legendre_evaluate",
    "classical_associated_legendre",
    "classical_compare",
]


class SingularPointError(ValueError):
    """Evaluation requested at u = +-1 where a negative edge power blows up."""


def one_minus_u2(alpha) -> AlphaPoly:
    return AlphaPoly(alpha, {0: 1, 2: -1})


@dataclass(frozen=True)
class EdgeForm:
    """``(1 - u**2)**(edge_exponent/2) * body(u)``, closed under D^alpha."""

    edge_exponent: int
    body: AlphaPoly

    @property
    def alpha(self) -> Fraction:
        return self.body.alpha

    def derive(self) -> EdgeForm:
        # D^a[(1-u^2)^{e/2} B] = (1-u^2)^{e/2-1} * a*(-e*u*B + (1-u^2)*B')
        a = self.alpha
        e = self.edge_exponent
        u = AlphaPoly.monomial(a, 1)
        db = conformable_derive(self.body)
        new = (-e * a) * u * self.body + one_minus_u2(a) * db
        return EdgeForm(e - 2, new)

    def raise_edge(self, k: int = 1) -> EdgeForm:
        """Multiply by ``(1 - u**2)**k`` by absorbing it into the edge power."""
        return EdgeForm(self.edge_exponent + 2 * k, self.body)

    def canonical(self) -> EdgeForm:
        """Move every ``(1 - u**2)`` factor of the body into the edge power."""
        body, e = self.body, self.edge_exponent
        while not body.is_zero():
            q, r = body.divmod_one_minus_u2()
            if not r.is_zero():
                break
            body, e = q, e + 2
        return EdgeForm(e, body)

    def same_function(self, other: EdgeForm) -> bool:
        """Exact equality as functions of u (after canonicalisation)."""
        a, b = self.canonical(), other.canonical()
        if a.body.is_zero() or b.body.is_zero():
            return a.body.is_zero() and b.body.is_zero()
        return a.edge_exponent == b.edge_exponent and a.body == b.body

    def evaluate(self, u, root=None):
        """Float evaluation. ``root`` may supply ``sqrt(1 - u**2)`` directly."""
        u = np.asarray(u, dtype=float)
        body = evaluate_at_u(self.body, u)
        e = self.edge_exponent
        if e == 0:
            return body
        if root is None:
            root = np.sqrt(np.clip(1.0 - u * u, 0.0, None))
        if e % 2 == 0:
            edge = (1.0 - u * u) ** (e // 2) if e > 0 else 1.0 / (1.0 - u * u) ** (-e // 2)
        else:
            edge = root**e if e > 0 else 1.0 / root ** (-e)
        return edge * body


@dataclass(frozen=True)
class AssociatedLegendre:
    """P_{l a}^{m a}: degree ``l``, order ``m``, conformable order ``alpha``."""

    l: int
    m: int
    alpha: Fraction
    edge_exponent: int
    body: AlphaPoly

    def __post_init__(self):
        if self.l < 0:
            raise ValueError("l must be non-negative")
        if abs(self.m) > self.l:
            raise ValueError(f"m exceeds l (|m|={abs(self.m)} > l={self.l})")
        as_alpha(self.alpha)

    @property
    def form(self) -> EdgeForm:
        return EdgeForm(self.edge_exponent, self.body)

    def __call__(self, u):
        return legendre_evaluate(self, u)


def generating_poly(l: int, alpha) -> AlphaPoly:
    """``(x**(2 alpha) - 1)**l`` written in ``u``."""
    return poly_pow(AlphaPoly(alpha, {0: -1, 2: 1}), l)


def rodrigues(l: int, m: int, alpha) -> AssociatedLegendre:
    """Build P_{l a}^{m a} = (-1)^m (1-u^2)^{m/2} / (a^l 2^l l!) D^{(l+m)a} (u^2-1)^l.

    Negative ``m`` uses the same expression, i.e. ``l - |m|`` derivatives and
    a negative edge power.
    """
    alpha = as_alpha(alpha)
    if l < 0:
        raise ValueError("l must be non-negative")
    if abs(m) > l:
        raise ValueError(f"m exceeds l (|m|={abs(m)} > l={l})")
    pref = Fraction((-1) ** abs(m), 2**l * factorial(l)) / alpha**l
    body = pref * conformable_derive_n(generating_poly(l, alpha), l + m)
    return AssociatedLegendre(l, m, alpha, m, body)


def negative_m_factor(l: int, m: int, alpha) -> Fraction:
    """Exact ratio P^{-m} / P^{m} = (-1)^m (l-m)! / (alpha^{2m} (l+m)!)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if m > l:
        raise ValueError(f"m exceeds l (m={m} > l={l})")
    alpha = as_alpha(alpha)
    return Fraction((-1) ** m * factorial(l - m), factorial(l + m)) / alpha ** (2 * m)


@dataclass(frozen=True)
class OdeResidualReport:
    u: float
    residual: float
    terms: tuple[float, float, float]

    @property
    def scale(self) -> float:
        return max(abs(t) for t in self.terms)

    @property
    def relative(self) -> float:
        s = self.scale
        return abs(self.residual) / s if s else abs(self.residual)


def ode_residual(P: AssociatedLegendre, u: float) -> OdeResidualReport:
    """Residual of the conformable associated Legendre equation at ``x**alpha = u``.

    The three summands are::

        (1 - u^2) D^a D^a X
        -2 a u D^a X
        a^2 [l(l+1) - m^2 / (1 - u^2)] X

    with the derivatives taken exactly on the edge-form representation. The
    form is canonicalised first: for negative m the raw body carries
    (1 - u^2)^|m|, which would cancel against the edge power in floating point.
    """
    u = float(u)
    if abs(u) > 1:
        raise ValueError("ode_residual requires |u| <= 1")
    if abs(u) == 1 and P.m != 0:
        raise SingularPointError("ODE is singular at |u| = 1 when m != 0")
    a = float(P.alpha)
    x = P.form.canonical()
    dx = x.derive().canonical()
    ddx = dx.derive().canonical()
    t1 = float(ddx.raise_edge().evaluate(u))
    t2 = -2.0 * a * u * float(dx.evaluate(u))
    xv = float(x.evaluate(u))
    t3 = a * a * (P.l * (P.l + 1) * xv - (P.m**2 * xv / (1.0 - u * u) if P.m else 0.0))
    return OdeResidualReport(u, t1 + t2 + t3, (t1, t2, t3))


def legendre_evaluate(P: AssociatedLegendre, u, root=None):
    """Value ``(1 - u^2)^{edge/2} * body(u)`` for ``-1 <= u <= 1``."""
    arr = np.asarray(u, dtype=float)
    if np.any(np.abs(arr) > 1):
        raise ValueError("legendre_evaluate requires -1 <= u <= 1")
    if P.edge_exponent < 0 and np.any(np.abs(arr) == 1):
        raise SingularPointError("negative edge power is singular at |u| = 1")
    form = P.form.canonical() if P.edge_exponent < 0 else P.form
    out = form.evaluate(arr, root)
    return float(out) if np.ndim(out) == 0 else out


def classical_associated_legendre(l: int, m: int, x):
    """Classical P_l^m(x) with Condon-Shortley phase, by upward recurrence in l."""
    if abs(m) > l:
        raise ValueError(f"m exceeds l (|m|={abs(m)} > l={l})")
    x = np.asarray(x, dtype=float)
    if m < 0:
        mm = -m
        return (-1) ** mm * factorial(l - mm) / factorial(l + mm) * classical_associated_legendre(l, mm, x)
    s = np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    pmm = np.ones_like(x)
    for k in range(1, m + 1):
        pmm = -(2 * k - 1) * s * pmm
    if l == m:
        return pmm
    p_prev, p = pmm, x * (2 * m + 1) * pmm
    for n in range(m + 2, l + 1):
        p_prev, p = p, ((2 * n - 1) * x * p - (n + m - 1) * p_prev) / (n - m)
    return p


def classical_compare(l: int, m: int) -> float:
    """Max |rodrigues(l, m, 1) - classical P_l^m| over u = -0.9, -0.8, ..., 0.9."""
    grid = np.round(np.arange(-9, 10) / 10.0, 1)
    ours = legendre_evaluate(rodrigues(l, m, 1), grid)
    return float(np.max(np.abs(ours - classical_associated_legendre(l, m, grid))))
