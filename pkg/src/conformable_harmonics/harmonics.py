"""Normalized conformable spherical harmonics and the checks built on them.

Angles live on ``theta in [0, pi**(1/alpha)]`` and ``phi in [0, 2*pi]`` so that
``theta**alpha`` sweeps ``[0, pi]``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import NamedTuple

import mpmath
import numpy as np

from .alpha_calculus import as_alpha, limit_derivative
from .legendre import AssociatedLegendre, EdgeForm, rodrigues

__all__ = [
    "IllConditionedPointError",
    "TableMismatchError",
    "AngularPoint",
    "SphericalHarmonic",
    "TableRow",
    "PAPER_TABLE",
    "norm_squared_rational",
    "normalization_constant",
    "make_harmonic",
    "harmonic_evaluate",
    "density",
    "conjugation_check",
    "azimuthal_residual",
    "angular_eigenvalue",
    "table_record",
    "table_records",
    "table_closed_forms",
    "render_row",
]

TWO_PI = 2.0 * math.pi


class IllConditionedPointError(ValueError):
    """Point too close to a pole or a node for a stable eigenvalue estimate."""


class TableMismatchError(AssertionError):
    pass


class AngularPoint(NamedTuple):
    theta: float
    phi: float


def theta_max(alpha) -> float:
    return math.pi ** (1.0 / float(as_alpha(alpha)))


def norm_squared_rational(l: int, m: int, alpha) -> Fraction:
    """Rational part of N^2; the full value is this times (2 pi)^(-alpha)."""
    alpha = as_alpha(alpha)
    if abs(m) > l:
        raise ValueError(f"m exceeds l (|m|={abs(m)} > l={l})")
    return Fraction((2 * l + 1) * factorial(l - m), 2 * factorial(l + m)) / alpha ** (2 * m - 2)


def normalization_constant(l: int, m: int, alpha) -> float:
    alpha = as_alpha(alpha)
    return math.sqrt(float(norm_squared_rational(l, m, alpha)) / TWO_PI ** float(alpha))


@dataclass(frozen=True)
class SphericalHarmonic:
    l: int
    m: int
    alpha: Fraction
    norm_rational: Fraction
    legendre: AssociatedLegendre

    @property
    def norm_squared(self) -> tuple[Fraction, Fraction]:
        """(rational part, exponent of 2 pi in the denominator)."""
        return self.norm_rational, self.alpha

    @property
    def norm(self) -> float:
        return math.sqrt(float(self.norm_rational) / TWO_PI ** float(self.alpha))

    def __call__(self, theta, phi):
        return harmonic_evaluate(self, AngularPoint(theta, phi))


def make_harmonic(l: int, m: int, alpha) -> SphericalHarmonic:
    alpha = as_alpha(alpha)
    P = rodrigues(l, m, alpha)
    return SphericalHarmonic(l, m, alpha, norm_squared_rational(l, m, alpha), P)


def _evaluate(Y: SphericalHarmonic, theta, phi):
    # no domain checks; finite-difference stencils may step slightly outside
    a = float(Y.alpha)
    v = np.power(theta, a)
    w = np.power(phi, a)
    u, s = np.cos(v), np.abs(np.sin(v))
    p = Y.legendre.form.evaluate(u, s)
    return Y.norm * np.exp(1j * Y.m * w) * p


def harmonic_evaluate(Y: SphericalHarmonic, pt):
    """N * exp(i m phi^a) * P(cos(theta^a)); ``pt`` components may be arrays."""
    theta, phi = (np.asarray(c, dtype=float) for c in pt)
    top = theta_max(Y.alpha) * (1 + 1e-12)
    if np.any(theta < 0) or np.any(theta > top):
        raise ValueError(f"theta must lie in [0, pi**(1/alpha)] = [0, {top:.12g}]")
    if np.any(phi < 0) or np.any(phi > TWO_PI * (1 + 1e-12)):
        raise ValueError("phi must lie in [0, 2*pi]")
    if Y.legendre.edge_exponent < 0:
        # negative edge powers are only singular in their raw form
        Y = _with_form(Y, Y.legendre.form.canonical())
    out = _evaluate(Y, theta, phi)
    return complex(out) if out.ndim == 0 else out


def _with_form(Y: SphericalHarmonic, form: EdgeForm) -> SphericalHarmonic:
    P = Y.legendre
    # AssociatedLegendre only checks |m| <= l, so a rewritten edge power is fine
    return SphericalHarmonic(
        Y.l, Y.m, Y.alpha, Y.norm_rational,
        AssociatedLegendre(P.l, P.m, P.alpha, form.edge_exponent, form.body),
    )


def density(Y: SphericalHarmonic, pt):
    value = harmonic_evaluate(Y, pt)
    out = np.abs(value) ** 2
    return float(out) if np.ndim(out) == 0 else out


def conjugation_check(l: int, m: int, alpha, points) -> float:
    """max |Y^{-m} - (-1)^m conj(Y^m)| over ``points`` (an iterable of (theta, phi))."""
    if m < 0:
        raise ValueError("m must be non-negative")
    pts = np.asarray(list(points), dtype=float).reshape(-1, 2)
    pt = AngularPoint(pts[:, 0], pts[:, 1])
    neg = harmonic_evaluate(make_harmonic(l, -m, alpha), pt)
    pos = harmonic_evaluate(make_harmonic(l, m, alpha), pt)
    return float(np.max(np.abs(neg - (-1) ** m * np.conj(pos)), initial=0.0))


def azimuthal_residual(m: int, alpha, phi: float, eps: float = 1e-6, dps: int = 40) -> complex:
    """Residual of D_phi^{2a} Phi + a^2 m^2 Phi for Phi = exp(i m phi^a).

    The second derivative is two nested limit quotients. They are carried out
    in ``dps``-digit arithmetic so cancellation does not swamp the O(eps)
    truncation error.
    """
    alpha = as_alpha(alpha)
    if phi <= 0:
        raise ValueError("azimuthal_residual requires phi > 0")
    with mpmath.workdps(dps):
        a = mpmath.mpf(alpha.numerator) / alpha.denominator
        e = mpmath.mpf(eps)
        x = mpmath.mpf(phi)

        def Phi(t):
            return mpmath.exp(1j * m * t**a)

        def D1(t):
            return limit_derivative(Phi, t, alpha, e)

        d2 = limit_derivative(D1, x, alpha, e)
        res = d2 + a * a * m * m * Phi(x)
        return complex(res)


def _central(f, t, a, h):
    """Central conformable quotient, the mean of the +h and -h one-sided ones."""
    s = t ** (1.0 - a)
    return (f(t + h * s) - f(t - h * s)) / (2.0 * h)


def angular_eigenvalue(Y: SphericalHarmonic, pt, step: float = 1e-5, pole_tol: float = 1e-2,
                       node_tol: float = 1e-2) -> float:
    """Estimate the angular eigenvalue at ``pt`` by finite conformable differences.

    Applies ``(1/sin v) D_theta[sin v D_theta Y] + (1/sin^2 v) D_phi^2 Y`` with
    ``v = theta^a`` and divides by ``Y(pt)``. The exact answer is
    ``-a^2 l(l+1)``.
    """
    theta, phi = map(float, pt)
    a = float(Y.alpha)
    harmonic_evaluate(Y, (theta, phi))
    v = theta**a
    sv = math.sin(v)
    if theta <= 0 or phi <= 0 or sv < pole_tol:
        raise IllConditionedPointError(f"point {pt} is too close to a pole or phi = 0")
    if Y.legendre.edge_exponent < 0:
        Y = _with_form(Y, Y.legendre.form.canonical())
    y0 = complex(_evaluate(Y, theta, phi))
    scale = Y.norm * float(np.max(np.abs(Y.legendre.form.evaluate(np.linspace(-1, 1, 401)))))
    if abs(y0) < node_tol * scale:
        raise IllConditionedPointError(f"|Y| = {abs(y0):.3g} is too small at {pt}")

    def F(t):
        return complex(_evaluate(Y, t, phi))

    def G(t):
        return math.sin(t**a) * _central(F, t, a, step)

    def H(p):
        return complex(_evaluate(Y, theta, p))

    theta_part = _central(G, theta, a, step) / sv
    phi_part = _central(lambda p: _central(H, p, a, step), phi, a, step) / sv**2
    return ((theta_part + phi_part) / y0).real


# --- closed forms -----------------------------------------------------------

class TableRow(NamedTuple):
    """sign * sqrt(radicand * alpha^alpha_power / (2 pi)^alpha) * exp(i m phi^alpha)
    * sin(theta^alpha)^sin_power * cos_poly(cos(theta^alpha))"""

    l: int
    m: int
    sign: int
    radicand: Fraction
    alpha_power: int
    sin_power: int
    cos_poly: tuple[int, ...]


F = Fraction
PAPER_TABLE: tuple[TableRow, ...] = (
    TableRow(0, 0, 1, F(1, 2), 2, 0, (1,)),
    TableRow(1, -1, 1, F(3, 4), 2, 1, (1,)),
    TableRow(1, 0, 1, F(3, 2), 2, 0, (0, 1)),
    TableRow(1, 1, -1, F(3, 4), 2, 1, (1,)),
    TableRow(2, -2, 1, F(15, 16), 2, 2, (1,)),
    TableRow(2, -1, 1, F(15, 4), 2, 1, (0, 1)),
    TableRow(2, 0, 1, F(5, 8), 2, 0, (-1, 0, 3)),
    TableRow(2, 1, -1, F(15, 4), 2, 1, (0, 1)),
    TableRow(2, 2, 1, F(15, 16), 2, 2, (1,)),
)
del F

_PROBE_ALPHAS = (Fraction(1), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 4), Fraction(2, 5))


def _primitive(coeffs: list[Fraction]) -> tuple[Fraction, tuple[int, ...]]:
    """Split a rational polynomial into (content, primitive integer polynomial)."""
    den = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = math.gcd(*ints)
    lead = next(c for c in reversed(ints) if c)
    g = g if lead > 0 else -g
    return Fraction(g, den), tuple(c // g for c in ints)


def _alpha_exponent(ratio: Fraction, alpha: Fraction) -> int:
    k, r = 0, ratio
    if r == 1:
        return 0
    step = alpha if r < 1 else 1 / alpha
    sgn = 1 if r < 1 else -1
    while r != 1:
        r /= step
        k += sgn
        if abs(k) > 64:
            raise ValueError("coefficient is not a monomial in alpha")
    return k


def table_record(l: int, m: int) -> TableRow:
    """Closed form of Y_l^m, extracted from exact builds at several alphas."""
    found = []
    for alpha in _PROBE_ALPHAS:
        Y = make_harmonic(l, m, alpha)
        form = Y.legendre.form.canonical()
        content, prim = _primitive(form.body.coefficients())
        found.append((alpha, form.edge_exponent, prim, content, Y.norm_rational * content**2))
    _, edge, prim, content, radicand = found[0]
    k = _alpha_exponent(found[1][4] / radicand, found[1][0])
    for alpha, e, p, c, rad in found:
        if (e, p) != (edge, prim) or (c > 0) != (content > 0) or rad != radicand * alpha**k:
            raise ValueError(f"row ({l}, {m}) does not have a monomial alpha structure")
    return TableRow(l, m, 1 if content > 0 else -1, radicand, k, edge, prim)


def table_records(l_max: int = 2) -> list[TableRow]:
    return [table_record(l, m) for l in range(l_max + 1) for m in range(-l, l + 1)]


def table_closed_forms(reference=PAPER_TABLE) -> list[TableRow]:
    """Generate the l <= 2 closed forms and assert they equal ``reference`` exactly."""
    rows = table_records(2)
    ref = {(r.l, r.m): r for r in reference}
    for row in rows:
        want = ref.get((row.l, row.m))
        if want != row:
            raise TableMismatchError(f"row (l={row.l}, m={row.m}): generated {row}, expected {want}")
    if len(ref) != len(rows):
        raise TableMismatchError("reference table has extra rows")
    return rows


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def render_row(row: TableRow, alpha=None) -> str:
    """Human-readable closed form; with ``alpha`` given it is substituted."""
    if alpha is None:
        a, two_pi = "α", "(2π)^α"
        ang = "θ^α"
        phs = "φ^α"
    else:
        alpha = as_alpha(alpha)
        a = _fmt_frac(alpha)
        a = a if alpha.denominator == 1 else f"({a})"
        two_pi = "2π" if alpha == 1 else f"(2π)^{a}"
        ang = "θ" if alpha == 1 else f"θ^{a}"
        phs = "φ" if alpha == 1 else f"φ^{a}"
    if alpha is None:
        num = str(row.radicand.numerator)
        if row.alpha_power:
            pw = a if row.alpha_power == 1 else f"{a}^{row.alpha_power}"
            num = pw if num == "1" else num + pw
        den = row.radicand.denominator
    else:
        val = row.radicand * alpha**row.alpha_power
        num, den = str(val.numerator), val.denominator
    den = two_pi if den == 1 else f"{den}*{two_pi}"
    parts = [("-" if row.sign < 0 else "") + f"sqrt({num}/({den}))"]
    if row.m:
        mm = "" if abs(row.m) == 1 else str(abs(row.m))
        parts.append(f"exp({'-' if row.m < 0 else ''}i{mm}{phs})")
    if row.sin_power:
        parts.append(f"sin({ang})" + (f"^{row.sin_power}" if row.sin_power > 1 else ""))
    if any(row.cos_poly[1:]):
        terms = []
        for k in range(len(row.cos_poly) - 1, -1, -1):
            c = row.cos_poly[k]
            if not c:
                continue
            mono = "" if k == 0 else (f"cos({ang})" if k == 1 else f"cos({ang})^{k}")
            coef = str(c) if (not mono or abs(c) != 1) else ("-" if c < 0 else "")
            terms.append(coef + ("*" if mono and coef not in ("", "-") else "") + mono)
        poly = " + ".join(terms).replace("+ -", "- ")
        parts.append(f"({poly})" if len(terms) > 1 else poly)
    return " * ".join(parts)
