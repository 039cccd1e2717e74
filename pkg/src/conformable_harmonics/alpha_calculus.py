"""Exact polynomials in u = t**alpha and the conformable derivative acting on them.

A conformable derivative of order ``alpha`` maps ``t**(alpha*k)`` to
``alpha*k * t**(alpha*(k-1))``, so polynomials in ``u = t**alpha`` are closed
under it.  Coefficients are kept as :class:`fractions.Fraction` so identities
between derived objects can be checked exactly.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational

import numpy as np

__all__ = [
    "IncompatibleAlphaError",
    "AlphaPoly",
    "as_alpha",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "conformable_derive",
    "conformable_derive_n",
    "limit_derivative",
    "leibniz_expand",
    "evaluate_at_u",
    "evaluate_at_t",
]

MAX_DENOMINATOR = 10**6


class IncompatibleAlphaError(ValueError):
    """Raised when two α-polynomials built for different orders are combined."""


def as_alpha(value) -> Fraction:
    """Return ``value`` as an exact order in (0, 1].

    Accepts Fractions, ints, strings such as ``"3/4"`` or ``"0.1"``, and
    floats. Decimals are converted with denominator at most 10**6.
    """
    if isinstance(value, Fraction):
        alpha = value
    elif isinstance(value, Rational):
        alpha = Fraction(value)
    elif isinstance(value, str):
        alpha = Fraction(value.strip()).limit_denominator(MAX_DENOMINATOR)
    else:
        alpha = Fraction(float(value)).limit_denominator(MAX_DENOMINATOR)
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must satisfy 0 < alpha <= 1, got {alpha}")
    return alpha


class AlphaPoly:
    """Immutable polynomial ``sum(c_k * u**k)`` with ``u = t**alpha``.

    Parameters
    ----------
    alpha : Fraction-like
        Conformable order the polynomial is tied to.
    terms : mapping of int -> Fraction-like
        Degree to coefficient. Zero coefficients are dropped.
    """

    __slots__ = ("_alpha", "_terms")

    def __init__(self, alpha, terms=None):
        self._alpha = as_alpha(alpha)
        clean = {}
        for k, c in (terms or {}).items():
            k = int(k)
            if k < 0:
                raise ValueError("degrees must be non-negative")
            c = Fraction(c)
            if c:
                clean[k] = clean.get(k, 0) + c
        self._terms = {k: c for k, c in sorted(clean.items()) if c}

    # construction helpers
    @classmethod
    def constant(cls, alpha, c=1) -> AlphaPoly:
        return cls(alpha, {0: c})

    @classmethod
    def monomial(cls, alpha, degree: int, c=1) -> AlphaPoly:
        return cls(alpha, {degree: c})

    @classmethod
    def from_coefficients(cls, alpha, coeffs) -> AlphaPoly:
        """Build from a dense low-to-high coefficient sequence."""
        return cls(alpha, dict(enumerate(coeffs)))

    @property
    def alpha(self) -> Fraction:
        return self._alpha

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    @property
    def degree(self) -> int:
        """Highest degree present; -1 for the zero polynomial."""
        return max(self._terms) if self._terms else -1

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def coefficients(self) -> list[Fraction]:
        """Dense coefficient list, lowest degree first."""
        return [self.coefficient(k) for k in range(self.degree + 1)]

    def _check(self, other: AlphaPoly) -> None:
        if self._alpha != other._alpha:
            raise IncompatibleAlphaError(
                f"cannot combine polynomials with alpha={self._alpha} and alpha={other._alpha}"
            )

    def _coerce(self, other) -> AlphaPoly:
        if isinstance(other, AlphaPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return AlphaPoly.constant(self._alpha, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return AlphaPoly(self._alpha, out)

    __radd__ = __add__

    def __neg__(self):
        return AlphaPoly(self._alpha, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return AlphaPoly(self._alpha, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return poly_pow(self, n)

    def __eq__(self, other):
        if isinstance(other, AlphaPoly):
            return self._alpha == other._alpha and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == AlphaPoly.constant(self._alpha, other)._terms
        return NotImplemented

    def __hash__(self):
        return hash((self._alpha, tuple(self._terms.items())))

    def __call__(self, u):
        return evaluate_at_u(self, u)

    def __repr__(self):
        if not self._terms:
            body = "0"
        else:
            parts = []
            for k, c in sorted(self._terms.items(), reverse=True):
                mono = "" if k == 0 else ("u" if k == 1 else f"u^{k}")
                if k and c == 1:
                    parts.append(mono)
                elif k and c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{c}" + (f"*{mono}" if mono else ""))
            body = " + ".join(parts).replace("+ -", "- ")
        return f"AlphaPoly(alpha={self._alpha}, {body})"

    def divmod_one_minus_u2(self) -> tuple[AlphaPoly, AlphaPoly]:
        """Exact division by ``1 - u**2``; returns (quotient, remainder)."""
        rem = dict(self._terms)
        quot: dict[int, Fraction] = {}
        deg = self.degree
        while deg >= 2:
            c = rem.pop(deg, Fraction(0))
            if c:
                # c*u^deg = -c*u^(deg-2) * (1 - u^2) + c*u^(deg-2)
                quot[deg - 2] = -c
                rem[deg - 2] = rem.get(deg - 2, 0) + c
            deg -= 1
        return AlphaPoly(self._alpha, quot), AlphaPoly(self._alpha, rem)


def poly_add(p: AlphaPoly, q: AlphaPoly) -> AlphaPoly:
    p._check(q)
    return p + q


def poly_mul(p: AlphaPoly, q: AlphaPoly) -> AlphaPoly:
    p._check(q)
    return p * q


def poly_pow(p: AlphaPoly, n: int) -> AlphaPoly:
    if n < 0:
        raise ValueError("power must be non-negative")
    result = AlphaPoly.constant(p.alpha, 1)
    base = p
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def conformable_derive(p: AlphaPoly) -> AlphaPoly:
    """Power rule: ``D^a u**k = a*k*u**(k-1)``."""
    a = p.alpha
    return AlphaPoly(a, {k - 1: c * a * k for k, c in p.terms.items() if k > 0})


def conformable_derive_n(p: AlphaPoly, k: int) -> AlphaPoly:
    """Apply :func:`conformable_derive` ``k`` times."""
    if k < 0:
        raise ValueError("derivative order must be non-negative")
    for _ in range(k):
        if p.is_zero():
            break
        p = conformable_derive(p)
    return p


def leibniz_expand(p: AlphaPoly, q: AlphaPoly, n: int) -> AlphaPoly:
    """``D^{n a}(p q)`` via the general Leibniz rule.

    Each summand ``C(n, k) D^{(n-k)a} p * D^{k a} q`` is formed separately, so
    the result is an independent route to ``conformable_derive_n(p*q, n)``.
    """
    p._check(q)
    total = AlphaPoly(p.alpha)
    dq = q
    for k in range(n + 1):
        total = total + comb(n, k) * conformable_derive_n(p, n - k) * dq
        dq = conformable_derive(dq)
    return total


def limit_derivative(f, t, alpha, eps=1e-6, richardson: bool = False):
    """Finite-``eps`` conformable difference quotient.

    Computes ``(f(t + eps*t**(1-alpha)) - f(t)) / eps``. Works with any scalar
    type supporting the arithmetic (floats, complex, ``mpmath.mpf``). With
    ``richardson=True`` the O(eps) term is cancelled using a half step.
    """
    if t <= 0:
        raise ValueError("limit_derivative requires t > 0")
    a = as_alpha(alpha)
    expo = 1 - (type(t)(a.numerator) / a.denominator if _is_mp(t) else float(a))
    shift = t**expo

    def quotient(h):
        return (f(t + h * shift) - f(t)) / h

    if richardson:
        return 2 * quotient(eps / 2) - quotient(eps)
    return quotient(eps)


def _is_mp(x) -> bool:
    return type(x).__module__.startswith("mpmath")


def evaluate_at_u(p: AlphaPoly, u):
    """Horner evaluation in floating point; ``u`` may be a numpy array."""
    coeffs = [float(c) for c in p.coefficients()]
    if not coeffs:
        return np.zeros_like(u, dtype=float) if isinstance(u, np.ndarray) else 0.0
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * u + c
    if isinstance(u, np.ndarray) and not isinstance(acc, np.ndarray):
        acc = np.full_like(u, acc, dtype=float)
    return acc


def evaluate_at_t(p: AlphaPoly, t):
    """Evaluate at ``u = t**alpha``; ``t`` must be non-negative."""
    if np.any(np.asarray(t) < 0):
        raise ValueError("evaluate_at_t requires t >= 0")
    return evaluate_at_u(p, np.power(t, float(p.alpha)))
