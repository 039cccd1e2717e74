"""
Conformable Legendre functions from the Rodrigues formula
==========================================================

Build P_{l a}^{m a} exactly, look at what the conformable derivative does to
the coefficients, and regenerate the l <= 2 closed forms of Y_{l a}^{m a}.
"""
from fractions import Fraction

from conformable_harmonics import conformable_derive_n, negative_m_factor, rodrigues
from conformable_harmonics.alpha_calculus import AlphaPoly
from conformable_harmonics.harmonics import render_row, table_closed_forms

alpha = Fraction(1, 2)

# The conformable derivative acts on u = x^alpha as alpha * d/du, so
# every derivative of (u^2 - 1)^l picks up one factor of alpha.
base = AlphaPoly(alpha, {0: -1, 2: 1}) ** 2
for k in range(5):
    print(f"D^({k}a) (u^2-1)^2 =", conformable_derive_n(base, k))

# Rodrigues: the alpha^(l+m) from the derivatives against 1/alpha^l in the
# prefactor leaves P_{l a}^{m a} = alpha^m * (classical P_l^m).
for m in range(-2, 3):
    P = rodrigues(2, m, alpha)
    print(f"P_2^{m}: (1-u^2)^({P.edge_exponent}/2) *", P.body)

# Negative m is a rational multiple of positive m.
print("P_2^-1 / P_2^1 =", negative_m_factor(2, 1, alpha))

# The nine low-order harmonics, checked against the hard-coded closed forms.
for row in table_closed_forms():
    print(f"l={row.l} m={row.m:+d}:", render_row(row))
