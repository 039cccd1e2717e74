"""
Orthonormality under the deformed measure
==========================================

d^a Omega = sin(theta^a) d^a theta d^a phi. Integrate products of harmonics
with it and watch the Gram matrix come out as the identity for every alpha.
"""
import math
from fractions import Fraction

import numpy as np

from conformable_harmonics.quadrature import (
    ConformableMeasure,
    conformable_integrate,
    direct_weighted_integrate,
    gram_matrix,
    legendre_orthogonality,
    paper_orthogonality_diagonal,
)

# 1-D: the phi range [0, 2 pi] has conformable length (2 pi)^a / a
for alpha in (Fraction(1, 4), Fraction(1, 2), Fraction(1)):
    a = float(alpha)
    M = ConformableMeasure(alpha, 0.0, 2 * math.pi)
    print(f"alpha={alpha}: int d^a phi = {conformable_integrate(lambda t: 1.0, M):.15f}",
          f"expected {(2 * math.pi) ** a / a:.15f}")

# the substitution route and a direct singular-weight quadrature agree
M = ConformableMeasure(Fraction(1, 4), 0.0, 3.0)
print("substitution:", conformable_integrate(np.cos, M), " direct:", direct_weighted_integrate(np.cos, M))

# the closed-form diagonal of the Legendre inner products
for l, m in [(0, 0), (2, 1), (4, -3)]:
    alpha = Fraction(3, 4)
    print(f"<P_{l}^{m}, P_{l}^{m}> = {legendre_orthogonality(l, l, m, alpha):.12f}",
          f"closed form {paper_orthogonality_diagonal(l, m, alpha):.12f}")

# Gram matrices of normalized harmonics
for alpha in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)):
    worst = max(gram_matrix(4, m, alpha).deviation for m in range(-4, 5))
    print(f"alpha={alpha}: max |G - I| over l<=4, all m = {worst:.2e}")

print(np.round(gram_matrix(4, 1, Fraction(1, 2)).matrix.real, 12))
