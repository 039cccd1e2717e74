"""Conformable (order 0 < alpha <= 1) associated Legendre functions and spherical harmonics."""

from .alpha_calculus import (
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
from .harmonics import (
    AngularPoint,
    IllConditionedPointError,
    SphericalHarmonic,
    TableMismatchError,
    angular_eigenvalue,
    azimuthal_residual,
    conjugation_check,
    density,
    harmonic_evaluate,
    make_harmonic,
    normalization_constant,
    table_closed_forms,
)
from .legendre import (
    AssociatedLegendre,
    OdeResidualReport,
    SingularPointError,
    classical_compare,
    legendre_evaluate,
    negative_m_factor,
    ode_residual,
    rodrigues,
)
from .quadrature import (
    ConformableMeasure,
    GramReport,
    QuadratureRule,
    conformable_integrate,
    gram_matrix,
    legendre_orthogonality,
    solid_angle_integrate,
)

__version__ = "0.1.0"
