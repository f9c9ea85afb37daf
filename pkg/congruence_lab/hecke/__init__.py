from .meta import FormMeta, chi_star, eigen_scalar, eigen_scalar_is_one
from .operators import (
    hecke_apply,
    hecke_half,
    hecke_int,
    hecke_iterate,
    iterated_precision,
    legendre_vector,
)

__all__ = [
    "FormMeta",
    "chi_star",
    "eigen_scalar",
    "eigen_scalar_is_one",
    "hecke_apply",
    "hecke_half",
    "hecke_int",
    "hecke_iterate",
    "iterated_precision",
    "legendre_vector",
]
