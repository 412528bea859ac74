"""Exact cycle index series of combinatorial species.

Series are lazy streams of homogeneous power-sum polynomials with exact
rational coefficients.  The package provides the usual species operations
(sum, product, plethysm, derivative, pointing, compositional inverse), a
catalog of standard species, group actions on species with their quotients,
the point-determining bipartite graph pipeline, and a brute-force oracle on
small labeled structures.
"""

from ._kernels import available_backends, current_backend, use_backend
from .partitions import Partition, partitions, z_aut
from .powersum import PowerSumPoly, format_poly, parse_poly
from .series import (
    CompositionError,
    CycleIndexSeries,
    NonIntegralCountError,
    SeriesError,
    SeriesHandle,
    UndefinedSeriesError,
    UnguardedRecursionError,
    cis_comp_inverse,
    cis_compose,
    cis_derivative,
    cis_mul,
    cis_point,
    define,
    egf_coefficient,
    labeled_count,
    tgf_coefficient,
    unlabeled_count,
)
from . import catalog

__all__ = [
    "available_backends", "current_backend", "use_backend",
    "Partition", "partitions", "z_aut",
    "PowerSumPoly", "format_poly", "parse_poly",
    "CompositionError", "CycleIndexSeries", "NonIntegralCountError", "SeriesError",
    "SeriesHandle", "UndefinedSeriesError", "UnguardedRecursionError",
    "cis_comp_inverse", "cis_compose", "cis_derivative", "cis_mul", "cis_point",
    "define", "egf_coefficient", "labeled_count", "tgf_coefficient", "unlabeled_count",
    "catalog",
]
