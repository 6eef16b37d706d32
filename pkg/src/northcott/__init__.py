"""Certified heights, number-field discriminants and Northcott-type criteria."""

from .config import Config
from .criteria import (
    BZData,
    TowerSpec,
    bz_partial_sum,
    gamma_lower_bound,
    radical_tower_check,
    silverman_bound,
    tame_exponent_check,
    tower_terms,
    verify_silverman,
)
from .enumeration import EnumerationRequest, EnumerationResult, count_degree1, enumerate_bounded
from .errors import (
    BudgetExceeded,
    CapExceeded,
    Inconclusive,
    IndexObstruction,
    InvalidInput,
    NorthcottError,
)
from .factor import factor_over_Z, is_irreducible
from .heights import AlgebraicNumber, complex_roots, mahler_measure, weil_height
from .interval import Interval
from .numfield import (
    Embedding,
    NumberField,
    check_embedding,
    compositum,
    find_embeddings,
    nf_arith,
    nf_create,
    rel_disc_norm,
    splitting,
)
from .poly import IntPoly, parse_poly, poly_discriminant, poly_gcd, resultant

__version__ = "0.1.0"
