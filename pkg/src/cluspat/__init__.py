"""Exact engine for cluster patterns of geometric type.

Seed mutation, Laurent expansions, d- and g-vectors, and finite-instance
verification of positivity, proper-Laurent, independence and unimodularity
properties, all in exact integer arithmetic.
"""

from ._kernels import BACKEND
from .errors import ClusterEngineError, DimensionError, \
    LaurentViolationError, NotDivisibleError, NotExploredError, \
    NotPointedError, NotSkewSymmetrizableError, SeedFileError, \
    SpecializationError, UnknownVariableError, UnreducedWordError
from .laurent import LaurentPoly
from .pattern import ClusterMonomial, DMatrix, ExpansionTable, \
    ExploreBudget, ExploredPattern, GMatrix, VariableRegistry, explore, \
    tree_distance, tree_path
from .seed import ExchangeMatrix, Seed, find_symmetrizer, format_word, \
    mutate_coeffs
from .semifield import trop_add, trop_identity, trop_mul_pow, trop_one_plus
from .verify import VerificationReport, Witness, check_d_positive, \
    check_g_composition, check_g_injective, check_g_unimodular, \
    check_linear_independence, check_positive, check_proper_laurent, \
    distance, maximal_positive_subpattern

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ClusterEngineError", "DimensionError", "LaurentViolationError",
    "NotDivisibleError", "NotExploredError", "NotPointedError",
    "NotSkewSymmetrizableError", "SeedFileError", "SpecializationError",
    "UnknownVariableError", "UnreducedWordError",
    "LaurentPoly",
    "ClusterMonomial", "DMatrix", "ExpansionTable", "ExploreBudget",
    "ExploredPattern", "GMatrix", "VariableRegistry", "explore",
    "tree_distance", "tree_path",
    "ExchangeMatrix", "Seed", "find_symmetrizer", "format_word",
    "mutate_coeffs",
    "trop_add", "trop_identity", "trop_mul_pow", "trop_one_plus",
    "VerificationReport", "Witness", "check_d_positive",
    "check_g_composition", "check_g_injective", "check_g_unimodular",
    "check_linear_independence", "check_positive", "check_proper_laurent",
    "distance", "maximal_positive_subpattern",
    "__version__",
]
