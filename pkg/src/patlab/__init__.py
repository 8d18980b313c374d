"""
patlab: exact enumeration and cross-validation of consecutive-pattern-avoiding
permutations, weighted by left-to-right minima and descents.

The package computes the weight polynomials NM_n(x, y) of the permutations
with no consecutive match of a forbidden pattern set, and the reciprocal
polynomials u_n(y) underneath them, by three independent routes (direct
enumeration plus series reciprocity, a signed sum over brick compositions,
and per-family recursions), and ships the machinery to cross-check them:
a split/merge involution on filled brick tabloids, Catalan-band
determinants matched against linear-extension counts of match posets, and
reference tables the results are compared against.
"""
from .permutations import (
    PatternSet,
    descent_count,
    descent_set,
    enumerate_avoiders,
    gamma_match_count,
    gamma_match_starts,
    lr_minima,
    lr_minima_count,
    nm_polynomial,
    reduce_word,
)
from .polynomials import ConsistencyError, EgfSeries, XYPoly, YPoly
from .posets import (
    Poset,
    build_match_poset,
    catalan,
    det_m,
    det_p,
    tau_a_pattern,
)
from .reciprocity import nm_from_u, u_from_bruteforce, u_via_brick_sum
from .recursions import (
    FamilySpec,
    conformance_report,
    u_closed_1324_123,
    u_closed_gamma222,
    u_sequence,
)
from .tabloids import (
    FilledTabloid,
    check_lemma_conditions,
    count_brick_tabloids,
    enumerate_O,
    fixed_points,
    involution_J,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError", "EgfSeries", "FamilySpec", "FilledTabloid", "PatternSet",
    "Poset", "XYPoly", "YPoly", "build_match_poset", "catalan",
    "check_lemma_conditions", "conformance_report", "count_brick_tabloids",
    "descent_count", "descent_set", "det_m", "det_p", "enumerate_O",
    "enumerate_avoiders", "fixed_points", "gamma_match_count",
    "gamma_match_starts", "involution_J", "lr_minima", "lr_minima_count",
    "nm_from_u", "nm_polynomial", "reduce_word", "tau_a_pattern",
    "u_closed_1324_123", "u_closed_gamma222", "u_from_bruteforce",
    "u_sequence", "u_via_brick_sum",
]
