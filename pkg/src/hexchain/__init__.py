"""Wiener indices of spiro and polyphenyl hexagonal chains.

A chain of n hexagons is described by a code word over {O, M, P} of
length n - 2, read up to reversal.  The package builds the two chain
graphs a code describes, computes their Wiener index by breadth-first
search, by a growth recurrence, by a closed form and (for one-letter
codes) by cubic polynomials, enumerates and counts all chains of a
length, ranks extremal ones, and cross-checks every identity tying
these routes together.
"""

from .codes import (
    LETTER_RANK,
    LETTERS,
    RING_DISTANCE,
    CodeError,
    CodeWord,
    canonicalize,
    parse_code,
    random_code,
    squeeze_code,
)
from .enumeration import (
    DEFAULT_MAX_N,
    ChainCensus,
    ExtremalEntry,
    ExtremalRanking,
    LimitError,
    TheoremCheck,
    average_wiener,
    count_chains,
    enumerate_chains,
    exhaustive_limit,
    matches_theorem,
    predicted_extremal_codes,
    rank_extremal,
)
from .graphs import (
    ChainGraph,
    ChainKind,
    build_chain,
    build_polyphenyl,
    build_spiro,
    squeeze_graph,
)
from .verify import CheckResult, VerificationReport, run_verification
from .wiener import (
    METHODS,
    SqueezeError,
    WienerReport,
    compute_report,
    poly_weight,
    spiro_weight,
    squeeze_relation,
    vertex_distance_sum,
    wiener_bfs,
    wiener_closed,
    wiener_homogeneous,
    wiener_poly_closed,
    wiener_poly_recurrence,
    wiener_recurrence,
    wiener_spiro_closed,
    wiener_spiro_recurrence,
)

__version__ = "0.1.0"

__all__ = [
    "LETTERS",
    "LETTER_RANK",
    "RING_DISTANCE",
    "CodeError",
    "CodeWord",
    "canonicalize",
    "parse_code",
    "random_code",
    "squeeze_code",
    "ChainGraph",
    "ChainKind",
    "build_chain",
    "build_polyphenyl",
    "build_spiro",
    "squeeze_graph",
    "METHODS",
    "SqueezeError",
    "WienerReport",
    "compute_report",
    "poly_weight",
    "spiro_weight",
    "squeeze_relation",
    "vertex_distance_sum",
    "wiener_bfs",
    "wiener_closed",
    "wiener_homogeneous",
    "wiener_poly_closed",
    "wiener_poly_recurrence",
    "wiener_recurrence",
    "wiener_spiro_closed",
    "wiener_spiro_recurrence",
    "DEFAULT_MAX_N",
    "ChainCensus",
    "ExtremalEntry",
    "ExtremalRanking",
    "LimitError",
    "TheoremCheck",
    "average_wiener",
    "count_chains",
    "enumerate_chains",
    "exhaustive_limit",
    "matches_theorem",
    "predicted_extremal_codes",
    "rank_extremal",
    "CheckResult",
    "VerificationReport",
    "run_verification",
    "__version__",
]
