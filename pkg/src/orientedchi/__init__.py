"""Oriented chromatic numbers: exact search, ocliques and bounds."""

from .bounds import bounds_report, hypercube_bracket, ksz_lower, lemma3_lower, lemma4_lower, lemma5_lower, solve_t
from .chromatic import (
    Colouring,
    SearchResult,
    harmonious_exact,
    harmonious_greedy,
    is_harmonious,
    is_oriented_colouring,
    ochi_exact,
    ochi_graph_exact,
    ochi_heuristic,
)
from .diameter import is_oclique, lemma2_digraph, moore_check, pair_diameter, verify_lemma2
from .graph import (
    GraphError,
    OrientedGraph,
    UndirectedGraph,
    build_graph,
    build_oriented,
    enumerate_orientations,
    gen_basic,
    gen_hypercube,
    gen_k11n_oriented,
    orient,
    random_orientation,
    underlying,
)

__version__ = "0.1.0"
