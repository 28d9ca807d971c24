"""drgwb: exact feasibility screens for distance-regular graphs with
classical parameters, and Terwilliger-algebra tools for small graphs."""

from .exact import RationalMatrix, char_poly, rational_roots
from .feasibility import alpha_classification, family1_eliminate, family2_eliminate, integrality_screen
from .graphs import Graph, from_edge_list, is_distance_regular
from .params import ClassicalParams, IntersectionArray, intersection_array, p_hij, spectrum
from .sweep import conjecture_sweep
from .talg import build_context, decompose
from .uniform import solve_uniform, supports_uniform

__version__ = "0.1.0"

__all__ = [
    "RationalMatrix",
    "char_poly",
    "rational_roots",
    "ClassicalParams",
    "IntersectionArray",
    "intersection_array",
    "p_hij",
    "spectrum",
    "integrality_screen",
    "alpha_classification",
    "family1_eliminate",
    "family2_eliminate",
    "conjecture_sweep",
    "Graph",
    "from_edge_list",
    "is_distance_regular",
    "build_context",
    "decompose",
    "solve_uniform",
    "supports_uniform",
]
