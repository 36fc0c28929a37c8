"""Exact arithmetic for the second weighted Bartholdi zeta function of a graph.

Determinant forms of the zeta reciprocal, weighted complexity, resistance
distances and weighted Kirchhoff indices, the partial-derivative identities
that tie them together, and the corresponding formulas for regular coverings
built from voltage assignments.
"""

from .algebra import BiPoly, LaurentPoly, Rational, bareiss_det, substitute_curve
from .covering import CoveringSpec, covering_spec, derived_graph, parse_voltage, verify_covering
from .derivatives import (
    curve_report,
    verify_corollary1,
    verify_hashimoto_northshield,
    verify_specializations,
    verify_theorem13,
    verify_theorems_11_12,
)
from .errors import (
    CoveringError,
    DisconnectedCoverError,
    DivisibilityError,
    ParseError,
    PreconditionError,
    SimplicityError,
    SingularError,
    ValidationError,
    ZetaKirchError,
)
from .graph import WeightedGraph, complete_graph, cycle_graph, parse_graph, path_graph, to_wgr
from .groups import builtin_group
from .spanning import brute_force_complexity, kirchhoff_report, resistance_distance, weighted_complexity
from .zeta import f_w_poly, theorem10_check, zeta_edge_reciprocal, zeta_vertex_reciprocal

__version__ = "0.1.0"
