"""Bondage numbers of graphs, degree and surface bounds, and a harness that
replays the published numeric claims."""
from .bounds import (
    InapplicableError,
    bounds_report,
    constant_bound,
    degree_based_bounds,
    domination_chi_bounds,
    gz11_bound,
    order_lower_bound,
    samczech_check,
    sanchis_edge_max,
)
from .families import FamilySpec, make_family
from .graph import Graph, GraphError, degree_profile, from_graph6, to_graph6
from .harness import corpus_scan, counterexample_search, enumerate_small_graphs, run_claim_suite
from .solvers import (
    BondageResult,
    BoundViolatedError,
    BudgetExceededError,
    HypothesisError,
    bondage_number,
    domination_number,
    independence_number,
)
from .surfaces import EmbeddingInfo, is_planar, kn_genus, parse_surface

__version__ = "0.1.0"
