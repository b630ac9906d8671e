"""Monochromatic vertex-connection number: exact solver, bounds, extremal families and checks."""

from .bounds import (
    BoundsReport,
    TreeWitness,
    bounds_report,
    cycle_mvc,
    diameter_upper_bound,
    lower_bound_spanning_tree,
    max_diameter,
    max_leaf_spanning_tree,
    min_degree_lower_bound,
)
from .coloring import (
    VertexColoring,
    WasteAccount,
    is_mvc_coloring,
    normalize_connected_classes,
    spanning_tree_coloring,
    unserved_pair,
    waste,
)
from .enumeration import CapabilityError, canonical_form, enumerate_connected, ingest_corpus
from .extremal import EGReport, FamilySpec, construct, eg_lower_bound, f_v, g_v, verify_erdos_gallai
from .graph import (
    DISCONNECTED,
    DistanceMatrix,
    Graph,
    complement,
    degree_stats,
    diameter,
    distances,
    is_connected,
    parse_graph6,
    write_graph6,
)
from .harness import CheckReport, run_check
from .nordhaus_gaddum import NGRecord, ng_sum, verify_ng
from .solver import SolverResult, mvc_exact, mvc_oracle

__all__ = [name for name in dir() if not name.startswith("_")]
