"""Exact chromatic edge-stability computations on small graphs."""

from .coloring import Coloring, chromatic_number, is_k_colorable
from .errors import GraphFormatError, ParameterError, UndefinedInvariantError, UnsupportedOrderError
from .families import FamilyParams, FamilyTag, classify_family, enumerate_family_members, generate
from .graph import (
    Edge,
    Graph,
    OddCycleCensus,
    canonical_form,
    count_odd_cycles,
    delete_edges,
    is_bipartite,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .harness import ScanReport, enumerate_small_graphs, extend_census, graph_census, scan_stream, verify_theorem1
from .kernels import BACKEND
from .reduction import ReductionResult, bowtie, is_chromatic_critical, verify_reduction
from .stability import (
    CriticalityRecord,
    analyze,
    bipartite_edge_frustration,
    classify_critical,
    edge_stability,
    is_edge_stability_critical,
    recognize_32_critical_fast,
)
from .subdivision import PatternKind, SubdivisionEmbedding, find_any_proposition9_pattern, find_subdivision

__version__ = "0.1.0"
