"""Exact toughness and structural verification toolkit for small graphs.

Everything is exact: toughness values are Fractions, thresholds are parsed
from "p/q" text, and no float ever enters a comparison.  Hot component
kernels run compiled when the extension is available and fall back to pure
Python otherwise; set GTOUGH_BACKEND=python|compiled to force one.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as KERNEL_BACKEND
from ._kernels import backends, has_compiled
from .common import ClauseVerdict, as_fraction, ceil_fraction, fraction_str
from .graphs import (
    REMOVED,
    Graph,
    Graph6ParseError,
    components_after_removal,
    degree_profile,
    is_bridge,
    iter_graph6_lines,
    mask_of,
    parse_graph6,
    tuple_of,
    write_graph6,
)
from .canon import are_isomorphic, canonical_graph, canonical_key
from .connectivity import (
    AtomRecord,
    CompleteGraphError,
    ConnectivityResult,
    all_min_cuts,
    atoms,
    check_mader_atom_property,
    min_cuts_containing,
    vertex_connectivity,
    vertex_connectivity_bruteforce,
)
from .toughness import (
    DecompositionStats,
    DecompositionUndefinedError,
    EdgeCertificate,
    MinimalityResult,
    NoCertificateError,
    Toughness,
    all_edge_certificates,
    certificate_decomposition_stats,
    edge_certificate,
    is_minimally_t_tough,
    is_t_tough,
    toughness,
    toughness_bruteforce,
)
from .structure import (
    CLAUSE_IDS,
    Claw,
    DegreeBoundReport,
    certificate_clauses,
    check_degree_bound,
    check_endpoint_cuts,
    check_half_tough_construction,
    check_matthews_sumner,
    find_claw,
    invert_half_tough,
    is_claw_free,
)
from .generators import (
    InvalidTreeError,
    TreeSpec,
    build_half_tough,
    enumerate_connected,
    enumerate_graphs,
    enumerate_trees,
    half_tough_family,
    make_complete,
    make_cycle,
    make_net,
    make_path,
    make_petersen,
    make_star,
)
from .scan import (
    CHECK_TOKENS,
    FILTER_TOKENS,
    ScanConfig,
    ScanRecord,
    ScanReport,
    StrictScanError,
    analyze_graph,
    revalidate_counterexample,
    scan_lines,
)

__all__ = [
    "__version__",
    "KERNEL_BACKEND",
    "backends",
    "has_compiled",
    "ClauseVerdict",
    "as_fraction",
    "ceil_fraction",
    "fraction_str",
    "REMOVED",
    "Graph",
    "Graph6ParseError",
    "components_after_removal",
    "degree_profile",
    "is_bridge",
    "iter_graph6_lines",
    "mask_of",
    "parse_graph6",
    "tuple_of",
    "write_graph6",
    "are_isomorphic",
    "canonical_graph",
    "canonical_key",
    "AtomRecord",
    "CompleteGraphError",
    "ConnectivityResult",
    "all_min_cuts",
    "atoms",
    "check_mader_atom_property",
    "min_cuts_containing",
    "vertex_connectivity",
    "vertex_connectivity_bruteforce",
    "DecompositionStats",
    "DecompositionUndefinedError",
    "EdgeCertificate",
    "MinimalityResult",
    "NoCertificateError",
    "Toughness",
    "all_edge_certificates",
    "certificate_decomposition_stats",
    "edge_certificate",
    "is_minimally_t_tough",
    "is_t_tough",
    "toughness",
    "toughness_bruteforce",
    "CLAUSE_IDS",
    "Claw",
    "DegreeBoundReport",
    "certificate_clauses",
    "check_degree_bound",
    "check_endpoint_cuts",
    "check_half_tough_construction",
    "check_matthews_sumner",
    "find_claw",
    "invert_half_tough",
    "is_claw_free",
    "InvalidTreeError",
    "TreeSpec",
    "build_half_tough",
    "enumerate_connected",
    "enumerate_graphs",
    "enumerate_trees",
    "half_tough_family",
    "make_complete",
    "make_cycle",
    "make_net",
    "make_path",
    "make_petersen",
    "make_star",
    "CHECK_TOKENS",
    "FILTER_TOKENS",
    "ScanConfig",
    "ScanRecord",
    "ScanReport",
    "StrictScanError",
    "analyze_graph",
    "revalidate_counterexample",
    "scan_lines",
]
