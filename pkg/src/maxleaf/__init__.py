"""Maximum-leaf spanning trees: linear-time greedy solver with a per-run
quality certificate, plus an exact brute-force oracle for desk-scale graphs."""

from .certificate import (Certificate, CertificateError, LemmaReport, RankForest,
                          assign_ranks, build_forest, certify, check_lemmas,
                          compute_certificate)
from .generate import FAMILIES, InfeasibleSpecError, InstanceSpec, generate
from .graph import (Graph, GraphFormatError, is_connected, parse, serialize,
                    to_dot)
from .oracle import CompareResult, OracleResult, compare, max_leaf_exact
from .solver import (DisconnectedGraphError, ExpansionStep, ExpansionTrace,
                     SpanningTree, StartPolicy, TreeCheck, leaf_count,
                     pick_start, tree, verify_spanning_tree)
from .tightness import TightInstance, TightSearchResult, tight_search

__all__ = [
    "Certificate", "CertificateError", "LemmaReport", "RankForest",
    "assign_ranks", "build_forest", "certify", "check_lemmas",
    "compute_certificate",
    "FAMILIES", "InfeasibleSpecError", "InstanceSpec", "generate",
    "Graph", "GraphFormatError", "is_connected", "parse", "serialize", "to_dot",
    "CompareResult", "OracleResult", "compare", "max_leaf_exact",
    "DisconnectedGraphError", "ExpansionStep", "ExpansionTrace",
    "SpanningTree", "StartPolicy", "TreeCheck", "leaf_count", "pick_start",
    "tree", "verify_spanning_tree",
    "TightInstance", "TightSearchResult", "tight_search",
]

__version__ = "0.1.0"
