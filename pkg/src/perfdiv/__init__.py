"""Exact, desk-scale tools for perfect divisibility of graphs.

Vertex sets are Python ints used as bitmasks (bit ``v`` set means vertex
``v`` is a member); graphs are immutable adjacency bit-rows.
"""

from ._version import __version__
from .catalog import complete, cycle, empty, groetzsch, mycielski, path, pattern
from .corpus import canonical_code, corpus_upto, enumerate_graphs, is_isomorphic
from .divisibility import (
    Certificate,
    Division,
    certify_minimal,
    division_through_vertex,
    find_division,
    is_divisible,
    refine_cutset_divisions,
    validate_division,
)
from .errors import CapabilityError, GraphError, ParseError, PreconditionError
from .formats import graph6, parse_graph6
from .graph import Graph, complement, induced, make_graph, members, to_mask
from .invariants import chromatic_number, clique_number, independence_number
from .perfection import is_perfect
from .structure import (
    basins,
    clique_cutsets,
    homogeneous_sets,
    simplicial_peeling,
    substitute,
    weight_expand,
)

__all__ = [
    "__version__", "Graph", "make_graph", "complement", "induced", "members", "to_mask",
    "path", "cycle", "complete", "empty", "mycielski", "groetzsch", "pattern",
    "graph6", "parse_graph6", "canonical_code", "corpus_upto", "enumerate_graphs", "is_isomorphic",
    "clique_number", "independence_number", "chromatic_number", "is_perfect",
    "homogeneous_sets", "clique_cutsets", "simplicial_peeling", "basins", "substitute", "weight_expand",
    "Division", "Certificate", "is_divisible", "certify_minimal", "find_division",
    "validate_division", "division_through_vertex", "refine_cutset_divisions",
    "GraphError", "ParseError", "CapabilityError", "PreconditionError",
]
