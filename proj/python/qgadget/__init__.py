"""Quadratization gadgets, hardware embedding and annealing."""

from ._core import (
    Error,
    Gadget,
    GadgetGraph,
    HostGraph,
    Polynomial,
    brute_force_minimum,
    builtin_gadget,
    catalog_graph,
    catalog_names,
    chimera,
    classify_graph,
    factor,
    min_aux,
    pegasus,
    quadratize,
    recommend,
    registry,
    solve,
    synthesize,
    tables,
)

__all__ = [
    "Error",
    "Gadget",
    "GadgetGraph",
    "HostGraph",
    "Polynomial",
    "brute_force_minimum",
    "builtin_gadget",
    "catalog_graph",
    "catalog_names",
    "chimera",
    "classify_graph",
    "factor",
    "min_aux",
    "pegasus",
    "quadratize",
    "recommend",
    "registry",
    "solve",
    "synthesize",
    "tables",
]
