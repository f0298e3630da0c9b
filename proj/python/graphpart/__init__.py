"""Graph-partition recognition toolkit.

Decides whether a graph splits into two vertex sets with prescribed
structure (monopolar partitions, 2-subcolorings with a bounded number of
clusters, generic pairs of hereditary properties), returns machine-checkable
certificates, and ships brute-force oracles for cross-validation.
"""

from ._graphpart import (
    GraphpartError,
    format_graph,
    generate_gnp,
    generate_planted,
    oracle,
    parse_graph,
    recognize,
    recognize_generic,
    solve_twosat,
    verify,
)

__all__ = [
    "GraphpartError",
    "format_graph",
    "generate_gnp",
    "generate_planted",
    "oracle",
    "parse_graph",
    "recognize",
    "recognize_generic",
    "solve_twosat",
    "verify",
]
