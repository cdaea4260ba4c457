"""Distance-2 coloring of planar graphs of maximum degree three."""

from dist2color._core import (
    Graph,
    color_graph,
    distance2_neighbors,
    exact_chromatic2,
    fixture_names,
    from_document,
    generate,
    girth,
    is_planar,
    is_subcubic,
    square,
    to_document,
    verify_coloring,
)

__all__ = [
    "Graph",
    "color_graph",
    "distance2_neighbors",
    "exact_chromatic2",
    "fixture_names",
    "from_document",
    "generate",
    "girth",
    "is_planar",
    "is_subcubic",
    "square",
    "to_document",
    "verify_coloring",
]
