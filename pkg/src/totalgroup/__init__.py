"""Group colouring and group choosability of total graphs, with exact checkers."""

__version__ = "0.1.0"

from ._accel import backend
from .derived import line_graph, total_graph
from .graph import Graph, Orientation, build_graph, generate, orient
from .groups import Group, make_group
from .ordering import blocks, coloring_number

__all__ = [
    "Graph",
    "Group",
    "Orientation",
    "__version__",
    "backend",
    "blocks",
    "build_graph",
    "coloring_number",
    "generate",
    "line_graph",
    "make_group",
    "orient",
    "total_graph",
]
