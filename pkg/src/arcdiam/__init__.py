"""Arc-transitive diameter-2 graphs: Hamming graphs H(2, q), projective flag
graphs over PG(d-1, q), their certification, and degree-diameter bounds."""

__version__ = "0.1.0"

from .gf import make_field  # noqa: E402
from .projgeom import build_geometry  # noqa: E402
from .graphcore import Graph, diameter, girth, regularity, arcs  # noqa: E402
from .constructions import FlagAdjacencyVariant, flag_graph, hamming2  # noqa: E402

__all__ = [
    "make_field", "build_geometry", "Graph", "diameter", "girth",
    "regularity", "arcs", "FlagAdjacencyVariant", "flag_graph", "hamming2",
]
