"""The two witness families: Hamming graphs H(2, q) and projective flag
graphs on the (point, line)-flags of PG(d-1, q)."""

from __future__ import annotations

import enum
from typing import Tuple

import numpy as np

from .errors import InexactDivision, ParameterTooSmall
from .graphcore import Graph, from_neighbor_rows
from .projgeom import Geometry, build_geometry

__all__ = [
    "FlagAdjacencyVariant", "hamming2", "flag_graph", "predicted_params",
    "as_stated_degree", "flag_labels",
]


class FlagAdjacencyVariant(enum.Enum):
    """How two flags (s, L), (t, N) on intersecting lines L != N meeting in p
    are joined.

    AS_STATED joins every such pair.  DEGREE_CONSISTENT additionally requires
    s != p and t != p; this is the variant whose degree is q^3 (q^(d-2) - 1) /
    (q - 1), and the package default.
    """

    AS_STATED = "as-stated"
    DEGREE_CONSISTENT = "degree-consistent"

    @classmethod
    def parse(cls, value) -> "FlagAdjacencyVariant":
        if isinstance(value, cls):
            return value
        return cls(str(value).lower().replace("_", "-"))


def hamming2(q: int) -> Graph:
    """H(2, q): vertices Z_q x Z_q, adjacent iff they differ in one coordinate.

    Vertex ``a * q + b`` carries label ``"(a,b)"``.
    """
    if q < 2:
        raise ParameterTooSmall(f"q = {q}; H(2, q) needs q >= 2")
    a, b = np.divmod(np.arange(q * q), q)
    other = np.arange(q)
    # same row (a fixed, b' != b) and same column (b fixed, a' != a)
    row = a[:, None] * q + other[None, :]
    col = other[None, :] * q + b[:, None]
    rows = np.concatenate([row, col], axis=1)
    keep = rows != np.arange(q * q)[:, None]
    rows = rows[keep].reshape(q * q, 2 * (q - 1))
    labels = [f"({x},{y})" for x, y in zip(a.tolist(), b.tolist())]
    return from_neighbor_rows(rows, labels)


def predicted_params(d: int, q: int) -> Tuple[int, int]:
    """(order, degree) of the flag graph from the closed forms."""
    order_num = (q ** d - 1) * (q ** (d - 1) - 1)
    degree_num = q ** 3 * (q ** (d - 2) - 1)
    if order_num % (q - 1) ** 2 or degree_num % (q - 1):
        raise InexactDivision(f"closed forms not integral at d={d}, q={q}")
    return order_num // (q - 1) ** 2, degree_num // (q - 1)


def as_stated_degree(d: int, q: int) -> int:
    """Degree of the AS_STATED variant.

    q+1 choices of p on L, q (q^(d-2) - 1) / (q - 1) lines N != L through p,
    q+1 choices of t on N; no neighbor is counted twice since distinct lines
    share at most one point.
    """
    return q * (q + 1) ** 2 * (q ** (d - 2) - 1) // (q - 1)


def flag_labels(geom: Geometry):
    return [f"{geom.points[f.point_id].coords}|{geom.lines[f.line_id].basis}"
            .replace(" ", "") for f in geom.flags]


def flag_graph(d: int, q: int,
               variant=FlagAdjacencyVariant.DEGREE_CONSISTENT) -> Graph:
    """Projective flag graph on the flags of PG(d-1, q).

    Vertices follow the flag enumeration of :func:`build_geometry`.  For each
    flag (s, L) the neighbors are generated directly: pick p on L, a line
    N != L through p, and a point t on N, so the work is O(degree) per vertex.
    """
    variant = FlagAdjacencyVariant.parse(variant)
    geom = build_geometry(d, q)
    n = len(geom.flags)
    r = geom.lines_per_point
    flag_pt = np.fromiter((f.point_id for f in geom.flags), np.int64, n)
    flag_ln = np.fromiter((f.line_id for f in geom.flags), np.int64, n)
    strict = variant is FlagAdjacencyVariant.DEGREE_CONSISTENT

    # fan[f] for f = (p, L): all flags (t, N) with p on N, N != L, and t != p
    # when strict.  Shape (n, (r - 1) * width).
    others = geom.point_lines[flag_pt]                           # (n, r)
    others = others[others != flag_ln[:, None]].reshape(n, r - 1)
    pts_on = geom.line_points[others]                            # (n, r-1, q+1)
    if strict:
        mask = pts_on != flag_pt[:, None, None]
        pts_on = pts_on[mask].reshape(n, r - 1, q)
    lines_b = np.broadcast_to(others[:, :, None], pts_on.shape)
    fan = geom.flag_table[pts_on, lines_b].reshape(n, -1)

    # neighbors of (s, L) = union of fan[(p, L)] over p on L (p != s if strict)
    on_line = geom.flag_table[geom.line_points[flag_ln], flag_ln[:, None]]
    if strict:
        on_line = on_line[on_line != np.arange(n)[:, None]].reshape(n, q)
    rows = fan[on_line].reshape(n, -1)
    return from_neighbor_rows(rows, flag_labels(geom))
