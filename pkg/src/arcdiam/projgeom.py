"""Points, lines and (point, line)-flags of the projective space PG(d-1, q).

Points are 1-dimensional subspaces of GF(q)^d, stored left-normalized (first
nonzero coordinate equal to 1).  Lines are 2-dimensional subspaces, stored as
the reduced row echelon form of any basis.  Both representatives are unique,
so enumeration order and every index derived from it are reproducible.

Coordinates are integer field codes (see :mod:`arcdiam.gf`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionTooSmall, Identical, IndexOutOfRange
from .gf import FieldCtx, make_field

__all__ = [
    "ProjPoint", "ProjLine", "Flag", "Geometry", "rref", "rank",
    "canonical_point", "canonical_line", "build_geometry", "point_on_line",
    "intersect_lines", "lines_through", "num_points", "num_lines",
]

Vector = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class ProjPoint:
    coords: Vector


@dataclass(frozen=True, order=True)
class ProjLine:
    basis: Tuple[Vector, Vector]

    def rows(self) -> Tuple[Vector, Vector]:
        return self.basis


@dataclass(frozen=True, order=True)
class Flag:
    point_id: int
    line_id: int


# -- linear algebra over GF(q) on integer codes -----------------------------

def rref(F: FieldCtx, rows: Sequence[Sequence[int]]) -> List[Vector]:
    """Reduced row echelon form; zero rows are dropped."""
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    out_rows = 0
    for col in range(ncols):
        pivot = next((r for r in range(out_rows, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[out_rows], m[pivot] = m[pivot], m[out_rows]
        s = F.inv(m[out_rows][col])
        m[out_rows] = [F.mul(s, x) for x in m[out_rows]]
        for r in range(len(m)):
            c = m[r][col]
            if r != out_rows and c:
                nc = F.neg(c)
                m[r] = [F.add(x, F.mul(nc, y)) for x, y in zip(m[r], m[out_rows])]
        out_rows += 1
        if out_rows == len(m):
            break
    return [tuple(r) for r in m[:out_rows]]


def rank(F: FieldCtx, rows: Sequence[Sequence[int]]) -> int:
    return len(rref(F, rows))


def canonical_point(F: FieldCtx, vec: Sequence[int]) -> ProjPoint:
    lead = next((x for x in vec if x), 0)
    if not lead:
        raise ValueError("the zero vector is not a projective point")
    s = F.inv(lead)
    return ProjPoint(tuple(F.mul(s, x) for x in vec))


def canonical_line(F: FieldCtx, rows: Sequence[Sequence[int]]) -> ProjLine:
    r = rref(F, rows)
    if len(r) != 2:
        raise ValueError(f"rows span a subspace of dimension {len(r)}, not 2")
    return ProjLine((r[0], r[1]))


def num_points(d: int, q: int) -> int:
    return (q ** d - 1) // (q - 1)


def num_lines(d: int, q: int) -> int:
    """Gaussian binomial [d choose 2]_q."""
    return (q ** d - 1) * (q ** (d - 1) - 1) // ((q * q - 1) * (q - 1))


@dataclass(frozen=True, eq=False)
class Geometry:
    """Enumerated incidence structure of PG(d-1, q).

    ``point_coords`` (|P| x d) and ``line_points`` (|L| x (q+1)) are the
    array views used by the graph constructions; ``points`` / ``lines`` hold
    the canonical representatives in enumeration order.
    """

    d: int
    field: FieldCtx
    points: Tuple[ProjPoint, ...]
    lines: Tuple[ProjLine, ...]
    flags: Tuple[Flag, ...]
    point_to_lines: Tuple[Tuple[int, ...], ...]
    line_to_points: Tuple[Tuple[int, ...], ...]
    point_coords: np.ndarray = field(repr=False)
    line_points: np.ndarray = field(repr=False)
    point_lines: np.ndarray = field(repr=False)
    point_codes: np.ndarray = field(repr=False)
    flag_table: np.ndarray = field(repr=False)  # |P| x |L|, -1 off-incidence
    line_ids: Dict[ProjLine, int] = field(repr=False)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def lines_per_point(self) -> int:
        return (self.q ** (self.d - 1) - 1) // (self.q - 1)

    def point_code(self, vec: Sequence[int]) -> int:
        code = 0
        for x in vec:
            code = code * self.q + x
        return code

    def point_id(self, pt: ProjPoint) -> int:
        # points are sorted by base-q code, first coordinate most significant
        code = self.point_code(pt.coords)
        i = int(np.searchsorted(self.point_codes, code))
        if i == len(self.points) or self.point_codes[i] != code:
            raise KeyError(pt)
        return i

    def line_id(self, ln: ProjLine) -> int:
        return self.line_ids[ln]

    def flag_id(self, point_id: int, line_id: int) -> int:
        return int(self.flag_table[point_id, line_id])

    def line_through(self, a: int, b: int) -> int:
        """Index of the unique line through two distinct points."""
        if a == b:
            raise Identical("a line needs two distinct points")
        common = set(self.point_to_lines[a]).intersection(self.point_to_lines[b])
        (ln,) = common
        return ln


def _enumerate_points(F: FieldCtx, d: int) -> List[Vector]:
    q = F.q
    pts = []
    for lead in range(d):
        for tail in itertools.product(range(q), repeat=d - lead - 1):
            pts.append((0,) * lead + (1,) + tail)
    pts.sort()
    return pts


def _enumerate_lines(F: FieldCtx, d: int) -> List[Tuple[Vector, Vector]]:
    # every 2-dim subspace has exactly one RREF basis: pivots i < j, row 1 is
    # zero at column j, both rows zero left of their pivot
    q = F.q
    out = []
    for i, j in itertools.combinations(range(d), 2):
        free1 = [c for c in range(i + 1, d) if c != j]
        free2 = list(range(j + 1, d))
        for v1 in itertools.product(range(q), repeat=len(free1)):
            r1 = [0] * d
            r1[i] = 1
            for c, x in zip(free1, v1):
                r1[c] = x
            for v2 in itertools.product(range(q), repeat=len(free2)):
                r2 = [0] * d
                r2[j] = 1
                for c, x in zip(free2, v2):
                    r2[c] = x
                out.append((tuple(r1), tuple(r2)))
    out.sort()
    return out


@lru_cache(maxsize=32)
def build_geometry(d: int, q: int) -> Geometry:
    """Enumerate PG(d-1, q).

    Cost is linear in the number of flags; lines are produced directly in
    reduced row echelon form rather than by deduplicating point pairs.
    """
    if d < 3:
        raise DimensionTooSmall(f"d = {d}; the flag graph needs d >= 3")
    F = make_field(q)
    pts = _enumerate_points(F, d)
    lns = _enumerate_lines(F, d)
    coords = np.array(pts, dtype=np.int64)
    weights = q ** np.arange(d - 1, -1, -1, dtype=np.int64)
    codes = coords @ weights

    basis = np.array(lns, dtype=np.int64)  # (L, 2, d)
    # spans: combinations (1, b) for each b, then (0, 1); all left-normalized
    mul = F.mul_table
    add = F.add_table
    first = basis[:, 0, :][:, None, :]                     # (L, 1, d)
    b = np.arange(q, dtype=np.int64)[None, :, None]        # (1, q, d)
    combos = add[first, mul[b, basis[:, 1, :][:, None, :]]]
    vecs = np.concatenate([combos, basis[:, 1:2, :]], axis=1)  # (L, q+1, d)
    line_points = np.searchsorted(codes, vecs @ weights)
    line_points.sort(axis=1)

    n_pts = len(pts)
    per_point = (q ** (d - 1) - 1) // (q - 1)
    order = np.argsort(line_points.ravel(), kind="stable")
    point_lines = (order // (q + 1)).reshape(n_pts, per_point)

    flag_table = np.full((n_pts, len(lns)), -1, dtype=np.int64)
    flag_pt = np.repeat(np.arange(n_pts), per_point)
    flag_ln = point_lines.ravel()
    flag_table[flag_pt, flag_ln] = np.arange(len(flag_pt))

    for arr in (coords, line_points, point_lines, flag_table, codes):
        arr.setflags(write=False)

    lines = tuple(ProjLine(ln) for ln in lns)
    geom = Geometry(
        d=d,
        field=F,
        points=tuple(ProjPoint(p) for p in pts),
        lines=lines,
        flags=tuple(Flag(int(p), int(l)) for p, l in zip(flag_pt, flag_ln)),
        point_to_lines=tuple(tuple(int(x) for x in row) for row in point_lines),
        line_to_points=tuple(tuple(int(x) for x in row) for row in line_points),
        point_coords=coords,
        line_points=line_points,
        point_lines=point_lines,
        point_codes=codes,
        flag_table=flag_table,
        line_ids={ln: i for i, ln in enumerate(lines)},
    )
    return geom


def point_on_line(F: FieldCtx, pt: ProjPoint, ln: ProjLine) -> bool:
    return rank(F, [*ln.basis, pt.coords]) == 2


def line_points_of(F: FieldCtx, ln: ProjLine) -> List[ProjPoint]:
    """The q+1 points of a line, computed from its basis."""
    r1, r2 = ln.basis
    out = [canonical_point(F, r2)]
    for b in range(F.q):
        out.append(canonical_point(
            F, [F.add(x, F.mul(b, y)) for x, y in zip(r1, r2)]))
    return sorted(out)


def intersect_lines(F: FieldCtx, L: ProjLine, N: ProjLine) -> Optional[ProjPoint]:
    """Common point of two distinct lines, or None when they are skew."""
    r = rank(F, [*L.basis, *N.basis])
    if r == 2:
        raise Identical("a line does not intersect itself in a unique point")
    if r == 4:
        return None
    for pt in line_points_of(F, L):
        if point_on_line(F, pt, N):
            return pt
    raise AssertionError("coplanar lines must share a point")


def lines_through(pt_id: int, geom: Geometry) -> Tuple[int, ...]:
    if not 0 <= pt_id < len(geom.points):
        raise IndexOutOfRange(f"point index {pt_id} out of range")
    return geom.point_to_lines[pt_id]
