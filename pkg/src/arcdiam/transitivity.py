"""Vertex- and arc-transitivity certificates.

Two independent routes:

* group route: explicit automorphisms (projective action of GL(d, q) on
  flags, or coordinate maps of H(2, q)) and orbit closure on vertices/arcs;
* oracle route: backtracking search for automorphisms of the bare graph,
  without any knowledge of how it was built.

A single arc orbit under the group route proves arc-transitivity.  Several
orbits do not disprove it, since the generators may miss automorphisms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (BudgetExceeded, NonInvertible, NotAnAutomorphism,
                     ShapeMismatch)
from .gf import FieldCtx, make_field
from .graphcore import Graph
from .projgeom import Geometry, build_geometry, rank

__all__ = [
    "ProjGen", "VertexPerm", "OrbitCertificate", "gl_generators",
    "frobenius_generator", "point_perm", "line_perm", "induced_flag_perm",
    "hamming_generators", "check_automorphism", "orbit_certificate",
    "point_pair_orbit_count", "find_automorphism",
    "brute_force_arc_transitive", "brute_force_vertex_transitive",
]

Matrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class ProjGen:
    """Invertible d x d matrix over GF(q), acting on row vectors v -> vM.

    With ``frobenius`` set, the coordinatewise p-th power is applied after
    the matrix, giving a semilinear map.
    """

    matrix: Matrix
    q: int
    frobenius: bool = False

    def __post_init__(self):
        F = make_field(self.q)
        if rank(F, self.matrix) != len(self.matrix):
            raise NonInvertible(f"singular matrix {self.matrix}")

    @property
    def d(self) -> int:
        return len(self.matrix)


@dataclass(frozen=True)
class VertexPerm:
    image: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError("image is not a permutation")

    def __len__(self):
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def compose(self, other: "VertexPerm") -> "VertexPerm":
        """``self`` after ``other``."""
        return VertexPerm(tuple(self.image[x] for x in other.image))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))


@dataclass(frozen=True)
class OrbitCertificate:
    vertex_orbit_count: int
    arc_orbit_count: int
    generators_used: int
    witness_checked: bool

    @property
    def vertex_transitive(self) -> bool:
        return self.vertex_orbit_count == 1

    @property
    def arc_transitive(self) -> bool:
        return self.arc_orbit_count == 1


def _identity(d: int) -> List[List[int]]:
    return [[int(i == j) for j in range(d)] for i in range(d)]


def gl_generators(d: int, q: int) -> List[ProjGen]:
    """Transvection I + E_12, the cyclic coordinate shift, and
    diag(w, 1, ..., 1) for the smallest primitive w (omitted when q = 2)."""
    F = make_field(q)
    t = _identity(d)
    t[0][1] = 1
    shift = [[int(j == (i + 1) % d) for j in range(d)] for i in range(d)]
    gens = [t, shift]
    if q > 2:
        diag = _identity(d)
        diag[0][0] = F.primitive_element()
        gens.append(diag)
    return [ProjGen(tuple(map(tuple, m)), q) for m in gens]


def frobenius_generator(d: int, q: int) -> Optional[ProjGen]:
    """Coordinatewise p-th power; None for prime q where it is trivial."""
    if make_field(q).k == 1:
        return None
    return ProjGen(tuple(map(tuple, _identity(d))), q, frobenius=True)


def _apply(F: FieldCtx, vecs: np.ndarray, gen: ProjGen) -> np.ndarray:
    M = np.asarray(gen.matrix, dtype=np.int64)
    mul, add = F.mul_table, F.add_table
    out = mul[vecs[:, 0][:, None], M[0][None, :]]
    for i in range(1, gen.d):
        out = add[out, mul[vecs[:, i][:, None], M[i][None, :]]]
    if gen.frobenius:
        frob = np.array([F.frobenius(a) for a in range(F.q)], dtype=np.int64)
        out = frob[out]
    return out


def point_perm(gen: ProjGen, geom: Geometry) -> np.ndarray:
    """Image index of every point under ``gen``."""
    if gen.d != geom.d or gen.q != geom.q:
        raise ShapeMismatch("generator and geometry disagree on (d, q)")
    F = geom.field
    img = _apply(F, geom.point_coords, gen)
    lead_pos = np.argmax(img != 0, axis=1)
    lead = img[np.arange(len(img)), lead_pos]
    inv = np.array((0,) + F.inv_table[1:], dtype=np.int64)
    img = F.mul_table[inv[lead][:, None], img]
    weights = geom.q ** np.arange(geom.d - 1, -1, -1, dtype=np.int64)
    return np.searchsorted(geom.point_codes, img @ weights)


@lru_cache(maxsize=32)
def _pair_index(geom: Geometry):
    # sorted keys a * |P| + b for every ordered pair of distinct collinear
    # points, with the line through them
    P = len(geom.points)
    lp = geom.line_points
    keys, lines = [], []
    for i, j in itertools.permutations(range(lp.shape[1]), 2):
        keys.append(lp[:, i] * P + lp[:, j])
        lines.append(np.arange(len(lp)))
    keys = np.concatenate(keys)
    lines = np.concatenate(lines)
    order = np.argsort(keys)
    return keys[order], lines[order]


def line_perm(gen: ProjGen, geom: Geometry, pperm: Optional[np.ndarray] = None) -> np.ndarray:
    pperm = point_perm(gen, geom) if pperm is None else pperm
    keys, lines = _pair_index(geom)
    P = len(geom.points)
    lp = geom.line_points
    probe = pperm[lp[:, 0]] * P + pperm[lp[:, 1]]
    return lines[np.searchsorted(keys, probe)]


def induced_flag_perm(gen: ProjGen, geom: Geometry) -> VertexPerm:
    pperm = point_perm(gen, geom)
    lperm = line_perm(gen, geom, pperm)
    fp = np.fromiter((f.point_id for f in geom.flags), np.int64, len(geom.flags))
    fl = np.fromiter((f.line_id for f in geom.flags), np.int64, len(geom.flags))
    image = geom.flag_table[pperm[fp], lperm[fl]]
    if np.any(image < 0):
        raise AssertionError("incidence not preserved")
    return VertexPerm(tuple(image.tolist()))


def hamming_generators(q: int, graph: Graph) -> List[VertexPerm]:
    """Transposition 0 <-> 1 and the q-cycle on the first coordinate, and the
    coordinate swap, as permutations of the vertices a * q + b."""
    if graph.n != q * q:
        raise ShapeMismatch(f"graph has {graph.n} vertices, expected {q * q}")
    a, b = np.divmod(np.arange(q * q), q)
    swap01 = np.where(a == 0, 1, np.where(a == 1, 0, a))
    gens = [swap01 * q + b, ((a + 1) % q) * q + b, b * q + a]
    perms = [VertexPerm(tuple(g.tolist())) for g in gens]
    for i, p in enumerate(perms):
        bad = _first_broken_edge(graph, p)
        if bad is not None:
            raise ShapeMismatch(f"graph is not H(2,{q}): generator {i} breaks {bad}")
    return perms


def _arc_image(graph: Graph, perm: VertexPerm) -> Tuple[np.ndarray, np.ndarray]:
    img = np.asarray(perm.image, dtype=np.int64)
    src = np.repeat(np.arange(graph.n, dtype=np.int64), graph.degrees())
    mapped = img[src] * graph.n + img[graph.neighbors]
    keys = graph.arc_keys
    pos = np.searchsorted(keys, mapped)
    pos_c = np.minimum(pos, len(keys) - 1)
    ok = (pos < len(keys)) & (keys[pos_c] == mapped)
    return pos_c, ok


def _first_broken_edge(graph: Graph, perm: VertexPerm):
    if len(perm) != graph.n:
        raise ShapeMismatch("permutation size differs from graph order")
    if graph.num_edges == 0:
        return None
    _, ok = _arc_image(graph, perm)
    if ok.all():
        return None
    k = int(np.flatnonzero(~ok)[0])
    u = int(np.searchsorted(graph.offsets, k, side="right") - 1)
    return (u, int(graph.neighbors[k]))


def check_automorphism(graph: Graph, perm: VertexPerm) -> bool:
    return _first_broken_edge(graph, perm) is None


def _count_orbits(size: int, images: Sequence[np.ndarray], subset=None) -> int:
    # connected components of the Schreier graph = orbits of the group
    from scipy.sparse import coo_matrix
    from scipy.sparse.csgraph import connected_components

    if size == 0:
        return 0
    rows = np.concatenate([np.arange(size)] * len(images)) if images else np.zeros(0, int)
    cols = np.concatenate(images) if images else np.zeros(0, int)
    adj = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)),
                     shape=(size, size))
    _, labels = connected_components(adj, directed=True, connection="weak")
    if subset is not None:
        labels = labels[subset]
    return len(np.unique(labels))


def orbit_certificate(graph: Graph, gens: Sequence[VertexPerm]) -> OrbitCertificate:
    """Orbit counts of <gens> on vertices and arcs.

    Every generator is first checked to be an automorphism; a failure raises
    NotAnAutomorphism naming the generator and an edge it breaks.
    """
    arc_imgs = []
    for i, g in enumerate(gens):
        bad = _first_broken_edge(graph, g)
        if bad is not None:
            raise NotAnAutomorphism(i, bad)
        if graph.num_edges:
            arc_imgs.append(_arc_image(graph, g)[0])
    vert_imgs = [np.asarray(g.image, dtype=np.int64) for g in gens]
    return OrbitCertificate(
        vertex_orbit_count=_count_orbits(graph.n, vert_imgs),
        arc_orbit_count=_count_orbits(len(graph.neighbors), arc_imgs),
        generators_used=len(gens),
        witness_checked=True,
    )


def point_pair_orbit_count(geom: Geometry, gens: Sequence[ProjGen]) -> int:
    """Orbits of <gens> on ordered pairs of distinct points; 1 certifies
    double transitivity on points."""
    P = len(geom.points)
    images = []
    a, b = np.divmod(np.arange(P * P), P)
    for g in gens:
        pp = point_perm(g, geom)
        images.append(pp[a] * P + pp[b])
    return _count_orbits(P * P, images, subset=np.flatnonzero(a != b))


# -- brute-force oracle -------------------------------------------------------

def _distance_masks(graph: Graph):
    """dist[x][w] and, per vertex y and distance k, the bitset of vertices at
    distance k from y (-1 for unreachable)."""
    n = graph.n
    masks = graph.adj_masks
    dist = [[-1] * n for _ in range(n)]
    by_dist: List[Dict[int, int]] = []
    for s in range(n):
        layers = {0: 1 << s}
        seen = 1 << s
        frontier = seen
        k = 0
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= masks[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            k += 1
            if nxt:
                layers[k] = nxt
            seen |= nxt
            frontier = nxt
        for k, m in layers.items():
            f = m
            while f:
                low = f & -f
                dist[s][low.bit_length() - 1] = k
                f ^= low
        full = (1 << n) - 1
        if seen != full:
            layers[-1] = full & ~seen
        by_dist.append(layers)
    return dist, by_dist


class _AutSearch:
    """Backtracking search for a distance-preserving bijection extending a
    partial assignment.  Candidates are bitsets filtered by degree and by
    distance to every already assigned vertex."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n
        self.dist, self.by_dist = _distance_masks(graph)
        deg = graph.degrees().tolist()
        by_deg: Dict[int, int] = {}
        for v, k in enumerate(deg):
            by_deg[k] = by_deg.get(k, 0) | (1 << v)
        self.initial = [by_deg[deg[v]] for v in range(self.n)]
        self.nodes = 0

    def _assign(self, cand, x, y):
        new = list(cand)
        new[x] = None
        dx = self.dist[x]
        layers = self.by_dist[y]
        for w in range(self.n):
            c = new[w]
            if c is None:
                continue
            c &= layers.get(dx[w], 0)
            if not c:
                return None
            new[w] = c
        return new

    def search(self, fixed: Dict[int, int]) -> Optional[List[int]]:
        cand = list(self.initial)
        mapping = [-1] * self.n
        for x, y in fixed.items():
            if cand[x] is None or not (cand[x] >> y) & 1:
                return None
            cand = self._assign(cand, x, y)
            if cand is None:
                return None
            mapping[x] = y
        return self._extend(cand, mapping)

    def _extend(self, cand, mapping):
        self.nodes += 1
        best, best_pop = -1, None
        for w, c in enumerate(cand):
            if c is not None:
                pop = bin(c).count("1")
                if best_pop is None or pop < best_pop:
                    best, best_pop = w, pop
                    if pop == 1:
                        break
        if best < 0:
            return list(mapping)
        c = cand[best]
        while c:
            low = c & -c
            y = low.bit_length() - 1
            c ^= low
            nxt = self._assign(cand, best, y)
            if nxt is not None:
                mapping[best] = y
                found = self._extend(nxt, mapping)
                if found is not None:
                    return found
                mapping[best] = -1
        return None


def find_automorphism(graph: Graph, fixed: Dict[int, int]) -> Optional[VertexPerm]:
    """An automorphism extending the partial map ``fixed``, or None."""
    found = _AutSearch(graph).search(fixed)
    if found is None:
        return None
    perm = VertexPerm(tuple(found))
    assert check_automorphism(graph, perm)
    return perm


def _closure(start: set, perms: Sequence[VertexPerm], act) -> set:
    orbit = set(start)
    frontier = list(start)
    while frontier:
        nxt = []
        for item in frontier:
            for p in perms:
                img = act(p, item)
                if img not in orbit:
                    orbit.add(img)
                    nxt.append(img)
        frontier = nxt
    return orbit


def _brute_force_transitive(graph: Graph, targets, base, to_fixed, act,
                            vertex_budget: int) -> bool:
    if graph.n > vertex_budget:
        raise BudgetExceeded(
            f"graph has {graph.n} vertices, budget is {vertex_budget}")
    if not targets:
        return True
    search = _AutSearch(graph)
    found: List[VertexPerm] = []
    orbit = {base}
    for t in targets:
        if t in orbit:
            continue
        m = search.search(to_fixed(base, t))
        if m is None:
            return False
        perm = VertexPerm(tuple(m))
        if not check_automorphism(graph, perm):
            raise AssertionError("search returned a non-automorphism")
        found.append(perm)
        orbit = _closure(orbit, found, act)
    return True


def brute_force_arc_transitive(graph: Graph, vertex_budget: int = 120) -> bool:
    """True iff every arc is the image of the first arc under some
    automorphism found by search.

    Automorphisms found along the way are composed (orbit closure), so only
    arcs outside the current orbit trigger a new search.
    """
    arcs = [(u, v) for u in range(graph.n) for v in graph.adj_lists[u]] \
        if graph.n <= vertex_budget else []
    base = arcs[0] if arcs else None
    return _brute_force_transitive(
        graph, arcs, base,
        lambda b, t: {b[0]: t[0], b[1]: t[1]},
        lambda p, a: (p.image[a[0]], p.image[a[1]]),
        vertex_budget)


def brute_force_vertex_transitive(graph: Graph, vertex_budget: int = 120) -> bool:
    verts = list(range(graph.n)) if graph.n <= vertex_budget else []
    return _brute_force_transitive(
        graph, verts, 0,
        lambda b, t: {b: t},
        lambda p, v: p.image[v],
        vertex_budget)
