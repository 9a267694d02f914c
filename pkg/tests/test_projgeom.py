import itertools

import pytest
from hypothesis import HealthCheck, assume, given, settings, strategies as st

from arcdiam.errors import DimensionTooSmall, Identical, IndexOutOfRange, NotAPrimePower
from arcdiam.gf import make_field
from arcdiam.projgeom import (ProjLine, build_geometry, canonical_line,
                              canonical_point, intersect_lines, lines_through,
                              num_lines, point_on_line, rank)

GRID = [(d, q) for d in (3, 4, 5) for q in (2, 3, 4) if not (d == 5 and q == 4)] + [(3, 5), (3, 7), (3, 8), (3, 9), (4, 5), (6, 2)]


def e(i, d):
    return tuple(int(j == i) for j in range(d))


@pytest.mark.parametrize("d, q, pts, lns, flags", [
    (3, 2, 7, 7, 21),
    (3, 3, 13, 13, 52),
    (4, 2, 15, 35, 105),
])
def test_counts(d, q, pts, lns, flags):
    g = build_geometry(d, q)
    assert (len(g.points), len(g.lines), len(g.flags)) == (pts, lns, flags)


def test_fano_by_bruteforce():
    # 2-dim subspaces of GF(2)^3 as sets of nonzero vectors
    vecs = [v for v in itertools.product(range(2), repeat=3) if any(v)]
    subspaces = set()
    for a, b in itertools.combinations(vecs, 2):
        c = tuple(x ^ y for x, y in zip(a, b))
        subspaces.add(frozenset((a, b, c)))
    g = build_geometry(3, 2)
    assert len(subspaces) == len(g.lines) == 7
    ours = {frozenset(g.points[i].coords for i in pts) for pts in g.line_to_points}
    assert ours == subspaces


def test_errors():
    with pytest.raises(DimensionTooSmall):
        build_geometry(2, 3)
    with pytest.raises(NotAPrimePower):
        build_geometry(3, 6)


@pytest.mark.parametrize("d, q", GRID)
def test_geometry_invariants(d, q):
    g = build_geometry(d, q)
    P = (q ** d - 1) // (q - 1)
    r = (q ** (d - 1) - 1) // (q - 1)
    assert len(g.points) == P
    assert len(g.lines) == num_lines(d, q)
    assert len(g.flags) == (q ** d - 1) * (q ** (d - 1) - 1) // (q - 1) ** 2
    assert all(len(x) == q + 1 for x in g.line_to_points)
    assert all(len(x) == r for x in g.point_to_lines)
    assert sum(map(len, g.point_to_lines)) == sum(map(len, g.line_to_points)) == len(g.flags)
    assert list(g.points) == sorted(g.points)
    assert list(g.lines) == sorted(g.lines)
    assert [(f.point_id, f.line_id) for f in g.flags] == sorted((f.point_id, f.line_id) for f in g.flags)
    for p in g.points:
        lead = next(x for x in p.coords if x)
        assert lead == 1


@pytest.mark.parametrize("d, q", [(d, q) for d in (3, 4, 5) for q in (2, 3, 4)])
def test_line_count_against_pair_dedup(d, q):
    g = build_geometry(d, q)
    F = make_field(q)
    spans = {canonical_line(F, [g.points[a].coords, g.points[b].coords])
             for a, b in itertools.combinations(range(len(g.points)), 2)}
    assert len(spans) == num_lines(d, q) == len(g.lines)
    assert spans == set(g.lines)


@pytest.mark.parametrize("d, q", [(3, 2), (3, 3), (4, 2), (3, 4)])
def test_incidence_matches_rank_test(d, q):
    g = build_geometry(d, q)
    F = g.field
    for li, ln in enumerate(g.lines):
        on = {pi for pi, pt in enumerate(g.points) if point_on_line(F, pt, ln)}
        assert on == set(g.line_to_points[li])


def test_point_on_line_examples():
    g = build_geometry(3, 2)
    F = g.field
    ln = g.lines[3]
    r1, r2 = ln.basis
    assert point_on_line(F, canonical_point(F, r1), ln)
    assert point_on_line(F, canonical_point(F, [F.add(a, b) for a, b in zip(r1, r2)]), ln)
    off = [pt for i, pt in enumerate(g.points) if i not in g.line_to_points[3]]
    assert len(off) == 4
    assert not any(point_on_line(F, pt, ln) for pt in off)


def test_intersections_fano():
    g = build_geometry(3, 2)
    F = g.field
    for a, b in itertools.permutations(range(7), 2):
        pt = intersect_lines(F, g.lines[a], g.lines[b])
        assert pt is not None
        common = set(g.line_to_points[a]) & set(g.line_to_points[b])
        assert common == {g.point_id(pt)}


def test_intersections_pg32():
    F = make_field(2)
    L12 = canonical_line(F, [e(0, 4), e(1, 4)])
    L34 = canonical_line(F, [e(2, 4), e(3, 4)])
    L23 = canonical_line(F, [e(1, 4), e(2, 4)])
    assert intersect_lines(F, L12, L34) is None
    assert intersect_lines(F, L12, L23).coords == e(1, 4)
    with pytest.raises(Identical):
        intersect_lines(F, L12, L12)


@pytest.mark.parametrize("d, q", [(3, 3), (4, 2), (4, 3)])
def test_intersection_symmetric(d, q):
    g = build_geometry(d, q)
    F = g.field
    for a, b in itertools.combinations(range(min(len(g.lines), 40)), 2):
        x = intersect_lines(F, g.lines[a], g.lines[b])
        y = intersect_lines(F, g.lines[b], g.lines[a])
        assert x == y
        if d == 3:
            assert x is not None


@pytest.mark.parametrize("d, q, count", [(3, 2, 3), (4, 2, 7), (3, 3, 4)])
def test_lines_through(d, q, count):
    g = build_geometry(d, q)
    for p in range(len(g.points)):
        ls = lines_through(p, g)
        assert len(ls) == count
        assert all(p in g.line_to_points[l] for l in ls)
    with pytest.raises(IndexOutOfRange):
        lines_through(len(g.points), g)


@settings(max_examples=150, deadline=None,
          suppress_health_check=[HealthCheck.large_base_example])
@given(st.sampled_from([(3, 2), (3, 4), (4, 3), (5, 2), (3, 9)]), st.data())
def test_canonical_forms_are_basis_independent(dq, data):
    d, q = dq
    g = build_geometry(d, q)
    F = g.field
    ln = g.lines[data.draw(st.integers(0, len(g.lines) - 1))]
    # random invertible 2x2 change of basis
    a, b, c, dd = (data.draw(st.integers(0, q - 1)) for _ in range(4))
    assume(F.sub(F.mul(a, dd), F.mul(b, c)) != 0)
    r1, r2 = ln.basis
    s1 = [F.add(F.mul(a, x), F.mul(b, y)) for x, y in zip(r1, r2)]
    s2 = [F.add(F.mul(c, x), F.mul(dd, y)) for x, y in zip(r1, r2)]
    assert canonical_line(F, [s1, s2]) == ln
    assert canonical_line(F, [s1, s2, r1]) == ln
    pt = g.points[data.draw(st.integers(0, len(g.points) - 1))]
    lam = data.draw(st.integers(1, q - 1))
    assert canonical_point(F, [F.mul(lam, x) for x in pt.coords]) == pt
    assert rank(F, [pt.coords, [F.mul(lam, x) for x in pt.coords]]) == 1
