import itertools

import numpy as np
import pytest

from arcdiam.bounds import flag_params
from arcdiam.constructions import (FlagAdjacencyVariant, as_stated_degree,
                                   flag_graph, hamming2, predicted_params)
from arcdiam.errors import DimensionTooSmall, NotAPrimePower, ParameterTooSmall
from arcdiam.gf import is_prime_power
from arcdiam.graphcore import certify_graph, diameter, girth, regularity
from arcdiam.projgeom import build_geometry, intersect_lines

DC = FlagAdjacencyVariant.DEGREE_CONSISTENT
AS = FlagAdjacencyVariant.AS_STATED
PRIME_POWERS = [q for q in range(2, 17) if is_prime_power(q)]

# every (d, q) with flag-graph order <= 5000
SMALL_FLAG = [(d, q) for d in range(3, 8) for q in PRIME_POWERS
              if predicted_params(d, q)[0] <= 5000]


def flag_graph_by_definition(d, q, variant):
    """All-pairs construction straight from the geometric definition."""
    g = build_geometry(d, q)
    F = g.field
    flags = g.flags
    edges = set()
    for i, j in itertools.combinations(range(len(flags)), 2):
        (s, L), (t, N) = (flags[i].point_id, flags[i].line_id), (flags[j].point_id, flags[j].line_id)
        if L == N:
            continue
        p = intersect_lines(F, g.lines[L], g.lines[N])
        if p is None:
            continue
        if variant is DC:
            pid = g.point_id(p)
            if s == pid or t == pid:
                continue
        edges.add((i, j))
    return edges


def test_hamming_examples():
    c = certify_graph(hamming2(2))
    assert (c.order, c.degree, c.diameter, c.girth) == (4, 2, 2, 4)
    c = certify_graph(hamming2(3))
    assert (c.order, c.degree, c.diameter, c.girth) == (9, 4, 2, 3)
    g = hamming2(5)
    delta = regularity(g)[1]
    assert delta == 8 and g.n == 25 == (delta // 2 + 1) ** 2


def test_hamming_labels_and_adjacency():
    q = 4
    g = hamming2(q)
    assert g.labels[0] == "(0,0)" and g.labels[q * q - 1] == f"({q - 1},{q - 1})"
    for u, v in itertools.combinations(range(q * q), 2):
        a, b = divmod(u, q), divmod(v, q)
        differ = (a[0] != b[0]) + (a[1] != b[1])
        assert g.has_edge(u, v) == (differ == 1)


def test_hamming_too_small():
    with pytest.raises(ParameterTooSmall):
        hamming2(1)


@pytest.mark.parametrize("q", range(2, 13))
def test_hamming_family(q):
    g = hamming2(q)
    assert g.n == q * q
    assert regularity(g) == (True, 2 * (q - 1))
    assert diameter(g) == 2
    assert girth(g) == (4 if q == 2 else 3)


@pytest.mark.parametrize("d, q, variant, order, degree", [
    (3, 2, DC, 21, 8),
    (3, 2, AS, 21, 18),
    (3, 3, DC, 52, 27),
])
def test_flag_examples(d, q, variant, order, degree):
    g = flag_graph(d, q, variant)
    assert g.n == order and regularity(g) == (True, degree)
    assert diameter(g) == 2
    if variant is DC:
        assert girth(g) == 3


def test_flag_errors():
    with pytest.raises(DimensionTooSmall):
        flag_graph(2, 2)
    with pytest.raises(NotAPrimePower):
        flag_graph(3, 6)


@pytest.mark.parametrize("d, q, expected", [
    (3, 2, (21, 8)), (4, 2, (105, 24)), (5, 3, (4840, 351))])
def test_predicted_params(d, q, expected):
    assert predicted_params(d, q) == expected


@pytest.mark.parametrize("d, q", [(3, 2), (3, 3), (4, 2)])
@pytest.mark.parametrize("variant", [DC, AS])
def test_construction_matches_definition(d, q, variant):
    g = flag_graph(d, q, variant)
    assert set(g.edges()) == flag_graph_by_definition(d, q, variant)


@pytest.mark.parametrize("d, q", [(3, 2), (3, 3), (4, 2)])
def test_as_stated_degree_closed_form_by_bruteforce(d, q):
    edges = flag_graph_by_definition(d, q, AS)
    n = predicted_params(d, q)[0]
    deg = np.zeros(n, dtype=int)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    assert set(deg.tolist()) == {as_stated_degree(d, q)}


@pytest.mark.parametrize("d, q", SMALL_FLAG)
def test_flag_graph_matches_predicted_params(d, q):
    g = flag_graph(d, q, DC)
    order, degree = predicted_params(d, q)
    assert (g.n, regularity(g)) == (order, (True, degree))
    assert (degree, order) == flag_params(d, q)


@pytest.mark.parametrize("d, q", [x for x in SMALL_FLAG if predicted_params(*x)[0] <= 2000])
def test_as_stated_degree_and_subset(d, q):
    dc, as_ = flag_graph(d, q, DC), flag_graph(d, q, AS)
    assert regularity(as_) == (True, as_stated_degree(d, q))
    assert np.isin(dc.arc_keys, as_.arc_keys).all()


@pytest.mark.parametrize("d, q", [(3, 2), (3, 3), (3, 4), (4, 2), (3, 5), (4, 3), (5, 2)])
def test_flag_graph_diameter_two(d, q):
    g = flag_graph(d, q)
    assert diameter(g) == 2 and girth(g) == 3


def test_parity_law():
    for d in range(3, 10):
        for q in PRIME_POWERS:
            delta = predicted_params(d, q)[1]
            assert (delta % 2 == 1) == (d % 2 == 1 and q % 2 == 1)


def test_deterministic_rebuild():
    a, b = flag_graph(4, 2), flag_graph(4, 2)
    assert a == b and a.labels == b.labels
