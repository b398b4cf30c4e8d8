import pytest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from critlab.graphs import (
    Graph,
    GraphError,
    complete,
    cycle,
    path,
    petersen,
    star,
    woodall_example,
)


def test_basic_construction():
    g = Graph(4, [(0, 1), (1, 2), (3, 1)])
    assert g.n == 4 and g.m == 3
    assert g.degree(1) == 3 and g.delta == 3
    assert g.neighbors(1) == (0, 2, 3)
    assert g.edge_id(2, 1) == 1
    assert g.pair(2) == (1, 3)


def test_rejects_loops_parallel_and_range():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 5)])


def test_delete_edge_keeps_ids():
    g = complete(4)
    e = g.edge_id(1, 2)
    h = g.delete_edge(e)
    assert h.m == 5 and h.n == 4
    assert not h.has_edge(1, 2)
    # surviving ids map to the same pairs
    for i in h.edge_ids():
        assert h.pair(i) == g.pair(i)
    with pytest.raises(GraphError):
        h.pair(e)
    with pytest.raises(GraphError):
        g.delete_edge(99)


def test_k3_minus_edge_is_path():
    g = complete(3)
    h = g.delete_edge(0)
    assert sorted(h.degrees()) == [1, 1, 2]
    assert h == path(3) or sorted(h.degrees()) == sorted(path(3).degrees())


def test_c5_minus_edge_is_p5():
    h = cycle(5).delete_edge(2)
    assert h.m == 4 and sorted(h.degrees()) == [1, 1, 2, 2, 2]
    assert h.is_connected()


def test_delete_then_readd_isomorphic():
    g = cycle(6)
    e = g.edge_id(2, 3)
    h = g.delete_edge(e).add_edge(2, 3)
    assert h == g  # same vertex set and edge set


def test_standard_constructors():
    assert cycle(5).delta == 2 and cycle(5).m == 5
    assert complete(4).delta == 3 and complete(4).m == 6
    assert sorted(star(3).degrees()) == [1, 1, 1, 3]
    assert star(0).m == 0
    p = petersen()
    assert p.n == 10 and p.m == 15 and set(p.degrees()) == {3}
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        complete(0)


def test_woodall_example_shape():
    g = woodall_example(6, 3)
    assert g.n == 9 and g.m == 24
    assert sorted(g.degrees()) == [4] * 3 + [6] * 6
    assert g.average_degree() == Fraction(16, 3) == Fraction(2, 3) * (6 + 2)
    a_set = [v for v in g.vertices() if g.degree(v) == 4]
    for a in a_set:
        assert all(g.degree(z) == 6 for z in g.neighbors(a))
        assert not any(g.has_edge(a, b) for b in a_set if b != a)
    for b in (v for v in g.vertices() if g.degree(v) == 6):
        assert sum(1 for z in g.neighbors(b) if g.degree(z) == 4) == 2


def test_woodall_example_delta8():
    g = woodall_example(8, 4)
    assert g.n == 12
    assert sorted(g.degrees()) == [4] * 4 + [8] * 8
    assert 2 * g.m == 4 * 4 + 8 * 8
    assert g.average_degree() == Fraction(20, 3)


def test_woodall_example_infeasible():
    with pytest.raises(GraphError, match="k >="):
        woodall_example(6, 2)  # a 4-regular graph on 4 vertices cannot exist
    with pytest.raises(GraphError):
        woodall_example(5, 10)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 10), st.data())
def test_degree_sum_is_twice_edges(n, data):
    possible = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(possible), unique=True, max_size=len(possible))) if possible else []
    g = Graph(n, chosen)
    assert sum(g.degrees()) == 2 * g.m


@given(st.integers(6, 13), st.integers(2, 9))
@settings(max_examples=60, deadline=None)
def test_woodall_example_degree_constraints(delta, k):
    try:
        g = woodall_example(delta, k)
    except GraphError:
        assert k < max(2, -(-(delta - 1) // 2))
        return
    degs = sorted(g.degrees())
    assert degs == [4] * k + [delta] * (2 * k)
    assert g.average_degree() == Fraction(2 * (delta + 2), 3)
