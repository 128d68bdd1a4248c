import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import complete, cycle, path, random_graph
from threecol.engine import SolverConfig, decide_3colorable
from threecol.errors import DimacsParseError, UsageError
from threecol.graph import Graph, add_edge, contract, parse_dimacs, second_neighborhood, write_dimacs
from threecol.oracle import verify_coloring


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def assert_invariants(g):
    for v in g.vertices():
        assert v not in g.neighbors(v)
        for u in g.neighbors(v):
            assert v in g.neighbors(u)
    classes = [g.merge_class(v) for v in g.vertices()]
    union = set().union(*classes) if classes else set()
    assert sum(map(len, classes)) == len(union) == g.original_n
    assert union == set(range(1, g.original_n + 1))


def test_parse_triangle():
    g = parse_dimacs(b"p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n")
    assert g == complete(3)
    assert g.merge_class(2) == {2}


def test_parse_c4_degrees():
    g = parse_dimacs("c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    assert [g.degree(v) for v in g] == [2, 2, 2, 2]


def test_parse_collapses_duplicates():
    g = parse_dimacs("p edge 3 4\ne 1 2\ne 2 1\ne 2 3\ne 3 2\n")
    assert g.edges() == [(1, 2), (2, 3)]


@pytest.mark.parametrize("text, lineno, fragment", [
    ("p edge 2 1\ne 1 1\n", 2, "self-loop"),
    ("p edge 2 1\ne 1 3\n", 2, "out of range"),
    ("p edges 2 1\n", 1, "header"),
    ("e 1 2\n", 1, "before problem line"),
    ("p edge 3 1\ne 1 2\np edge 3 1\n", 3, "duplicate"),
    ("p edge 3 1\ne 1 x\n", 2, "non-integer"),
])
def test_parse_errors_name_line(text, lineno, fragment):
    with pytest.raises(DimacsParseError) as exc:
        parse_dimacs(text)
    assert exc.value.lineno == lineno
    assert fragment in str(exc.value)


def test_parse_edge_count_mismatch():
    with pytest.raises(DimacsParseError, match="declares 2 edges"):
        parse_dimacs("p edge 3 2\ne 1 2\n")


def test_write_triangle_and_empty():
    assert write_dimacs(complete(3)) == b"p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n"
    assert write_dimacs(Graph.from_edges(1)) == b"p edge 1 0\n"


def test_round_trip_random():
    rng = random.Random(7)
    for _ in range(1000):
        g = random_graph(rng.randint(1, 15), rng.random(), rng)
        assert parse_dimacs(write_dimacs(g)) == g


def test_write_relabels_after_contraction():
    g = path(4).contract(2, 3)
    h = parse_dimacs(write_dimacs(g))
    assert h.n == 3 and h.edges() == [(1, 2), (2, 3)]


def test_contract_adjacent_in_triangle():
    g = contract(complete(3), 1, 2)
    assert g.n == 2 and g.edges() == [(1, 3)]
    assert g.merge_class(1) == {1, 2}


def test_contract_c4_opposite_gives_path():
    g = cycle(4).contract(1, 3)
    assert g.n == 3
    assert sorted(g.degree(v) for v in g) == [1, 1, 2]
    assert g.neighbors(1) == {2, 4}


def test_contract_errors():
    g = cycle(4)
    with pytest.raises(UsageError):
        g.contract(1, 1)
    with pytest.raises(UsageError):
        g.contract(1, 9)
    with pytest.raises(UsageError):
        g.contract(1, 3).contract(3, 2)


def test_contract_then_color_shares_color():
    rng = random.Random(3)
    cfg = SolverConfig(mode="unchecked", oracle_cutoff=1)
    checked = 0
    while checked < 100:
        g = random_graph(rng.randint(3, 10), 0.3, rng)
        a, b = rng.sample(g.vertices(), 2)
        if g.has_edge(a, b):
            continue
        h = g.contract(a, b)
        rep = decide_3colorable(h, cfg)
        if rep.colorable:
            c = rep.certificate
            assert c[a] == c[b]
            assert verify_coloring(g, c)
            checked += 1


def test_add_edge():
    g = path(3)
    h = add_edge(g, 1, 3)
    assert h == complete(3)
    assert h.degree(1) == g.degree(1) + 1 and h.degree(3) == g.degree(3) + 1
    with pytest.raises(UsageError):
        h.add_edge(1, 3)
    with pytest.raises(UsageError):
        h.add_edge(2, 2)
    assert g.edges() == [(1, 2), (2, 3)]


def test_add_then_contract():
    g = path(3).add_edge(1, 3).contract(1, 3)
    assert g.n == 2 and g.edges() == [(1, 2)]


def test_second_neighborhood_examples():
    assert second_neighborhood(path(5), 1) == {3}
    assert complete(4).second_neighborhood(2) == frozenset()
    assert cycle(5).second_neighborhood(1) == {3, 4}


@given(graphs(), st.data())
@settings(max_examples=300, deadline=None)
def test_contract_properties(g, data):
    assert_invariants(g)
    if g.n < 2:
        return
    a, b = data.draw(st.lists(st.sampled_from(g.vertices()), min_size=2, max_size=2, unique=True))
    h = g.contract(a, b)
    assert h.n == g.n - 1
    assert_invariants(h)
    if not g.neighbors(a) & g.neighbors(b):
        assert h.degree(a) == g.degree(a) + g.degree(b) - 2 * g.has_edge(a, b)
    for v in h.vertices():
        n2 = h.second_neighborhood(v)
        assert not n2 & (h.neighbors(v) | {v})


def test_graph_is_not_mutated():
    g = cycle(5)
    before = (g.edges(), [g.merge_class(v) for v in g])
    g.contract(1, 3)
    g.add_edge(1, 3)
    g.remove_vertex(2)
    assert (g.edges(), [g.merge_class(v) for v in g]) == before
