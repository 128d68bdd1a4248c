import pytest

from threecol.engine import SolverConfig, decide_3colorable
from threecol.errors import UsageError
from threecol.graph import write_dimacs
from threecol.instances import gen_min_degree_random, gen_planted_3colorable, gen_planted_obstruction


def test_min_degree_seeded():
    a = gen_min_degree_random(20, 8, 0.1, 42)
    b = gen_min_degree_random(20, 8, 0.1, 42)
    assert write_dimacs(a) == write_dimacs(b)
    assert a != gen_min_degree_random(20, 8, 0.1, 43)


@pytest.mark.parametrize("n", [9, 20, 31])
def test_min_degree_holds(n):
    for seed in range(100):
        assert gen_min_degree_random(n, 8, 0.0, seed).min_degree() >= 8


def test_min_degree_zero_is_empty():
    g = gen_min_degree_random(9, 0, 0.0, 3)
    assert g.n == 9 and g.m == 0


def test_min_degree_odd_total():
    g = gen_min_degree_random(9, 7, 0.0, 1)
    assert g.min_degree() >= 7


def test_min_degree_errors():
    with pytest.raises(UsageError):
        gen_min_degree_random(8, 8, 0.0, 0)
    with pytest.raises(UsageError):
        gen_min_degree_random(8, 2, 1.5, 0)


def test_planted_colorable():
    cfg = SolverConfig(want_certificate=True)
    for seed in range(100):
        n = 20 + seed % 20
        g, part = gen_planted_3colorable(n, 8, seed, with_partition=True)
        assert g.min_degree() >= 8
        sizes = [list(part.values()).count(i) for i in range(3)]
        assert max(sizes) - min(sizes) <= 1
        assert all(part[a] != part[b] for a, b in g.edges())
        if seed < 30:
            assert decide_3colorable(g, cfg).colorable


def test_planted_infeasible():
    with pytest.raises(UsageError):
        gen_planted_3colorable(9, 7, 0)
    assert gen_planted_3colorable(9, 6, 0).min_degree() == 6


def test_obstruction():
    for seed in range(100):
        g = gen_planted_obstruction(24, 8, seed)
        assert g.min_degree() >= 8
        assert write_dimacs(g) == write_dimacs(gen_planted_obstruction(24, 8, seed))
        if seed < 30:
            assert not decide_3colorable(g).colorable
    with pytest.raises(UsageError):
        gen_planted_obstruction(3, 1, 0)
