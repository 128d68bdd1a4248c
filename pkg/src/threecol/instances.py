"""Seeded generators for test and benchmark graph families."""

import random

from .errors import UsageError
from .graph import Graph


def _top_up(rng, adj, delta, allowed):
    """Add random edges until every vertex has degree >= delta.

    ``allowed(u, w)`` restricts which pairs may be joined. Partners still below
    delta are preferred so the degree sequence stays close to regular.
    """
    verts = sorted(adj)
    for v in verts:
        while len(adj[v]) < delta:
            free = [u for u in verts if u != v and u not in adj[v] and allowed(v, u)]
            if not free:
                raise UsageError(f"cannot reach degree {delta} at vertex {v}")
            short = [u for u in free if len(adj[u]) < delta]
            u = rng.choice(short or free)
            adj[v].add(u)
            adj[u].add(v)


def _build(n, adj):
    return Graph.from_edges(n, ((a, b) for a in adj for b in adj[a] if a < b))


def _min_degree_adj(rng, n, delta, extra_p):
    adj = {v: set() for v in range(1, n + 1)}
    stubs = [v for v in adj for _ in range(delta)]
    if len(stubs) % 2:
        stubs.append(rng.randint(1, n))
    rng.shuffle(stubs)
    for a, b in zip(stubs[::2], stubs[1::2]):
        # loops and repeated pairs are dropped here and made up by _top_up
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    _top_up(rng, adj, delta, lambda u, w: True)
    if extra_p > 0:
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                if b not in adj[a] and rng.random() < extra_p:
                    adj[a].add(b)
                    adj[b].add(a)
    return adj


def gen_min_degree_random(n, delta, extra_p=0.0, seed=0) -> Graph:
    """Random graph with minimum degree >= delta.

    A pairing-model base gives roughly delta-regular structure; each remaining
    pair is then added with probability ``extra_p``.
    """
    if n < 1:
        raise UsageError("n must be positive")
    if not 0 <= delta < n:
        raise UsageError(f"need 0 <= delta < n, got delta={delta}, n={n}")
    if not 0.0 <= extra_p <= 1.0:
        raise UsageError("extra_p must be a probability")
    rng = random.Random(seed)
    return _build(n, _min_degree_adj(rng, n, delta, extra_p))


def planted_partition(n, seed):
    rng = random.Random(seed)
    order = list(range(1, n + 1))
    rng.shuffle(order)
    part = {v: i % 3 for i, v in enumerate(order)}
    return rng, part


def gen_planted_3colorable(n, delta, seed=0, with_partition=False):
    """3-partite graph on near-equal parts with minimum degree >= delta.

    With ``with_partition`` the vertex -> part (0, 1, 2) map is returned too.
    """
    if n < 1:
        raise UsageError("n must be positive")
    largest = -(-n // 3)
    if not 0 <= delta <= n - largest:
        raise UsageError(f"delta={delta} infeasible: a vertex has only {n - largest} foreign vertices")
    rng, part = planted_partition(n, seed)
    adj = {v: set() for v in range(1, n + 1)}
    _top_up(rng, adj, delta, lambda u, w: part[u] != part[w])
    g = _build(n, adj)
    return (g, part) if with_partition else g


def gen_planted_obstruction(n, delta, seed=0) -> Graph:
    """Minimum-degree random graph with a K4 planted on four random vertices."""
    if n < 4:
        raise UsageError("need at least 4 vertices to plant a K4")
    if not 0 <= delta < n:
        raise UsageError(f"need 0 <= delta < n, got delta={delta}, n={n}")
    rng = random.Random(seed)
    adj = _min_degree_adj(rng, n, delta, 0.0)
    quad = rng.sample(range(1, n + 1), 4)
    for a in quad:
        for b in quad:
            if a != b:
                adj[a].add(b)
    return _build(n, adj)


FAMILIES = {
    "min-degree": lambda n, delta, extra_p, seed: gen_min_degree_random(n, delta, extra_p, seed),
    "planted": lambda n, delta, extra_p, seed: gen_planted_3colorable(n, delta, seed),
    "obstruction": lambda n, delta, extra_p, seed: gen_planted_obstruction(n, delta, seed),
}


def generate(family, n, delta, extra_p=0.0, seed=0):
    try:
        gen = FAMILIES[family]
    except KeyError:
        raise UsageError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return gen(n, delta, extra_p, seed)
