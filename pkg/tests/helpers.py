import random
from itertools import combinations

from threecol.graph import Graph


def complete(n):
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def cycle(n):
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def wheel(k):
    """Hub 1 joined to every vertex of the rim cycle 2..k+1."""
    rim = [(i, i + 1) for i in range(2, k + 1)] + [(k + 1, 2)]
    return Graph.from_edges(k + 1, rim + [(1, i) for i in range(2, k + 2)])


def complete_bipartite(a, b):
    return Graph.from_edges(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def petersen():
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_graph(n, p, rng):
    return Graph.from_edges(n, [e for e in combinations(range(1, n + 1), 2) if rng.random() < p])


def graph_from_mask(n, mask, pairs=None):
    pairs = pairs or list(combinations(range(1, n + 1), 2))
    return Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def from_networkx(h):
    nodes = sorted(h.nodes())
    label = {u: i for i, u in enumerate(nodes, 1)}
    return Graph.from_edges(len(nodes), [(label[a], label[b]) for a, b in h.edges()])


def all_graphs_up_to_iso(max_n):
    """Every graph on <= max_n vertices (max_n <= 8) up to isomorphism, possibly repeated.

    Graphs on <= 7 vertices come from the networkx atlas; 8-vertex graphs are
    all one-vertex extensions of the 7-vertex atlas entries, which covers every
    isomorphism class since deleting any vertex of an 8-vertex graph leaves one.
    """
    from networkx.generators.atlas import graph_atlas_g

    atlas = [h for h in graph_atlas_g() if 1 <= h.number_of_nodes() <= min(max_n, 7)]
    for h in atlas:
        yield from_networkx(h)
    if max_n >= 8:
        for h in atlas:
            if h.number_of_nodes() != 7:
                continue
            base = from_networkx(h)
            edges = base.edges()
            for mask in range(1 << 7):
                extra = [(i + 1, 8) for i in range(7) if mask >> i & 1]
                yield Graph.from_edges(8, edges + extra)


def seeded(seed):
    return random.Random(seed)
