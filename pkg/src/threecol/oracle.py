"""Brute-force reference solvers. Slow on purpose; used to check everything else."""

from itertools import product

from .errors import UsageError

BRUTE_GRAPH_LIMIT = 20
BRUTE_CSP_LIMIT = 12


def verify_coloring(g, coloring) -> bool:
    """True iff ``coloring`` colors every vertex of ``g`` and no edge is monochromatic."""
    for v in g.vertices():
        if coloring.get(v) not in (1, 2, 3):
            return False
    return all(coloring[a] != coloring[b] for a, b in g.edges())


def brute_3color(g):
    """Backtracking over all 3^n assignments, pruning on conflicts with earlier vertices.

    Returns a coloring dict or None.
    """
    if g.n > BRUTE_GRAPH_LIMIT:
        raise UsageError(f"brute_3color limited to {BRUTE_GRAPH_LIMIT} vertices, got {g.n}")
    order = g.vertices()
    earlier = [[u for u in g.neighbors(v) if u < v] for v in order]
    colors = {}

    def go(i):
        if i == len(order):
            return True
        v = order[i]
        for c in (1, 2, 3):
            if all(colors[u] != c for u in earlier[i]):
                colors[v] = c
                if go(i + 1):
                    return True
        colors.pop(v, None)
        return False

    return dict(colors) if go(0) else None


def brute_csp(inst):
    """Exhaustive search over the product of domains; returns a CspResult."""
    from .csp import CspResult

    if inst.n_vars > BRUTE_CSP_LIMIT:
        raise UsageError(f"brute_csp limited to {BRUTE_CSP_LIMIT} variables, got {inst.n_vars}")
    doms = [sorted(d) for d in inst.domains]
    for values in product(*doms):
        if not any(values[x] == a and values[y] == b for (x, a), (y, b) in inst.nogoods):
            return CspResult(True, tuple(values))
    return CspResult(False, None)


def brute_list_color(g, lists):
    """Exhaustive list coloring: first assignment (in product order) that is proper, or None."""
    if g.n > BRUTE_GRAPH_LIMIT:
        raise UsageError(f"brute_list_color limited to {BRUTE_GRAPH_LIMIT} vertices, got {g.n}")
    verts = g.vertices()
    edges = g.edges()
    for values in product(*(sorted(lists[v]) for v in verts)):
        c = dict(zip(verts, values))
        if all(c[a] != c[b] for a, b in edges):
            return c
    return None
