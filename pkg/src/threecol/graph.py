"""Simple undirected graphs with contraction bookkeeping and DIMACS I/O.

Vertices are positive integers. Every live vertex carries its *merge class*,
the set of input vertices that were identified into it, so that a coloring of
any graph derived by contractions and edge additions can be painted back onto
the input graph.
"""

from __future__ import annotations

from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple

from .errors import DimacsParseError, UsageError

Coloring = Dict[int, int]


class Graph:
    """Immutable simple graph. Operations return new graphs."""

    __slots__ = ("_adj", "_merge", "original_n")

    def __init__(self, adj: Mapping[int, FrozenSet[int]], merge: Mapping[int, FrozenSet[int]],
                 original_n: int):
        self._adj = adj
        self._merge = merge
        self.original_n = original_n

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]] = ()) -> "Graph":
        """Build a graph on vertices 1..n. Duplicate edges collapse; loops are rejected."""
        if n < 0:
            raise UsageError("vertex count must be non-negative")
        adj: Dict[int, set] = {i: set() for i in range(1, n + 1)}
        for a, b in edges:
            if a == b:
                raise UsageError(f"self-loop on vertex {a}")
            if a not in adj or b not in adj:
                raise UsageError(f"edge ({a}, {b}) out of range 1..{n}")
            adj[a].add(b)
            adj[b].add(a)
        return cls({v: frozenset(s) for v, s in adj.items()},
                   {v: frozenset((v,)) for v in adj}, n)

    # -- queries ---------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    def __len__(self):
        return len(self._adj)

    def __contains__(self, v):
        return v in self._adj

    def __iter__(self):
        return iter(sorted(self._adj))

    def vertices(self) -> List[int]:
        return sorted(self._adj)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return b in self._adj[a]

    def edges(self) -> List[Tuple[int, int]]:
        return sorted((a, b) for a, nb in self._adj.items() for b in nb if a < b)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self._adj.values()) // 2

    def merge_class(self, v: int) -> FrozenSet[int]:
        return self._merge[v]

    def max_degree(self) -> int:
        return max((len(nb) for nb in self._adj.values()), default=0)

    def min_degree(self) -> int:
        return min((len(nb) for nb in self._adj.values()), default=0)

    def second_neighborhood(self, v: int) -> FrozenSet[int]:
        """Vertices at distance exactly 2 from ``v``."""
        nv = self._adj[v]
        out = set()
        for u in nv:
            out |= self._adj[u]
        out -= nv
        out.discard(v)
        return frozenset(out)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.original_n == other.original_n and self._adj == other._adj
                and self._merge == other._merge)

    def __hash__(self):
        return hash((self.original_n, frozenset(self._adj.items())))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- transformations ---------------------------------------------------

    def _check_live(self, *vs):
        for v in vs:
            if v not in self._adj:
                raise UsageError(f"vertex {v} is not live")

    def contract(self, a: int, b: int) -> "Graph":
        """Identify ``b`` into ``a``; ``a`` survives and parallel edges collapse."""
        if a == b:
            raise UsageError("cannot contract a vertex with itself")
        self._check_live(a, b)
        adj = dict(self._adj)
        old_a, old_b = adj[a], adj.pop(b)
        adj[a] = (old_a | old_b) - {a, b}
        ab = frozenset((a,))
        for u in old_b:
            if u != a:
                adj[u] = (adj[u] - {b}) | ab
        merge = dict(self._merge)
        merge[a] = merge[a] | merge.pop(b)
        return Graph(adj, merge, self.original_n)

    def add_edge(self, a: int, b: int) -> "Graph":
        if a == b:
            raise UsageError("cannot add a self-loop")
        self._check_live(a, b)
        if b in self._adj[a]:
            raise UsageError(f"edge ({a}, {b}) already present")
        adj = dict(self._adj)
        adj[a] = adj[a] | {b}
        adj[b] = adj[b] | {a}
        return Graph(adj, self._merge, self.original_n)

    def remove_vertex(self, v: int) -> "Graph":
        self._check_live(v)
        adj = dict(self._adj)
        for u in adj.pop(v):
            adj[u] = adj[u] - {v}
        merge = dict(self._merge)
        del merge[v]
        return Graph(adj, merge, self.original_n)

    def induced_subgraph(self, vs: Iterable[int]) -> "Graph":
        keep = frozenset(vs)
        self._check_live(*keep)
        adj = {v: self._adj[v] & keep for v in keep}
        return Graph(adj, {v: self._merge[v] for v in keep}, self.original_n)


def contract(g: Graph, a: int, b: int) -> Graph:
    return g.contract(a, b)


def add_edge(g: Graph, a: int, b: int) -> Graph:
    return g.add_edge(a, b)


def second_neighborhood(g: Graph, v: int) -> FrozenSet[int]:
    return g.second_neighborhood(v)


# -- DIMACS ------------------------------------------------------------------

def parse_dimacs(text) -> Graph:
    """Parse the DIMACS edge format (``p edge n m`` / ``e u v`` / ``c ...``).

    The edge count in the header may count either the edge lines or the
    distinct edges, since files listing both orientations are common.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise DimacsParseError(0, "input is not 7-bit text") from exc
    n = m = None
    edges = set()
    lines = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None:
                raise DimacsParseError(lineno, "duplicate problem line")
            if len(tok) != 4 or tok[1] not in ("edge", "col"):
                raise DimacsParseError(lineno, "malformed header, expected 'p edge <n> <m>'")
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError:
                raise DimacsParseError(lineno, "malformed header counts") from None
            if n < 0 or m < 0:
                raise DimacsParseError(lineno, "negative header counts")
        elif tok[0] == "e":
            if n is None:
                raise DimacsParseError(lineno, "edge line before problem line")
            if len(tok) != 3:
                raise DimacsParseError(lineno, "malformed edge line")
            try:
                a, b = int(tok[1]), int(tok[2])
            except ValueError:
                raise DimacsParseError(lineno, "non-integer vertex") from None
            if not (1 <= a <= n and 1 <= b <= n):
                raise DimacsParseError(lineno, f"vertex index out of range 1..{n}")
            if a == b:
                raise DimacsParseError(lineno, f"self-loop on vertex {a}")
            edges.add((min(a, b), max(a, b)))
            lines += 1
        else:
            raise DimacsParseError(lineno, f"unknown line type {tok[0]!r}")
    if n is None:
        raise DimacsParseError(0, "missing problem line")
    if m not in (lines, len(edges)):
        raise DimacsParseError(0, f"header declares {m} edges, found {lines}")
    return Graph.from_edges(n, edges)


def write_dimacs(g: Graph) -> bytes:
    """Serialize ``g``, relabelling live vertices to 1..n in ascending order."""
    label = {v: i for i, v in enumerate(g.vertices(), 1)}
    edges = sorted((min(label[a], label[b]), max(label[a], label[b])) for a, b in g.edges())
    out = [f"p edge {g.n} {len(edges)}"]
    out.extend(f"e {a} {b}" for a, b in edges)
    return ("\n".join(out) + "\n").encode("ascii")
