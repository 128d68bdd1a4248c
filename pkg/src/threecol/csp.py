"""Binary constraint satisfaction over the values {1, 2, 3}.

Variables are numbered from 0. A nogood ``((x, a), (y, b))`` forbids the joint
assignment x=a, y=b; nogoods are stored once, with ``x < y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, Optional, Tuple

from .errors import InvariantError, UsageError

VALUES = (1, 2, 3)
FULL = frozenset(VALUES)

Nogood = Tuple[Tuple[int, int], Tuple[int, int]]


def _canonical(x, a, y, b) -> Nogood:
    return ((x, a), (y, b)) if x < y else ((y, b), (x, a))


@dataclass(frozen=True)
class Csp32Instance:
    n_vars: int
    domains: Tuple[FrozenSet[int], ...]
    nogoods: FrozenSet[Nogood]
    origin: Optional[Tuple[int, ...]] = None

    @classmethod
    def create(cls, n_vars: int, nogoods: Iterable = (), domains=None, origin=None):
        """Validate and canonicalize; duplicate and mirrored nogoods collapse."""
        if n_vars < 0:
            raise UsageError("variable count must be non-negative")
        if domains is None:
            doms = (FULL,) * n_vars
        else:
            doms = tuple(frozenset(d) for d in domains)
            if len(doms) != n_vars:
                raise UsageError(f"expected {n_vars} domains, got {len(doms)}")
            for i, d in enumerate(doms):
                if not d or not d <= FULL:
                    raise UsageError(f"domain of variable {i} must be a nonempty subset of {{1,2,3}}")
        canon = set()
        for (x, a), (y, b) in nogoods:
            if not (0 <= x < n_vars and 0 <= y < n_vars):
                raise UsageError(f"nogood references unknown variable: {(x, a, y, b)}")
            if x == y:
                raise UsageError(f"nogood must couple two distinct variables: {(x, a, y, b)}")
            if a not in FULL or b not in FULL:
                raise UsageError(f"nogood value outside {{1,2,3}}: {(x, a, y, b)}")
            canon.add(_canonical(x, a, y, b))
        if origin is not None:
            origin = tuple(origin)
            if len(origin) != n_vars:
                raise UsageError("origin map must name one vertex per variable")
        return cls(n_vars, doms, frozenset(canon), origin)

    def satisfied_by(self, assignment) -> bool:
        if len(assignment) != self.n_vars:
            return False
        if any(assignment[i] not in self.domains[i] for i in range(self.n_vars)):
            return False
        return not any(assignment[x] == a and assignment[y] == b
                       for (x, a), (y, b) in self.nogoods)


@dataclass(frozen=True)
class CspResult:
    satisfiable: bool
    assignment: Optional[Tuple[int, ...]]
    nodes: int = 0


# -- text format -------------------------------------------------------------

def parse_csp32(text) -> Csp32Instance:
    """Read ``csp32 <nvars>`` / ``d <var> <values...>`` / ``f <x> <a> <y> <b>`` (1-based)."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("ascii")
    n = None
    domains = None
    nogoods = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        try:
            if tok[0] == "csp32":
                if n is not None or len(tok) != 2:
                    raise UsageError("malformed or duplicate header")
                n = int(tok[1])
                domains = [FULL] * n
            elif n is None:
                raise UsageError("content before 'csp32' header")
            elif tok[0] == "d":
                var = int(tok[1]) - 1
                vals = [int(t) for t in tok[2:]]
                if not 0 <= var < n:
                    raise UsageError(f"variable {var + 1} out of range")
                domains[var] = frozenset(vals)
            elif tok[0] == "f" and len(tok) == 5:
                x, a, y, b = map(int, tok[1:])
                # validate per line so errors carry a line number
                Csp32Instance.create(n, [((x - 1, a), (y - 1, b))])
                nogoods.append(((x - 1, a), (y - 1, b)))
            else:
                raise UsageError(f"unknown line {raw.strip()!r}")
        except (UsageError, ValueError, IndexError) as exc:
            raise UsageError(f"line {lineno}: {exc}") from None
    if n is None:
        raise UsageError("missing 'csp32' header")
    return Csp32Instance.create(n, nogoods, domains)


def format_csp32(inst: Csp32Instance) -> str:
    out = [f"csp32 {inst.n_vars}"]
    for i, d in enumerate(inst.domains):
        if d != FULL:
            out.append(f"d {i + 1} " + " ".join(map(str, sorted(d))))
    for (x, a), (y, b) in sorted(inst.nogoods):
        out.append(f"f {x + 1} {a} {y + 1} {b}")
    return "\n".join(out) + "\n"


# -- solver ------------------------------------------------------------------

_BIT = {1: 2, 2: 4, 3: 8}
_SINGLE = {2: 1, 4: 2, 8: 3}
_POP = [bin(i).count("1") for i in range(16)]


class _Solver:
    def __init__(self, inst: Csp32Instance):
        n = inst.n_vars
        self.n = n
        # conflicts[x][a] -> list of (y, bit of b)
        self.conflicts = [{a: [] for a in VALUES} for _ in range(n)]
        for (x, a), (y, b) in sorted(inst.nogoods):
            self.conflicts[x][a].append((y, _BIT[b]))
            self.conflicts[y][b].append((x, _BIT[a]))
        self.nodes = 0

    def propagate(self, dom, queue):
        """Push singleton domains through the nogoods; False on a wipe-out."""
        conflicts = self.conflicts
        while queue:
            x = queue.pop()
            for y, bit in conflicts[x][_SINGLE[dom[x]]]:
                d = dom[y]
                if d & bit:
                    d ^= bit
                    if not d:
                        return False
                    dom[y] = d
                    if d in _SINGLE:
                        queue.append(y)
        return True

    def live_degree(self, dom, x):
        deg = 0
        for a, bit_a in _BIT.items():
            if dom[x] & bit_a:
                for y, bit in self.conflicts[x][a]:
                    if dom[y] & bit and dom[y] not in _SINGLE:
                        deg += 1
        return deg

    def search(self, dom):
        self.nodes += 1
        best = None
        best_key = None
        for x in range(self.n):
            d = dom[x]
            if d in _SINGLE:
                continue
            deg = self.live_degree(dom, x)
            if deg == 0:
                # no live nogood touches x: any value works
                dom[x] = d & -d
                continue
            key = (_POP[d], -deg, x)
            if best_key is None or key < best_key:
                best, best_key = x, key
        if best is None:
            return dom
        d = dom[best]
        for a in VALUES:
            bit = _BIT[a]
            if not d & bit:
                continue
            child = list(dom)
            child[best] = bit
            if self.propagate(child, [best]):
                found = self.search(child)
                if found is not None:
                    return found
        return None


def solve_csp(inst: Csp32Instance) -> CspResult:
    """Branch and reduce: propagate singletons, assign unconstrained variables,
    branch on a smallest domain (ties: most live nogoods, then lowest index)."""
    solver = _Solver(inst)
    dom = [sum(_BIT[a] for a in d) for d in inst.domains]
    if not solver.propagate(dom, [x for x in range(inst.n_vars) if dom[x] in _SINGLE]):
        return CspResult(False, None, 1)
    found = solver.search(dom)
    if found is None:
        return CspResult(False, None, solver.nodes)
    assignment = tuple(_SINGLE[d] for d in found)
    if not inst.satisfied_by(assignment):
        raise InvariantError("solver produced an assignment violating the instance")
    return CspResult(True, assignment, solver.nodes)


# -- case 1 encoding ---------------------------------------------------------

def build_case1_csp(g, v, s) -> Csp32Instance:
    """Encode 3-colorability of ``g`` as a CSP on V(g) - N[v], with v colored 1.

    ``s`` is the matched-pair/singleton structure of N(v) after reduction.
    Nogoods: adjacent x, y differ; x, y sharing a neighbor in N(v) are not
    {2, 3} in either order; x next to u_i and y next to w_i are not both 2 or
    both 3.
    """
    nv = g.neighbors(v)
    h = sorted(set(g.vertices()) - nv - {v})
    hset = frozenset(h)
    idx = {x: i for i, x in enumerate(h)}
    nogoods = set()
    for x in h:
        for y in g.neighbors(x) & hset:
            if x < y:
                for c in VALUES:
                    nogoods.add(_canonical(idx[x], c, idx[y], c))
    for z in sorted(nv):
        for x, y in combinations(sorted(g.neighbors(z) & hset), 2):
            nogoods.add(_canonical(idx[x], 2, idx[y], 3))
            nogoods.add(_canonical(idx[x], 3, idx[y], 2))
    for u, w in s.pairs:
        if not g.has_edge(u, w):
            raise InvariantError(f"({u}, {w}) is not an edge of N({v})")
        for x in g.neighbors(u) & hset:
            for y in g.neighbors(w) & hset:
                if x == y:
                    raise InvariantError(f"pair ({u}, {w}) shares neighbor {x}; reduce first")
                for c in (2, 3):
                    nogoods.add(_canonical(idx[x], c, idx[y], c))
    return Csp32Instance.create(len(h), nogoods, origin=h)


def extend_csp_solution(g, v, s, sol):
    """Complete a coloring of V(g) - N[v] (dict vertex -> color) to all of ``g``."""
    coloring = dict(sol)
    coloring[v] = 1

    def seen(u):
        return {sol[x] for x in g.neighbors(u) if x in sol} - {1}

    for z in s.singletons:
        free = [c for c in (2, 3) if c not in seen(z)]
        if not free:
            raise InvariantError(f"singleton {z} sees both colors 2 and 3")
        coloring[z] = free[0]
    for u, w in s.pairs:
        a, b = seen(u), seen(w)
        if len(a) > 1 or len(b) > 1 or (a and a == b):
            raise InvariantError(f"pair ({u}, {w}) cannot be oriented")
        if a:
            cu = 5 - a.pop()
        elif b:
            cu = b.pop()
        else:
            cu = 2
        coloring[u], coloring[w] = cu, 5 - cu
    return coloring
