"""Recursive branch-and-reduce decision procedure for 3-colorability.

A pivot v is fixed at the top (a maximum-degree vertex) and kept through the
recursion. Each node reduces around v and then dispatches:

* d(v) = n - 1: G is 3-colorable iff G - v is bipartite;
* d(v) > alpha * n: encode the rest of the graph as a (3,2)-CSP;
* every vertex within distance 2 of v: enumerate the {2,3}-colorings of N(v)
  and solve the remaining width-2 list coloring problem;
* otherwise pick x at distance >= 3 and recurse on G/vx and on G + vx.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Optional

from . import oracle
from .csp import build_case1_csp, extend_csp_solution, solve_csp
from .errors import InvariantError, ResourceLimitError, UsageError
from .polysolve import list_color_width2, two_color
from .reduce import reduce_to_fixpoint

MODES = {"delta8": 8, "delta7": 7, "unchecked": None}
# (base, degree coefficient) of the claimed running-time bound per mode
BOUNDS = {"delta8": (1.3158, 0.7), "delta7": (1.32, 0.73), "unchecked": (1.3158, 0.7)}


class Decision(str, Enum):
    COLORABLE = "COLORABLE"
    NOT_COLORABLE = "NOT_COLORABLE"


@dataclass(frozen=True)
class SolverConfig:
    mode: str = "delta8"
    alpha: Fraction = Fraction(309, 1000)
    oracle_cutoff: int = 8
    want_certificate: bool = True
    node_limit: Optional[int] = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise UsageError(f"mode must be one of {sorted(MODES)}")
        alpha = Fraction(self.alpha)
        if not 0 < alpha < Fraction(1, 2):
            raise UsageError("alpha must lie strictly between 0 and 1/2")
        object.__setattr__(self, "alpha", alpha)
        if self.oracle_cutoff < 1:
            raise UsageError("oracle_cutoff must be at least 1")
        if self.node_limit is not None and self.node_limit < 1:
            raise UsageError("node_limit must be positive")

    @property
    def degree_threshold(self):
        return MODES[self.mode]


@dataclass
class SolveStats:
    engine_nodes: int = 0
    csp_nodes: int = 0
    case2_enums: int = 0
    reductions: int = 0
    oracle_calls: int = 0
    base_cases: int = 0
    case1: int = 0
    case2: int = 0
    case3: int = 0
    elapsed: float = 0.0

    @property
    def total_nodes(self):
        return self.engine_nodes + self.csp_nodes + self.case2_enums

    def to_dict(self, timing=True):
        d = asdict(self)
        if not timing:
            del d["elapsed"]
        return d


@dataclass
class SolveReport:
    decision: Decision
    certificate: Optional[dict]
    stats: SolveStats = field(default_factory=SolveStats)
    guarantee_held: Optional[bool] = True

    @property
    def colorable(self):
        return self.decision is Decision.COLORABLE

    def to_dict(self, timing=True):
        cert = None
        if self.certificate is not None:
            cert = {str(k): self.certificate[k] for k in sorted(self.certificate)}
        return {
            "decision": self.decision.value,
            "certificate": cert,
            "stats": self.stats.to_dict(timing),
            "guarantee_held": self.guarantee_held,
        }


def lift_coloring(original_n, g, c):
    """Paint each input vertex with the color of the live vertex it was merged into."""
    lifted = {}
    for v in g.vertices():
        color = c[v]
        for o in g.merge_class(v):
            if o in lifted:
                raise InvariantError(f"input vertex {o} lies in two merge classes")
            lifted[o] = color
    if len(lifted) != original_n or set(lifted) != set(range(1, original_n + 1)):
        raise InvariantError("merge classes do not partition the input vertices")
    return lifted


def choose_pivot(g):
    return min(g.vertices(), key=lambda u: (-g.degree(u), u))


def case2_enumerate(g, v, s, stats=None):
    """Try every proper {2,3}-coloring of N(v) and solve the list problem on N^2(v).

    Returns a coloring of ``g`` (v gets 1) or None.
    """
    n2 = g.second_neighborhood(v)
    rest = g.induced_subgraph(n2)
    choices = [((u, 2), (w, 3)) for u, w in s.pairs] + [((z, 2),) for z in s.singletons]
    for flips in product((False, True), repeat=len(choices)):
        if stats is not None:
            stats.case2_enums += 1
        fixed = {v: 1}
        for choice, flip in zip(choices, flips):
            for u, c in choice:
                fixed[u] = 5 - c if flip else c
        lists = {}
        for y in n2:
            lists[y] = {1, 2, 3} - {fixed[u] for u in g.neighbors(y) if u in fixed}
        if any(not lst for lst in lists.values()):
            continue
        sub = list_color_width2(rest, lists)
        if sub is not None:
            fixed.update(sub)
            return fixed
    return None


class _Search:
    def __init__(self, cfg: SolverConfig):
        self.cfg = cfg
        self.stats = SolveStats()
        self.threshold = cfg.degree_threshold
        self.guarantee_held = True if self.threshold is not None else None

    def tick(self):
        self.stats.engine_nodes += 1
        limit = self.cfg.node_limit
        if limit is not None and self.stats.engine_nodes > limit:
            raise ResourceLimitError(f"engine node limit {limit} exceeded", self.stats)

    def solve(self, g, v):
        """Return (colorable, lifted coloring or None) for the node graph ``g``."""
        self.tick()
        want = self.cfg.want_certificate
        if g.n <= self.cfg.oracle_cutoff:
            self.stats.oracle_calls += 1
            c = oracle.brute_3color(g)
            if c is None:
                return False, None
            return True, lift_coloring(g.original_n, g, c) if want else None

        out = reduce_to_fixpoint(g, v)
        self.stats.reductions += out.steps
        if out.not_colorable:
            return False, None
        g, s = out.graph, out.structure
        n, d = g.n, g.degree(v)

        if d == n - 1:
            self.stats.base_cases += 1
            c = two_color(g.remove_vertex(v))
            if c is None:
                return False, None
            if not want:
                return True, None
            c = {u: col + 1 for u, col in c.items()}
            c[v] = 1
            return True, lift_coloring(g.original_n, g, c)

        alpha = self.cfg.alpha
        if d * alpha.denominator > alpha.numerator * n:
            self.stats.case1 += 1
            inst = build_case1_csp(g, v, s)
            res = solve_csp(inst)
            self.stats.csp_nodes += res.nodes
            if not res.satisfiable:
                return False, None
            if not want:
                return True, None
            sol = dict(zip(inst.origin, res.assignment))
            return True, lift_coloring(g.original_n, g, extend_csp_solution(g, v, s, sol))

        n2 = g.second_neighborhood(v)
        if d + 1 + len(n2) == n:
            self.stats.case2 += 1
            c = case2_enumerate(g, v, s, self.stats)
            if c is None:
                return False, None
            return True, lift_coloring(g.original_n, g, c) if want else None

        return self.branch(g, v, n2)

    def branch(self, g, v, n2):
        self.stats.case3 += 1
        ball = g.neighbors(v) | n2 | {v}
        x = min((u for u in g.vertices() if u not in ball), key=lambda u: (-g.degree(u), u))
        dx, dv, n = g.degree(x), g.degree(v), g.n
        if self.threshold is not None and dx < self.threshold:
            self.guarantee_held = False

        merged = g.contract(v, x)
        if merged.degree(v) != dv + dx:
            raise InvariantError("contraction with a distance-3 vertex must add its full degree")
        if merged.n - merged.degree(v) >= n - dv:
            raise InvariantError("n - d(v) failed to decrease in the contraction branch")
        found, c = self.solve(merged, v)
        if found:
            return found, c

        joined = g.add_edge(v, x)
        if joined.degree(v) != dv + 1:
            raise InvariantError("edge branch must raise d(v) by exactly one")
        return self.solve(joined, v)


def decide_3colorable(g, cfg: Optional[SolverConfig] = None) -> SolveReport:
    """Decide whether ``g`` is 3-colorable.

    The answer is exact for every input. ``guarantee_held`` reports whether
    each distance-3 branching vertex met the mode's degree threshold, i.e.
    whether the run stayed inside the regime of the claimed bound (``None``
    in ``unchecked`` mode).
    """
    cfg = cfg or SolverConfig()
    if g.n < 1:
        raise UsageError("graph must have at least one vertex")
    search = _Search(cfg)
    start = time.perf_counter()
    try:
        found, c = search.solve(g, choose_pivot(g))
    finally:
        search.stats.elapsed = time.perf_counter() - start
    if found and cfg.want_certificate:
        if not oracle.verify_coloring(g, c):
            raise InvariantError("lifted certificate is not a proper coloring")
    else:
        c = None
    decision = Decision.COLORABLE if found else Decision.NOT_COLORABLE
    return SolveReport(decision, c, search.stats, search.guarantee_held)


def branch_case3(g, v, cfg: Optional[SolverConfig] = None) -> SolveReport:
    """Run one contract-or-connect branching step on ``g`` around ``v``."""
    cfg = cfg or SolverConfig()
    n2 = g.second_neighborhood(v)
    if g.degree(v) + 1 + len(n2) == g.n:
        raise UsageError("every vertex is within distance 2 of the pivot")
    search = _Search(cfg)
    found, c = search.branch(g, v, n2)
    decision = Decision.COLORABLE if found else Decision.NOT_COLORABLE
    return SolveReport(decision, c, search.stats, search.guarantee_held)
