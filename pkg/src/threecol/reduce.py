"""Colorability-preserving reductions around a pivot vertex.

Two rules are applied until neither fires:

* R1: a vertex of N(v) with two neighbors u1 < u3 inside N(v). If u1u3 is an
  edge, {v, u1, u2, u3} is a K4; otherwise u1 and u3 are forced to share a
  color and are contracted (u1 survives).
* R2: once G[N(v)] is a matching, a matched pair with a common neighbor y
  outside N[v] forces y to take v's color, so y is contracted into v.

R1 is exhausted before R2 is tried; the scan restarts after every contraction.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import InvariantError
from .graph import Graph


@dataclass(frozen=True)
class NeighborhoodStructure:
    pairs: Tuple[Tuple[int, int], ...]
    singletons: Tuple[int, ...]

    @property
    def r(self):
        return len(self.pairs)

    @property
    def t(self):
        return len(self.singletons)


@dataclass(frozen=True)
class ReductionOutcome:
    """Result of :func:`reduce_to_fixpoint`; ``graph is None`` means not 3-colorable."""

    graph: Optional[Graph]
    pivot: int
    structure: Optional[NeighborhoodStructure]
    steps: int

    @property
    def not_colorable(self):
        return self.graph is None


def analyze_neighborhood(g, v) -> NeighborhoodStructure:
    nv = g.neighbors(v)
    pairs, singletons = [], []
    for u in sorted(nv):
        inner = g.neighbors(u) & nv
        if len(inner) > 1:
            raise InvariantError(f"vertex {u} has {len(inner)} neighbors inside N({v})")
        if not inner:
            singletons.append(u)
        else:
            (w,) = inner
            if u < w:
                pairs.append((u, w))
    return NeighborhoodStructure(tuple(pairs), tuple(singletons))


def _find_r1(g, v):
    nv = g.neighbors(v)
    for u2 in sorted(nv):
        inner = g.neighbors(u2) & nv
        if len(inner) >= 2:
            u1, u3 = sorted(inner)[:2]
            return u1, u3
    return None


def _find_r2(g, v):
    nv = g.neighbors(v)
    for u in sorted(nv):
        inner = g.neighbors(u) & nv
        if not inner:
            continue
        (w,) = inner
        if u > w:
            continue
        # a common neighbor inside N(v) would have fired R1
        common = (g.neighbors(u) & g.neighbors(w)) - nv - {v}
        if common:
            return min(common)
    return None


def reduce_to_fixpoint(g, v) -> ReductionOutcome:
    steps = 0
    while True:
        hit = _find_r1(g, v)
        if hit is not None:
            u1, u3 = hit
            if g.has_edge(u1, u3):
                return ReductionOutcome(None, v, None, steps)
            g = g.contract(u1, u3)
            steps += 1
            continue
        y = _find_r2(g, v)
        if y is None:
            break
        g = g.contract(v, y)
        steps += 1
    return ReductionOutcome(g, v, analyze_neighborhood(g, v), steps)
