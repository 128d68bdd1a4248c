# A tour of the pieces the engine is built from: reductions around a pivot,
# the CSP encoding used when the pivot has high degree, enumeration over the
# pivot's neighborhood, and contract-or-connect branching.
#
#   python demos/02_reductions_and_cases.py

from threecol import (Graph, SolverConfig, branch_case3, build_case1_csp, case2_enumerate,
                      extend_csp_solution, reduce_to_fixpoint, solve_csp, verify_coloring)
from threecol.csp import format_csp32


def wheel(rim):
    return Graph.from_edges(rim + 1, [(i, i + 1) for i in range(2, rim + 1)] + [(rim + 1, 2)]
                            + [(1, i) for i in range(2, rim + 2)])


# Reductions. Inside N(v), two neighbors of the same vertex must share a
# color, so they are merged. An even rim collapses to a single edge; an odd
# rim collapses to a triangle, which together with the hub is a K4.
for rim in (6, 7):
    out = reduce_to_fixpoint(wheel(rim), 1)
    if out.not_colorable:
        print(f"rim {rim}: refuted after {out.steps} merges")
    else:
        print(f"rim {rim}: {out.steps} merges, hub degree {out.graph.degree(1)}, "
              f"pairs {out.structure.pairs}, merged classes "
              f"{[sorted(out.graph.merge_class(u)) for u in out.graph.vertices()]}")

# High pivot degree: fix the pivot to color 1, so its neighbors use {2, 3},
# and encode the rest of the graph as a binary CSP.
c5 = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])
out = reduce_to_fixpoint(c5, 1)
inst = build_case1_csp(out.graph, 1, out.structure)
print(f"\nCSP for C5 around vertex 1 (variables are vertices {inst.origin}):")
print(format_csp32(inst), end="")
res = solve_csp(inst)
coloring = extend_csp_solution(out.graph, 1, out.structure, dict(zip(inst.origin, res.assignment)))
print("extended coloring:", coloring, "proper:", verify_coloring(c5, coloring))

# Low pivot degree, everything within distance 2: enumerate the colorings of
# N(v) and solve a list coloring problem with lists of size <= 2 on the rest.
spider = Graph.from_edges(9, [(1, 2), (1, 3), (2, 4), (2, 5), (2, 6), (3, 7), (3, 8), (3, 9)])
out = reduce_to_fixpoint(spider, 1)
print("\nspider via neighborhood enumeration:", case2_enumerate(spider, 1, out.structure))

# Some vertex at distance >= 3: it either shares the pivot's color (contract)
# or not (add an edge), and both branches raise d(v) relative to n.
two_triangles = Graph.from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)])
rep = branch_case3(two_triangles, 1, SolverConfig(oracle_cutoff=1))
print("\ntwo triangles joined by an edge:", rep.decision.value, rep.certificate)
print("guarantee held (branch vertex degree >= 8):", rep.guarantee_held)
