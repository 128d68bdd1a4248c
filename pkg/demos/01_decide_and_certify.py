# Deciding 3-colorability and checking the certificate.
#
#   python demos/01_decide_and_certify.py

from threecol import Graph, SolverConfig, decide_3colorable, parse_dimacs, verify_coloring, write_dimacs

# The Petersen graph: 10 vertices, 3-regular, chromatic number 3.
outer = [(i, i % 5 + 1) for i in range(1, 6)]
spokes = [(i, i + 5) for i in range(1, 6)]
inner = [(6 + i, 6 + (i + 2) % 5) for i in range(5)]
petersen = Graph.from_edges(10, outer + spokes + inner)

report = decide_3colorable(petersen)
print("Petersen:", report.decision.value)
print("certificate:", report.certificate)
print("proper:", verify_coloring(petersen, report.certificate))

# oracle_cutoff=1 forces the branch-and-reduce path even on tiny graphs;
# the default hands graphs of <= 8 vertices to exhaustive search.
exact = SolverConfig(oracle_cutoff=1)
report = decide_3colorable(petersen, exact)
print("\nsame graph, no oracle shortcut:", report.decision.value)
print("stats:", report.stats.to_dict(timing=False))

# A wheel with an odd rim needs four colors.
rim = 7
wheel = Graph.from_edges(rim + 1, [(i, i + 1) for i in range(2, rim + 1)] + [(rim + 1, 2)]
                         + [(1, i) for i in range(2, rim + 2)])
report = decide_3colorable(wheel, exact)
print("\nwheel with a 7-cycle rim:", report.decision.value, "| reductions:", report.stats.reductions)

# DIMACS round trip.
text = write_dimacs(petersen)
print("\nDIMACS header:", text.decode().splitlines()[0])
assert parse_dimacs(text) == petersen
