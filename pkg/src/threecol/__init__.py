"""Exact 3-colorability testing by branch and reduce around a pivot vertex."""

from .csp import Csp32Instance, CspResult, build_case1_csp, extend_csp_solution, solve_csp
from .engine import (Decision, SolveReport, SolverConfig, SolveStats, branch_case3,
                     case2_enumerate, decide_3colorable, lift_coloring)
from .errors import DimacsParseError, InvariantError, ResourceLimitError, UsageError
from .graph import Graph, parse_dimacs, write_dimacs
from .oracle import brute_3color, brute_csp, verify_coloring
from .polysolve import list_color_width2, two_color
from .reduce import NeighborhoodStructure, ReductionOutcome, analyze_neighborhood, reduce_to_fixpoint

__version__ = "0.1.0"
