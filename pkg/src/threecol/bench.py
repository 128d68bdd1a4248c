"""Growth measurements on generated families against the claimed exponential bound."""

import csv
import io
import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from .engine import BOUNDS, SolverConfig, decide_3colorable
from .errors import UsageError
from .instances import FAMILIES, generate

CSV_FIELDS = ("n", "Delta", "delta_min", "decision", "engine_nodes", "csp_nodes",
              "case2_enums", "elapsed_ms", "bound_exponent", "bound_value", "guarantee_held")


@dataclass(frozen=True)
class BenchRow:
    n: int
    Delta: int
    delta_min: int
    decision: str
    engine_nodes: int
    csp_nodes: int
    case2_enums: int
    elapsed_ms: float
    bound_exponent: float
    bound_value: float
    guarantee_held: Optional[bool]
    seed: int = 0

    @property
    def total_nodes(self):
        return self.engine_nodes + self.csp_nodes + self.case2_enums

    def csv_values(self, timing=True):
        return [
            self.n, self.Delta, self.delta_min, self.decision,
            self.engine_nodes, self.csp_nodes, self.case2_enums,
            f"{self.elapsed_ms:.3f}" if timing else "",
            f"{self.bound_exponent:.4f}", f"{self.bound_value:.6e}",
            "" if self.guarantee_held is None else str(self.guarantee_held).lower(),
        ]


@dataclass(frozen=True)
class GrowthEstimate:
    base: float
    slope: float
    intercept: float
    residual: float
    points: int


def run_suite(family, sizes, seeds_per_size, cfg=None, delta=8, extra_p=0.0, seed0=0):
    """One row per (n, seed) in ``sizes`` x ``range(seed0, seed0 + seeds_per_size)``.

    A generator or solver failure becomes a row whose decision is
    ``ERROR:<ExceptionName>`` with zeroed counters.
    """
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    cfg = cfg or SolverConfig()
    base, coeff = BOUNDS[cfg.mode]
    rows = []
    for n in sorted(sizes):
        for seed in range(seed0, seed0 + seeds_per_size):
            try:
                g = generate(family, n, delta, extra_p, seed)
            except UsageError as exc:
                rows.append(_error_row(n, exc, seed))
                continue
            big = g.max_degree()
            exponent = n - coeff * big
            try:
                rep = decide_3colorable(g, cfg)
            except Exception as exc:
                rows.append(BenchRow(n, big, g.min_degree(), f"ERROR:{type(exc).__name__}",
                                     0, 0, 0, 0.0, exponent, base ** exponent, None, seed))
                continue
            st = rep.stats
            rows.append(BenchRow(n, big, g.min_degree(), rep.decision.value,
                                 st.engine_nodes, st.csp_nodes, st.case2_enums,
                                 st.elapsed * 1000.0, exponent, base ** exponent,
                                 rep.guarantee_held, seed))
    return rows


def _error_row(n, exc, seed):
    return BenchRow(n, 0, 0, f"ERROR:{type(exc).__name__}", 0, 0, 0, 0.0, 0.0, 1.0, None, seed)


def rows_to_csv(rows: List[BenchRow], timing=True) -> str:
    """CSV text; ``timing=False`` blanks ``elapsed_ms`` for byte-stable comparisons."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for row in rows:
        w.writerow(row.csv_values(timing))
    return buf.getvalue()


def write_csv(rows, path, timing=True):
    with open(path, "w", newline="") as f:
        f.write(rows_to_csv(rows, timing))


def estimate_growth_base(rows) -> GrowthEstimate:
    """Least-squares fit of log(total nodes) against the bound exponent.

    The returned base is exp(slope): the per-unit growth of the search when
    the exponent n - c*Delta grows by one.
    """
    pts = [(r.bound_exponent, r.total_nodes) for r in rows if r.total_nodes > 0]
    if len({x for x, _ in pts}) < 2:
        raise UsageError("need at least two distinct bound exponents with positive node counts")
    x = np.array([p[0] for p in pts], dtype=float)
    y = np.log(np.array([p[1] for p in pts], dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    resid = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return GrowthEstimate(math.exp(slope), float(slope), float(intercept), resid, len(pts))
