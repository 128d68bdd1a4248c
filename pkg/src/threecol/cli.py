"""Command line: ``threecol {solve,verify,gen,csp,bench}``.

Exit status: 0 when the command completed (a NOT_COLORABLE or UNSAT answer
included), 1 on usage or parse errors, 2 when a resource limit was hit.
"""

import argparse
import json
import sys
from fractions import Fraction

from .bench import estimate_growth_base, rows_to_csv, run_suite
from .csp import parse_csp32, solve_csp
from .engine import MODES, SolverConfig, decide_3colorable
from .errors import ResourceLimitError, UsageError
from .graph import parse_dimacs, write_dimacs
from .instances import FAMILIES, generate
from .oracle import verify_coloring


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(path, binary=False):
    if path == "-":
        return sys.stdin.buffer.read() if binary else sys.stdin.read()
    with open(path, "rb" if binary else "r") as f:
        return f.read()


def parse_certificate(text):
    """Collect ``v <id> <color>`` lines; anything else is ignored."""
    coloring = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if len(tok) == 3 and tok[0] == "v":
            try:
                coloring[int(tok[1])] = int(tok[2])
            except ValueError:
                raise UsageError(f"line {lineno}: malformed color line") from None
    return coloring


def format_certificate(coloring):
    return "".join(f"v {v} {coloring[v]}\n" for v in sorted(coloring))


def cmd_solve(args, out):
    g = parse_dimacs(_read(args.input, binary=True))
    cfg = SolverConfig(mode=args.mode, alpha=Fraction(args.alpha),
                       oracle_cutoff=args.oracle_cutoff,
                       want_certificate=args.certificate, node_limit=args.node_limit)
    rep = decide_3colorable(g, cfg)
    if args.stats == "json":
        out.write(json.dumps(rep.to_dict(), sort_keys=True) + "\n")
        return 0
    out.write(rep.decision.value + "\n")
    if rep.certificate is not None:
        out.write(format_certificate(rep.certificate))
    if args.stats == "text":
        for key, value in rep.stats.to_dict().items():
            out.write(f"c {key} {value}\n")
        out.write(f"c guarantee_held {rep.guarantee_held}\n")
    return 0


def cmd_verify(args, out):
    g = parse_dimacs(_read(args.input, binary=True))
    coloring = parse_certificate(_read(args.coloring))
    out.write("PROPER\n" if verify_coloring(g, coloring) else "IMPROPER\n")
    return 0


def cmd_gen(args, out):
    g = generate(args.model, args.n, args.delta, args.extra_p, args.seed)
    data = write_dimacs(g)
    if args.out:
        with open(args.out, "wb") as f:
            f.write(data)
    else:
        out.write(data.decode("ascii"))
    return 0


def cmd_csp(args, out):
    inst = parse_csp32(_read(args.input))
    res = solve_csp(inst)
    if not res.satisfiable:
        out.write("UNSAT\n")
        return 0
    out.write("SAT\n")
    out.writelines(f"x {i + 1} {val}\n" for i, val in enumerate(res.assignment))
    return 0


def cmd_bench(args, out):
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise UsageError("--sizes must be a comma-separated list of integers") from None
    cfg = SolverConfig(mode=args.mode, want_certificate=False)
    rows = run_suite(args.family, sizes, args.seeds, cfg, delta=args.delta, extra_p=args.extra_p)
    text = rows_to_csv(rows, timing=not args.no_timing)
    if args.out:
        with open(args.out, "w", newline="") as f:
            f.write(text)
    else:
        out.write(text)
    try:
        est = estimate_growth_base(rows)
        print(f"growth base {est.base:.4f} (rms residual {est.residual:.3f}, {est.points} runs)",
              file=sys.stderr)
    except UsageError:
        pass
    return 0


def build_parser():
    p = _Parser(prog="threecol", description="Exact 3-colorability by branch and reduce.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="decide 3-colorability of a DIMACS graph")
    s.add_argument("--input", required=True)
    s.add_argument("--mode", choices=sorted(MODES), default="delta8")
    s.add_argument("--alpha", default="309/1000")
    s.add_argument("--oracle-cutoff", type=int, default=8)
    s.add_argument("--certificate", action="store_true")
    s.add_argument("--stats", choices=("text", "json"))
    s.add_argument("--node-limit", type=int)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a coloring against a graph")
    s.add_argument("--input", required=True)
    s.add_argument("--coloring", required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="generate a seeded instance")
    s.add_argument("--model", choices=sorted(FAMILIES), default="min-degree")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--delta", type=int, default=8)
    s.add_argument("--extra-p", type=float, default=0.0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("csp", help="solve a csp32 instance")
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_csp)

    s = sub.add_parser("bench", help="measure search growth on a family")
    s.add_argument("--family", choices=sorted(FAMILIES), default="min-degree")
    s.add_argument("--sizes", default="20,25,30,35,40")
    s.add_argument("--seeds", type=int, default=5)
    s.add_argument("--mode", choices=sorted(MODES), default="delta8")
    s.add_argument("--delta", type=int, default=8)
    s.add_argument("--extra-p", type=float, default=0.0)
    s.add_argument("--no-timing", action="store_true",
                   help="leave elapsed_ms empty so reruns are byte-identical")
    s.add_argument("--out")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except ResourceLimitError as exc:
        print(f"threecol: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, OSError) as exc:
        print(f"threecol: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
