"""Command-line entry point: ``budgetnet <command> ...``.

Exit status is 0 when a solution is found, 2 when the problem is infeasible
and 1 on any error.
"""

from __future__ import annotations

import argparse
import sys

from . import report
from .io import DocumentError, resolve_network
from .minpaths import (PathLimitExceeded, enumerate_minpaths, mp_budget_solve, path_cost,
                       path_prob, union_cost)
from .network import ContractError
from .optimizer import BudgetProblem, oracle_solve, solve_bat_baseline, solve_stepwise
from .reliability import EnumerationTooLarge, reliability

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _add_network(p: argparse.ArgumentParser) -> None:
    p.add_argument("network_pos", nargs="?", metavar="NETWORK",
                   help="network JSON file or bundled fixture name (bridge, water, ...)")
    p.add_argument("--network", "-n", dest="network_opt", metavar="F")
    p.add_argument("--json", action="store_true", help="emit machine-readable JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="budgetnet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="most reliable subnetwork within a total budget")
    _add_network(p)
    p.add_argument("--budget", "-b", type=float, required=True)
    p.add_argument("--algorithm", choices=("stepwise", "bat", "oracle"), default="stepwise")
    p.add_argument("--mmin", choices=("hop", "exact"), default="hop")
    p.add_argument("--all-optima", action="store_true")
    p.add_argument("--trace", action="store_true", help="print every candidate per level")
    p.add_argument("--threads", type=int, default=1, help="worker-count hint")

    p = sub.add_parser("reliability", help="exact reliability of one subnetwork")
    _add_network(p)
    p.add_argument("--state", required=True, help="bit string, first character = arc 1")

    p = sub.add_parser("minpaths", help="list minimal paths")
    _add_network(p)
    p.add_argument("--budget-per-path", type=float, default=None)

    p = sub.add_parser("mp-budget", help="traditional per-path budget problem")
    _add_network(p)
    p.add_argument("--budget", "-b", type=float, required=True)

    p = sub.add_parser("bench", help="compare algorithms over several budgets (CSV)")
    _add_network(p)
    p.add_argument("--budgets", required=True, help="comma-separated budgets")
    p.add_argument("--algorithms", default="stepwise,bat")
    p.add_argument("--threads", type=int, default=1)
    return parser


def _network(args):
    ref = args.network_opt or args.network_pos
    if not ref:
        raise ValueError("a network is required (positional or --network)")
    return resolve_network(ref)


def _solve(args, out) -> int:
    net, digest = _network(args)
    problem = BudgetProblem(net, args.budget)
    if args.algorithm == "stepwise":
        rep = solve_stepwise(problem, mmin=args.mmin, trace=args.trace,
                             all_optima=args.all_optima, workers=args.threads)
    elif args.algorithm == "bat":
        rep = solve_bat_baseline(problem, all_optima=args.all_optima, workers=args.threads)
    else:
        rep = oracle_solve(problem, all_optima=args.all_optima)
    if args.json:
        out.write(report.solve_json(rep, digest, net.name, args.mmin))
    else:
        out.write(report.solve_text(rep, net, trace=args.trace))
    return EXIT_OK if rep.best is not None else EXIT_INFEASIBLE


def _reliability(args, out) -> int:
    import json

    net, digest = _network(args)
    state = net.state(args.state)
    res = reliability(net, state)
    if args.json:
        out.write(json.dumps({"network_sha256": digest, "state": state.to_string(),
                              "reliability": res.value, "states_evaluated": res.states_evaluated,
                              "connected_states": res.connected_states}, indent=2) + "\n")
    else:
        out.write(f"{res.value:.7f}\n")
    return EXIT_OK if res.value > 0 else EXIT_INFEASIBLE


def _minpaths(args, out) -> int:
    import json

    net, digest = _network(args)
    paths = enumerate_minpaths(net)
    costs = [path_cost(net, p) for p in paths]
    probs = [path_prob(net, p) for p in paths]
    if args.json:
        out.write(json.dumps({"network_sha256": digest, "paths": [
            {"label": f"p{k}", "arcs": sorted(p.arcs), "nodes": list(p.node_sequence),
             "cost": c, "prob": pr}
            for k, (p, c, pr) in enumerate(zip(paths, costs, probs), start=1)]}, indent=2) + "\n")
    else:
        out.write(report.minpaths_text(net, paths, costs, probs, args.budget_per_path))
    return EXIT_OK if paths else EXIT_INFEASIBLE


def _mp_budget(args, out) -> int:
    net, digest = _network(args)
    rep = mp_budget_solve(net, args.budget)
    build = union_cost(net, rep)
    if args.json:
        out.write(report.mp_budget_json(net, rep, build, digest))
    else:
        out.write(report.mp_budget_text(net, rep, build))
        if rep.feasible_paths and build > rep.budget:
            print(f"warning: building the union of feasible paths costs {build:g} > "
                  f"{rep.budget:g}; the per-path budget does not bound the network cost",
                  file=sys.stderr)
    return EXIT_OK if rep.feasible_paths else EXIT_INFEASIBLE


def _bench(args, out) -> int:
    net, _ = _network(args)
    budgets = [float(b) for b in args.budgets.split(",") if b.strip()]
    algos = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    runners = {"stepwise": lambda p: solve_stepwise(p, workers=args.threads),
               "bat": lambda p: solve_bat_baseline(p, workers=args.threads),
               "oracle": oracle_solve}
    unknown = set(algos) - set(runners)
    if unknown:
        raise ValueError(f"unknown algorithm(s): {', '.join(sorted(unknown))}")
    rows = [runners[a](BudgetProblem(net, b)) for b in budgets for a in algos]
    out.write(report.bench_csv(rows))
    return EXIT_OK


COMMANDS = {"solve": _solve, "reliability": _reliability, "minpaths": _minpaths,
            "mp-budget": _mp_budget, "bench": _bench}


def run(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (DocumentError, ContractError, EnumerationTooLarge, PathLimitExceeded,
            FileNotFoundError, ValueError, OSError) as exc:
        print(f"budgetnet {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
