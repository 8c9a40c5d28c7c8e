"""Minimal paths and the per-path budget formulation.

Minimal paths are produced by a depth-first search that, at every node,
first closes the path on the sink when a working arc allows it and then
extends through the remaining neighbours in ascending node order.  On the
bridge network this yields ``{a1,a4}, {a1,a3,a5}, {a2,a5}, {a2,a3,a4}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .network import ArcState, Network, cost_of

DEFAULT_PATH_CAP = 10**6
DEFAULT_TERM_CAP = 10**7


class PathLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MinPath:
    arcs: frozenset[int]
    node_sequence: tuple[int, ...]
    # arc index -> +1 when traversed tail->head, -1 when head->tail
    directions: dict[int, int] = field(compare=False, hash=False)

    @property
    def mask(self) -> int:
        return sum(1 << (a - 1) for a in self.arcs)

    def arc_sequence(self) -> tuple[int, ...]:
        """Arc indices in traversal order."""
        return tuple(self.directions)

    def label(self) -> str:
        return "{" + ", ".join(f"a{a}" for a in sorted(self.arcs)) + "}"

    def __len__(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class MpBudgetReport:
    budget: float
    all_paths: tuple[MinPath, ...]
    feasible_paths: tuple[MinPath, ...]
    reliability: float
    per_path_cost: tuple[float, ...]
    per_path_prob: tuple[float, ...]

    @property
    def union_arcs(self) -> tuple[int, ...]:
        """Arcs used by at least one feasible path."""
        used: set[int] = set()
        for p in self.feasible_paths:
            used |= p.arcs
        return tuple(sorted(used))


def enumerate_minpaths(network: Network, cap: int = DEFAULT_PATH_CAP) -> list[MinPath]:
    src, sink = network.source, network.sink
    # outgoing usable arcs per node: (neighbour, arc index, direction)
    out: dict[int, list[tuple[int, int, int]]] = {v: [] for v in range(1, network.n + 1)}
    for a in network.arcs:
        out[a.tail].append((a.head, a.index, 1))
        if not a.oriented:
            out[a.head].append((a.tail, a.index, -1))
    for v in out:
        out[v].sort(key=lambda e: (e[0] != sink, e[0], e[1]))

    paths: list[MinPath] = []
    nodes = [src]
    steps: list[tuple[int, int]] = []
    on_path = {src}

    def dfs(u: int) -> None:
        for v, idx, sign in out[u]:
            if v in on_path:
                continue
            nodes.append(v)
            steps.append((idx, sign))
            if v == sink:
                if len(paths) >= cap:
                    raise PathLimitExceeded(f"more than {cap} minimal paths")
                paths.append(MinPath(frozenset(i for i, _ in steps), tuple(nodes), dict(steps)))
            else:
                on_path.add(v)
                dfs(v)
                on_path.discard(v)
            nodes.pop()
            steps.pop()

    dfs(src)
    return paths


def path_cost(network: Network, p: MinPath) -> float:
    # same summation as cost_of so per-path and whole-state budgets agree exactly
    return cost_of(network, ArcState.from_arcs(p.arcs, network.m))


def path_prob(network: Network, p: MinPath) -> float:
    out = 1.0
    for a in sorted(p.arcs):
        out *= network.arcs[a - 1].prob
    return out


def union_reliability(network: Network, paths: list[MinPath],
                      term_cap: int = DEFAULT_TERM_CAP) -> float:
    """Probability that at least one of ``paths`` has all its arcs working.

    Inclusion-exclusion over path subsets, with terms whose arc unions
    coincide merged into one signed coefficient as they are generated.
    """
    terms: dict[int, int] = {}
    for p in paths:
        pm = p.mask
        nxt = dict(terms)
        nxt[pm] = nxt.get(pm, 0) + 1
        for union, coef in terms.items():
            u = union | pm
            nxt[u] = nxt.get(u, 0) - coef
        terms = {u: c for u, c in nxt.items() if c}
        if len(terms) > term_cap:
            raise PathLimitExceeded(f"inclusion-exclusion exceeded {term_cap} merged terms")
    probs = [a.prob for a in network.arcs]
    parts = []
    for union, coef in sorted(terms.items()):
        pr = 1.0
        k = 0
        while union >> k:
            if (union >> k) & 1:
                pr *= probs[k]
            k += 1
        parts.append(coef * pr)
    return math.fsum(parts)


def mp_budget_solve(network: Network, c_ub: float, cap: int = DEFAULT_PATH_CAP) -> MpBudgetReport:
    if c_ub < 0:
        raise ValueError(f"per-path budget must be >= 0, got {c_ub}")
    paths = enumerate_minpaths(network, cap)
    costs = tuple(path_cost(network, p) for p in paths)
    probs = tuple(path_prob(network, p) for p in paths)
    feasible = tuple(p for p, c in zip(paths, costs) if c <= c_ub)
    return MpBudgetReport(
        budget=c_ub,
        all_paths=tuple(paths),
        feasible_paths=feasible,
        reliability=union_reliability(network, list(feasible)) if feasible else 0.0,
        per_path_cost=costs,
        per_path_prob=probs,
    )


def union_cost(network: Network, report: MpBudgetReport) -> float:
    """What it costs to build all arcs used by the report's feasible paths."""
    return cost_of(network, ArcState.from_arcs(report.union_arcs, network.m))


def min_feasible_path_size(network: Network, c_star: float,
                           paths: list[MinPath] | None = None) -> int | None:
    """Fewest arcs among minimal paths costing at most ``c_star``; None if none do."""
    if paths is None:
        paths = enumerate_minpaths(network)
    sizes = [len(p) for p in paths if path_cost(network, p) <= c_star]
    return min(sizes) if sizes else None
