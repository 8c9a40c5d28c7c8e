"""Most reliable subnetwork under a total build budget.

``solve_stepwise`` walks arc counts ``d`` downward from ``m_max``.  At each
level it enumerates every ``d``-arc stepwise vector, drops those contained in
a feasible vector already recorded at a higher level, and evaluates the rest.
It halts as soon as the level proves nothing smaller can do better: either
every remaining candidate is feasible, or the best feasible candidate is at
least as reliable as every candidate at the level.  Reliability is monotone
under arc inclusion, so any smaller vector is a subset of some level
candidate (or of a recorded feasible vector) and cannot beat the incumbent.

``solve_bat_baseline`` scans all ``2**m`` states; ``oracle_solve`` is a slow,
independent exhaustive search used to check both.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .connectivity import connected_masks, hop_distance
from .enumeration import bat_masks, mask_to_stepwise, stepwise_masks
from .minpaths import min_feasible_path_size
from .network import ArcState, ContractError, Network, costs_of_masks
from .reliability import DEFAULT_CAP, reliability_many


TIE_TOL = 1e-12


class HaltReason(str, Enum):
    ALL_FEASIBLE = "all-feasible-level"
    BEST_DOMINATES = "best-dominates-level"
    EMPTY_LEVEL = "empty-level-chain"
    REACHED_MMIN = "reached-m_min"
    EXHAUSTED = "exhausted"

    def step_label(self) -> str:
        return {"all-feasible-level": "By STEP 4",
                "best-dominates-level": "By STEP 5"}.get(self.value, self.value)


@dataclass(frozen=True)
class BudgetProblem:
    network: Network
    budget: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.budget) or self.budget < 0:
            raise ContractError(f"budget must be finite and >= 0, got {self.budget}")


@dataclass
class TraceRow:
    level: int
    i: int
    mask: int
    dominated: bool
    connected: bool
    cost: float
    reliability: float | None
    feasible: bool
    remark: str = ""


@dataclass
class LevelSet:
    level: int
    generated: int
    candidates: int
    connected: int
    feasible: int
    all_feasible: bool
    best_feasible: tuple[int, float] | None
    best_overall: tuple[int, float] | None
    # False when the STEP-5 scan stopped at the first candidate beating X_d^*
    complete: bool = True
    incumbent_before: float = 0.0
    excluded: np.ndarray | None = field(default=None, repr=False)
    rows: list[TraceRow] = field(default_factory=list, repr=False)


@dataclass
class SolveReport:
    algorithm: str
    budget: float
    m: int
    best: ArcState | None
    best_reliability: float
    best_cost: float
    m_max: int
    m_min: int | None
    halt_reason: HaltReason
    vectors_examined: int
    wall_time: float
    levels: list[LevelSet] = field(default_factory=list)
    optima: list[ArcState] = field(default_factory=list)
    feasible_count: int = 0

    @property
    def feasible(self) -> bool:
        return self.best is not None

    @property
    def halt_level(self) -> int | None:
        return self.levels[-1].level if self.levels else None


def compute_m_max(network: Network, c_star: float) -> int:
    """Largest ``i`` such that the ``i`` cheapest arcs together fit the budget."""
    total = 0.0
    count = 0
    for c in sorted(a.cost for a in network.arcs):
        total += c
        if total > c_star:
            break
        count += 1
    return count


def compute_m_min(network: Network, c_star: float, mode: str = "hop") -> int | None:
    """Lower bound on the arc count of any feasible vector; None if no path exists.

    ``hop`` uses the fewest-arc source-sink path of the whole network;
    ``exact`` uses the smallest minimal path whose cost fits ``c_star``.
    """
    if mode == "hop":
        return hop_distance(network)
    if mode == "exact":
        return min_feasible_path_size(network, c_star)
    raise ValueError(f"unknown m_min mode {mode!r}")


def _children(masks: np.ndarray, m: int) -> np.ndarray:
    # every mask obtained by clearing exactly one set bit
    if masks.size == 0:
        return masks
    parts = []
    for k in range(m):
        bit = np.int64(1 << k)
        hit = masks[(masks & bit) != 0]
        if hit.size:
            parts.append(hit ^ bit)
    return np.unique(np.concatenate(parts)) if parts else masks[:0]


def _best(masks: np.ndarray, rel: np.ndarray) -> tuple[int, float] | None:
    if masks.size == 0:
        return None
    # ties go to the smallest bitmask so any split of the level reduces alike
    top = rel.max()
    j = int(np.argmin(np.where(rel == top, masks, np.iinfo(np.int64).max)))
    return int(masks[j]), float(rel[j])


def _near_best(groups, best_r: float, m: int) -> list[ArcState]:
    # equal reliabilities computed over different arc sets can differ in the
    # last bits, so ties are taken within TIE_TOL
    out = []
    for masks, rel in groups:
        out.extend(int(x) for x in masks[rel >= best_r - TIE_TOL])
    return [ArcState(x, m) for x in out]


def _fmt_cost(c: float) -> str:
    return f"{c:g}"


def solve_stepwise(problem: BudgetProblem, mmin: str = "hop", trace: bool = False,
                   all_optima: bool = False, cap: int = DEFAULT_CAP,
                   workers: int = 1) -> SolveReport:
    """Bottom-up stepwise search for the most reliable affordable subnetwork.

    With ``trace=True`` every level keeps per-candidate rows and the
    reliability of every connected candidate is computed; otherwise the
    STEP-5 check stops at the first infeasible candidate that beats the
    level's best feasible one.
    """
    t0 = time.perf_counter()
    net, budget = problem.network, problem.budget
    m = net.m
    m_max = compute_m_max(net, budget)
    m_min = compute_m_min(net, budget, mmin)

    best_mask: int | None = None
    best_r = 0.0
    levels: list[LevelSet] = []
    seen_feasible: list[tuple[np.ndarray, np.ndarray]] = []
    examined = 0
    n_feasible = 0
    halt: HaltReason | None = None
    cover = np.zeros(0, dtype=np.int64)  # feasible-or-dominated vectors one level up

    low = m_max + 1 if m_min is None else max(m_min, 1)
    for d in range(m_max, low - 1, -1):
        masks = stepwise_masks(m, d)
        examined += masks.size
        shadow = _children(cover, m)
        dominated = np.isin(masks, shadow, assume_unique=True) if shadow.size else \
            np.zeros(masks.size, dtype=bool)
        cand = masks[~dominated]
        incumbent_before = best_r
        if cand.size == 0:
            levels.append(LevelSet(d, masks.size, 0, 0, 0, False, None, None,
                                   incumbent_before=incumbent_before,
                                   excluded=masks if trace else None))
            # every smaller vector sits inside a dominated one as well
            halt = HaltReason.EMPTY_LEVEL
            break

        cost = costs_of_masks(net, cand)
        conn = connected_masks(net, cand)
        feas = conn & (cost <= budget)
        rel = np.full(cand.size, np.nan)
        rel[feas] = reliability_many(net, cand[feas], cap, workers)
        best_feas = _best(cand[feas], rel[feas])
        r_star = best_feas[1] if best_feas else 0.0

        if best_feas and best_feas[1] > best_r:
            best_mask, best_r = best_feas
        if all_optima and best_feas:
            seen_feasible.append((cand[feas], rel[feas]))

        all_feasible = bool(feas.all())
        # STEP 5: does any infeasible connected candidate beat X_d^*?
        pending = np.flatnonzero(conn & ~feas)
        beaten = False
        complete = True
        if trace or not all_feasible:
            step = pending.size if trace else 64
            for s in range(0, pending.size, max(step, 1)):
                idx = pending[s : s + step]
                rel[idx] = reliability_many(net, cand[idx], cap, workers)
                if (rel[idx] > r_star).any():
                    beaten = True
                    if not trace:
                        complete = s + step >= pending.size
                        break
        evaluated = ~np.isnan(rel)
        best_all = _best(cand[evaluated], rel[evaluated])

        n_feasible += int(feas.sum())
        lvl = LevelSet(d, masks.size, cand.size, int(conn.sum()), int(feas.sum()),
                       all_feasible, best_feas, best_all, complete, incumbent_before,
                       excluded=masks[dominated] if trace else None)
        levels.append(lvl)

        if all_feasible:
            halt = HaltReason.ALL_FEASIBLE
        elif not beaten:
            halt = HaltReason.BEST_DOMINATES
        if trace:
            lvl.rows = _rows(d, masks, dominated, cand, cost, conn, rel, feas, budget, halt)
        if halt is not None:
            break
        cover = np.concatenate([shadow, cand[feas]])

    if halt is None:
        halt = HaltReason.REACHED_MMIN
    best = ArcState(best_mask, m) if best_mask is not None else None
    return SolveReport(
        algorithm="stepwise", budget=budget, m=m, best=best,
        best_reliability=best_r if best is not None else 0.0,
        best_cost=float(costs_of_masks(net, np.array([best_mask]))[0]) if best is not None else 0.0,
        m_max=m_max, m_min=m_min, halt_reason=halt, vectors_examined=examined,
        wall_time=time.perf_counter() - t0, levels=levels,
        optima=_near_best(seen_feasible, best_r, m) if best is not None else [],
        feasible_count=n_feasible,
    )


def _rows(d, masks, dominated, cand, cost, conn, rel, feas, budget, halt) -> list[TraceRow]:
    rows = []
    pos = 0
    halt_done = False
    for i, x in enumerate(masks, start=1):
        if dominated[i - 1]:
            rows.append(TraceRow(d, i, int(x), True, False, math.nan, None, False, "dominated"))
            continue
        c, k, r, f = float(cost[pos]), bool(conn[pos]), rel[pos], bool(feas[pos])
        pos += 1
        remarks = []
        if not k:
            remarks.append("disconnect")
        elif not f:
            remarks.append(f"C(X) > C* = {_fmt_cost(budget)}")
        if k and halt in (HaltReason.ALL_FEASIBLE, HaltReason.BEST_DOMINATES) and not halt_done:
            remarks.append(halt.step_label())
            halt_done = True
        rows.append(TraceRow(d, i, int(x), False, k, c,
                             None if np.isnan(r) else float(r), f, "; ".join(remarks)))
    return rows


def solve_bat_baseline(problem: BudgetProblem, cap: int = 30, rel_cap: int = DEFAULT_CAP,
                       all_optima: bool = False, workers: int = 1,
                       block: int = 1 << 20) -> SolveReport:
    """Scan every state in BAT order; keep the first most reliable feasible one."""
    t0 = time.perf_counter()
    net, budget = problem.network, problem.budget
    m = net.m
    if m > cap:
        raise ContractError(f"BAT baseline refuses m={m} > cap {cap}")
    total = 1 << m
    feasible = []
    for start in range(0, total, block):
        x = bat_masks(m, start, start + block)
        x = x[costs_of_masks(net, x) <= budget]
        if x.size:
            feasible.append(x[connected_masks(net, x)])
    feas = np.concatenate(feasible) if feasible else np.zeros(0, dtype=np.int64)
    rel = reliability_many(net, feas, rel_cap, workers)
    best = _best(feas, rel)
    optima = _near_best([(feas, rel)], best[1], m) if best and all_optima else []
    return SolveReport(
        algorithm="bat", budget=budget, m=m,
        best=ArcState(best[0], m) if best else None,
        best_reliability=best[1] if best else 0.0,
        best_cost=float(costs_of_masks(net, np.array([best[0]]))[0]) if best else 0.0,
        m_max=compute_m_max(net, budget), m_min=hop_distance(net),
        halt_reason=HaltReason.EXHAUSTED, vectors_examined=total,
        wall_time=time.perf_counter() - t0, optima=optima, feasible_count=int(feas.size),
    )


def _dfs_reaches(adj: dict[int, list[tuple[int, int]]], mask: int, s: int, t: int) -> bool:
    stack, seen = [s], {s}
    while stack:
        u = stack.pop()
        if u == t:
            return True
        for bit, v in adj.get(u, ()):
            if mask >> bit & 1 and v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def oracle_solve(problem: BudgetProblem, cap: int = 20, all_optima: bool = False) -> SolveReport:
    """Exhaustive reference: every subset, every sub-state, depth-first reachability."""
    t0 = time.perf_counter()
    net, budget = problem.network, problem.budget
    m = net.m
    if m > cap:
        raise ContractError(f"oracle refuses m={m} > cap {cap}")
    adj: dict[int, list[tuple[int, int]]] = {}
    for k, a in enumerate(net.arcs):
        adj.setdefault(a.tail, []).append((k, a.head))
        if not a.oriented:
            adj.setdefault(a.head, []).append((k, a.tail))
    reach = np.array([_dfs_reaches(adj, y, net.source, net.sink) for y in range(1 << m)])
    p = np.array([a.prob for a in net.arcs])
    q = 1.0 - p
    c = [a.cost for a in net.arcs]

    best_x, best_r, best_c, n_feas = None, 0.0, 0.0, 0
    xs, rs = [], []
    for x in range(1 << m):
        if not reach[x]:
            continue
        cost = 0.0
        for k in range(m):
            if x >> k & 1:
                cost += c[k]
        if cost > budget:
            continue
        n_feas += 1
        arcs = [k for k in range(m) if x >> k & 1]
        codes = np.arange(1 << len(arcs))
        ys = np.zeros(codes.size, dtype=np.int64)
        pr = np.ones(codes.size)
        for j, k in enumerate(arcs):
            on = (codes >> j) & 1 == 1
            ys |= on.astype(np.int64) << k
            pr *= np.where(on, p[k], q[k])
        r = math.fsum(pr[reach[ys]].tolist())
        xs.append(x)
        rs.append(r)
        if best_x is None or r > best_r:
            best_x, best_r, best_c = x, r, cost
    return SolveReport(
        algorithm="oracle", budget=budget, m=m,
        best=ArcState(best_x, m) if best_x is not None else None,
        best_reliability=best_r, best_cost=best_c,
        m_max=compute_m_max(net, budget), m_min=hop_distance(net),
        halt_reason=HaltReason.EXHAUSTED, vectors_examined=1 << m,
        wall_time=time.perf_counter() - t0,
        optima=_near_best([(np.array(xs, dtype=np.int64), np.array(rs))], best_r, m)
        if all_optima and best_x is not None else [],
        feasible_count=n_feas,
    )


def describe_level_vector(mask: int, m: int) -> tuple[str, str]:
    """Stepwise tuple and binary image of a level candidate, as printed strings."""
    return str(mask_to_stepwise(mask, m)), str(ArcState(mask, m))
