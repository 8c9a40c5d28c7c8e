"""Text, JSON and CSV renderings of solver results.

Reliabilities are printed with 7 decimals in text output; JSON carries full
doubles.  Nothing time-dependent goes into ``solve`` renderings, so repeated
runs produce identical bytes.
"""

from __future__ import annotations

import csv
import io
import json

from .enumeration import mask_to_stepwise
from .minpaths import MpBudgetReport, MinPath
from .network import ArcState, Network
from .optimizer import LevelSet, SolveReport, TraceRow, describe_level_vector

TABLE_HEADER = ("d", "i", "X", "B(X)", "R(X)", "C(X)", "Remark")


def fmt_r(r: float | None) -> str:
    return "" if r is None else f"{r:.7f}"


def fmt_c(c: float) -> str:
    return f"{c:g}"


def _line(cells) -> str:
    return " | ".join(str(c) for c in cells).rstrip()


def trace_table(report: SolveReport) -> str:
    """Per-level candidate table in the layout of the worked examples."""
    lines = [_line(TABLE_HEADER)]
    for lvl in report.levels:
        for row in lvl.rows:
            lines.append(_line(_row_cells(row, report.m)))
    return "\n".join(lines) + "\n"


def _row_cells(row: TraceRow, m: int) -> tuple:
    x, b = describe_level_vector(row.mask, m)
    shown = row.connected and not row.dominated
    return (row.level, row.i, x, b,
            fmt_r(row.reliability) if shown else "",
            fmt_c(row.cost) if shown else "",
            row.remark)


def level_summary(levels: list[LevelSet], m: int) -> str:
    lines = [_line(("d", "generated", "candidates", "connected", "feasible", "X_d*", "R(X_d*)"))]
    for lvl in levels:
        bf = lvl.best_feasible
        lines.append(_line((lvl.level, lvl.generated, lvl.candidates, lvl.connected,
                            lvl.feasible, str(ArcState(bf[0], m)) if bf else "-",
                            fmt_r(bf[1]) if bf else "-")))
    return "\n".join(lines) + "\n"


def solve_text(report: SolveReport, network: Network, trace: bool = False) -> str:
    out = []
    if report.best is None:
        out.append(f"infeasible: no connected subnetwork fits budget {fmt_c(report.budget)}")
    else:
        out.append(f"X*={report.best}  R={report.best_reliability:.7f}  C={fmt_c(report.best_cost)}")
    mmin = "-" if report.m_min is None else report.m_min
    out.append(f"algorithm={report.algorithm}  budget={fmt_c(report.budget)}  "
               f"m_max={report.m_max}  m_min={mmin}  halt={report.halt_reason.value}  "
               f"vectors_examined={report.vectors_examined}")
    if len(report.optima) > 1:
        out.append("optima: " + ", ".join(str(x) for x in report.optima))
    text = "\n".join(out) + "\n"
    if report.levels:
        text += "\n" + (trace_table(report) if trace else level_summary(report.levels, report.m))
    return text


def _level_json(lvl: LevelSet, m: int) -> dict:
    def pair(p):
        return None if p is None else {"state": ArcState(p[0], m).to_string(), "reliability": p[1]}

    d = {
        "d": lvl.level, "generated": lvl.generated, "candidates": lvl.candidates,
        "connected": lvl.connected, "feasible": lvl.feasible,
        "all_feasible": lvl.all_feasible, "best_feasible": pair(lvl.best_feasible),
        "best_overall": pair(lvl.best_overall), "complete": lvl.complete,
    }
    if lvl.rows:
        d["rows"] = [
            {"i": r.i, "X": list(mask_to_stepwise(r.mask, m).entries),
             "B": ArcState(r.mask, m).to_string(), "dominated": r.dominated,
             "connected": r.connected, "feasible": r.feasible,
             "reliability": r.reliability,
             "cost": None if r.dominated else r.cost, "remark": r.remark}
            for r in lvl.rows
        ]
    return d


def solve_json(report: SolveReport, network_hash: str, network_name: str, mmin: str) -> str:
    payload = {
        "problem": {"network_sha256": network_hash, "network": network_name,
                    "budget": report.budget, "algorithm": report.algorithm, "mmin": mmin},
        "result": {
            "feasible": report.best is not None,
            "best": report.best.to_string() if report.best else None,
            "best_arcs": list(report.best.arcs) if report.best else [],
            "best_reliability": report.best_reliability,
            "best_cost": report.best_cost,
            "m_max": report.m_max, "m_min": report.m_min,
            "halt_reason": report.halt_reason.value,
            "vectors_examined": report.vectors_examined,
            "feasible_count": report.feasible_count,
            "optima": [x.to_string() for x in report.optima],
        },
        "levels": [_level_json(lvl, report.m) for lvl in report.levels],
    }
    return json.dumps(payload, indent=2) + "\n"


def path_row(network: Network, p: MinPath, k: int, cost: float, prob: float) -> str:
    seq = "-".join(map(str, p.node_sequence))
    return _line((f"p{k}", p.label(), seq, fmt_c(cost), f"{prob:.7f}"))


def minpaths_text(network: Network, paths, costs, probs, c_ub: float | None) -> str:
    lines = [_line(("p", "arcs", "nodes", "C(p)", "Pr(p)"))]
    for k, (p, c, pr) in enumerate(zip(paths, costs, probs), start=1):
        row = path_row(network, p, k, c, pr)
        if c_ub is not None and c > c_ub:
            row += f" | C(p) > {fmt_c(c_ub)}"
        lines.append(row)
    return "\n".join(lines) + "\n"


def mp_budget_text(network: Network, rep: MpBudgetReport, build_cost: float) -> str:
    text = minpaths_text(network, rep.all_paths, rep.per_path_cost, rep.per_path_prob, rep.budget)
    labels = [f"p{rep.all_paths.index(p) + 1}" for p in rep.feasible_paths]
    text += f"\nfeasible MPs: {', '.join(labels) if labels else 'none'}  R={rep.reliability:.7f}\n"
    if labels:
        used = ", ".join(f"a{a}" for a in rep.union_arcs)
        text += f"arcs built: {used}  total cost {fmt_c(build_cost)}\n"
    return text


def mp_budget_json(network: Network, rep: MpBudgetReport, build_cost: float,
                   network_hash: str) -> str:
    payload = {
        "problem": {"network_sha256": network_hash, "network": network.name,
                    "budget_per_path": rep.budget, "algorithm": "mp-budget"},
        "paths": [{"label": f"p{k}", "arcs": sorted(p.arcs), "nodes": list(p.node_sequence),
                   "cost": c, "prob": pr, "feasible": c <= rep.budget}
                  for k, (p, c, pr) in enumerate(
                      zip(rep.all_paths, rep.per_path_cost, rep.per_path_prob), start=1)],
        "reliability": rep.reliability,
        "union_arcs": list(rep.union_arcs),
        "union_cost": build_cost,
    }
    return json.dumps(payload, indent=2) + "\n"


BENCH_FIELDS = ("budget", "algorithm", "N", "runtime_s", "vectors_examined", "X*", "R", "C", "arcs", "m_max")


def bench_csv(rows: list[SolveReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_FIELDS)
    for r in rows:
        w.writerow((fmt_c(r.budget), r.algorithm, r.feasible_count, f"{r.wall_time:.5f}",
                    r.vectors_examined, r.best.to_string() if r.best else "",
                    f"{r.best_reliability:.7f}", fmt_c(r.best_cost),
                    r.best.popcount() if r.best else 0, r.m_max))
    return buf.getvalue()
