"""
A 23-arc water network
======================

Too many states to list by hand, but still small enough to check the
stepwise search against a full scan of all 2^23 states.
"""

import time

from budgetnet import (ArcState, BudgetProblem, enumerate_minpaths, load_fixture, reliability,
                       solve_bat_baseline, solve_stepwise, union_reliability)

net = load_fixture("water")
paths = enumerate_minpaths(net)
print(net.n, "nodes,", net.m, "arcs,", len(paths), "minimal paths")
print("shortest path uses", min(len(p) for p in paths), "arcs")

# two independent routes to the reliability of the whole network
t = time.perf_counter()
full = reliability(net, ArcState.full(net.m)).value
print(f"state sum  {full!r}  ({time.perf_counter() - t:.1f}s)")
print(f"path union {union_reliability(net, paths)!r}")

for budget in (420, 630):
    for solver in (solve_stepwise, solve_bat_baseline):
        rep = solver(BudgetProblem(net, budget))
        print(f"{budget:4d} {rep.algorithm:8s} arcs={rep.best.arcs} R={rep.best_reliability:.7f} "
              f"C={rep.best_cost:g} examined={rep.vectors_examined} {rep.wall_time:.2f}s")
