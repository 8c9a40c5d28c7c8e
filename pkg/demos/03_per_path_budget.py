"""
Per-path budgets versus one total budget
========================================

Capping each minimal path separately says nothing about what the whole
network costs to build.
"""

from budgetnet import BudgetProblem, enumerate_minpaths, load_fixture, mp_budget_solve, solve_stepwise
from budgetnet.minpaths import path_cost, path_prob, union_cost

net = load_fixture("bridge")
for k, p in enumerate(enumerate_minpaths(net), 1):
    print(f"p{k}", p.label(), p.node_sequence, path_cost(net, p), round(path_prob(net, p), 6))

rep = mp_budget_solve(net, 14)
print("\npaths within 14 each:", [p.label() for p in rep.feasible_paths])
print("R =", rep.reliability, " but building them costs", union_cost(net, rep))

# a total budget of 14 buys much less
tot = solve_stepwise(BudgetProblem(net, 14))
print("total budget 14:", tot.best, tot.best_reliability, tot.best_cost)

# and a total of 23 buys exactly the per-path answer
tot = solve_stepwise(BudgetProblem(net, 23))
print("total budget 23:", tot.best, tot.best_reliability, tot.best_cost)
