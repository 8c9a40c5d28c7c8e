"""
Level by level, top down
========================

The stepwise search starts at the largest arc count the budget could pay
for and works downward.  A level is skipped past once nothing left in it
can beat what is already in hand.
"""

from budgetnet import BudgetProblem, load_fixture, solve_stepwise
from budgetnet.report import trace_table

net = load_fixture("bridge-A")
print([a.cost for a in net.arcs])

for budget in (110, 95, 85, 65, 40):
    rep = solve_stepwise(BudgetProblem(net, budget), trace=True)
    print(f"\nbudget {budget}: X*={rep.best} R={rep.best_reliability:.7f} "
          f"stopped at d={rep.halt_level} ({rep.halt_reason.step_label()}), "
          f"{rep.vectors_examined} of {2 ** net.m} vectors")
    print(trace_table(rep), end="")

# at 85 the 4-arc level has one affordable vector, and nothing pricier beats it
rep = solve_stepwise(BudgetProblem(net, 85), trace=True)
lvl = rep.levels[0]
print("\nd=4 candidates", lvl.candidates, "feasible", lvl.feasible, "best", lvl.best_feasible)
