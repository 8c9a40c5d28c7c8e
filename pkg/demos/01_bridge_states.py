"""
Every state of the bridge network
=================================

Five arcs give 32 states.  Walk all of them, keep the connected ones that
fit a budget of 26 and see which one holds up best.
"""

import numpy as np
from budgetnet import bat_masks, connected_masks, load_fixture, reliability_many
from budgetnet.network import costs_of_masks

net = load_fixture("bridge")
print(net.m, "arcs,", net.n, "nodes")

# states as integer masks, arc 1 in the lowest bit
x = bat_masks(net.m)
cost = costs_of_masks(net, x)
ok = connected_masks(net, x)
print("connected:", ok.sum(), " affordable and connected:", (ok & (cost <= 26)).sum())

feasible = x[ok & (cost <= 26)]
r = reliability_many(net, feasible)
for mask, value in sorted(zip(feasible.tolist(), r), key=lambda t: -t[1])[:5]:
    bits = "".join(str(mask >> i & 1) for i in range(net.m))
    print(bits, f"{value:.7f}", costs_of_masks(net, np.array([mask]))[0])

# the full network costs 29, just over budget
print("everything:", reliability_many(net, np.array([31]))[0])
