import numpy as np
import pytest

from budgetnet import Arc, Network, load_fixture


@pytest.fixture(scope="session")
def bridge():
    return load_fixture("bridge")


@pytest.fixture(scope="session")
def setting():
    return {k: load_fixture(f"bridge-{k}") for k in "ABC"}


@pytest.fixture(scope="session")
def water():
    return load_fixture("water")


def random_network(rng: np.random.Generator, max_nodes: int = 8, max_arcs: int = 12,
                   integer_costs: bool = True) -> Network:
    """Random valid network: every node touched, no loops or parallel arcs,
    a mix of oriented and unoriented arcs."""
    while True:
        n = int(rng.integers(2, max_nodes + 1))
        pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        m_hi = min(max_arcs, len(pairs))
        m_lo = min(max(n - 1, 1), m_hi)
        m = int(rng.integers(m_lo, m_hi + 1))
        chosen = rng.choice(len(pairs), size=m, replace=False)
        arcs = []
        for k, j in enumerate(chosen, start=1):
            u, v = pairs[j]
            if rng.random() < 0.5:
                u, v = v, u
            prob = float(np.round(rng.uniform(0.05, 1.0), 3))
            cost = float(rng.integers(0, 20)) if integer_costs else float(np.round(rng.uniform(0, 20), 2))
            arcs.append(Arc(k, u, v, prob, cost, oriented=bool(rng.random() < 0.7)))
        touched = {a.tail for a in arcs} | {a.head for a in arcs}
        if len(touched) < n:
            continue
        return Network(n, tuple(arcs), 1, n)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def dfs_connected(net: Network, mask: int) -> bool:
    """Plain stack-based reachability, independent of the layered search."""
    adj: dict[int, list[int]] = {v: [] for v in range(1, net.n + 1)}
    for a in net.arcs:
        if (mask >> (a.index - 1)) & 1:
            adj[a.tail].append(a.head)
            if not a.oriented:
                adj[a.head].append(a.tail)
    seen, stack = {net.source}, [net.source]
    while stack:
        for v in adj[stack.pop()]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return net.sink in seen


def brute_reliability(net: Network, mask: int) -> float:
    """Sum of Pr over connected sub-states of ``mask``, one state at a time."""
    present = [i for i in range(net.m) if (mask >> i) & 1]
    total = 0.0
    for sel in range(1 << len(present)):
        sub = 0
        pr = 1.0
        for j, i in enumerate(present):
            p = net.arcs[i].prob
            if (sel >> j) & 1:
                sub |= 1 << i
                pr *= p
            else:
                pr *= 1.0 - p
        if dfs_connected(net, sub):
            total += pr
    return total


# criterion -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
