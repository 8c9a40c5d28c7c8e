import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from budgetnet import ArcState, connected_masks, is_connected, layer_trace
from budgetnet.connectivity import hop_distance

from conftest import dfs_connected, random_network


def test_bridge_layers(bridge):
    t = layer_trace(bridge, bridge.state("11011"))
    assert t.connected
    assert t.layers == (frozenset({1}), frozenset({2, 3}), frozenset({4}))


def test_bridge_examples(bridge):
    assert is_connected(bridge, bridge.state("10010"))
    assert is_connected(bridge, bridge.state("10101"))  # a1, a3 reversed, a5
    assert not is_connected(bridge, bridge.state("10001"))
    assert not is_connected(bridge, bridge.state("00000"))
    assert not is_connected(bridge, bridge.state("01010"))
    assert layer_trace(bridge, bridge.state("00000")).layers == (frozenset({1}),)


def test_orientation_matters():
    from budgetnet import Arc, Network
    net = Network(3, (Arc(1, 1, 2, 0.9, 1), Arc(2, 3, 2, 0.9, 1)), 1, 3)
    assert not is_connected(net, ArcState.full(2))
    net_u = Network(3, (Arc(1, 1, 2, 0.9, 1), Arc(2, 3, 2, 0.9, 1, oriented=False)), 1, 3)
    assert is_connected(net_u, ArcState.full(2))


def test_hop_distance(bridge, water):
    assert hop_distance(bridge) == 2
    assert hop_distance(water) == 5


def test_agrees_with_dfs_on_random_networks(rng):
    for _ in range(40):
        net = random_network(rng)
        masks = np.arange(1 << net.m)
        vec = connected_masks(net, masks)
        for x in range(1 << net.m):
            expect = dfs_connected(net, x)
            assert vec[x] == expect
            if x % 7 == 0:
                assert is_connected(net, ArcState(x, net.m)) == expect


def test_arc_scan_bound(rng):
    for _ in range(30):
        net = random_network(rng)
        for x in rng.integers(0, 1 << net.m, size=20):
            t = layer_trace(net, ArcState(int(x), net.m))
            # every arc is looked at from each endpoint at most once
            assert t.arc_scans <= 2 * net.m


@settings(max_examples=80, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), data=st.data())
def test_connectivity_monotone(seed, data):
    net = random_network(np.random.default_rng(seed))
    x = data.draw(st.integers(0, (1 << net.m) - 1))
    y = x | data.draw(st.integers(0, (1 << net.m) - 1))
    if is_connected(net, ArcState(x, net.m)):
        assert is_connected(net, ArcState(y, net.m))


def test_connected_masks_empty(bridge):
    assert connected_masks(bridge, np.array([], dtype=np.int64)).size == 0
