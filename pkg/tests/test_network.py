import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from budgetnet import (Arc, ArcState, ContractError, Network, StepwiseVector, binary_image,
                       cost_of, prob_of)
from budgetnet.network import costs_of_masks

from conftest import random_network


def test_cost_of_examples(bridge):
    assert cost_of(bridge, bridge.state("11011")) == 23
    assert cost_of(bridge, bridge.state("00000")) == 0
    assert cost_of(bridge, bridge.state("10010")) == 9


def test_prob_of_examples(bridge):
    # products of the per-arc table entries, written out by hand
    assert prob_of(bridge, bridge.state("11111")) == pytest.approx(0.43605, abs=1e-12)
    assert prob_of(bridge, bridge.state("10000")) == pytest.approx(0.0007125, abs=1e-12)
    certain = Network(2, (Arc(1, 1, 2, 1.0, 3.0),), 1, 2)
    assert prob_of(certain, certain.state("1")) == 1.0


def test_width_mismatch_is_contract_error(bridge):
    with pytest.raises(ContractError):
        cost_of(bridge, ArcState.from_string("1101"))
    with pytest.raises(ContractError):
        prob_of(bridge, ArcState.from_string("110111"))


def test_binary_image_examples():
    assert binary_image(StepwiseVector((1, 3, 5), 5), 5).bits == (1, 0, 1, 0, 1)
    assert binary_image(StepwiseVector((2, 3, 4, 5), 5), 5).bits == (0, 1, 1, 1, 1)
    assert binary_image((1, 2, 3, 4, 5, 6), 6) == ArcState.full(6)


@pytest.mark.parametrize("entries", [(0, 2), (2, 2), (3, 2), (1, 6)])
def test_binary_image_rejects_bad_entries(entries):
    with pytest.raises(ContractError):
        binary_image(entries, 5)


def test_stepwise_vector_ceiling():
    s = StepwiseVector((1, 3, 5), 5)
    assert s.ceiling == (3, 4, 5)
    with pytest.raises(ContractError):
        StepwiseVector((4, 5, 6), 5)


def test_arc_state_partial_order():
    x = ArcState.from_string("10010")
    y = ArcState.from_string("11011")
    assert x <= y and x < y and not y <= x
    assert not ArcState.from_string("01100") <= y
    assert str(y) == "(1, 1, 0, 1, 1)"
    assert y.arcs == (1, 2, 4, 5)


@pytest.mark.parametrize("bad", [
    dict(index=1, tail=1, head=1, prob=0.5, cost=1),
    dict(index=1, tail=1, head=2, prob=0.0, cost=1),
    dict(index=1, tail=1, head=2, prob=1.2, cost=1),
    dict(index=1, tail=1, head=2, prob=0.5, cost=-1),
])
def test_arc_invariants(bad):
    with pytest.raises(ContractError):
        Arc(**bad)


def test_network_invariants():
    a = Arc(1, 1, 2, 0.9, 1)
    with pytest.raises(ContractError):
        Network(2, (a, Arc(2, 1, 2, 0.9, 1)), 1, 2)  # parallel
    with pytest.raises(ContractError):
        Network(3, (a,), 1, 3)  # node 3 untouched
    with pytest.raises(ContractError):
        Network(2, (a,), 1, 1)
    with pytest.raises(ContractError):
        Network(2, (Arc(2, 1, 2, 0.9, 1),), 1, 2)  # index not 1..m
    with pytest.raises(ContractError):
        Network(2, (Arc(1, 1, 2, 0.9, 1, oriented=False), Arc(2, 2, 1, 0.5, 1)), 1, 2)
    # antiparallel directed arcs are distinct arcs
    Network(2, (a, Arc(2, 2, 1, 0.5, 1)), 1, 2)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), data=st.data())
def test_cost_monotone_under_inclusion(seed, data):
    net = random_network(np.random.default_rng(seed), integer_costs=False)
    x = data.draw(st.integers(0, (1 << net.m) - 1))
    extra = data.draw(st.integers(0, (1 << net.m) - 1))
    y = x | extra
    assert cost_of(net, ArcState(x, net.m)) <= cost_of(net, ArcState(y, net.m))


@pytest.mark.parametrize("m", [1, 5, 9, 12])
def test_prob_of_sums_to_one(rng, m):
    for _ in range(3):
        net = random_network(rng, max_nodes=8, max_arcs=m)
        total = math.fsum(prob_of(net, ArcState(x, net.m)) for x in range(1 << net.m))
        assert total == pytest.approx(1.0, abs=1e-12)


def test_binary_image_injective():
    for m in range(1, 8):
        for mu in range(1, m + 1):
            images = {binary_image(c, m) for c in itertools.combinations(range(1, m + 1), mu)}
            assert len(images) == math.comb(m, mu)


def test_vectorised_cost_matches_scalar(rng):
    net = random_network(rng, integer_costs=False)
    masks = np.arange(1 << net.m)
    vec = costs_of_masks(net, masks)
    for x in range(1 << net.m):
        assert vec[x] == cost_of(net, ArcState(x, net.m))
