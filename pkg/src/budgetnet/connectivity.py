"""Source-to-sink connectivity of ``G(X)`` by path-based layered search (PLSA).

Layers are built outward from the source: each new layer holds the unvisited
nodes reachable by one working arc from the previous layer.  The search stops
as soon as the sink enters a layer (connected) or a layer comes out empty
(disconnected).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .network import ArcState, Network


@dataclass(frozen=True)
class LayerTrace:
    layers: tuple[frozenset[int], ...]
    connected: bool
    arc_scans: int = 0


def layer_trace(network: Network, state: ArcState) -> LayerTrace:
    network.check_state(state)
    mask = state.mask
    adj = network.adjacency
    sink = network.sink
    visited = {network.source}
    layers = [frozenset((network.source,))]
    frontier = layers[0]
    scans = 0
    while True:
        nxt = set()
        for u in frontier:
            for bit, v in adj[u]:
                scans += 1
                if (mask >> bit) & 1 and v not in visited:
                    nxt.add(v)
        if not nxt:
            return LayerTrace(tuple(layers), False, scans)
        layer = frozenset(nxt)
        layers.append(layer)
        if sink in layer:
            return LayerTrace(tuple(layers), True, scans)
        visited |= layer
        frontier = layer


def is_connected(network: Network, state: ArcState) -> bool:
    return layer_trace(network, state).connected


def connected_masks(network: Network, masks: np.ndarray) -> np.ndarray:
    """Layered search run in lockstep over an array of state masks.

    Returns a boolean array, ``True`` where the sink is reachable.
    """
    masks = np.asarray(masks).astype(np.uint64, copy=False).ravel()
    size = masks.size
    result = np.zeros(size, dtype=bool)
    if size == 0:
        return result
    if network.n > 63:
        return np.fromiter(
            (is_connected(network, ArcState(int(x), network.m)) for x in masks),
            dtype=bool, count=size,
        )
    one = np.uint64(1)
    sides = []
    for k, a in enumerate(network.arcs):
        sides.append((k, np.uint64(a.tail), np.uint64(a.head)))
        if not a.oriented:
            sides.append((k, np.uint64(a.head), np.uint64(a.tail)))
    work = [((masks >> np.uint64(k)) & one) for k in range(network.m)]
    sink_bit = one << np.uint64(network.sink)
    idx = np.arange(size)
    visited = np.full(size, one << np.uint64(network.source), dtype=np.uint64)
    frontier = visited.copy()
    while idx.size:
        new = np.zeros(idx.size, dtype=np.uint64)
        for k, u, v in sides:
            new |= (((frontier >> u) & work[k]) << v)
        new &= ~visited
        hit = (new & sink_bit) != 0
        result[idx[hit]] = True
        alive = ~hit & (new != 0)
        if not alive.all():
            idx = idx[alive]
            new = new[alive]
            visited = visited[alive]
            work = [w[alive] for w in work]
        visited |= new
        frontier = new
    return result


def hop_distance(network: Network) -> int | None:
    """Fewest arcs on any source-to-sink path of the full network, or None."""
    trace = layer_trace(network, ArcState.full(network.m))
    return len(trace.layers) - 1 if trace.connected else None
