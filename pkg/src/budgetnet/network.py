"""Binary-state network model: arcs, networks, arc-state vectors.

A state vector is stored as an integer bitmask in which bit ``i - 1`` is the
state of arc ``i``.  Arc indices are 1-based throughout the public API so that
printed vectors read the same way as ``(x_1, ..., x_m)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np


class ContractError(ValueError):
    """Raised when an argument violates a documented precondition."""


@dataclass(frozen=True)
class Arc:
    index: int
    tail: int
    head: int
    prob: float
    cost: float
    oriented: bool = True

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ContractError(f"arc index must be >= 1, got {self.index}")
        if self.tail == self.head:
            raise ContractError(f"arc {self.index} is a loop on node {self.tail}")
        if not (0.0 < self.prob <= 1.0):
            raise ContractError(f"arc {self.index}: prob {self.prob} outside (0, 1]")
        if self.cost < 0:
            raise ContractError(f"arc {self.index}: negative cost {self.cost}")

    @property
    def bit(self) -> int:
        return 1 << (self.index - 1)


@dataclass(frozen=True, eq=False)
class ArcState:
    """Fixed-width working/failed vector ``X = (x_1, ..., x_m)``.

    Comparison operators implement the componentwise partial order, so
    ``X <= Y`` holds iff every working arc of ``X`` also works in ``Y``.
    """

    mask: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 0 or self.mask < 0 or self.mask >> self.width:
            raise ContractError(f"mask {self.mask:#x} does not fit width {self.width}")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "ArcState":
        mask = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ContractError(f"bit {i + 1} is {b!r}, expected 0 or 1")
            mask |= b << i
        return cls(mask, len(bits))

    @classmethod
    def from_string(cls, text: str) -> "ArcState":
        """Parse a bit string whose first character is arc 1."""
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ContractError(f"not a bit string: {text!r}")
        return cls.from_bits([int(c) for c in text])

    @classmethod
    def from_arcs(cls, arcs: Iterable[int], width: int) -> "ArcState":
        mask = 0
        for a in arcs:
            if not 1 <= a <= width:
                raise ContractError(f"arc index {a} outside 1..{width}")
            mask |= 1 << (a - 1)
        return cls(mask, width)

    @classmethod
    def full(cls, width: int) -> "ArcState":
        return cls((1 << width) - 1, width)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> i) & 1 for i in range(self.width))

    @property
    def arcs(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.width) if (self.mask >> i) & 1)

    def popcount(self) -> int:
        return bin(self.mask).count("1")

    def to_string(self) -> str:
        return "".join(str(b) for b in self.bits)

    def _check(self, other: "ArcState") -> None:
        if not isinstance(other, ArcState):
            raise TypeError(f"cannot compare ArcState with {type(other).__name__}")
        if other.width != self.width:
            raise ContractError(f"width mismatch: {self.width} vs {other.width}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ArcState):
            return NotImplemented
        return self.mask == other.mask and self.width == other.width

    def __hash__(self) -> int:
        return hash((self.mask, self.width))

    def __le__(self, other: "ArcState") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __ge__(self, other: "ArcState") -> bool:
        return other <= self

    def __lt__(self, other: "ArcState") -> bool:
        return self <= other and self.mask != other.mask

    def __gt__(self, other: "ArcState") -> bool:
        return other < self

    def __str__(self) -> str:
        return "(" + ", ".join(str(b) for b in self.bits) + ")"

    def __repr__(self) -> str:
        return f"ArcState({self.to_string()!r})"


@dataclass(frozen=True)
class StepwiseVector:
    """Strictly increasing tuple of arc indices ``(s_1, ..., s_mu)`` bounded by
    the ceiling ``U = (m - mu + 1, ..., m)``."""

    entries: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        s = self.entries
        mu = len(s)
        if mu < 1 or mu > self.m:
            raise ContractError(f"width {mu} outside 1..{self.m}")
        for k, v in enumerate(s):
            if v < 1:
                raise ContractError(f"entry {v} outside 1..{self.m}")
            if k and s[k - 1] >= v:
                raise ContractError(f"entries not strictly increasing: {s}")
            if v > self.m - mu + k + 1:
                raise ContractError(f"entry s_{k + 1}={v} exceeds ceiling in {s}")

    @property
    def width(self) -> int:
        return len(self.entries)

    @property
    def ceiling(self) -> tuple[int, ...]:
        mu = len(self.entries)
        return tuple(range(self.m - mu + 1, self.m + 1))

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.entries)) + ")"


def binary_image(s: StepwiseVector | Sequence[int], m: int) -> ArcState:
    """Binary image ``B(S)``: the state with exactly the arcs of ``s`` working."""
    entries = s.entries if isinstance(s, StepwiseVector) else tuple(s)
    if isinstance(s, StepwiseVector) and s.m != m:
        raise ContractError(f"stepwise vector built for m={s.m}, asked for m={m}")
    StepwiseVector(entries, m)
    return ArcState.from_arcs(entries, m)


@dataclass(frozen=True, eq=False)
class Network:
    """Graph ``G(V, E)`` with per-arc probability and cost.

    Nodes are ``1..node_count``; ``arcs[k]`` must carry index ``k + 1``.
    """

    node_count: int
    arcs: tuple[Arc, ...]
    source: int
    sink: int
    name: str = ""
    # adjacency[u] -> tuple of (arc bit position, neighbour); built once
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        arcs = tuple(self.arcs)
        object.__setattr__(self, "arcs", arcs)
        n = self.node_count
        if n < 2:
            raise ContractError("a network needs at least two nodes")
        if not arcs:
            raise ContractError("a network needs at least one arc")
        for node, label in ((self.source, "source"), (self.sink, "sink")):
            if not 1 <= node <= n:
                raise ContractError(f"{label} {node} outside 1..{n}")
        if self.source == self.sink:
            raise ContractError("source and sink coincide")

        seen_directed: set[tuple[int, int]] = set()
        seen_undirected: set[frozenset[int]] = set()
        touched: set[int] = set()
        for k, a in enumerate(arcs):
            if a.index != k + 1:
                raise ContractError(f"arc at position {k + 1} carries index {a.index}")
            for node in (a.tail, a.head):
                if not 1 <= node <= n:
                    raise ContractError(f"arc {a.index}: unknown node {node}")
            pair = frozenset((a.tail, a.head))
            if (a.tail, a.head) in seen_directed or pair in seen_undirected:
                raise ContractError(f"arc {a.index} is parallel to an earlier arc")
            if not a.oriented and ((a.head, a.tail) in seen_directed):
                raise ContractError(f"arc {a.index} is parallel to an earlier arc")
            seen_directed.add((a.tail, a.head))
            if not a.oriented:
                seen_undirected.add(pair)
            touched.update((a.tail, a.head))
        missing = set(range(1, n + 1)) - touched
        if missing:
            raise ContractError(f"nodes without arcs: {sorted(missing)}")

        adj: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
        for a in arcs:
            adj[a.tail].append((a.index - 1, a.head))
            if not a.oriented:
                adj[a.head].append((a.index - 1, a.tail))
        object.__setattr__(self, "adjacency", tuple(tuple(x) for x in adj))

    def _key(self) -> tuple:
        return (self.node_count, self.arcs, self.source, self.sink, self.name)

    def __eq__(self, other) -> bool:
        return isinstance(other, Network) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    @property
    def m(self) -> int:
        return len(self.arcs)

    @property
    def n(self) -> int:
        return self.node_count

    @property
    def probs(self) -> np.ndarray:
        return np.array([a.prob for a in self.arcs], dtype=float)

    @property
    def costs(self) -> np.ndarray:
        return np.array([a.cost for a in self.arcs], dtype=float)

    def state(self, spec: str | Sequence[int] | int) -> ArcState:
        """Build a state of this network's width from a bit string, bit list or mask."""
        if isinstance(spec, str):
            st = ArcState.from_string(spec)
        elif isinstance(spec, (int, np.integer)):
            st = ArcState(int(spec), self.m)
        else:
            st = ArcState.from_bits(list(spec))
        self.check_state(st)
        return st

    def check_state(self, state: ArcState) -> None:
        if state.width != self.m:
            raise ContractError(f"state width {state.width} != arc count {self.m}")


def cost_of(network: Network, state: ArcState) -> float:
    """Total cost of the working arcs, summed in arc-index order."""
    network.check_state(state)
    total = 0.0
    for a in network.arcs:
        if state.mask & a.bit:
            total += a.cost
    return total


def prob_of(network: Network, state: ArcState) -> float:
    """Probability of observing exactly ``state`` over all ``m`` arcs."""
    network.check_state(state)
    p = 1.0
    for a in network.arcs:
        p *= a.prob if state.mask & a.bit else 1.0 - a.prob
    return p


def costs_of_masks(network: Network, masks: np.ndarray) -> np.ndarray:
    """Vectorised :func:`cost_of`; bit-identical to the scalar version."""
    masks = np.asarray(masks, dtype=np.int64)
    total = np.zeros(masks.shape, dtype=float)
    for k, a in enumerate(network.arcs):
        total += ((masks >> k) & 1) * a.cost
    return total


def popcount(masks: np.ndarray) -> np.ndarray:
    """Number of set bits of each entry of an integer array."""
    x = np.asarray(masks, dtype=np.uint64)
    return np.bitwise_count(x).astype(np.int64)
