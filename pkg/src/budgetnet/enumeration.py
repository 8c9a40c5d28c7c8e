"""Binary-addition-tree (BAT) and stepwise-vector enumeration.

The scalar cursors follow the update rules literally.  The ``*_masks``
functions produce the same sequences as integer bitmask arrays for bulk use;
``bat_masks`` relies on the fact that the BAT update (set the first zero
coordinate, clear the ones before it) is binary increment with ``x_1`` as the
least significant bit, so the ``t``-th emitted vector is simply ``t``.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .network import ArcState, ContractError, StepwiseVector


class BatCursor:
    """Emits all ``2**k`` binary vectors of width ``k`` in BAT order."""

    def __init__(self, k: int) -> None:
        if k < 1:
            raise ContractError(f"BAT width must be >= 1, got {k}")
        self.width = k
        self.current = [0] * k
        self.exhausted = False
        self._fresh = True

    def advance(self) -> bool:
        """Apply one BAT step; returns False (and marks exhaustion) after the last vector."""
        if self.exhausted:
            return False
        if self._fresh:
            self._fresh = False
            return True
        x = self.current
        i = 0
        while i < self.width:
            if x[i] == 0:
                x[i] = 1
                return True
            if i == self.width - 1:
                break
            x[i] = 0
            i += 1
        self.exhausted = True
        return False

    def state(self) -> ArcState:
        return ArcState.from_bits(self.current)

    def __iter__(self) -> Iterator[ArcState]:
        while self.advance():
            yield self.state()


def bat_all(k: int) -> list[ArcState]:
    return list(BatCursor(k))


def bat_masks(k: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Masks of BAT vectors ``start .. stop-1`` (0-based emission positions)."""
    if k < 1:
        raise ContractError(f"BAT width must be >= 1, got {k}")
    total = 1 << k
    stop = total if stop is None else min(stop, total)
    return np.arange(start, stop, dtype=np.int64)


class StepwiseCursor:
    """Emits every stepwise vector of width ``mu`` over ``m`` arcs in
    lexicographic order.

    A cursor can be restarted from any valid vector via ``start``, and stopped
    once ``s_1`` would exceed ``last_first``; both are used to split the index
    space by first entry.
    """

    def __init__(self, m: int, mu: int, start: tuple[int, ...] | None = None,
                 last_first: int | None = None) -> None:
        if not 1 <= mu <= m:
            raise ContractError(f"need 1 <= mu <= m, got mu={mu}, m={m}")
        self.m = m
        self.mu = mu
        self.ceiling = tuple(range(m - mu + 1, m + 1))
        first = tuple(range(1, mu + 1)) if start is None else tuple(start)
        StepwiseVector(first, m)
        if len(first) != mu:
            raise ContractError(f"start vector {first} has width != {mu}")
        self.s = list(first)
        self.last_first = m - mu + 1 if last_first is None else last_first
        self.exhausted = first[0] > self.last_first
        self._fresh = True

    def advance(self) -> bool:
        if self.exhausted:
            return False
        if self._fresh:
            self._fresh = False
            return True
        s, u = self.s, self.ceiling
        i = self.mu - 1
        while True:
            if s[i] < u[i]:
                s[i] += 1
                for j in range(i + 1, self.mu):
                    s[j] = s[j - 1] + 1
                if s[0] > self.last_first:
                    break
                return True
            if i == 0:
                break
            i -= 1
        self.exhausted = True
        return False

    @property
    def current(self) -> StepwiseVector:
        return StepwiseVector(tuple(self.s), self.m)

    def __iter__(self) -> Iterator[StepwiseVector]:
        while self.advance():
            yield self.current


def stepwise_all(m: int, mu: int) -> list[StepwiseVector]:
    return list(StepwiseCursor(m, mu))


def partition_by_first(m: int, mu: int, parts: int) -> list[StepwiseCursor]:
    """Split the stepwise vectors of width ``mu`` into up to ``parts`` cursors
    over contiguous ranges of ``s_1``; concatenating them gives the full order."""
    if not 1 <= mu <= m:
        raise ContractError(f"need 1 <= mu <= m, got mu={mu}, m={m}")
    firsts = list(range(1, m - mu + 2))
    parts = max(1, min(parts, len(firsts)))
    chunks = np.array_split(np.array(firsts), parts)
    return [
        StepwiseCursor(m, mu, start=tuple(range(int(c[0]), int(c[0]) + mu)),
                       last_first=int(c[-1]))
        for c in chunks
    ]


def _combo_masks(lo: int, m: int, mu: int, memo: dict) -> np.ndarray:
    # lexicographic mu-subsets of {lo..m} as masks (arc j -> bit j-1)
    key = (lo, mu)
    if key in memo:
        return memo[key]
    if mu == 0:
        out = np.zeros(1, dtype=np.int64)
    else:
        blocks = [
            _combo_masks(first + 1, m, mu - 1, memo) | np.int64(1 << (first - 1))
            for first in range(lo, m - mu + 2)
        ]
        out = np.concatenate(blocks) if blocks else np.zeros(0, dtype=np.int64)
    memo[key] = out
    return out


def stepwise_masks(m: int, mu: int) -> np.ndarray:
    """Binary images of ``stepwise_all(m, mu)`` as a mask array, same order."""
    if not 1 <= mu <= m:
        raise ContractError(f"need 1 <= mu <= m, got mu={mu}, m={m}")
    if m > 62:
        raise ContractError("mask arrays support at most 62 arcs")
    return _combo_masks(1, m, mu, {})


def mask_to_stepwise(mask: int, m: int) -> StepwiseVector:
    return StepwiseVector(tuple(i + 1 for i in range(m) if (mask >> i) & 1), m)
