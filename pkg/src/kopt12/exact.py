"""Exact optimum tours for small instances.

held_karp runs the classic subset dynamic program vectorised over numpy,
feasible to around 16 vertices.  brute_force enumerates permutations and is
kept as an independent cross-check for tiny instances.  Both break ties the
same way so they return identical tours: lexicographically smallest among
the optimal orders that start at vertex 0 and move toward the smaller of
the two possible directions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import Instance, Tour
from .errors import SizeExceededError

HELD_KARP_LIMIT = 16
BRUTE_FORCE_LIMIT = 10


@dataclass(frozen=True)
class ExactResult:
    """An optimum tour together with its cost and the method used."""

    tour: Tour
    cost: int
    method: str


def _canonical_direction(order: tuple[int, ...]) -> tuple[int, ...]:
    pos0 = order.index(0)
    fwd = order[pos0:] + order[:pos0]
    rev = (fwd[0],) + tuple(reversed(fwd[1:]))
    return min(fwd, rev)


def held_karp(instance: Instance, limit: int = HELD_KARP_LIMIT) -> ExactResult:
    """Optimum tour by dynamic programming over vertex subsets."""
    n = instance.n
    if n > limit:
        raise SizeExceededError(
            f"held_karp limited to {limit} vertices, got {n}; "
            "raise the limit or supply a reference tour"
        )
    c = instance.cost_matrix.astype(np.int32)
    m = n - 1
    size = 1 << m
    inf = np.int32(1 << 20)
    dp = np.full((size, m), inf, dtype=np.int32)
    for j in range(m):
        dp[1 << j, j] = c[0, j + 1]
    masks = np.arange(size)
    by_count = [masks[np.bitwise_count(masks) == cnt] for cnt in range(m + 1)]
    inner = c[1:, 1:]
    for cnt in range(2, m + 1):
        group = by_count[cnt]
        for j in range(m):
            sel = group[(group >> j) & 1 == 1]
            if sel.size == 0:
                continue
            prev = sel ^ (1 << j)
            dp[sel, j] = (dp[prev] + inner[:, j][None, :]).min(axis=1)
    full = size - 1
    totals = dp[full] + c[1:, 0]
    last = int(np.argmin(totals))
    cost = int(totals[last])
    rev = [last]
    mask = full
    while mask != 1 << last:
        pmask = mask ^ (1 << last)
        cands = dp[pmask] + inner[:, last]
        last = int(np.flatnonzero(cands == dp[mask, last])[0])
        rev.append(last)
        mask = pmask
    order = (0,) + tuple(v + 1 for v in reversed(rev))
    return ExactResult(Tour(_canonical_direction(order)), cost, "held-karp")


def brute_force(instance: Instance) -> ExactResult:
    """Optimum tour by permutation enumeration, reflections halved."""
    n = instance.n
    if n > BRUTE_FORCE_LIMIT:
        raise SizeExceededError(
            f"brute_force limited to {BRUTE_FORCE_LIMIT} vertices, got {n}"
        )
    c = instance.cost_matrix.tolist()
    best_cost: int | None = None
    best: tuple[int, ...] | None = None
    for perm in itertools.permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        total = c[0][perm[0]] + c[perm[-1]][0]
        prev = perm[0]
        for v in perm[1:]:
            total += c[prev][v]
            prev = v
        if best_cost is None or total < best_cost:
            best_cost = total
            best = perm
    assert best is not None and best_cost is not None
    return ExactResult(Tour(_canonical_direction((0,) + best)), best_cost, "brute-force")
