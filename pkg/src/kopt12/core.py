"""Instances, tours and 1-path structure for the (1,2)-TSP.

An instance on n vertices is the complete graph where every edge costs 1 or
2.  Only the cost-1 edges are stored, as canonical (min, max) pairs; every
absent pair costs 2.  Tours are cyclic vertex orders.  Deleting the cost-2
edges of a tour leaves its 1-paths: maximal tour segments made of cost-1
edges (an isolated vertex is a 1-path of length 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import (
    DuplicateVertexError,
    InvalidArgumentError,
    MissingVertexError,
    WrongLengthError,
)

MIN_N = 3

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    """Return the (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Instance:
    """A (1,2)-TSP instance: n vertices plus the set of cost-1 edges.

    cost1 must contain canonical in-range pairs; use from_pairs to build an
    instance from raw edge data.
    """

    n: int
    cost1: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < MIN_N:
            raise InvalidArgumentError(f"need at least {MIN_N} vertices, got {self.n}")
        for u, v in self.cost1:
            if not (0 <= u < v < self.n):
                raise InvalidArgumentError(f"edge ({u},{v}) is not canonical for n={self.n}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Instance":
        """Canonicalise raw vertex pairs, rejecting self-loops and duplicates."""
        seen: set[Edge] = set()
        for u, v in pairs:
            if u == v:
                raise InvalidArgumentError(f"self-loop ({u},{v})")
            e = canonical_edge(u, v)
            if e in seen:
                raise InvalidArgumentError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @cached_property
    def cost_matrix(self) -> np.ndarray:
        """Dense n-by-n cost lookup (uint8); the diagonal is 0 and unused."""
        m = np.full((self.n, self.n), 2, dtype=np.uint8)
        if self.cost1:
            idx = np.array(sorted(self.cost1), dtype=np.intp)
            m[idx[:, 0], idx[:, 1]] = 1
            m[idx[:, 1], idx[:, 0]] = 1
        np.fill_diagonal(m, 0)
        return m

    @cached_property
    def cost1_neighbors(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the sorted vertices joined to it by a cost-1 edge."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.cost1):
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)


def cost_edge(instance: Instance, u: int, v: int) -> int:
    """Cost of the edge {u, v}: 1 if listed, else 2."""
    if u == v:
        raise InvalidArgumentError(f"no edge from {u} to itself")
    if not (0 <= u < instance.n and 0 <= v < instance.n):
        raise InvalidArgumentError(f"vertex out of range: ({u},{v}) with n={instance.n}")
    return 1 if canonical_edge(u, v) in instance.cost1 else 2


@dataclass(frozen=True)
class Tour:
    """A cyclic vertex order; edge i joins order[i] and order[(i+1) % n]."""

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.order, tuple):
            object.__setattr__(self, "order", tuple(self.order))

    @property
    def n(self) -> int:
        return len(self.order)

    def edges(self) -> Iterator[Edge]:
        o = self.order
        for i in range(len(o)):
            yield canonical_edge(o[i], o[(i + 1) % len(o)])

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}


def identity_tour(n: int) -> Tour:
    return Tour(tuple(range(n)))


def validate_tour(instance: Instance, tour: Tour) -> None:
    """Raise unless the tour order is a permutation of 0..n-1."""
    order = tour.order
    n = instance.n
    if len(order) != n:
        raise WrongLengthError(f"tour has {len(order)} entries, expected {n}")
    seen: set[int] = set()
    for v in order:
        if v in seen:
            raise DuplicateVertexError(f"vertex {v} appears more than once")
        seen.add(v)
    if seen != set(range(n)):
        missing = sorted(set(range(n)) - seen)
        foreign = sorted(seen - set(range(n)))
        raise MissingVertexError(f"missing vertices {missing}, out-of-range entries {foreign}")


def tour_cost(instance: Instance, tour: Tour) -> int:
    """Total edge cost of the tour; always between n and 2n."""
    validate_tour(instance, tour)
    c = instance.cost_matrix
    o = np.fromiter(tour.order, dtype=np.intp, count=instance.n)
    return int(c[o, np.roll(o, -1)].sum())


@dataclass(frozen=True)
class PathDecomposition:
    """The 1-paths of a tour in a fixed canonical order.

    Each path is the vertex sequence of one maximal cost-1 segment, oriented
    so the sequence is lexicographically no larger than its reverse, and the
    paths are sorted.  whole_cycle marks the degenerate case of a tour with
    no cost-2 edge at all, where the single "segment" is the full cycle and
    paths is left empty.
    """

    paths: tuple[tuple[int, ...], ...]
    whole_cycle: bool = False

    @property
    def zero_path_count(self) -> int:
        return sum(1 for p in self.paths if len(p) == 1)

    def edge_counts(self) -> tuple[int, ...]:
        return tuple(len(p) - 1 for p in self.paths)

    def endpoints(self) -> tuple[tuple[int, int], ...]:
        """(first, last) vertex of each path; equal for length-0 paths."""
        return tuple((p[0], p[-1]) for p in self.paths)


def _canonical_path(seq: list[int]) -> tuple[int, ...]:
    fwd = tuple(seq)
    rev = tuple(reversed(seq))
    return fwd if fwd <= rev else rev


def one_path_decomposition(instance: Instance, tour: Tour) -> PathDecomposition:
    """Split the tour at its cost-2 edges into maximal cost-1 segments."""
    validate_tour(instance, tour)
    o = tour.order
    n = len(o)
    c = instance.cost_matrix
    heavy = [i for i in range(n) if c[o[i], o[(i + 1) % n]] == 2]
    if not heavy:
        return PathDecomposition(paths=(), whole_cycle=True)
    paths: list[tuple[int, ...]] = []
    for idx in range(len(heavy)):
        start = (heavy[idx] + 1) % n
        stop = heavy[(idx + 1) % len(heavy)]
        seq = [o[start]]
        i = start
        while i != stop:
            i = (i + 1) % n
            seq.append(o[i])
        paths.append(_canonical_path(seq))
    return PathDecomposition(paths=tuple(sorted(paths)))
