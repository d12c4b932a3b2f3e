"""Instance families with provably bad local optima, and random instances.

Each generator returns the instance together with the locally optimal tour
the family is built around, a good reference tour, and the claimed costs of
both.  The claims are re-verified at construction time so a generator can
never silently hand out a miscosted family.

All families are periodic: vertex labels live on a cycle and the cost-1
edge set is a union of shifted copies of a fixed template block.  The
two-opt family has period 1 (plus chords of period 2), the three-opt family
period 8, and the merging family period 6.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass

from .core import MIN_N, Edge, Instance, Tour, canonical_edge, identity_tour, tour_cost
from .errors import ConstructionError, InvalidArgumentError

# Template of cost-1 edges per period-8 block (offsets from the block base),
# for the family whose identity tour is 3-optimal yet ~11/8 times optimal.
_THREE_OPT_TEMPLATE: tuple[tuple[int, int], ...] = (
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (2, 5),
    (2, 13),
    (0, 3),
    (-8, 3),
    (4, 6),
    (4, 14),
    (7, 9),
    (7, 17),
)

# Template per period-6 block for the family whose identity tour survives
# zero-gain path merging yet costs ~4/3 times optimal.
_PP_TEMPLATE: tuple[tuple[int, int], ...] = (
    (0, 1),
    (2, 3),
    (3, 4),
    (4, 5),
    (0, 3),
    (2, 5),
    (4, 7),
)


@dataclass(frozen=True)
class FamilyOutput:
    """A constructed instance with its designated tour and reference tour."""

    instance: Instance
    tour: Tour
    reference_tour: Tour
    claimed_tour_cost: int
    claimed_reference_bound: int


@dataclass(frozen=True)
class RegularityResult:
    """Outcome of checking periodic structure of a family instance."""

    regular: bool
    condition: int | None
    violation: tuple[int, int] | None


def _checked(out: FamilyOutput) -> FamilyOutput:
    got_tour = tour_cost(out.instance, out.tour)
    if got_tour != out.claimed_tour_cost:
        raise ConstructionError(
            f"designated tour costs {got_tour}, claimed {out.claimed_tour_cost}"
        )
    got_ref = tour_cost(out.instance, out.reference_tour)
    if got_ref > out.claimed_reference_bound:
        raise ConstructionError(
            f"reference tour costs {got_ref}, above the claimed bound "
            f"{out.claimed_reference_bound}"
        )
    return out


def _template_edges(n: int, blocks: int, period: int, template) -> frozenset[Edge]:
    edges = set()
    for h in range(blocks):
        base = period * h
        for du, dv in template:
            edges.add(canonical_edge((base + du) % n, (base + dv) % n))
    return frozenset(edges)


def gen_two_opt_lb(n: int) -> FamilyOutput:
    """Ring plus even chords; a 2-optimal tour of cost n + floor((n-2)/2).

    The designated tour takes odd vertices up and even vertices down, using
    every second ring edge and every chord once.  The identity tour costs n.
    """
    if n < 7:
        raise InvalidArgumentError(f"two-opt family needs n >= 7, got {n}")
    edges = {canonical_edge(i, i + 1) for i in range(n - 1)}
    edges.add(canonical_edge(0, n - 1))
    edges.update(canonical_edge(i, i + 2) for i in range(0, n - 2, 2))
    inst = Instance(n, frozenset(edges))
    order = (0, *range(1, n, 2), *reversed(range(2, n, 2)))
    return _checked(
        FamilyOutput(
            instance=inst,
            tour=Tour(order),
            reference_tour=identity_tour(n),
            claimed_tour_cost=n + (n - 2) // 2,
            claimed_reference_bound=n,
        )
    )


def _path_after_removing_least_edge(edges: set[Edge]) -> list[int]:
    """Open the cycle formed by edges at its smallest edge, return the path."""
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    if any(len(nbrs) != 2 for nbrs in adj.values()):
        raise ConstructionError("reference cycle has a vertex of degree != 2")
    start, end = min(edges)
    seq = [start]
    prev, cur = end, start
    while cur != end:
        x, y = adj[cur]
        prev, cur = cur, (y if x == prev else x)
        if cur == start:
            raise ConstructionError("reference cycle closed early")
        seq.append(cur)
    if len(seq) != len(adj):
        raise ConstructionError("reference cycle does not span its vertex set")
    return seq


def build_three_opt_reference(s: int) -> Tour:
    """Concatenate four disjoint vertex cycles of the period-8 family.

    Each cycle uses 2s cost-1 edges; opening each at its smallest edge and
    chaining the paths costs at most 8s + 4.
    """
    if s < 3:
        raise InvalidArgumentError(f"three-opt family needs s >= 3, got {s}")
    n = 8 * s
    cycles = (
        ((2, 5), (2, 13)),
        ((0, 3), (-8, 3)),
        ((4, 6), (4, 14)),
        ((7, 9), (7, 17)),
    )
    order: list[int] = []
    for template in cycles:
        edges = set()
        for h in range(s):
            for du, dv in template:
                edges.add(canonical_edge((8 * h + du) % n, (8 * h + dv) % n))
        order.extend(_path_after_removing_least_edge(edges))
    return Tour(tuple(order))


def gen_three_opt_lb(s: int) -> FamilyOutput:
    """Period-8 family on 8s vertices; the identity tour is 3-optimal.

    The identity tour costs 11s while the reference tour built from four
    disjoint cost-1 cycles costs at most 8s + 4.
    """
    if s < 3:
        raise InvalidArgumentError(f"three-opt family needs s >= 3, got {s}")
    n = 8 * s
    inst = Instance(n, _template_edges(n, s, 8, _THREE_OPT_TEMPLATE))
    return _checked(
        FamilyOutput(
            instance=inst,
            tour=identity_tour(n),
            reference_tour=build_three_opt_reference(s),
            claimed_tour_cost=11 * s,
            claimed_reference_bound=8 * s + 4,
        )
    )


def gen_three_opt_pp_lb(s: int) -> FamilyOutput:
    """Period-6 family on 6s vertices; the identity tour resists merging.

    The identity tour costs 8s.  The reference tour alternates the edges
    {2h, 2h+1} and {2h, 2h+3} around the whole vertex set and is all
    cost-1, so it costs exactly 6s.
    """
    if s < 2:
        raise InvalidArgumentError(f"merging family needs s >= 2, got {s}")
    n = 6 * s
    inst = Instance(n, _template_edges(n, s, 6, _PP_TEMPLATE))
    ref_edges = set()
    for h in range(3 * s):
        ref_edges.add(canonical_edge(2 * h, (2 * h + 1) % n))
        ref_edges.add(canonical_edge(2 * h, (2 * h + 3) % n))
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v in ref_edges:
        adj[u].append(v)
        adj[v].append(u)
    seq = [0]
    prev, cur = 0, min(adj[0])
    while cur != 0:
        seq.append(cur)
        x, y = adj[cur]
        prev, cur = cur, (y if x == prev else x)
    if len(seq) != n:
        raise ConstructionError("reference edge set is not a single cycle")
    return _checked(
        FamilyOutput(
            instance=inst,
            tour=identity_tour(n),
            reference_tour=Tour(tuple(seq)),
            claimed_tour_cost=8 * s,
            claimed_reference_bound=6 * s,
        )
    )


_FAMILY_PERIODS = {
    "three-opt-lb": (8, 3, gen_three_opt_lb),
    "three-opt-pp-lb": (6, 2, gen_three_opt_pp_lb),
}


def is_regular(family: str, s_check: int, l: int) -> RegularityResult:
    """Check segment structure of a family instance on s_check * l vertices.

    Splits the vertex cycle into s_check segments of l consecutive labels
    and tests that costs are invariant under shifting by l and that cost-1
    edges only join a segment to itself or a cyclically adjacent segment.
    The returned violation is the smallest offending vertex pair.
    """
    if family not in _FAMILY_PERIODS:
        known = ", ".join(sorted(_FAMILY_PERIODS))
        raise InvalidArgumentError(f"unknown family {family!r}, expected one of {known}")
    if s_check < 3:
        raise InvalidArgumentError(f"need at least 3 segments, got {s_check}")
    if l < 1:
        raise InvalidArgumentError(f"segment length must be positive, got {l}")
    period, s_min, gen = _FAMILY_PERIODS[family]
    n = s_check * l
    if n % period:
        raise InvalidArgumentError(
            f"{family} exists only on multiples of {period} vertices, got {n}"
        )
    s_inst = n // period
    if s_inst < s_min:
        raise InvalidArgumentError(
            f"{family} needs at least {s_min * period} vertices, got {n}"
        )
    cost1 = gen(s_inst).instance.cost1
    shifted = frozenset(canonical_edge((u + l) % n, (v + l) % n) for u, v in cost1)
    if shifted != cost1:
        first = min((cost1 - shifted) | (shifted - cost1))
        return RegularityResult(regular=False, condition=2, violation=first)
    for u, v in sorted(cost1):
        gap = (v // l - u // l) % s_check
        if 1 < gap < s_check - 1:
            return RegularityResult(regular=False, condition=3, violation=(u, v))
    return RegularityResult(regular=True, condition=None, violation=None)


def random_instance(n: int, p: float, seed: int) -> Instance:
    """Each vertex pair gets cost 1 with probability p, independently.

    Pairs are drawn in lexicographic order so the instance depends only on
    (n, p, seed).
    """
    if n < MIN_N:
        raise InvalidArgumentError(f"need n >= {MIN_N}, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidArgumentError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = frozenset(
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    )
    return Instance(n, edges)
