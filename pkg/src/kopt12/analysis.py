"""Counter accounting that turns local optimality into approximation bounds.

Fix a tour T and an optimum tour R.  Decompose T into its 1-paths (maximal
runs of cost-1 edges).  Walk over the 1-paths and place counters at
vertices of R's cost-1 edges:

  * a 1-path of length 0 is a single vertex v; for each cost-1 edge {v, w}
    of R, the vertex w receives two good counters,
  * a longer 1-path contributes through its two endpoints; for each
    endpoint v and cost-1 edge {v, w} of R, the vertex w receives one bad
    counter.

For 3-optimal tours the placement obeys the five structural properties
checked below, which force total counters <= (12/5) h where h is the
number of cost-1 edges of T; an averaging argument (the dual feasibility
check) then bounds the cost ratio by 11/8.  Under the stronger merging
predicate, counters per 1-path are limited to twice its length, giving
d = 2 and the ratio bound 4/3.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Edge,
    Instance,
    PathDecomposition,
    Tour,
    canonical_edge,
    one_path_decomposition,
    tour_cost,
    validate_tour,
)
from .errors import InvalidArgumentError

# Dual multipliers (12/5, 4/5, 1/5) scaled by 15 to stay in integers.
_DUAL_SCALE = 15
_DUAL_Y = (36, 12, 3)


@dataclass(frozen=True)
class Counter:
    """One counter at vertex `at`, caused by 1-path `source_path` of the
    analyzed tour through the reference edge `via_edge`."""

    kind: str
    at: int
    source_path: int
    via_edge: Edge


@dataclass(frozen=True)
class CounterLedger:
    """All counters for one (tour, reference) pair plus the edge tallies."""

    counters: tuple[Counter, ...]
    h: int
    l: int
    f: int
    optimal_tour: Tour
    decomposition: PathDecomposition

    @property
    def good_total(self) -> int:
        return sum(1 for c in self.counters if c.kind == "good")

    @property
    def bad_total(self) -> int:
        return sum(1 for c in self.counters if c.kind == "bad")

    @property
    def total(self) -> int:
        return len(self.counters)


@dataclass(frozen=True)
class PropertyCheck:
    passed: bool
    witness: tuple | None


@dataclass(frozen=True)
class PropertyReport:
    checks: tuple[PropertyCheck, ...]

    def check(self, i: int) -> PropertyCheck:
        if not 1 <= i <= len(self.checks):
            raise InvalidArgumentError(f"no property {i}")
        return self.checks[i - 1]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class GbPair:
    g: int
    b: int


@dataclass(frozen=True)
class DualReport:
    ok: bool
    slack_by_residue: dict[int, tuple[int, ...]]
    first_violation: int | None


@dataclass(frozen=True)
class PathViolation:
    kind: str
    path_index: int
    detail: tuple


@dataclass(frozen=True)
class PathCheckReport:
    violations: tuple[PathViolation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class RatioReport:
    cost_tour: int
    cost_reference: int
    ratio: Fraction
    h: int
    l: int
    f: int
    bound_plain: Fraction
    bound_pp: Fraction


def _heavy_edge_count(instance: Instance, tour: Tour) -> int:
    c = instance.cost_matrix
    return sum(1 for u, v in tour.edges() if c[u, v] == 2)


def distribute_counters(instance: Instance, tour: Tour, optimal_tour: Tour) -> CounterLedger:
    """Place counters as described in the module docstring."""
    validate_tour(instance, tour)
    validate_tour(instance, optimal_tour)
    c = instance.cost_matrix
    dec = one_path_decomposition(instance, tour)
    l = _heavy_edge_count(instance, tour)
    nbr: dict[int, list[int]] = defaultdict(list)
    for u, v in optimal_tour.edges():
        nbr[u].append(v)
        nbr[v].append(u)
    counters: list[Counter] = []
    for pid, path in enumerate(dec.paths):
        if len(path) == 1:
            v = path[0]
            for w in sorted(nbr[v]):
                if c[v, w] == 1:
                    edge = canonical_edge(v, w)
                    counters.append(Counter("good", w, pid, edge))
                    counters.append(Counter("good", w, pid, edge))
        else:
            for v in (path[0], path[-1]):
                for w in sorted(nbr[v]):
                    if c[v, w] == 1:
                        counters.append(Counter("bad", w, pid, canonical_edge(v, w)))
    return CounterLedger(
        counters=tuple(counters),
        h=instance.n - l,
        l=l,
        f=_heavy_edge_count(instance, optimal_tour),
        optimal_tour=optimal_tour,
        decomposition=dec,
    )


def check_counter_properties(
    instance: Instance, tour: Tour, ledger: CounterLedger
) -> PropertyReport:
    """Evaluate the five structural placement properties.

    Properties 1 and 5 hold by construction of the placement; 2, 3 and 4
    are consequences of 3-optimality and may fail on other tours.  Each
    failed check carries the smallest offending witness found.
    """
    validate_tour(instance, tour)
    c = instance.cost_matrix
    at: dict[int, list[Counter]] = defaultdict(list)
    for ctr in ledger.counters:
        at[ctr.at].append(ctr)
    good_at = {v for v, cs in at.items() if any(x.kind == "good" for x in cs)}
    tnbr: dict[int, list[int]] = defaultdict(list)
    for u, v in tour.edges():
        tnbr[u].append(v)
        tnbr[v].append(u)

    # Property 1: counters arrive at a vertex via at most two reference
    # edges, and each via group is two goods or one bad.
    p1 = PropertyCheck(True, None)
    for v in sorted(at):
        groups: dict[Edge, list[str]] = defaultdict(list)
        for ctr in at[v]:
            groups[ctr.via_edge].append(ctr.kind)
        if len(groups) > 2:
            p1 = PropertyCheck(False, (v,))
            break
        bad_group = next(
            (e for e, kinds in sorted(groups.items())
             if sorted(kinds) not in (["good", "good"], ["bad"])),
            None,
        )
        if bad_group is not None:
            p1 = PropertyCheck(False, (v, bad_group))
            break

    # Property 2: two vertices holding good counters are never tour
    # neighbours, and no common tour neighbour holds any counter.
    p2 = PropertyCheck(True, None)
    goods = sorted(good_at)
    done = False
    for ia in range(len(goods)):
        if done:
            break
        for ib in range(ia + 1, len(goods)):
            a, b = goods[ia], goods[ib]
            if canonical_edge(a, b) in tour.edge_set:
                p2 = PropertyCheck(False, (a, b))
                done = True
                break
            common = sorted(set(tnbr[a]) & set(tnbr[b]))
            hit = next((w for w in common if at[w]), None)
            if hit is not None:
                p2 = PropertyCheck(False, (a, hit, b))
                done = True
                break

    # Property 3: vertices forming a length-0 1-path hold no counters;
    # endpoints of longer 1-paths hold no good and at most one bad.
    p3 = PropertyCheck(True, None)
    for pid, path in enumerate(ledger.decomposition.paths):
        if len(path) == 1:
            if at[path[0]]:
                p3 = PropertyCheck(False, (pid, path[0]))
                break
        else:
            stop = False
            for v in (path[0], path[-1]):
                kinds = [x.kind for x in at[v]]
                if "good" in kinds or kinds.count("bad") > 1:
                    p3 = PropertyCheck(False, (pid, v))
                    stop = True
                    break
            if stop:
                break

    # Property 4: an endpoint holding a counter has no cost-1 tour
    # neighbour that holds a good counter.
    p4 = PropertyCheck(True, None)
    for path in ledger.decomposition.paths:
        stop = False
        for p in sorted({path[0], path[-1]}):
            if not at[p]:
                continue
            hit = next(
                (w for w in sorted(tnbr[p]) if c[p, w] == 1 and w in good_at), None
            )
            if hit is not None:
                p4 = PropertyCheck(False, (p, hit))
                stop = True
                break
        if stop:
            break

    # Property 5: a 1-path emits at most four bad counters.
    p5 = PropertyCheck(True, None)
    by_source: dict[int, int] = defaultdict(int)
    for ctr in ledger.counters:
        if ctr.kind == "bad":
            by_source[ctr.source_path] += 1
    for pid in sorted(by_source):
        if by_source[pid] > 4:
            p5 = PropertyCheck(False, (pid, by_source[pid]))
            break

    return PropertyReport((p1, p2, p3, p4, p5))


def count_bound_check(ledger: CounterLedger) -> bool:
    """Total counters at most 12/5 of the cost-1 tour edges, in integers."""
    return 5 * ledger.total <= 12 * ledger.h


def gb_values(i: int) -> GbPair:
    """Extremal good/bad counter tallies for a component with i edges."""
    if i < 0:
        raise InvalidArgumentError(f"edge count must be nonnegative, got {i}")
    if i == 0:
        return GbPair(0, 0)
    r = i % 3
    if r == 0:
        return GbPair(4 * i // 3, 4 * i // 3 - 2)
    if r == 1:
        return GbPair(4 * (i - 1) // 3, 4 * (i - 1) // 3 + 2)
    return GbPair(4 * (i + 1) // 3, 4 * (i - 2) // 3)


def dual_slack(i: int) -> int:
    """Integer slack of the averaging constraint for a component of i edges."""
    pair = gb_values(i)
    return _DUAL_Y[0] * i - _DUAL_Y[1] * pair.b - _DUAL_Y[1] - _DUAL_SCALE * pair.g


def dual_feasibility_check(max_i: int) -> DualReport:
    """Verify the averaging multipliers against every size up to max_i.

    With y = (12/5, 4/5, 1/5) scaled by 15, the constraint for a component
    of i edges reads 36 i - 12 b_i - 12 >= 15 g_i, and y2 + y3 = 1 ties the
    multipliers to the counter total.  All arithmetic stays integral.
    """
    if max_i < 1:
        raise InvalidArgumentError(f"need max_i >= 1, got {max_i}")
    slacks: dict[int, set[int]] = {0: set(), 1: set(), 2: set()}
    ok = _DUAL_Y[1] + _DUAL_Y[2] == _DUAL_SCALE
    first: int | None = None
    for i in range(1, max_i + 1):
        slack = dual_slack(i)
        slacks[i % 3].add(slack)
        if slack < 0:
            ok = False
            if first is None:
                first = i
    return DualReport(
        ok=ok,
        slack_by_residue={r: tuple(sorted(s)) for r, s in slacks.items()},
        first_violation=first,
    )


def ratio_upper_bound(d) -> Fraction:
    """Cost ratio bound 1 + d / (4 + d) for counter density d."""
    dd = Fraction(d)
    if dd < 0:
        raise InvalidArgumentError(f"density must be nonnegative, got {d}")
    return 1 + dd / (4 + dd)


def pp_path_checks(instance: Instance, tour: Tour, ledger: CounterLedger) -> PathCheckReport:
    """Per-path counter limits that hold under the merging predicate.

    A 1-path whose vertices hold a good counter must have exactly two
    edges, and a 1-path with x edges holds at most 2x counters in total.
    """
    validate_tour(instance, tour)
    at_count: dict[int, int] = defaultdict(int)
    good_at: set[int] = set()
    for ctr in ledger.counters:
        at_count[ctr.at] += 1
        if ctr.kind == "good":
            good_at.add(ctr.at)
    violations: list[PathViolation] = []
    for pid, path in enumerate(ledger.decomposition.paths):
        x = len(path) - 1
        carried = sum(at_count[v] for v in path)
        if any(v in good_at for v in path) and x != 2:
            violations.append(PathViolation("good-path-length", pid, (x,)))
        if carried > 2 * x:
            violations.append(PathViolation("path-capacity", pid, (carried, 2 * x)))
    return PathCheckReport(tuple(violations))


def ratio_report(instance: Instance, tour: Tour, reference: Tour) -> RatioReport:
    """Cost ratio of tour against reference plus the analytic bounds."""
    cost_t = tour_cost(instance, tour)
    cost_r = tour_cost(instance, reference)
    return RatioReport(
        cost_tour=cost_t,
        cost_reference=cost_r,
        ratio=Fraction(cost_t, cost_r),
        h=instance.n - _heavy_edge_count(instance, tour),
        l=_heavy_edge_count(instance, tour),
        f=_heavy_edge_count(instance, reference),
        bound_plain=ratio_upper_bound(Fraction(12, 5)),
        bound_pp=ratio_upper_bound(2),
    )
