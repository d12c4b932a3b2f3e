"""Command line interface.

Subcommands cover the whole workflow: generate instances (constructed
families or random), run local search, certify local optimality, compute
exact optima, run the counter analysis, verify the arithmetic lemmas
behind the ratio bounds, and sweep random instances comparing both
predicates against exact optima.

Output is line oriented, one key=value pair per line, so runs are easy to
diff and grep.  Exit codes: 0 on success, 1 when a verdict check fails
(--expect mismatch, infeasible multipliers, sweep violations), 2 on usage
or input errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .analysis import (
    check_counter_properties,
    count_bound_check,
    distribute_counters,
    dual_feasibility_check,
    dual_slack,
    gb_values,
    pp_path_checks,
    ratio_upper_bound,
)
from .certify import (
    certify_k_optimal,
    certify_kpp_optimal,
    endpoint_pair_violations,
    find_forbidden_constellation,
)
from .constructions import (
    gen_three_opt_lb,
    gen_three_opt_pp_lb,
    gen_two_opt_lb,
    random_instance,
)
from .core import Instance, Tour, tour_cost
from .errors import (
    ConstructionError,
    InvalidArgumentError,
    InvalidMoveError,
    ParseError,
    SizeExceededError,
    TourValidationError,
)
from .exact import HELD_KARP_LIMIT, held_karp
from .fileio import read_instance, read_tour, write_instance, write_tour
from .moves import format_kmove, local_search

_BOUND_PLAIN = ratio_upper_bound(Fraction(12, 5))
_BOUND_PP = ratio_upper_bound(2)


@dataclass(frozen=True)
class SweepConfig:
    """Grid of random instances for comparing descent against the optimum."""

    n_min: int = 6
    n_max: int = 13
    per_cell: int = 21
    p_values: tuple[float, ...] = (0.3, 0.5, 0.7)
    seed: int = 42
    limit: int = HELD_KARP_LIMIT
    workers: int = 1


@dataclass(frozen=True)
class RunRecord:
    """One descent run on one instance under one predicate and start."""

    n: int
    p: float
    index: int
    predicate: str
    start: str
    cost: int
    optimum: int
    ratio: Fraction
    certified: bool
    checks_ok: bool
    detail: str


@dataclass(frozen=True)
class SweepResult:
    records: tuple[RunRecord, ...]
    max_ratio_plain: Fraction
    max_ratio_pp: Fraction
    violations: int


def structural_checks(
    instance: Instance, tour: Tour, optimal_tour: Tour, predicate: str
) -> tuple[bool, str]:
    """Validate everything certified local optima must satisfy.

    Returns (ok, label of the first failed check).  The pp predicate adds
    its per-path counter limits and the tighter 2h counter budget.
    """
    ledger = distribute_counters(instance, tour, optimal_tour)
    report = check_counter_properties(instance, tour, ledger)
    if not report.all_pass:
        bad = next(i for i in range(1, 6) if not report.check(i).passed)
        return False, f"property-{bad}"
    if not count_bound_check(ledger):
        return False, "count-bound"
    if find_forbidden_constellation(instance, tour) is not None:
        return False, "forbidden-constellation"
    if endpoint_pair_violations(instance, tour):
        return False, "endpoint-pair"
    if predicate == "pp":
        if not pp_path_checks(instance, tour, ledger).passed:
            return False, "pp-path-limit"
        if ledger.total > 2 * ledger.h:
            return False, "pp-count-bound"
    return True, ""


def _sweep_cell(task: tuple[int, float, int, int, int]) -> tuple[RunRecord, ...]:
    n, p, index, inst_seed, limit = task
    instance = random_instance(n, p, inst_seed)
    opt = held_karp(instance, limit)
    records = []
    for predicate in ("plain", "pp"):
        for start in ("identity", "random"):
            seed = None if start == "identity" else inst_seed + 777
            tour, stats = local_search(
                instance, k=3, plusplus=predicate == "pp", seed=seed
            )
            certifier = certify_kpp_optimal if predicate == "pp" else certify_k_optimal
            cert = certifier(instance, tour, 3)
            certified = cert.verdict == "optimal"
            if certified:
                ok, detail = structural_checks(instance, tour, opt.tour, predicate)
            else:
                ok, detail = False, "not-locally-optimal"
            ratio = Fraction(stats.final_cost, opt.cost)
            bound = _BOUND_PP if predicate == "pp" else _BOUND_PLAIN
            if ok and ratio > bound:
                ok, detail = False, "ratio-bound"
            records.append(
                RunRecord(
                    n=n,
                    p=p,
                    index=index,
                    predicate=predicate,
                    start=start,
                    cost=stats.final_cost,
                    optimum=opt.cost,
                    ratio=ratio,
                    certified=certified,
                    checks_ok=ok,
                    detail=detail,
                )
            )
    return tuple(records)


def run_sweep(config: SweepConfig) -> SweepResult:
    """Run the full grid; record order is independent of worker count."""
    if config.n_min < 5 or config.n_max < config.n_min:
        raise InvalidArgumentError("need 5 <= n_min <= n_max")
    if config.per_cell < 1:
        raise InvalidArgumentError("need at least one instance per cell")
    tasks = [
        (n, p, idx, config.seed * 1000003 + n * 1009 + idx, config.limit)
        for p in config.p_values
        for n in range(config.n_min, config.n_max + 1)
        for idx in range(config.per_cell)
    ]
    if config.workers <= 1:
        groups = [_sweep_cell(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            groups = list(pool.map(_sweep_cell, tasks, chunksize=8))
    records = tuple(r for g in groups for r in g)
    plain = [r.ratio for r in records if r.predicate == "plain"]
    pp = [r.ratio for r in records if r.predicate == "pp"]
    return SweepResult(
        records=records,
        max_ratio_plain=max(plain, default=Fraction(1)),
        max_ratio_pp=max(pp, default=Fraction(1)),
        violations=sum(1 for r in records if not r.checks_ok),
    )


def _emit(lines: list[str], report: str | None) -> None:
    for line in lines:
        print(line)
    if report:
        Path(report).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "random":
        if args.n is None or args.p is None or args.seed is None:
            raise InvalidArgumentError("random family needs --n, --p and --seed")
        if args.out_tour or args.out_reference:
            raise InvalidArgumentError("random family has no designated tour")
        instance = random_instance(args.n, args.p, args.seed)
        if args.out_instance:
            write_instance(instance, Path(args.out_instance))
        _emit(
            [
                "family=random",
                f"n={instance.n}",
                f"p={args.p}",
                f"seed={args.seed}",
                f"cost1_edges={len(instance.cost1)}",
            ],
            None,
        )
        return 0
    if args.family == "two-opt-lb":
        if args.n is None:
            raise InvalidArgumentError("two-opt-lb needs --n")
        out = gen_two_opt_lb(args.n)
    else:
        if args.s is None:
            raise InvalidArgumentError(f"{args.family} needs --s")
        gen = gen_three_opt_lb if args.family == "three-opt-lb" else gen_three_opt_pp_lb
        out = gen(args.s)
    if args.out_instance:
        write_instance(out.instance, Path(args.out_instance))
    if args.out_tour:
        write_tour(out.tour, Path(args.out_tour))
    if args.out_reference:
        write_tour(out.reference_tour, Path(args.out_reference))
    lines = ["family=" + args.family, f"n={out.instance.n}"]
    if args.s is not None:
        lines.append(f"s={args.s}")
    lines += [
        f"tour_cost={out.claimed_tour_cost}",
        f"reference_cost={tour_cost(out.instance, out.reference_tour)}",
        f"reference_bound={out.claimed_reference_bound}",
    ]
    _emit(lines, None)
    return 0


def _cmd_solve(args: argparse.Namespace) -> int:
    instance = read_instance(Path(args.instance))
    start = read_tour(Path(args.tour)) if args.tour else None
    tour, stats = local_search(
        instance, start=start, k=args.k, plusplus=args.plus_plus, seed=args.seed
    )
    if args.out_tour:
        write_tour(tour, Path(args.out_tour))
    _emit(
        [
            f"final_cost={stats.final_cost}",
            f"iterations={stats.iterations}",
            f"moves_applied={stats.moves_applied}",
            f"final_zero_paths={stats.final_zero_paths}",
        ],
        None,
    )
    return 0


def _family_pair(args: argparse.Namespace):
    if args.family == "two-opt-lb":
        if args.n is None:
            raise InvalidArgumentError("two-opt-lb needs --n")
        out = gen_two_opt_lb(args.n)
    elif args.family in ("three-opt-lb", "three-opt-pp-lb"):
        if args.s is None:
            raise InvalidArgumentError(f"{args.family} needs --s")
        gen = gen_three_opt_lb if args.family == "three-opt-lb" else gen_three_opt_pp_lb
        out = gen(args.s)
    else:
        raise InvalidArgumentError(f"cannot certify family {args.family!r}")
    return out.instance, out.tour


def _cmd_certify(args: argparse.Namespace) -> int:
    if args.family:
        instance, tour = _family_pair(args)
    else:
        if not args.instance or not args.tour:
            raise InvalidArgumentError("need --instance and --tour, or --family")
        instance = read_instance(Path(args.instance))
        tour = read_tour(Path(args.tour))
    certifier = certify_kpp_optimal if args.plus_plus else certify_k_optimal
    cert = certifier(instance, tour, args.k)
    lines = [
        f"verdict={cert.verdict}",
        f"k={cert.k}",
        f"predicate={cert.predicate}",
        f"examined={cert.moves_examined}",
    ]
    if cert.witness is not None:
        lines.append("witness=" + format_kmove(cert.witness))
    _emit(lines, None)
    if args.expect and args.expect != cert.verdict:
        print(f"expected verdict {args.expect}, got {cert.verdict}", file=sys.stderr)
        return 1
    return 0


def _cmd_exact(args: argparse.Namespace) -> int:
    instance = read_instance(Path(args.instance))
    result = held_karp(instance, args.limit)
    if args.out_tour:
        write_tour(result.tour, Path(args.out_tour))
    _emit([f"n={instance.n}", f"cost={result.cost}", f"method={result.method}"], None)
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    instance = read_instance(Path(args.instance))
    tour = read_tour(Path(args.tour))
    if args.optimal:
        reference = read_tour(Path(args.optimal))
    else:
        reference = held_karp(instance, args.limit).tour
    ledger = distribute_counters(instance, tour, reference)
    report = check_counter_properties(instance, tour, ledger)
    ratio = Fraction(tour_cost(instance, tour), tour_cost(instance, reference))
    lines = [
        f"h={ledger.h}",
        f"l={ledger.l}",
        f"f={ledger.f}",
        f"counters_total={ledger.total}",
        f"counters_good={ledger.good_total}",
        f"counters_bad={ledger.bad_total}",
        f"bound_ok={_bool(count_bound_check(ledger))}",
    ]
    lines += [
        f"prop{i}={'pass' if report.check(i).passed else 'fail'}" for i in range(1, 6)
    ]
    lines += [
        f"ratio={ratio}",
        f"bound_plain={_BOUND_PLAIN}",
        f"bound_pp={_BOUND_PP}",
    ]
    _emit(lines, args.report)
    return 0


def _cmd_verify_lemmas(args: argparse.Namespace) -> int:
    report = dual_feasibility_check(args.max_i)
    lines = []
    for i in range(1, min(args.max_i, 12) + 1):
        pair = gb_values(i)
        lines.append(f"gb i={i} g={pair.g} b={pair.b} slack={dual_slack(i)}")
    lines.append(f"dual_ok={_bool(report.ok)}")
    for r in (0, 1, 2):
        vals = ",".join(str(v) for v in report.slack_by_residue[r])
        lines.append(f"slack_mod{r}={vals}")
    lines.append(f"ratio_bound_12_5={_BOUND_PLAIN}")
    lines.append(f"ratio_bound_2={_BOUND_PP}")
    _emit(lines, None)
    return 0 if report.ok else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    config = SweepConfig(
        n_min=args.n_min,
        n_max=args.n_max,
        per_cell=args.per_cell,
        p_values=tuple(args.p),
        seed=args.seed,
        limit=args.limit,
        workers=args.workers,
    )
    result = run_sweep(config)
    lines = []
    for r in result.records:
        lines.append(
            f"run n={r.n} p={r.p} idx={r.index} predicate={r.predicate} "
            f"start={r.start} cost={r.cost} opt={r.optimum} ratio={r.ratio} "
            f"certified={_bool(r.certified)} "
            f"checks={'ok' if r.checks_ok else r.detail}"
        )
    lines += [
        f"instances={len(result.records) // 4}",
        f"runs={len(result.records)}",
        f"max_ratio_plain={result.max_ratio_plain}",
        f"max_ratio_pp={result.max_ratio_pp}",
        f"violations={result.violations}",
    ]
    _emit(lines, args.report)
    return 1 if result.violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kopt12",
        description="k-Opt and k-Opt++ local search toolkit for the (1,2)-TSP",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance family member or random instance")
    p.add_argument(
        "--family",
        required=True,
        choices=["two-opt-lb", "three-opt-lb", "three-opt-pp-lb", "random"],
    )
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--out-instance")
    p.add_argument("--out-tour")
    p.add_argument("--out-reference")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="run first-improvement local search")
    p.add_argument("--instance", required=True)
    p.add_argument("--tour", help="start tour file; identity if omitted")
    p.add_argument("--k", type=int, default=3, choices=[2, 3])
    p.add_argument("--plus-plus", action="store_true")
    p.add_argument("--seed", type=int, help="seed for a shuffled start tour")
    p.add_argument("--out-tour")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("certify", help="exhaustively certify local optimality")
    p.add_argument("--instance")
    p.add_argument("--tour")
    p.add_argument(
        "--family", choices=["two-opt-lb", "three-opt-lb", "three-opt-pp-lb"]
    )
    p.add_argument("--n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int, default=3, choices=[2, 3])
    p.add_argument("--plus-plus", action="store_true")
    p.add_argument("--expect", choices=["optimal", "non-optimal"])
    p.add_argument(
        "--workers",
        type=int,
        default=1,
        help="accepted for interface stability; the scan is single-pass",
    )
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("exact", help="optimum tour by dynamic programming")
    p.add_argument("--instance", required=True)
    p.add_argument("--limit", type=int, default=HELD_KARP_LIMIT)
    p.add_argument("--out-tour")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("analyze", help="counter distribution and ratio accounting")
    p.add_argument("--instance", required=True)
    p.add_argument("--tour", required=True)
    p.add_argument("--optimal", help="reference tour file; exact optimum if omitted")
    p.add_argument("--limit", type=int, default=HELD_KARP_LIMIT)
    p.add_argument("--report")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify-lemmas", help="integer checks behind the ratio bounds")
    p.add_argument("--max-i", type=int, default=10000)
    p.set_defaults(func=_cmd_verify_lemmas)

    p = sub.add_parser("sweep", help="random-instance grid vs exact optima")
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=13)
    p.add_argument("--per-cell", type=int, default=21)
    p.add_argument("--p", type=float, nargs="+", default=[0.3, 0.5, 0.7])
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--limit", type=int, default=HELD_KARP_LIMIT)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--report")
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (
        ParseError,
        InvalidArgumentError,
        InvalidMoveError,
        TourValidationError,
        SizeExceededError,
        ConstructionError,
        FileNotFoundError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
