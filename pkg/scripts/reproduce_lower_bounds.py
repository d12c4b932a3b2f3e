"""Certify the lower-bound families and print their cost ratios.

Builds one member of each family, certifies the designated tour under the
matching predicate by exhaustive neighborhood scan, and prints the ratio
against the reference tour.  Growing the size parameters pushes the ratios
toward their limits of 3/2, 11/8 and 4/3.
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from kopt12 import (
    certify_k_optimal,
    certify_kpp_optimal,
    gen_three_opt_lb,
    gen_three_opt_pp_lb,
    gen_two_opt_lb,
    tour_cost,
)


def run(name, out, cert):
    ratio = Fraction(out.claimed_tour_cost, tour_cost(out.instance, out.reference_tour))
    print(
        f"{name:16s} n={out.instance.n:4d} k={cert.k} predicate={cert.predicate:5s} "
        f"verdict={cert.verdict:7s} examined={cert.moves_examined:7d} "
        f"tour={out.claimed_tour_cost:4d} reference={tour_cost(out.instance, out.reference_tour):4d} "
        f"ratio={ratio} ({float(ratio):.4f})"
    )
    return cert.verdict == "optimal"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--two-opt-n", type=int, default=24)
    parser.add_argument("--three-opt-s", type=int, default=12)
    parser.add_argument("--pp-s", type=int, default=6)
    args = parser.parse_args()

    started = time.time()
    ok = True

    out = gen_two_opt_lb(args.two_opt_n)
    ok &= run("two-opt-lb", out, certify_k_optimal(out.instance, out.tour, 2))

    out = gen_three_opt_lb(args.three_opt_s)
    ok &= run("three-opt-lb", out, certify_k_optimal(out.instance, out.tour, 3))

    out = gen_three_opt_pp_lb(args.pp_s)
    ok &= run("three-opt-pp-lb", out, certify_kpp_optimal(out.instance, out.tour, 3))

    print(f"elapsed {time.time() - started:.2f}s")
    if not ok:
        print("certification failed for at least one family")
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
