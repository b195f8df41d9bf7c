"""Sweep the filling-rule weight q and count configuration exceptions.

Each rule orders subshells by n + q*l.  The sweep scores every rule against
the reference ground-state configurations (Z <= z_max) and prints the
exception count, so one can see where the madelung weight q = 1 sits in the
family.

Usage: python3 scripts/filling_rules.py [--zmax 99] [--denominator 4]
"""

import argparse
from fractions import Fraction

from so42pt.addresses import (
    SUBSHELL_LETTERS,
    MADELUNG,
    FillingRule,
    configuration_diff,
    shell_sequence,
    subshell_label,
)


def order_label(rule: FillingRule, count: int = 19) -> str:
    def label(n: int, l: int) -> str:
        if l < len(SUBSHELL_LETTERS):
            return subshell_label(n, l)
        return f"{n}(l={l})"

    return " ".join(label(n, l) for n, l in shell_sequence(rule, count))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--zmax", type=int, default=99, help="score against Z = 1..zmax")
    ap.add_argument(
        "--denominator", type=int, default=4, help="grid step 1/denominator for q"
    )
    args = ap.parse_args()

    grid = [
        Fraction(k, args.denominator)
        for k in range(-args.denominator, 2 * args.denominator + 1)
    ]
    print(f"{'q':>6} {'exceptions':>10}  first subshells")
    best = None
    for q_value in grid:
        rule = FillingRule(q_value)
        count = len(configuration_diff(args.zmax, rule))
        if best is None or count < best[1]:
            best = (q_value, count)
        print(f"{str(q_value):>6} {count:>10}  {order_label(rule)}")
    print()
    print(f"best grid point: q = {best[0]} with {best[1]} exceptions")
    madelung_count = len(configuration_diff(args.zmax, MADELUNG))
    print(f"madelung (q = 1): {madelung_count} exceptions out of {args.zmax}")


if __name__ == "__main__":
    main()
