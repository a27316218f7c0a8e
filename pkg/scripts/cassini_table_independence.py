"""Cassini's element identity holds for any bilinear product, unital or not.

Random integer tables (no unit forced) are drawn per dimension and the
identity is checked in both orders. A one-sided corruption, where only the
left-hand side sees a changed structure constant, is then shown to break it.
"""

import argparse
import random
from itertools import product

from fibalg.algebra import make_custom_algebra, named_algebra
from fibalg.elements import cassini_check
from fibalg.report import VerificationReport


def raw_table(rng, dim):
    return [[[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tables", type=int, default=5, help="tables per dimension")
    args = ap.parse_args()
    rng = random.Random(args.seed)

    report = VerificationReport("cassini-any-table")
    for dim, _ in product(range(1, 9), range(args.tables)):
        table = raw_table(rng, dim)
        # make_custom_algebra insists on a unit, so patch e_0 in and then overwrite it back
        unital = [[row[:] for row in plane] for plane in table]
        for j, k in product(range(dim), repeat=2):
            unital[0][j][k] = unital[j][0][k] = int(j == k)
        spec = make_custom_algebra(dim, unital, label=f"random(dim={dim})")
        for i, j, k in product(range(dim), repeat=3):
            if table[i][j][k] != unital[i][j][k]:
                spec = spec.with_constant(i, j, k, table[i][j][k])
        for m in range(-10, 11):
            cassini_check(spec, m, report)
    print(f"arbitrary tables: {report.cases} cases, {len(report.failures)} failures")

    spec = named_algebra("octonion:1,1,1")
    for cell in ((1, 2, 3), (2, 1, 3), (0, 0, 0)):
        lhs_spec = spec.with_constant(*cell, 2)
        r = VerificationReport("corrupt")
        for m in range(-5, 6):
            cassini_check(spec, m, r, lhs_spec=lhs_spec)
        ops = sorted({fl.op for fl in r.failures})
        print(f"c{list(cell)} = 2 on the left only: {len(r.failures)} failures {ops}")


if __name__ == "__main__":
    main()
