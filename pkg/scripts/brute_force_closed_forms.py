"""Brute-force the Fibonacci cross-product closed forms and the index-shift identity.

Nothing here goes through the library's closed forms: cross products are
expanded from coordinates and Fibonacci numbers come from a plain loop.
"""

import argparse

from fibalg.cross import CROSS7_TRIPLES


def fib_table(lo, hi):
    a, b = 0, 1
    table = {0: 0, 1: 1}
    for n in range(2, hi + 1):
        a, b = b, a + b
        table[n] = b
    a, b = 0, 1  # walk down: f_{n-1} = f_{n+1} - f_n
    for n in range(-1, lo - 1, -1):
        a, b = b - a, a
        table[n] = a
    return table


def cross3(x, y):
    return (x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0])


def cross7(x, y):
    out = [0] * 7
    for a, b, c in CROSS7_TRIPLES:
        for i, j, k in ((a, b, c), (b, c, a), (c, a, b)):
            out[k - 1] += x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
    return tuple(out)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=30)
    args = ap.parse_args()
    B = args.bound
    f = fib_table(-4 * B, 4 * B)

    for dim, cross in ((3, cross3), (7, cross7)):
        vec = {n: tuple(f[n + i] for i in range(dim)) for n in range(-B, B + 1)}
        direction = cross(vec[0], vec[1])
        bad = 0
        for k in range(-B, B + 1):
            for m in range(-B, B + 1):
                scale = (-1) ** (k % 2) * f[m - k]
                bad += cross(vec[k], vec[m]) != tuple(scale * d for d in direction)
        print(f"dim {dim}: F_0 x F_1 = {direction}; {bad} mismatches over k, m in [{-B}, {B}]")

    bad = 0
    for i in range(-B, B + 1):
        for j in range(-B, B + 1):
            for k in range(-B, B + 1):
                lhs = f[i] * f[j] - f[i + k] * f[j - k]
                rhs = (-1) ** ((j - k) % 2) * f[i + k - j] * f[k]
                bad += lhs != rhs
    print(f"index shift: {bad} mismatches over |i|, |j|, |k| <= {B}")
    i, j, k = 1, 4, 2
    print(f"  (i, j, k) = (1, 4, 2): lhs = {f[i] * f[j] - f[i + k] * f[j - k]}, "
          f"rhs = {(-1) ** ((j - k) % 2) * f[i + k - j] * f[k]}")


if __name__ == "__main__":
    main()
