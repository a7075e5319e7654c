#!/usr/bin/env python3
"""Brute-force truncated Hilbert series for quadratic algebras.

Computes h_d = n^d - rank(I_d) directly in the free algebra, where I_d is
spanned by all words u * r * v with r a relation and |u| + |v| + 2 = d.
This is deliberately the naive O(n^d) construction so it is independent of
the recursive quotient-space scheme used by the library.
"""

from fractions import Fraction
from itertools import product


def rank(rows):
    """Exact rank by Gaussian elimination over Fraction."""
    rows = [list(map(Fraction, r)) for r in rows if any(r)]
    rk = 0
    col = 0
    ncols = len(rows[0]) if rows else 0
    while rows and col < ncols:
        piv = next((i for i in range(rk, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = 1 / rows[rk][col]
        rows[rk] = [x * inv for x in rows[rk]]
        for i in range(len(rows)):
            if i != rk and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
        col += 1
    return rk


def word_index(word, n):
    idx = 0
    for a in word:
        idx = idx * n + a
    return idx


def hilbert_prefix(n, relations, D):
    """relations: list of dicts {(i,j): coeff} in the free algebra on n vars."""
    h = [1, n]
    for d in range(2, D + 1):
        rows = []
        for split in range(d - 1):
            for left in product(range(n), repeat=split):
                for right in product(range(n), repeat=d - 2 - split):
                    for rel in relations:
                        row = [0] * (n ** d)
                        for (i, j), c in rel.items():
                            row[word_index(left + (i, j) + right, n)] += c
                        rows.append(row)
        h.append(n ** d - rank(rows))
    return h


def commutators(n):
    return [{(i, j): 1, (j, i): -1} for i in range(n) for j in range(i + 1, n)]


def sf_relations(a, b, c):
    """x_i x_j + x_j x_i - sum_m (F_m)_ij x_m^2 for the three-variable family
    with doubled-Gram matrices; (F_1)_23 = -a etc., pairs in the order
    (2,3), (1,3), (1,2) (0-indexed (1,2), (0,2), (0,1))."""
    return [
        {(1, 2): 1, (2, 1): 1, (0, 0): a},
        {(0, 2): 1, (2, 0): 1, (1, 1): b},
        {(0, 1): 1, (1, 0): 1, (2, 2): c},
    ]


def bf_relations(a, b, c):
    """Commutators plus f_m = sum (F_m)_ij u_i u_j for the same family."""
    rels = commutators(3)
    rels.append({(0, 0): 2, (1, 2): -a, (2, 1): -a})
    rels.append({(1, 1): 2, (0, 2): -b, (2, 0): -b})
    rels.append({(2, 2): 2, (0, 1): -c, (1, 0): -c})
    return rels


def main():
    D = 5

    print("ambient S^(0,0,0), D=5:",
          hilbert_prefix(3, sf_relations(0, 0, 0), D))
    print("ambient S^(1,0,0), D=5:",
          hilbert_prefix(3, sf_relations(1, 0, 0), D))
    print("ambient S^(1,1,0), D=5:",
          hilbert_prefix(3, sf_relations(1, 1, 0), D))
    print("ambient S^(2,2,2), D=5:",
          hilbert_prefix(3, sf_relations(2, 2, 2), D))

    # Quotients of the skew ambient by central squares.
    skew = sf_relations(0, 0, 0)
    x1sq = {(0, 0): 1}
    sum_sq = {(0, 0): 1, (1, 1): 1, (2, 2): 1}
    print("S^(0,0,0)/(x1^2), D=5:", hilbert_prefix(3, skew + [x1sq], D))
    print("S^(0,0,0)/(x1^2, sum x^2), D=5:",
          hilbert_prefix(3, skew + [x1sq, sum_sq], D))
    print("S^(0,0,0)/(x1^2, x2^2, x3^2), D=5:",
          hilbert_prefix(3, skew + [{(0, 0): 1}, {(1, 1): 1}, {(2, 2): 1}], D))

    # Exterior algebra: x_i x_j + x_j x_i (i < j) and x_i^2.
    ext = [{(i, j): 1, (j, i): 1} for i in range(3) for j in range(i + 1, 3)]
    ext += [{(i, i): 1} for i in range(3)]
    print("exterior algebra, D=5:", hilbert_prefix(3, ext, D))

    # Dual of the skew ambient: B(F) = k[u]/(2u1^2, 2u2^2, 2u3^2).
    print("B(skew) = k[u]/(u_m^2), D=5:",
          hilbert_prefix(3, bf_relations(0, 0, 0), D))
    print("B(nodal F), D=5:", hilbert_prefix(3, bf_relations(1, 1, 0), D))

    # Commutative counterexample: k[u]/(u1^2, u1u2) is not a complete
    # intersection; first mismatch with (1-t^2)^2/(1-t)^3 at degree 3.
    cnt = commutators(3) + [{(0, 0): 1}, {(0, 1): 1, (1, 0): 1}]
    print("k[u]/(u1^2, u1u2), D=5:", hilbert_prefix(3, cnt, D))

    # Base-point fixture: all F_m with last row and column zero, so (0,0,1)
    # is a common zero of the f_m and B(F) is not exterior-sized.
    base = commutators(3) + [
        {(0, 0): 2},
        {(1, 1): 2},
        {(0, 1): 1, (1, 0): 1},
    ]
    print("B(F) with base point (0,0,1), D=5:", hilbert_prefix(3, base, D))

    # Order-sensitive fixture: A = k<x,y,z>/(yz-zy-x^2, zx-xz, xy-yx).
    heis = [
        {(1, 2): 1, (2, 1): -1, (0, 0): -1},
        {(2, 0): 1, (0, 2): -1},
        {(0, 1): 1, (1, 0): -1},
    ]
    print("k<x,y,z>/(yz-zy-x^2, zx-xz, xy-yx), D=5:",
          hilbert_prefix(3, heis, D))
    print("same algebra mod x^2, D=5:", hilbert_prefix(3, heis + [x1sq], D))
    print("same algebra mod (x^2, y^2), D=5:",
          hilbert_prefix(3, heis + [x1sq, {(1, 1): 1}], D))


if __name__ == "__main__":
    main()
