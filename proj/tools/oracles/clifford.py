#!/usr/bin/env python3
"""Independent fixture values for the graded Clifford algebra layer.

Implements a deliberately different rewriting strategy from the library:
elements are dicts keyed by (word, y-exponent tuple) and the *last*
non-ascending adjacent pair is rewritten each step (the library rewrites the
first), so matching outputs are meaningful evidence.  Superpotential tensors
are solved with sympy nullspaces.

Run:  python3 tools/oracles/clifford.py
"""

from fractions import Fraction
from itertools import permutations

import sympy as sp


def bump(ys, m):
    out = list(ys)
    out[m] += 1
    return tuple(out)


def reduce_el(F, el):
    """Rewrite to the free basis: x_j x_i -> -x_i x_j + sum_m (F_m)_{ij} y_m
    for j > i, and x_i^2 -> sum_m (F_m)_{ii}/2 y_m."""
    n = len(F)
    out = {}
    work = [(k, c) for k, c in el.items()]
    while work:
        (word, ys), c = work.pop()
        if c == 0:
            continue
        bad = -1
        for k in range(len(word) - 1):
            if word[k] >= word[k + 1]:
                bad = k  # keep scanning: use the LAST bad position
        if bad < 0:
            key = (word, ys)
            out[key] = out.get(key, Fraction(0)) + c
            continue
        i, j = word[bad], word[bad + 1]
        head, tail = word[:bad], word[bad + 2:]
        if i == j:
            for m in range(n):
                fm = Fraction(F[m][i][i], 2)
                if fm:
                    work.append(((head + tail, bump(ys, m)), c * fm))
        else:
            swapped = head + (j, i) + tail
            work.append(((swapped, ys), -c))
            for m in range(n):
                fm = Fraction(F[m][j][i])
                if fm:
                    work.append(((head + tail, bump(ys, m)), c * fm))
    return {k: v for k, v in out.items() if v != 0}


def mul(F, a, b):
    prod = {}
    for (wa, ya), ca in a.items():
        for (wb, yb), cb in b.items():
            key = (wa + wb, tuple(p + q for p, q in zip(ya, yb)))
            prod[key] = prod.get(key, Fraction(0)) + ca * cb
    return reduce_el(F, prod)


def gen(n, i):
    return {((i,), (0,) * n): Fraction(1)}


def g_element(F):
    n = len(F)
    el = {}
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n)
                  if perm[a] > perm[b])
        key = (tuple(perm), (0,) * n)
        el[key] = el.get(key, Fraction(0)) + (-1) ** inv
    return reduce_el(F, el)


def to_sympy(el, ys):
    total = sp.Integer(0)
    for (word, ye), c in el.items():
        assert word == (), "expected a pure y polynomial"
        term = sp.Rational(c.numerator, c.denominator)
        for m, e in enumerate(ye):
            term *= ys[m] ** e
        total += term
    return sp.expand(total)


def show(name, el):
    def fmt(key):
        word, ye = key
        xs = "".join(f"x{i+1}" for i in word)
        yy = "".join(f"y{m+1}^{e}" if e > 1 else f"y{m+1}"
                     for m, e in enumerate(ye) if e)
        return (yy + "*" + xs).strip("*") if (yy and xs) else (yy or xs or "1")

    parts = [f"{c}*{fmt(k)}" for k, c in sorted(el.items())]
    print(f"{name} = {' + '.join(parts) if parts else '0'}")


# Table ambients with the doubled-Gram convention (F_m)_{ii} = 2 delta.
def ambient(a, b, c):
    F1 = [[2, 0, 0], [0, 0, -a], [0, -a, 0]]
    F2 = [[0, 0, -b], [0, 2, 0], [-b, 0, 0]]
    F3 = [[0, -c, 0], [-c, 0, 0], [0, 0, 2]]
    return [F1, F2, F3]


S = ambient(0, 0, 0)
Sp = ambient(1, 0, 0)
NC = ambient(1, 1, 0)
EC2 = ambient(2, 2, 2)

print("== single rewriting step fixture ==")
show("S' : x3*x2", mul(Sp, gen(3, 2), gen(3, 1)))
# expect -1*x2x3 + -1*y1

print("\n== n=2 canonical central element ==")
F2d = [[[2, 0], [0, 0]], [[0, 0], [0, 2]]]
g2 = g_element(F2d)
show("g", g2)
show("g^2", mul(F2d, g2, g2))
# expect g = 2*x1x2, g^2 = -4*y1y2; c = -1 and det F(y) = 4 y1 y2

print("\n== n=3 ambients: g and the identity g^2 = c det F(y) ==")
y1, y2, y3 = ysym = sp.symbols("y1 y2 y3")
c3 = sp.Rational(-9, 2)
for name, F in [("S", S), ("S'", Sp), ("NC", NC), ("EC(2)", EC2)]:
    g = g_element(F)
    gsq = mul(F, g, g)
    show(f"{name}: g", g)
    show(f"{name}: g^2", gsq)
    pencil = sp.Matrix(3, 3, lambda i, j: sum(
        F[m][i][j] * ysym[m] for m in range(3)))
    det = sp.expand(pencil.det())
    print(f"{name}: det F(y) = {det}")
    assert to_sympy(gsq, ysym) == sp.expand(c3 * det), name
    print(f"{name}: identity g^2 = -9/2 det F(y) PASS")

print("\n== S^(1,1,0): (x1+x2+x3)^2 ==")
lin = {((0,), (0,) * 3): Fraction(1), ((1,), (0,) * 3): Fraction(1),
       ((2,), (0,) * 3): Fraction(1)}
show("square", mul(NC, lin, lin))
# expect 1*y3

print("\n== degenerate (all-zero) F: x_i x_j central ==")
Z = [[[0] * 3 for _ in range(3)] for _ in range(3)]
for i, j in [(0, 1), (0, 2), (1, 2)]:
    e = {((i, j), (0,) * 3): Fraction(1)}
    ok = all(mul(Z, e, gen(3, l)) == mul(Z, gen(3, l), e) for l in range(3))
    print(f"[x{i+1}x{j+1}, x_l] = 0 for all l: {ok}")
    assert ok

print("\n== superpotentials ==")


def sf_relations(F):
    n = len(F)
    rels = []
    for i, j in [(1, 2), (0, 2), (0, 1)]:  # reverse-lex pair order
        C = sp.zeros(n, n)
        C[i, j] += 1
        C[j, i] += 1
        for m in range(n):
            C[m, m] -= F[m][i][j]
        rels.append(C)
    return rels


def superpotential(n, rels):
    nn = n * n
    relmat = sp.Matrix([[rel[a, b] for a in range(n) for b in range(n)]
                        for rel in rels])
    perp = relmat.nullspace()
    N = n ** n
    rows = []

    def flat(digits):
        idx = 0
        for d in digits:
            idx = idx * n + d
        return idx

    import itertools
    for p in range(n - 1):
        for phi in perp:
            for outer in itertools.product(range(n), repeat=n - 2):
                row = [0] * N
                for a in range(n):
                    for b in range(n):
                        if phi[a * n + b] == 0:
                            continue
                        digits, oi = [], 0
                        for slot in range(n):
                            if slot == p:
                                digits.append(a)
                            elif slot == p + 1:
                                digits.append(b)
                            else:
                                digits.append(outer[oi])
                                oi += 1
                        row[flat(digits)] += phi[a * n + b]
                rows.append(row)
    for digits in itertools.product(range(n), repeat=n):
        for p in range(n - 1):
            if digits[p] <= digits[p + 1]:
                continue
            swapped = list(digits)
            swapped[p], swapped[p + 1] = swapped[p + 1], swapped[p]
            row = [0] * N
            row[flat(digits)] += 1
            row[flat(swapped)] -= 1
            rows.append(row)
    null = sp.Matrix(rows).nullspace()
    if not null:
        return None
    assert len(null) == 1, f"intersection dimension {len(null)}"
    w = null[0]
    mult = sp.lcm([sp.fraction(sp.Rational(x))[1] for x in w])
    w = w * mult
    div = sp.gcd([x for x in w if x != 0])
    w = w / div
    first = next(x for x in w if x != 0)
    if first < 0:
        w = -w
    # verify the contractions span the relations
    contr = sp.Matrix([[w[flat(tuple(mu) + (a, b))] for a in range(n)
                        for b in range(n)]
                       for mu in itertools.product(range(n), repeat=n - 2)])
    assert contr.rank() == relmat.rank()
    assert sp.Matrix.vstack(contr, relmat).rank() == relmat.rank()
    return w


import itertools
for name, F in [("S", S), ("S'", Sp), ("NC", NC), ("EC(2)", EC2)]:
    w = superpotential(3, sf_relations(F))
    entries = {}
    for digits in itertools.product(range(3), repeat=3):
        idx = (digits[0] * 3 + digits[1]) * 3 + digits[2]
        if w[idx] != 0:
            entries["".join(str(d + 1) for d in digits)] = w[idx]
    print(f"{name}: w nonzeros = {entries}")

print("\n== no superpotential for R not inside Sym^2 ==")
skew = []
for i, j in [(0, 1), (0, 2), (1, 2)]:
    C = sp.zeros(3, 3)
    C[i, j] = 1
    C[j, i] = -2  # x_i x_j - 2 x_j x_i
    skew.append(C)
w = superpotential(3, skew)
print(f"skew q=2 relations: w = {w}")
assert w is None

print("\n== field extension fixture n=2 ==")
# F1 = diag(2,8): pivot candidates beta in order e1, e2, e1+e2, e1-e2.
# None is a rational square, so the rational run must take the unscaled
# fallback pivot; over Q(sqrt 2) the first candidate is a square.
betas = [2, 8, 2 + 0 + 8, 2 - 0 + 8]  # q^t diag(2,8) q for e1, e2, e1+e2, e1-e2
print(f"candidate betas = {betas}: no rational squares,"
      f" first candidate 2 is a square in Q(sqrt 2)")
assert all(sp.sqrt(abs(b)).is_rational is False for b in betas if b != 0)

print("\nall clifford oracle checks passed")
