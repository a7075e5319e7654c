#!/usr/bin/env python3
"""Independent fixtures for the geometry module, computed with sympy.

Covers, for the three-variable family S^(a,b,c) with doubled-Gram matrices
F1 = [[2,0,0],[0,0,-a],[0,-a,0]], F2 = [[0,0,-b],[0,2,0],[-b,0,0]],
F3 = [[0,-c,0],[-c,0,0],[0,0,2]]:

  1. det M(x) of the multilinearized relations (the point-variety cubic E)
     and det of script-F (the X^(3) cubic), printed factored.  This also
     settles the NC inconsistency: the X^(3) cubic for (1,1,0) has BOTH
     y1^3 and y2^3 terms (the row's (1,0) intersection count only works
     with the full cubic).
  2. The deduplicated content-normalized 2-minor generators per member.
  3. For every classification-table row: the points of E cap V(g_i),
     their sigma images, the resulting E_A list, and the exact counts
     (#X^(3)_A, #X^(2)_A) from the restriction to the dual linear locus.
  4. A fixture whose restricted cubic is irreducible over Q (count-only
     path): ambient (2,2,2), g = y - 3z.

Run: python3 tools/oracles/geometry.py
"""

import itertools
from fractions import Fraction

import sympy as sp

x1, x2, x3, s, t = sp.symbols("x1 x2 x3 s t")
X = (x1, x2, x3)


def family(a, b, c):
    F1 = sp.Matrix([[2, 0, 0], [0, 0, -a], [0, -a, 0]])
    F2 = sp.Matrix([[0, 0, -b], [0, 2, 0], [-b, 0, 0]])
    F3 = sp.Matrix([[0, -c, 0], [-c, 0, 0], [0, 0, 2]])
    return [F1, F2, F3]


def sf_relation_matrices(F):
    """Relation k (pairs (2,3),(1,3),(1,2) one-indexed): C[i,j]=C[j,i]=1,
    C[m,m] = -(F_m)_{ij}."""
    rels = []
    for (i, j) in [(1, 2), (0, 2), (0, 1)]:
        C = sp.zeros(3, 3)
        C[i, j] += 1
        C[j, i] += 1
        for m in range(3):
            C[m, m] -= F[m][i, j]
        rels.append(C)
    return rels


def multilinearize(rels):
    M = sp.zeros(3, 3)
    for k, C in enumerate(rels):
        for j in range(3):
            M[k, j] = sum(C[i, j] * X[i] for i in range(3))
    return M


def script_f(F, ys):
    return sum((F[m] * ys[m] for m in range(3)), sp.zeros(3, 3))


def two_minors(mat):
    """Nine 2x2 minors, content-normalized, deduped, first-occurrence order."""
    gens = []
    for rows in itertools.combinations(range(3), 2):
        for cols in itertools.combinations(range(3), 2):
            m = mat.extract(list(rows), list(cols)).det()
            m = sp.expand(m)
            if m == 0:
                continue
            m = sp.primitive(sp.Poly(m))[1].as_expr()
            if sp.LC(sp.Poly(m)) < 0:
                m = -m
            if m not in gens:
                gens.append(m)
    return gens


def sigma(M, p):
    """Nullspace of M evaluated at p, as a canonical tuple."""
    Mp = M.subs({x1: p[0], x2: p[1], x3: p[2]})
    ns = Mp.nullspace()
    assert len(ns) == 1, (p, ns)
    v = ns[0]
    lead = next(c for c in v if c != 0)
    return tuple(sp.nsimplify(sp.radsimp(c / lead)) for c in v)


def canon(p):
    lead = next(c for c in p if c != 0)
    return tuple(sp.nsimplify(sp.radsimp(sp.simplify(c / lead))) for c in p)


def line_points(forms, basis):
    """Common projective zeros of the restrictions of `forms` to the line
    spanned by basis[0], basis[1].  Returns ('line', None) when every form
    restricts to zero, else (count, points)."""
    u, v = basis
    restricted = []
    for f in forms:
        g = sp.expand(
            f.subs({X[i]: u[i] * s + v[i] * t for i in range(3)},
                   simultaneous=True))
        if g != 0:
            restricted.append(sp.Poly(g, s, t))
    if not restricted:
        return "line", None
    g = restricted[0]
    for h in restricted[1:]:
        g = sp.gcd(g, h)
    gg = g.as_expr()
    roots = sp.solve(sp.Eq(gg.subs(s, 1), 0), t)
    pts = [canon(tuple(u[i] + r * v[i] for i in range(3))) for r in roots]
    if sp.expand(gg.subs(s, 0).subs(t, 1)) == 0:
        pts.append(canon(tuple(v)))
    return len(pts), pts


def kernel_basis(rows):
    A = sp.Matrix(rows)
    return [tuple(v) for v in A.nullspace()]


def square_vector(F, g):
    """a_m with (sum_j g_j x_j)^2 = sum_m a_m x_m^2 in S^F."""
    out = []
    for m in range(3):
        val = g[m] ** 2
        for i, j in [(0, 1), (0, 2), (1, 2)]:
            val += g[i] * g[j] * F[m][i, j]
        out.append(sp.nsimplify(val))
    return out


def row(label, abc, gs):
    F = family(*abc)
    rels = sf_relation_matrices(F)
    M = multilinearize(rels)
    E = sp.factor(M.det())
    y = sp.symbols("y1 y2 y3")
    SF = script_f(F, y)
    X3 = sp.factor(SF.det())
    X2 = two_minors(SF)

    print(f"--- {label}: S^{abc} / g = {gs}")
    basis = kernel_basis([list(g) for g in gs])
    if len(basis) == 2:
        res = line_points([M.det()], basis)
        if res[0] == "line":
            print("  E cap V(g): the whole line (E_A contains a line)")
            base = None
        else:
            base = res[1]
    elif len(basis) == 1:
        p = canon(basis[0])
        base = [p] if M.det().subs(
            {x1: p[0], x2: p[1], x3: p[2]}).equals(0) else []
    else:
        base = []

    if base is not None:
        ea = []
        for p in base:
            for q in (p, sigma(M, p)):
                if q not in ea:
                    ea.append(q)
        print(f"  E cap V(g) = {base}")
        print(f"  E_A ({len(ea)} points) = {ea}")
        pairs = [(i, ea.index(sigma(M, p))) for i, p in enumerate(ea)]
        print(f"  sigma_A as index map: {pairs}")

    a_vecs = [square_vector(F, g) for g in gs]
    print(f"  square vectors (dual linear forms): {a_vecs}")
    ybasis = kernel_basis([list(a) for a in a_vecs])
    ysub = [y[i] for i in range(3)]

    def w_counts(forms):
        if len(ybasis) == 2:
            res = line_points(
                [f.subs(dict(zip(ysub, X)), simultaneous=True) for f in forms],
                ybasis)
            return "inf" if res[0] == "line" else res[0]
        if len(ybasis) == 1:
            q = canon(ybasis[0])
            sub = dict(zip(ysub, q))
            return 1 if all(sp.expand(f.subs(sub)) == 0 for f in forms) else 0
        return 0

    print(f"  (#X3_A, #X2_A) = ({w_counts([SF.det()])}, {w_counts(X2)})")


def main():
    y = sp.symbols("y1 y2 y3")
    print("=== curves and characteristic cubics ===")
    for label, abc in [("S", (0, 0, 0)), ("S'", (1, 0, 0)),
                       ("NC", (1, 1, 0)), ("EC lam=2", (2, 2, 2))]:
        F = family(*abc)
        M = multilinearize(sf_relation_matrices(F))
        SF = script_f(F, y)
        print(f"{label}: det M(x) = {sp.factor(M.det())}")
        print(f"{label}: det scriptF = {sp.expand(SF.det())}")
        print(f"{label}: 2-minors = {two_minors(SF)}")

    print()
    print("=== classification table rows ===")
    row("row 1", (0, 0, 0), [(1, 0, 0)])
    row("row 2", (1, 0, 0), [(0, 1, 0)])
    row("row 3", (1, 1, 0), [(3, 3, 2)])
    row("row 4", (0, 0, 0), [(1, 1, 0)])
    row("row 5", (1, 0, 0), [(0, 1, -1)])
    row("row 6", (0, 0, 0), [(1, 1, 1)])
    row("row 7", (0, 0, 0), [(1, 0, 0), (0, 1, 0)])
    row("row 8", (0, 0, 0), [(1, 1, 0), (0, 0, 1)])
    row("row 9", (0, 0, 0), [(1, 1, 0), (1, 0, 1)])
    row("row 10", (0, 0, 0), [(1, 0, 0), (0, 1, 0), (0, 0, 1)])

    print()
    print("=== count-only fixture: ambient (2,2,2), g = (0,1,-3) ===")
    F = family(2, 2, 2)
    M = multilinearize(sf_relation_matrices(F))
    u, v = kernel_basis([[0, 1, -3]])
    cubic = sp.expand(M.det().subs(
        {X[i]: u[i] * s + v[i] * t for i in range(3)}, simultaneous=True))
    poly = sp.Poly(cubic.subs(s, 1), t)
    print(f"  restricted cubic (s=1): {poly.as_expr()}")
    print(f"  irreducible over Q: {sp.Poly(poly).is_irreducible}")
    sqf = sp.quo(poly, sp.gcd(poly, poly.diff(t)))
    print(f"  distinct root count: {sp.degree(sqf)}"
          f" + at infinity: {int(sp.expand(cubic.subs({s: 0, t: 1})) == 0)}")

    print()
    print("=== sigma fixtures from the geometric-pair table ===")
    for label, abc, pts in [
        ("S", (0, 0, 0), [(1, 1, 0), (1, 0, 1), (0, 1, 1)]),
        ("S'", (1, 0, 0), [(0, 1, 1), (1, 1, sp.Rational(1, 2))]),
        ("NC", (1, 1, 0), [(1, 1, 1), (0, 0, 1), (1, -1, 0)]),
        ("EC lam=2", (2, 2, 2), [(1, -1, 0), (1, 1, 2), (0, 1, -1)]),
    ]:
        F = family(*abc)
        M = multilinearize(sf_relation_matrices(F))
        for p in pts:
            q = sigma(M, p)
            print(f"  {label}: sigma{p} = {q}, sigma^2 back: {sigma(M, q)}")


if __name__ == "__main__":
    main()
