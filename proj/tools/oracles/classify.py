#!/usr/bin/env python3
"""Independent reference values for the classification pipeline.

For every row of the three-variable classification table this script
computes, with sympy only (no project code):
  * the quadratic dual A^! of the quotient algebra, as the orthogonal
    complement of the relation span under the trace pairing,
  * the symmetric quadric part of A^! (a pencil for r = 1, a single conic
    for r = 2, nothing for r = 3),
  * the Segre symbol of the pencil via determinantal divisors,
  * the base locus of the dual quadrics (point count / line structure),
  * the deformed spectrum counts #K~_f and #K_f for the r = 1 rows.

Run:  python3 tools/oracles/classify.py
"""

import itertools
from fractions import Fraction

import sympy as sp

u1, u2, u3, lam = sp.symbols("u1 u2 u3 lam")
U = [u1, u2, u3]


def ambient(a, b, c):
    return [
        sp.Matrix([[2, 0, 0], [0, 0, -a], [0, -a, 0]]),
        sp.Matrix([[0, 0, -b], [0, 2, 0], [-b, 0, 0]]),
        sp.Matrix([[0, -c, 0], [-c, 0, 0], [0, 0, 2]]),
    ]


def sf_relations(F):
    """Coefficient matrices of x_i x_j + x_j x_i - sum_m (F_m)_ij x_m^2,
    pair order (2,3), (1,3), (1,2)."""
    rels = []
    for (i, j) in [(1, 2), (0, 2), (0, 1)]:
        C = sp.zeros(3, 3)
        C[i, j] = 1
        C[j, i] = 1
        for m in range(3):
            C[m, m] -= F[m][i, j]
        rels.append(C)
    return rels


def square_vector(F, g):
    return [
        g[m] ** 2
        + sum(g[j] * g[k] * F[m][j, k] for j in range(3) for k in range(j + 1, 3))
        for m in range(3)
    ]


def dual_quadrics(F, gs):
    """Symmetric quadric part of (R_SF + sum k diag(a_i))^perp."""
    rows = [list(C) for C in sf_relations(F)]
    for g in gs:
        a = square_vector(F, g)
        rows.append(list(sp.diag(*a)))
    null = sp.Matrix(rows).nullspace()
    mats = [sp.Matrix(3, 3, list(v)) for v in null]
    # commutativity: every commutator E_ij - E_ji must lie in the span
    span = sp.Matrix([list(m) for m in mats])
    for i in range(3):
        for j in range(i + 1, 3):
            comm = sp.zeros(3, 3)
            comm[i, j] = 1
            comm[j, i] = -1
            aug = span.col_join(sp.Matrix([list(comm)]))
            assert span.rank() == aug.rank(), "dual is not commutative"
    sym = sp.Matrix([list((m + m.T) / 2) for m in mats])
    basis = []
    for row in sym.rref()[0].tolist():
        m = sp.Matrix(3, 3, row)
        if not m.is_zero_matrix:
            basis.append(m)
    return basis


def factor_multiplicities(poly):
    """[(irreducible, multiplicity, degree)] of a univariate rational poly."""
    p = sp.Poly(poly, lam)
    out = []
    for f, m in sp.factor_list(p.as_expr())[1]:
        out.append((sp.Poly(f, lam), m, sp.Poly(f, lam).degree()))
    return out


def segre_symbol(G1, G2):
    for (x, y) in [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2)]:
        G = x * G1 + y * G2
        if G.det() != 0:
            Gp = G2 if not (x == 0) else G1
            if (x, y) == (0, 1):
                Gp = G1
            break
    else:
        return "[1,1;;1]"
    M = lam * G - Gp
    D3 = sp.expand(M.det())
    two = [
        M[r, c].det()
        for r in itertools.combinations(range(3), 2)
        for c in itertools.combinations(range(3), 2)
    ]
    D2 = 0
    for t in two:
        D2 = sp.gcd(D2, t)
    D1 = 0
    for e in M:
        D1 = sp.gcd(D1, e)
    d3 = sp.cancel(D3 / D2)
    d2 = sp.cancel(D2 / D1)
    d1 = D1
    groups = []
    for f, m3, deg in factor_multiplicities(d3):
        m2 = 0
        q = sp.Poly(d2, lam)
        while q.degree() >= f.degree():
            quo, rem = sp.div(q, f)
            if rem.is_zero:
                m2 += 1
                q = sp.Poly(quo, lam)
            else:
                break
        m1 = 0
        q = sp.Poly(d1, lam)
        while q.degree() >= f.degree():
            quo, rem = sp.div(q, f)
            if rem.is_zero:
                m1 += 1
                q = sp.Poly(quo, lam)
            else:
                break
        degrees = [d for d in (m3, m2, m1) if d > 0]
        for _ in range(deg):
            groups.append(sorted(degrees, reverse=True))
    groups.sort(key=lambda g: (-sum(g), -len(g)))
    parts = []
    for g in groups:
        if len(g) == 1:
            parts.append(str(g[0]))
        else:
            parts.append("(" + ",".join(str(d) for d in g) + ")")
    return "[" + ",".join(parts) + "]"


def proj_zeros_of_system(forms):
    """Distinct projective common zeros of homogeneous forms in u1,u2,u3.
    Returns 'posdim' or a list of coordinate tuples over QQbar."""
    sols = set()
    # chart u3 = 1 and then the line u3 = 0 with u2 = 1, then the point (1,0,0)
    charts = [(u3, [u1, u2]), (u2, [u1]), (u1, [])]
    fixed = []
    for var, rest in charts:
        subs = {var: 1}
        for f in fixed:
            subs[f] = 0
        sys = [sp.expand(f.subs(subs)) for f in forms]
        if rest and all(s == 0 for s in sys):
            return "posdim"
        if rest:
            try:
                sol = sp.solve(sys, rest, dict=True)
            except Exception:
                sol = None
            if sol is None:
                return "solve-failed"
            for s in sol:
                if any(v not in s for v in rest):
                    return "posdim"
                coord = {u1: None, u2: None, u3: None}
                coord[var] = sp.Integer(1)
                for f in fixed:
                    coord[f] = sp.Integer(0)
                for v in rest:
                    coord[v] = sp.nsimplify(s[v])
                sols.add((coord[u1], coord[u2], coord[u3]))
        else:
            if all(s == 0 for s in sys):
                sols.add((1, 0, 0))
        fixed.append(var)
    return sorted(sols, key=str)


def kf_counts(F, g):
    a = square_vector(F, g)
    script = sp.zeros(3, 3)
    for m in range(3):
        script += F[m] * sp.Symbol(f"y{m}")
    sys = []
    for m in range(3):
        q = sum(F[m][i, j] * U[i] * U[j] for i in range(3) for j in range(3))
        sys.append(sp.expand(q - 2 * a[m]))
    sols = sp.solve(sys, U, dict=True)
    pts = set()
    for s in sols:
        pts.add(tuple(sp.nsimplify(sp.sqrtdenest(sp.radsimp(s[v]))) for v in U))
    # sanity: solutions come in +- pairs
    for p in pts:
        assert tuple(-c for c in p) in pts
    return len(pts), len(pts) // 2, sorted(pts, key=str)


S = ambient(0, 0, 0)
SP = ambient(1, 0, 0)
NC = ambient(1, 1, 0)

ROWS = [
    ("row1  S /(x^2)", S, [[1, 0, 0]]),
    ("row2  S'/(y^2)", SP, [[0, 1, 0]]),
    ("row3  NC/(3x^2+3y^2+4z^2)", NC, [[3, 3, 2]]),
    ("row4  S /(x^2+y^2)", S, [[1, 1, 0]]),
    ("row5  S'/(x^2+y^2+z^2)", SP, [[0, 1, -1]]),
    ("row6  S /(x^2+y^2+z^2)", S, [[1, 1, 1]]),
    ("row7  S /(x^2, y^2)", S, [[1, 0, 0], [0, 1, 0]]),
    ("row8  S /(x^2+y^2, z^2)", S, [[1, 1, 0], [0, 0, 1]]),
    ("row9  S /(x^2+y^2, x^2+z^2)", S, [[1, 1, 0], [1, 0, 1]]),
    ("row10 S /(x^2, y^2, z^2)", S, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
]

for name, F, gs in ROWS:
    print("=" * 72)
    print(name)
    quads = dual_quadrics(F, gs)
    print(f"  dual quadric space dim = {len(quads)} (expect {3 - len(gs)})")
    for q in quads:
        form = sp.expand((sp.Matrix([U]) * q * sp.Matrix(U)).det())
        print(f"    G = {q.tolist()}   form = {form}")
    if len(quads) == 2:
        print(f"  segre = {segre_symbol(quads[0], quads[1])}")
        forms = [
            sp.expand((sp.Matrix([U]) * q * sp.Matrix(U)).det()) for q in quads
        ]
        z = proj_zeros_of_system(forms)
        if isinstance(z, str):
            print(f"  base locus: {z}")
        else:
            print(f"  base locus: {len(z)} points: {z}")
    elif len(quads) == 1:
        print(f"  conic rank = {quads[0].rank()}")
    else:
        print("  no quadrics: E = P^2")
    if len(gs) == 1:
        kt, k, pts = kf_counts(F, gs[0])
        print(f"  #K~_f = {kt}, #K_f = {k}")
        for p in pts:
            print(f"    {p}")
