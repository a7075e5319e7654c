#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qci/multipoly.hpp"
#include "qci/polymatrix.hpp"
#include "qci/resultant.hpp"
#include "qci/smith.hpp"
#include "qci/unipoly.hpp"

using namespace qci;

namespace {
const MultiPoly X1 = MultiPoly::variable(0);
const MultiPoly X2 = MultiPoly::variable(1);
const MultiPoly X3 = MultiPoly::variable(2);
}  // namespace

TEST_CASE("multivariate arithmetic and ordering") {
  MultiPoly p = (X1 + X2) * (X1 - X2);
  CHECK(p == X1 * X1 - X2 * X2);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK(p.leading_mono() == mono_make({2}));

  MultiPoly q = X1 * X2 * X2 + Rational(3) * X3;
  CHECK(q.derivative(1) == Rational(2) * (X1 * X2));
  CHECK(q.derivative(2) == MultiPoly(3));
  CHECK(q.substitute(1, X1 + MultiPoly(1)) ==
        X1 * (X1 + MultiPoly(1)) * (X1 + MultiPoly(1)) + Rational(3) * X3);
  CHECK(q.eval<Rational>({2, 3, 5}) == 2 * 9 + 15);

  CHECK(MultiPoly().degree() == std::nullopt);
  CHECK((p - p).is_zero());
  CHECK(p.homogeneous_part(2) == p);
  CHECK(p.homogeneous_part(1).is_zero());
}

TEST_CASE("exact division and canonical generators") {
  MultiPoly p = (X1 + X2) * (X1 + X2) * (X1 - X3);
  CHECK(p.exact_div(X1 + X2) == (X1 + X2) * (X1 - X3));
  CHECK_THROWS_AS(p.exact_div(X1 + X3), MathError);

  MultiPoly g = Rational(-2, 3) * (X1 * X1) + Rational(-2, 3) * (X2 * X2);
  // content 2/3, leading coefficient negative: canonical form x1^2 + x2^2.
  CHECK(g.normalized_generator() == X1 * X1 + X2 * X2);
  CHECK(g.content() == Rational(2, 3));
}

TEST_CASE("polynomial determinant") {
  // Oracle: tools/oracles/algebra_core.py, det block.
  PolyMatrix m(3, 3, {MultiPoly(), X3, X2, X3, MultiPoly(), X1, X2, X1,
                      MultiPoly()});
  CHECK(poly_det(m) == Rational(2) * (X1 * X2 * X3));

  PolyMatrix singular(2, 2, {X1, X2, X1, X2});
  CHECK(poly_det(singular).is_zero());

  // 2x2 minors of a 2x3 matrix, lexicographic by column set.
  PolyMatrix wide(2, 3, {X1, X2, X3, MultiPoly(1), MultiPoly(1), MultiPoly(1)});
  auto mins = poly_minors(wide, 2);
  REQUIRE(mins.size() == 3);
  CHECK(mins[0] == X1 - X2);
  CHECK(mins[1] == X1 - X3);
  CHECK(mins[2] == X2 - X3);
}

TEST_CASE("sylvester resultants match the oracle") {
  // Oracle: tools/oracles/algebra_core.py, resultant block.
  MultiPoly f = X1 * X1 + X2 * X2 - MultiPoly(1);
  MultiPoly g = X1 * X2 - MultiPoly(1);
  MultiPoly r = sylvester_resultant(f, g, 1);
  MultiPoly x1sq = X1 * X1;
  CHECK(r == x1sq * x1sq - x1sq + MultiPoly(1));

  // One argument free of the variable: res = f^{deg g}.
  MultiPoly f2 = Rational(2) * x1sq - MultiPoly(2);
  MultiPoly g2 = X1 * X1 + X2 * X2 + X3 * X3 - MultiPoly(4);
  MultiPoly r2 = sylvester_resultant(f2, g2, 2);
  CHECK(r2 == f2 * f2);  // oracle: 4 (x1-1)^2 (x1+1)^2

  // Common-root projection property at x1 = 1: f2 and g2 share (1, u, v)
  // solutions, and indeed r2 vanishes at x1 = 1.
  CHECK(r2.eval<Rational>({1}) == 0);
}

TEST_CASE("univariate division, gcd, squarefree part") {
  using UP = UniPoly<Rational>;
  UP t = UP::variable();
  UP p = (t * t - UP(2)) * (t * t - UP(2)) * (t - UP(1));
  auto [q, rem] = p.divmod(t * t - UP(2));
  CHECK(rem.is_zero());
  CHECK(q == (t * t - UP(2)) * (t - UP(1)));

  CHECK(poly_gcd(p, p.derivative()) == (t * t - UP(2)).monic());
  CHECK(squarefree_part(p) == ((t * t - UP(2)) * (t - UP(1))).monic());

  UP even = t * t * t * t - UP(Rational(5)) * (t * t) + UP(6);
  CHECK(even.is_even());
  CHECK(even.even_part() == t * t - UP(Rational(5)) * t + UP(6));
  CHECK_FALSE(p.is_even());
}

TEST_CASE("distinct root counting") {
  using UP = UniPoly<Rational>;
  UP t = UP::variable();
  CHECK(distinct_root_count(t * t * t - t) == 3);
  CHECK(distinct_root_count((t - UP(1)) * (t - UP(1))) == 1);
  CHECK(distinct_root_count(UP(7)) == 0);
  CHECK_THROWS_AS(distinct_root_count(UP()), MathError);

  // Additivity on coprime products: the factors below share no roots, so the
  // counts add (checked for a mix of square and squarefree factors).
  UP a = (t * t - UP(2)) * (t * t - UP(2));            // 2 distinct
  UP b = (t - UP(1)) * (t - UP(3)) * (t - UP(3));      // 2 distinct
  UP c = t * (t * t + UP(1));                          // 3 distinct
  CHECK(distinct_root_count(a) == 2);
  CHECK(distinct_root_count(b) == 2);
  CHECK(distinct_root_count(c) == 3);
  CHECK(distinct_root_count(a * b) == 4);
  CHECK(distinct_root_count(a * b * c) == 7);

  // A shared root drops the count by the overlap, witnessed by a vanishing
  // resultant of the squarefree parts.
  UP d = (t - UP(1)) * (t + UP(2));
  CHECK(distinct_root_count(b * d) == 3);

  // Random coprime-by-construction pairs: p draws roots from the even
  // integers, q from the odd ones, with random multiplicities, so the
  // counts must add exactly.
  std::mt19937 rng(7341);
  std::uniform_int_distribution<int> pick(0, 4);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    UP p(1), q(1);
    int proots = 0, qroots = 0;
    for (int r = 0; r < 5; ++r) {
      if (pick(rng) < 2) {
        ++proots;
        for (int e = mult(rng); e > 0; --e) p = p * (t - UP(2 * r));
      }
      if (pick(rng) < 2) {
        ++qroots;
        for (int e = mult(rng); e > 0; --e) q = q * (t - UP(2 * r + 1));
      }
    }
    CHECK(distinct_root_count(p) == proots);
    CHECK(distinct_root_count(q) == qroots);
    CHECK(distinct_root_count(p * q) == proots + qroots);
  }
}

TEST_CASE("root extraction cascade") {
  using UP = UniPoly<Rational>;
  UP t = UP::variable();

  // Oracle: tools/oracles/algebra_core.py, roots block.
  SECTION("rational roots of 6t^3 - 11t^2 - 4t + 4") {
    UP p = UP(6) * t * t * t - UP(11) * t * t - UP(4) * t + UP(4);
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 3);  // oracle: 2, 1/2, -2/3
    CHECK(roots[0] == Rational(-2, 3));
    CHECK(roots[1] == Rational(1, 2));
    CHECK(roots[2] == Rational(2));
  }

  SECTION("t^4 - 5t^2 + 6 opens two extensions") {
    RootSet rs = extract_roots(t * t * t * t - UP(5) * (t * t) + UP(6));
    CHECK(rs.missed == 0);
    REQUIRE(rs.roots.size() == 4);  // oracle: +-sqrt(2), +-sqrt(3)
    int d2 = 0, d3 = 0;
    for (const QuadExt& r : rs.roots) {
      if (r.d() == 2) ++d2;
      if (r.d() == 3) ++d3;
      CHECK(r * r * r * r - QuadExt(Rational(5)) * r * r + QuadExt(Rational(6)) ==
            QuadExt());
    }
    CHECK(d2 == 2);
    CHECK(d3 == 2);
  }

  SECTION("repeated factors collapse to distinct roots") {
    UP p = (t * t - UP(2)) * (t * t - UP(2)) * (t - UP(1));
    RootSet rs = extract_roots(p);
    CHECK(rs.missed == 0);
    CHECK(rs.roots.size() == 3);  // oracle: 1, +-sqrt(2)
  }

  SECTION("biquadratic field is honestly out of reach") {
    // Roots +-sqrt(5 +- 2 sqrt 6) = +-(sqrt 2 +- sqrt 3): no single
    // quadratic extension holds any of them.
    RootSet rs = extract_roots(t * t * t * t - UP(10) * (t * t) + UP(1));
    CHECK(rs.roots.empty());
    CHECK(rs.missed == 4);
  }

  SECTION("irreducible cubic is counted, not solved") {
    RootSet rs = extract_roots(t * t * t - UP(2));
    CHECK(rs.roots.empty());
    CHECK(rs.missed == 3);
  }

  SECTION("roots over an extension field") {
    // (t - sqrt2)(t - 3) over Q(sqrt 2).
    QuadExt r2(Rational(0), Rational(1), 2);
    UniPoly<QuadExt> p(std::vector<QuadExt>{r2 * QuadExt(Rational(3)),
                                            -r2 - QuadExt(Rational(3)),
                                            QuadExt(Rational(1))});
    RootSet rs = quadext_roots(p, 2);
    CHECK(rs.missed == 0);
    REQUIRE(rs.roots.size() == 2);

    // t^2 - 2 with the working field Q opens a fresh extension...
    UniPoly<QuadExt> q(std::vector<QuadExt>{QuadExt(Rational(-2)), QuadExt(),
                                            QuadExt(Rational(1))});
    RootSet rs2 = quadext_roots(q, 0);
    CHECK(rs2.roots.size() == 2);
    // ...but inside Q(sqrt 3) the same polynomial has no roots.
    RootSet rs3 = quadext_roots(q, 3);
    CHECK(rs3.roots.empty());
    CHECK(rs3.missed == 2);
  }
}

TEST_CASE("smith invariant factors of a quadric pencil") {
  using UP = UniPoly<Rational>;
  UP lam = UP::variable();
  UP one(1), zero;

  // Oracle: tools/oracles/algebra_core.py, smith block:
  // lam*G' + G for G = Gram(2 u3^2), G' = Gram(u2 u3 - u1^2) doubled,
  // invariant factors 1, lam, lam^2.
  Mat<UP> pencil(3, 3,
                 {UP(-2) * lam, zero, zero, zero, zero, lam, zero, lam, UP(2)});
  auto inv = invariant_factors(pencil);
  REQUIRE(inv.size() == 3);
  CHECK(inv[0] == one);
  CHECK(inv[1] == lam);
  CHECK(inv[2] == lam * lam);

  // Rank-deficient example: a zero row cuts the list short.
  Mat<UP> flat(2, 2, {lam, lam, lam, lam});
  auto inv2 = invariant_factors(flat);
  REQUIRE(inv2.size() == 1);
  CHECK(inv2[0] == lam);
}

TEST_CASE("partial evaluation into a univariate polynomial") {
  MultiPoly p = X1 * X1 * X2 + X2 * X2 - X3;
  UniPoly<QuadExt> u =
      eval_except(p, 1, {{0, QuadExt(Rational(0), Rational(1), 2)},
                         {2, QuadExt(Rational(4))}});
  // x1 = sqrt 2, x3 = 4: p becomes t^2 + 2t - 4 in t = x2.
  CHECK(u.degree() == 2);
  CHECK(u.coeff(2) == QuadExt(Rational(1)));
  CHECK(u.coeff(1) == QuadExt(Rational(2)));
  CHECK(u.coeff(0) == QuadExt(Rational(-4)));

  CHECK(to_unipoly(X1 * X1 - MultiPoly(3), 0).degree() == 2);
  CHECK_THROWS_AS(to_unipoly(X1 * X2, 0), MathError);
}
