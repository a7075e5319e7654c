#include "qci/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "qci/matrix.hpp"
#include "qci/resultant.hpp"
#include "qci/unipoly.hpp"

namespace qci {
namespace {

/// Componentwise scalar equality that is safe across extension fields:
/// distinct squarefree radicands give fields meeting only in Q, so elements
/// with different d are unequal instead of raising the mixed-radical error.
bool same_scalar(const QuadExt& x, const QuadExt& y) {
  return x.d() == y.d() && x.a() == y.a() && x.b() == y.b();
}

int total_degree(const MultiPoly& p) {
  int d = -1;
  for (const auto& term : p.terms()) d = std::max(d, mono_degree(term.first));
  return d;
}

/// Common projective zeros on P^1 of binary forms in variables 0 and 1.
/// Points come back with two coordinates (s : t); positive_dimensional means
/// every form vanishes identically on the line.
ZeroLocus binary_common_zeros(const std::vector<MultiPoly>& forms) {
  ZeroLocus out;
  std::vector<const MultiPoly*> nz;
  for (const MultiPoly& f : forms)
    if (!f.is_zero()) nz.push_back(&f);
  if (nz.empty()) {
    out.positive_dimensional = true;
    return out;
  }
  // Affine chart s = 1: common roots of the dehomogenized polynomials.
  UniPoly<Rational> g;
  bool first = true;
  for (const MultiPoly* f : nz) {
    UniPoly<Rational> b = to_unipoly(f->substitute(0, MultiPoly(1)), 1);
    g = first ? std::move(b) : poly_gcd(g, b);
    first = false;
  }
  if (g.degree() >= 1) {
    RootSet rs = extract_roots(g);
    for (QuadExt& t : rs.roots)
      out.points.push_back(ProjPoint({QuadExt(Rational(1)), std::move(t)}));
    out.missed += rs.missed;
    out.count = static_cast<int>(out.points.size()) + out.missed;
  }
  // The remaining point (0 : 1).
  bool at_infinity = true;
  for (const MultiPoly* f : nz)
    if (f->eval<Rational>({Rational(0), Rational(1)}) != Rational(0)) {
      at_infinity = false;
      break;
    }
  if (at_infinity) {
    out.points.push_back(ProjPoint({QuadExt(Rational(0)), QuadExt(Rational(1))}));
    ++out.count;
  }
  return out;
}

/// Adjugate of a 3x3 polynomial matrix via the cyclic cofactor identity
/// adj(i,j) = m(j+1,i+1) m(j+2,i+2) - m(j+1,i+2) m(j+2,i+1) (indices mod 3),
/// so that adj * m = det(m) * id.
PolyMatrix adjugate3(const PolyMatrix& m) {
  PolyMatrix adj(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  return adj;
}

/// Exact number of distinct affine common zeros of two polynomials in
/// variables 0 and 1, or -1 when they share a factor (one-dimensional
/// intersection).  A shear x0 -> x0 - c x1 makes the projection onto x0
/// injective on the zero set for all but finitely many c: at most one c per
/// point pair aligns two zeros and at most deg f + deg g values degenerate a
/// leading coefficient, so scanning past that bound and taking the largest
/// distinct-root count of the resultant is exact.
int sheared_affine_count(const MultiPoly& f, const MultiPoly& g) {
  long df = total_degree(f), dg = total_degree(g);
  long bezout = df * dg;
  long limit = bezout * (bezout - 1) / 2 + df + dg;
  int best = 0;
  for (long c = 0; c <= limit; ++c) {
    MultiPoly shift =
        MultiPoly::variable(0) - Rational(c) * MultiPoly::variable(1);
    MultiPoly fc = f.substitute(0, shift);
    MultiPoly gc = g.substitute(0, shift);
    auto lead_constant = [](const MultiPoly& p, long dtot) {
      std::vector<MultiPoly> cs = p.coeffs_in_var(1);
      return static_cast<long>(cs.size()) - 1 == dtot &&
             cs.back().max_var_used() < 0;
    };
    if (!lead_constant(fc, df) || !lead_constant(gc, dg)) continue;
    MultiPoly res = sylvester_resultant(fc, gc, 1);
    if (res.is_zero()) return -1;
    best = std::max(best, distinct_root_count(to_unipoly(res, 0)));
  }
  return best;
}

void require_plane_forms(const std::vector<MultiPoly>& forms) {
  for (const MultiPoly& f : forms)
    if (f.max_var_used() > 2)
      throw SchemaError("plane forms must use variables 0..2 only");
}

}  // namespace

ProjPoint::ProjPoint(std::vector<QuadExt> coords) : c(std::move(coords)) {
  if (c.empty()) throw SchemaError("projective point needs coordinates");
  const QuadExt* lead = nullptr;
  for (const QuadExt& x : c)
    if (!x.is_zero()) {
      lead = &x;
      break;
    }
  if (lead == nullptr)
    throw MathError("projective point has all coordinates zero");
  QuadExt scale = *lead;
  for (QuadExt& x : c) x = x / scale;
}

bool operator==(const ProjPoint& x, const ProjPoint& y) {
  if (x.c.size() != y.c.size()) return false;
  for (size_t i = 0; i < x.c.size(); ++i)
    if (!same_scalar(x.c[i], y.c[i])) return false;
  return true;
}

std::string ProjPoint::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << " : ";
    os << c[i].str();
  }
  os << ")";
  return os.str();
}

PolyMatrix multilinearize(const QuadraticPresentation& P) {
  if (static_cast<int>(P.relations.size()) != P.n)
    throw SchemaError("multilinearization needs exactly n relations");
  PolyMatrix m(P.n, P.n);
  for (int k = 0; k < P.n; ++k)
    for (int j = 0; j < P.n; ++j) {
      MultiPoly e;
      for (int i = 0; i < P.n; ++i)
        e += P.relations[k](i, j) * MultiPoly::variable(i);
      m(k, j) = std::move(e);
    }
  return m;
}

GeometricPair geometric_pair(const QuadraticPresentation& P) {
  GeometricPair out;
  out.n = P.n;
  out.m = multilinearize(P);
  MultiPoly det = poly_det(out.m);
  if (det.is_zero())
    throw MathError("det M(x) vanishes identically: no plane curve");
  out.curve = det.normalized_generator();
  return out;
}

bool on_curve(const GeometricPair& pair, const ProjPoint& p) {
  if (static_cast<int>(p.c.size()) != pair.n)
    throw SchemaError("point dimension does not match the curve");
  return pair.curve.eval<QuadExt>(p.c).is_zero();
}

ProjPoint sigma_eval(const GeometricPair& pair, const ProjPoint& p) {
  if (static_cast<int>(p.c.size()) != pair.n)
    throw SchemaError("point dimension does not match the curve");
  Mat<QuadExt> a(pair.n, pair.n);
  for (int k = 0; k < pair.n; ++k)
    for (int j = 0; j < pair.n; ++j)
      a(k, j) = pair.m(k, j).eval<QuadExt>(p.c);
  std::vector<std::vector<QuadExt>> kern = kernel_basis(std::move(a));
  if (kern.empty())
    throw MathError("point " + p.str() + " is not on the curve");
  if (kern.size() > 1)
    throw MathError("non-(G1) point " + p.str() + ": kernel dimension " +
                    std::to_string(kern.size()));
  return ProjPoint(std::move(kern[0]));
}

ProjPoint phi_map(const ProjPoint& p, const ProjPoint& q) {
  if (p.c.size() != q.c.size())
    throw SchemaError("Hadamard product needs points of equal length");
  std::vector<QuadExt> prod(p.c.size());
  bool any = false;
  for (size_t i = 0; i < p.c.size(); ++i) {
    prod[i] = p.c[i] * q.c[i];
    any = any || !prod[i].is_zero();
  }
  if (!any)
    throw MathError("indeterminate image: every coordinate product of " +
                    p.str() + " and " + q.str() + " vanishes");
  return ProjPoint(std::move(prod));
}

VarietyIdeal char_variety(const SymMatrixSeq& F, int s) {
  if (s < 1 || s > F.n) throw SchemaError("minor size must lie in 1..n");
  PolyMatrix script(F.n, F.n);
  for (int i = 0; i < F.n; ++i)
    for (int j = 0; j < F.n; ++j) {
      MultiPoly e;
      for (int m = 0; m < F.n; ++m)
        e += F.mats[m](i, j) * MultiPoly::variable(m);
      script(i, j) = std::move(e);
    }
  VarietyIdeal out;
  out.n = F.n;
  out.s = s;
  for (const MultiPoly& q : poly_minors(script, s)) {
    if (q.is_zero()) continue;
    MultiPoly gen = q.normalized_generator();
    if (std::find(out.gens.begin(), out.gens.end(), gen) == out.gens.end())
      out.gens.push_back(std::move(gen));
  }
  return out;
}

bool vanishes_at(const VarietyIdeal& V, const ProjPoint& p) {
  if (static_cast<int>(p.c.size()) != V.n)
    throw SchemaError("point dimension does not match the ideal");
  for (const MultiPoly& g : V.gens)
    if (!g.eval<QuadExt>(p.c).is_zero()) return false;
  return true;
}

ZeroLocus line_section(const std::vector<MultiPoly>& forms,
                       const std::vector<Rational>& u,
                       const std::vector<Rational>& v) {
  if (u.size() != 3 || v.size() != 3)
    throw SchemaError("line endpoints need 3 coordinates");
  require_plane_forms(forms);
  Mat<Rational> span(2, 3);
  for (int i = 0; i < 3; ++i) {
    span(0, i) = u[i];
    span(1, i) = v[i];
  }
  if (rank_of(span) != 2)
    throw MathError("line endpoints are proportional");
  std::vector<MultiPoly> lin(3);
  for (int i = 0; i < 3; ++i)
    lin[i] = u[i] * MultiPoly::variable(0) + v[i] * MultiPoly::variable(1);
  std::vector<MultiPoly> restricted;
  restricted.reserve(forms.size());
  for (const MultiPoly& f : forms) restricted.push_back(f.eval<MultiPoly>(lin));
  ZeroLocus bin = binary_common_zeros(restricted);
  ZeroLocus out;
  out.positive_dimensional = bin.positive_dimensional;
  out.count = bin.count;
  out.missed = bin.missed;
  for (const ProjPoint& st : bin.points) {
    std::vector<QuadExt> coords(3);
    for (int i = 0; i < 3; ++i)
      coords[i] = QuadExt(u[i]) * st.c[0] + QuadExt(v[i]) * st.c[1];
    out.points.push_back(ProjPoint(std::move(coords)));
  }
  return out;
}

ZeroLocus plane_zeros(const std::vector<MultiPoly>& forms) {
  require_plane_forms(forms);
  ZeroLocus out;
  std::vector<MultiPoly> nz;
  for (const MultiPoly& f : forms)
    if (!f.is_zero()) nz.push_back(f);
  if (nz.empty()) {
    out.positive_dimensional = true;
    return out;
  }
  // Zeros on the line y_3 = 0, found exactly by restriction.
  ZeroLocus inf =
      line_section(nz, {Rational(1), Rational(0), Rational(0)},
                   {Rational(0), Rational(1), Rational(0)});
  if (inf.positive_dimensional) {
    out.positive_dimensional = true;
    return out;
  }
  // Affine chart y_3 = 1 in variables 0 and 1.  A nonzero homogeneous form
  // has a nonzero chart image, so `aff` matches `nz` elementwise.
  std::vector<MultiPoly> aff;
  aff.reserve(nz.size());
  for (const MultiPoly& f : nz) aff.push_back(f.substitute(2, MultiPoly(1)));
  bool chart_empty = false;
  for (const MultiPoly& f : aff)
    if (f.max_var_used() < 0) chart_empty = true;  // nonzero constant
  if (!chart_empty) {
    // Candidate y_1-coordinates: direct constraints from forms free of y_2,
    // resultants for the rest.  Every affine common zero projects to a root
    // of each candidate polynomial, hence of their gcd.
    std::vector<UniPoly<Rational>> cand;
    std::vector<const MultiPoly*> dep;
    for (const MultiPoly& f : aff) {
      if (f.coeffs_in_var(1).size() <= 1)
        cand.push_back(to_unipoly(f, 0));
      else
        dep.push_back(&f);
    }
    for (size_t i = 0; i < dep.size(); ++i)
      for (size_t j = i + 1; j < dep.size(); ++j) {
        MultiPoly r = sylvester_resultant(*dep[i], *dep[j], 1);
        if (!r.is_zero()) cand.push_back(to_unipoly(r, 0));
      }
    if (cand.empty()) {
      // No constraint survives elimination: a single curve, or two forms
      // sharing a factor.  Either way the locus is one-dimensional.  With
      // three or more forms whose pairwise resultants all vanish, finiteness
      // is genuinely undecided by this method, so refuse loudly.
      if (nz.size() <= 2) {
        out.positive_dimensional = true;
        return out;
      }
      throw MathError("plane system is degenerate for resultant elimination");
    }
    UniPoly<Rational> G = cand[0];
    for (size_t i = 1; i < cand.size(); ++i) G = poly_gcd(G, cand[i]);
    if (G.degree() >= 1) {
      RootSet rs = extract_roots(G);
      for (const QuadExt& alpha : rs.roots) {
        // Fiber over y_1 = alpha: common roots in y_2 of every form.
        UniPoly<QuadExt> H;
        bool all_zero = true, no_common = false, started = false;
        for (const MultiPoly& f : nz) {
          UniPoly<QuadExt> fib =
              eval_except(f, 1, {{0, alpha}, {2, QuadExt(Rational(1))}});
          if (fib.is_zero()) continue;
          all_zero = false;
          H = started ? poly_gcd(H, fib) : fib.monic();
          started = true;
          if (H.degree() <= 0) {
            no_common = true;
            break;
          }
        }
        if (all_zero) {
          // The whole vertical line y_1 = alpha lies in the locus.
          out.positive_dimensional = true;
          return out;
        }
        if (no_common) continue;
        int fiber_count = distinct_root_count(H);
        if (H.degree() <= 2) {
          RootSet rr = quadext_roots(H, alpha.d());
          for (QuadExt& beta : rr.roots)
            out.points.push_back(
                ProjPoint({alpha, std::move(beta), QuadExt(Rational(1))}));
          out.missed += rr.missed;
        } else {
          out.missed += fiber_count;
        }
        out.count += fiber_count;
      }
      if (rs.missed > 0) {
        // Some candidate coordinates live beyond a quadratic extension.  For
        // a two-form system the affine count is still exact via a sheared
        // resultant; with more forms the extra constraints cannot be checked
        // on those fibers.
        if (nz.size() == 2) {
          int affine_total = sheared_affine_count(aff[0], aff[1]);
          if (affine_total < 0) {
            out.positive_dimensional = true;
            return out;
          }
          out.count = affine_total;
          out.missed = affine_total - static_cast<int>(out.points.size());
        } else {
          throw NeedsDeeperExtension(
              "count requires fibers over coordinates of degree >= 3");
        }
      }
    }
  }
  out.count += inf.count;
  out.missed += inf.missed;
  for (ProjPoint& p : inf.points) out.points.push_back(std::move(p));
  return out;
}

std::vector<Rational> square_vector(const SymMatrixSeq& F,
                                    const std::vector<Rational>& g) {
  if (static_cast<int>(g.size()) != F.n)
    throw SchemaError("linear form length does not match the family");
  std::vector<Rational> a(F.n, Rational(0));
  for (int m = 0; m < F.n; ++m) {
    a[m] = g[m] * g[m];
    for (int j = 0; j < F.n; ++j)
      for (int k = j + 1; k < F.n; ++k) a[m] += g[j] * g[k] * F.mats[m](j, k);
  }
  return a;
}

QuotientGeometry quotient_geometry(
    const SymMatrixSeq& F, const std::vector<std::vector<Rational>>& gs) {
  if (F.n != 3) throw SchemaError("quotient geometry requires n = 3");
  int r = static_cast<int>(gs.size());
  if (r < 1 || r > 3)
    throw SchemaError("between 1 and 3 quotient linear forms expected");
  for (const auto& g : gs)
    if (g.size() != 3)
      throw SchemaError("each quotient linear form needs 3 coefficients");
  Mat<Rational> gm(r, 3);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < 3; ++j) gm(i, j) = gs[i][j];
  if (rank_of(gm) != r) throw MathError("quotient linear forms are dependent");

  QuotientGeometry out;
  out.r = r;
  out.g = gs;
  for (const auto& g : gs) out.squares.push_back(square_vector(F, g));

  GeometricPair pair = geometric_pair(build_SF(F));

  // E cap V(g_1..g_r): the linear locus is a line, a point or empty.
  std::vector<std::vector<Rational>> xker = kernel_basis(gm);
  std::vector<ProjPoint> base;
  if (xker.size() == 2) {
    ZeroLocus loc = line_section({pair.curve}, xker[0], xker[1]);
    if (loc.positive_dimensional) {
      out.line = true;
      const std::vector<Rational>& u = xker[0];
      const std::vector<Rational>& v = xker[1];
      std::vector<MultiPoly> lin(3);
      for (int i = 0; i < 3; ++i)
        lin[i] = u[i] * MultiPoly::variable(0) + v[i] * MultiPoly::variable(1);
      // Fixed points of sigma on the line: p is fixed iff M(p) p = 0.
      std::vector<MultiPoly> comps(3);
      for (int k = 0; k < 3; ++k) {
        MultiPoly e;
        for (int j = 0; j < 3; ++j)
          e += pair.m(k, j).eval<MultiPoly>(lin) * lin[j];
        comps[k] = std::move(e);
      }
      ZeroLocus fixed = binary_common_zeros(comps);
      out.line_fixed = fixed.positive_dimensional ? -1 : fixed.count;
      // Stability: sigma(p) spans any nonzero adjugate column, and the
      // columns are pairwise proportional on the curve, so the line is
      // sigma-stable iff g annihilates every column that survives
      // restriction.
      PolyMatrix adj = adjugate3(pair.m);
      bool any_column = false, stable = true;
      for (int j = 0; j < 3; ++j) {
        bool column_zero = true;
        MultiPoly combo;
        for (int i = 0; i < 3; ++i) {
          MultiPoly entry = adj(i, j).eval<MultiPoly>(lin);
          if (!entry.is_zero()) column_zero = false;
          combo += gs[0][i] * entry;
        }
        if (column_zero) continue;
        any_column = true;
        if (!combo.is_zero()) stable = false;
      }
      if (!any_column)
        throw MathError("sigma is undefined along the line in E");
      out.line_sigma_stable = stable;
    } else {
      out.base_count = loc.count;
      out.base_missed = loc.missed;
      base = std::move(loc.points);
    }
  } else if (xker.size() == 1) {
    std::vector<QuadExt> coords(3);
    for (int i = 0; i < 3; ++i) coords[i] = QuadExt(xker[0][i]);
    ProjPoint p(std::move(coords));
    if (on_curve(pair, p)) {
      out.base_count = 1;
      base.push_back(std::move(p));
    }
  }

  // E_A = base u sigma(base), with sigma_A as an index involution.  Points
  // counted without coordinates block the closure, so the list stays empty
  // and only the counts above are reported.
  if (!out.line && out.base_missed == 0) {
    out.points = base;
    for (const ProjPoint& p : base) {
      ProjPoint q = sigma_eval(pair, p);
      if (std::find(out.points.begin(), out.points.end(), q) ==
          out.points.end())
        out.points.push_back(std::move(q));
    }
    for (const ProjPoint& p : out.points) {
      ProjPoint q = sigma_eval(pair, p);
      auto it = std::find(out.points.begin(), out.points.end(), q);
      if (it == out.points.end())
        throw MathError("sigma does not stabilize E_A at " + p.str());
      out.sigma.push_back(static_cast<int>(it - out.points.begin()));
    }
  }

  // The y side: X^(s)_A = X^(s)(F) cap V(gtilde_1..gtilde_r), where the
  // gtilde rows are the square vectors.  Dependent rows simply leave a
  // bigger linear locus.
  VarietyIdeal x3v = char_variety(F, 3);
  VarietyIdeal x2v = char_variety(F, 2);
  Mat<Rational> am(r, 3);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < 3; ++j) am(i, j) = out.squares[i][j];
  std::vector<std::vector<Rational>> yker = kernel_basis(am);
  auto count_on = [&yker](const VarietyIdeal& V) -> long {
    if (yker.size() == 3) {
      ZeroLocus z = plane_zeros(V.gens);
      return z.positive_dimensional ? -1 : z.count;
    }
    if (yker.size() == 2) {
      ZeroLocus z = line_section(V.gens, yker[0], yker[1]);
      return z.positive_dimensional ? -1 : z.count;
    }
    if (yker.size() == 1) {
      std::vector<QuadExt> coords(3);
      for (int i = 0; i < 3; ++i) coords[i] = QuadExt(yker[0][i]);
      return vanishes_at(V, ProjPoint(std::move(coords))) ? 1 : 0;
    }
    return 0;
  };
  out.x3 = count_on(x3v);
  out.x2 = count_on(x2v);
  return out;
}

FiberReport fiber_check(const SymMatrixSeq& F, const QuotientGeometry& data) {
  if (data.line) throw MathError("E_A is not finite");
  if (data.base_missed > 0)
    throw MathError("E_A has points without representable coordinates");
  if (data.x3 < 0 || data.x2 < 0)
    throw MathError("characteristic variety counts are not finite");
  GeometricPair pair = geometric_pair(build_SF(F));
  VarietyIdeal x3v = char_variety(F, 3);
  VarietyIdeal x2v = char_variety(F, 2);
  int sz = static_cast<int>(data.points.size());
  if (static_cast<int>(data.sigma.size()) != sz)
    throw MathError("sigma table does not match the point list");

  FiberReport rep;
  std::vector<ProjPoint> phis;
  phis.reserve(sz);
  for (int i = 0; i < sz; ++i) {
    const ProjPoint& p = data.points[i];
    int si = data.sigma[i];
    if (si < 0 || si >= sz || data.sigma[si] != i)
      throw MathError("sigma table is not an involution");
    if (sigma_eval(pair, p) != data.points[si])
      throw MathError("sigma table disagrees with the kernel map at " +
                      p.str());
    ProjPoint phi = phi_map(p, data.points[si]);
    if (!vanishes_at(x3v, phi))
      throw MathError("Phi" + p.str() + " lands off X^(3)");
    for (const auto& a : data.squares) {
      QuadExt val{Rational(0)};
      for (int m = 0; m < 3; ++m) val += QuadExt(a[m]) * phi.c[m];
      if (!val.is_zero())
        throw MathError("Phi" + p.str() + " violates a quotient constraint");
    }
    bool fixed_pt = (si == i);
    if (fixed_pt != vanishes_at(x2v, phi))
      throw MathError("fixed point / X^(2) correspondence fails at " +
                      p.str());
    if (fixed_pt) ++rep.fixed;
    phis.push_back(std::move(phi));
  }

  bool strictly_two = true;
  for (int i = 0; i < sz; ++i) {
    int fiber_size = 0;
    for (int j = 0; j < sz; ++j)
      if (phis[j] == phis[i]) {
        ++fiber_size;
        if (j != i && j != data.sigma[i])
          throw MathError("fiber of Phi exceeds {p, sigma(p)} at " +
                          data.points[i].str());
      }
    int expected = data.sigma[i] == i ? 1 : 2;
    if (fiber_size != expected)
      throw MathError("fiber size mismatch at " + data.points[i].str());
    if (fiber_size != 2) strictly_two = false;
  }

  for (int i = 0; i < sz; ++i) {
    bool seen = false;
    for (int j = 0; j < i; ++j) seen = seen || phis[j] == phis[i];
    if (!seen) ++rep.images;
  }
  if (rep.images != data.x3)
    throw MathError("distinct Phi images disagree with #X^(3)_A");
  if (rep.fixed != data.x2)
    throw MathError("sigma fixed points disagree with #X^(2)_A");
  if (sz != 2 * data.x3 - data.x2)
    throw MathError("#E_A = 2 #X^(3)_A - #X^(2)_A fails");
  rep.two_to_one = strictly_two;
  rep.free_action = (rep.fixed == 0);
  rep.x2_empty = (data.x2 == 0);
  if (rep.two_to_one != rep.free_action || rep.free_action != rep.x2_empty)
    throw MathError("double cover equivalences disagree");
  return rep;
}

bool x2_matches_singular_locus(const SymMatrixSeq& F) {
  if (F.n != 3)
    throw SchemaError("singular locus comparison requires n = 3");
  VarietyIdeal x3v = char_variety(F, 3);
  if (x3v.gens.size() != 1)
    throw MathError("X^(3) is not generated by a single cubic");
  std::vector<MultiPoly> partials;
  for (int v = 0; v < 3; ++v) partials.push_back(x3v.gens[0].derivative(v));
  ZeroLocus sing = plane_zeros(partials);
  ZeroLocus xx = plane_zeros(char_variety(F, 2).gens);
  if (sing.positive_dimensional || xx.positive_dimensional)
    throw MathError("positive-dimensional locus: agreement not certified");
  if (sing.missed > 0 || xx.missed > 0)
    throw MathError(
        "points beyond a quadratic extension: agreement not certified");
  if (sing.count != xx.count) return false;
  for (const ProjPoint& p : sing.points)
    if (std::find(xx.points.begin(), xx.points.end(), p) == xx.points.end())
      return false;
  return true;
}

}  // namespace qci
