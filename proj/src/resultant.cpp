#include "qci/resultant.hpp"

namespace qci {

MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  if (f.is_zero() || g.is_zero()) return MultiPoly();
  std::vector<MultiPoly> fc = f.coeffs_in_var(var);
  std::vector<MultiPoly> gc = g.coeffs_in_var(var);
  int m = static_cast<int>(fc.size()) - 1;
  int n = static_cast<int>(gc.size()) - 1;
  if (m == 0 && n == 0) return MultiPoly(1);
  if (m == 0) {
    MultiPoly r(1);
    for (int i = 0; i < n; ++i) r = r * f;
    return r;
  }
  if (n == 0) {
    MultiPoly r(1);
    for (int i = 0; i < m; ++i) r = r * g;
    return r;
  }
  // Sylvester matrix: n shifted copies of f's coefficients, then m of g's,
  // highest degree first.
  PolyMatrix syl(m + n, m + n);
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) syl(row, row + k) = fc[m - k];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) syl(n + row, row + k) = gc[n - k];
  return poly_det(std::move(syl));
}

UniPoly<Rational> to_unipoly(const MultiPoly& p, int var) {
  std::vector<Rational> coeffs;
  for (const auto& [mono, c] : p.terms()) {
    int e = mono_exp(mono, var);
    if (mono_degree(mono) != e)
      throw MathError("polynomial is not univariate in the requested variable");
    if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, Rational(0));
    coeffs[e] = c;
  }
  return UniPoly<Rational>(std::move(coeffs));
}

UniPoly<QuadExt> eval_except(const MultiPoly& p, int keep_var,
                             const std::map<int, QuadExt>& vals) {
  std::vector<QuadExt> coeffs;
  for (const auto& [mono, c] : p.terms()) {
    QuadExt term{c};
    int e = 0;
    for (int v = 0; v < kMaxVars; ++v) {
      int ev = mono_exp(mono, v);
      if (ev == 0) continue;
      if (v == keep_var) {
        e = ev;
        continue;
      }
      auto it = vals.find(v);
      if (it == vals.end())
        throw MathError("partial evaluation left an unexpected variable");
      for (int k = 0; k < ev; ++k) term *= it->second;
    }
    if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1, QuadExt());
    coeffs[e] += term;
  }
  return UniPoly<QuadExt>(std::move(coeffs));
}

}  // namespace qci
