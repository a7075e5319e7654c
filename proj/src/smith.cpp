#include "qci/smith.hpp"

namespace qci {

namespace {

using P = UniPoly<Rational>;

/// Position of a minimal-degree nonzero entry of m in [t..) x [t..),
/// or {-1, -1} if that block is zero.
std::pair<int, int> min_degree_entry(const Mat<P>& m, int t) {
  int bi = -1, bj = -1, best = -1;
  for (int i = t; i < m.rows(); ++i)
    for (int j = t; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      int d = m(i, j).degree();
      if (best < 0 || d < best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  return {bi, bj};
}

}  // namespace

std::vector<P> invariant_factors(Mat<P> m) {
  std::vector<P> factors;
  int bound = std::min(m.rows(), m.cols());
  for (int t = 0; t < bound; ++t) {
    for (;;) {
      auto [pi, pj] = min_degree_entry(m, t);
      if (pi < 0) {
        // The remaining block is zero; the normal form ends here.
        return factors;
      }
      if (pi != t)
        for (int j = t; j < m.cols(); ++j) std::swap(m(t, j), m(pi, j));
      if (pj != t)
        for (int i = t; i < m.rows(); ++i) std::swap(m(i, t), m(i, pj));

      // Clear the pivot column and row by Euclidean reduction.  Any nonzero
      // remainder has smaller degree than the pivot, so the minimal degree in
      // the block strictly drops and the outer loop terminates.
      bool reduced = false;
      for (int i = t + 1; i < m.rows(); ++i) {
        if (m(i, t).is_zero()) continue;
        P q = m(i, t) / m(t, t);
        for (int j = t; j < m.cols(); ++j) m(i, j) = m(i, j) - q * m(t, j);
        if (!m(i, t).is_zero()) reduced = true;
      }
      for (int j = t + 1; j < m.cols(); ++j) {
        if (m(t, j).is_zero()) continue;
        P q = m(t, j) / m(t, t);
        for (int i = t; i < m.rows(); ++i) m(i, j) = m(i, j) - q * m(i, t);
        if (!m(t, j).is_zero()) reduced = true;
      }
      if (reduced) continue;

      // Divisibility fix-up: the pivot must divide every remaining entry.
      // Adding an offending row to the pivot row re-exposes the remainder.
      bool fixed_up = false;
      for (int i = t + 1; i < m.rows() && !fixed_up; ++i)
        for (int j = t + 1; j < m.cols() && !fixed_up; ++j) {
          if ((m(i, j) % m(t, t)).is_zero()) continue;
          for (int k = t; k < m.cols(); ++k) m(t, k) = m(t, k) + m(i, k);
          fixed_up = true;
        }
      if (!fixed_up) break;
    }
    factors.push_back(m(t, t).monic());
  }
  return factors;
}

}  // namespace qci
