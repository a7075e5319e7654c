#include "qci/polymatrix.hpp"

namespace qci {

MultiPoly poly_det(PolyMatrix m) {
  if (m.rows() != m.cols()) throw SchemaError("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return MultiPoly(1);
  bool negate = false;
  MultiPoly prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      int r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return MultiPoly();
      for (int j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)).exact_div(prev);
      m(i, k) = MultiPoly();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

namespace {

/// Ascending index subsets of {0..n-1} of size s, in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(s);
  for (int i = 0; i < s; ++i) cur[i] = i;
  if (s > n) return out;
  while (true) {
    out.push_back(cur);
    int i = s - 1;
    while (i >= 0 && cur[i] == n - s + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < s; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<MultiPoly> poly_minors(const PolyMatrix& m, int s) {
  if (s < 1 || s > m.rows() || s > m.cols())
    throw SchemaError("minor size out of range");
  std::vector<MultiPoly> out;
  for (const auto& rows : subsets(m.rows(), s))
    for (const auto& cols : subsets(m.cols(), s)) {
      PolyMatrix sub(s, s);
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) sub(i, j) = m(rows[i], cols[j]);
      out.push_back(poly_det(sub));
    }
  return out;
}

}  // namespace qci
