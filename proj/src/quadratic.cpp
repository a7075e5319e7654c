#include "qci/quadratic.hpp"

#include <algorithm>
#include <utility>

#include "qci/clifford.hpp"
#include "qci/errors.hpp"

namespace qci {

namespace {

std::vector<Rational> flatten(const Mat<Rational>& m) {
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Mat<Rational> unflatten(const std::vector<Rational>& v, int n) {
  Mat<Rational> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

/// Stacks flattened n x n tensors as matrix rows.
Mat<Rational> stack_rows(const std::vector<Mat<Rational>>& mats, int n) {
  Mat<Rational> rows(static_cast<int>(mats.size()), n * n);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    auto flat = flatten(mats[k]);
    for (int c = 0; c < n * n; ++c) rows(static_cast<int>(k), c) = flat[c];
  }
  return rows;
}

std::vector<Mat<Rational>> commutator_matrices(int n) {
  std::vector<Mat<Rational>> cs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat<Rational> c(n, n);
      c(i, j) = Rational(1);
      c(j, i) = Rational(-1);
      cs.push_back(std::move(c));
    }
  return cs;
}

bool spans_commutators(const std::vector<Mat<Rational>>& relations, int n) {
  auto cs = commutator_matrices(n);
  Mat<Rational> base = stack_rows(relations, n);
  int base_rank = rank_of(base);
  std::vector<Mat<Rational>> all = relations;
  all.insert(all.end(), cs.begin(), cs.end());
  return rank_of(stack_rows(all, n)) == base_rank;
}

}  // namespace

QuadraticPresentation make_presentation(int n,
                                        std::vector<Mat<Rational>> relations) {
  if (n < 1 || n > kMaxVars)
    throw SchemaError("generator count must be between 1 and " +
                      std::to_string(kMaxVars));
  for (const auto& r : relations)
    if (r.rows() != n || r.cols() != n)
      throw SchemaError("relation matrix has the wrong shape");
  if (!relations.empty()) {
    int rk = rank_of(stack_rows(relations, n));
    if (rk != static_cast<int>(relations.size()))
      throw MathError("relation matrices are linearly dependent");
  }
  bool commutative = spans_commutators(relations, n);
  return QuadraticPresentation{n, commutative, std::move(relations)};
}

QuadraticPresentation quadratic_dual(const QuadraticPresentation& P) {
  int n = P.n;
  std::vector<Mat<Rational>> duals;
  if (P.relations.empty()) {
    // R = 0: the dual relations are the full monomial basis.
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Mat<Rational> e(n, n);
        e(i, j) = Rational(1);
        duals.push_back(std::move(e));
      }
  } else {
    auto kernel = kernel_basis(stack_rows(P.relations, n));
    duals.reserve(kernel.size());
    for (const auto& v : kernel) duals.push_back(unflatten(v, n));
  }
  return make_presentation(n, std::move(duals));
}

QuadraticPresentation build_SF(const SymMatrixSeq& F) {
  return make_presentation(F.n, sf_relation_matrices(F));
}

QuadraticPresentation build_BF(const SymMatrixSeq& F) {
  auto rels = commutator_matrices(F.n);
  for (const auto& fm : F.mats) rels.push_back(fm);
  return make_presentation(F.n, std::move(rels));
}

HilbertEngine::HilbertEngine(const QuadraticPresentation& P,
                             std::vector<Mat<Rational>> quadrics)
    : n_(P.n), rels_(P.relations) {
  for (auto& q : quadrics) {
    if (q.rows() != n_ || q.cols() != n_)
      throw SchemaError("quotient quadric has the wrong shape");
    rels_.push_back(std::move(q));
  }
  h_ = {1, static_cast<long>(n_)};
  // x_a maps the unit of A_0 to the basis vector e_a of A_1 = V.
  std::vector<Mat<Rational>> deg0;
  for (int a = 0; a < n_; ++a) {
    Mat<Rational> col(n_, 1);
    col(a, 0) = Rational(1);
    deg0.push_back(std::move(col));
  }
  mult_.push_back(std::move(deg0));
  echelon_.assign(2, {});
  basis_.assign(2, {});
}

void HilbertEngine::reduce(std::vector<Rational>& v, int d) const {
  for (const auto& row : echelon_[d]) {
    const Rational& c = v[row.pivot];
    if (c == Rational(0)) continue;
    Rational f = c;  // row is normalized with pivot 1
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!(row.v[i] == Rational(0))) v[i] -= f * row.v[i];
  }
}

void HilbertEngine::step() {
  int d = computed_degree() + 1;
  long prev = h_[d - 1];
  long prev2 = h_[d - 2];
  std::size_t width = static_cast<std::size_t>(n_) * prev;
  // 5000 columns keeps the dense exact elimination within seconds; only the
  // free-algebra-sized cases with many generators exceed it.
  if (width > 5000)
    throw MathError("truncation degree too large for the memory budget");

  std::vector<EchelonRow> rows;
  auto insert_row = [&](std::vector<Rational> v) {
    for (auto& row : rows) {
      const Rational c = v[row.pivot];
      if (c == Rational(0)) continue;
      for (std::size_t i = 0; i < width; ++i)
        if (!(row.v[i] == Rational(0))) v[i] -= c * row.v[i];
    }
    int pivot = -1;
    for (std::size_t i = 0; i < width; ++i)
      if (!(v[i] == Rational(0))) {
        pivot = static_cast<int>(i);
        break;
      }
    if (pivot < 0) return;
    Rational inv = Rational(1) / v[pivot];
    for (auto& x : v) x *= inv;
    // Keep the basis fully reduced so quotient coordinates read off directly.
    for (auto& row : rows) {
      const Rational c = row.v[pivot];
      if (c == Rational(0)) continue;
      for (std::size_t i = 0; i < width; ++i)
        if (!(v[i] == Rational(0))) row.v[i] -= c * v[i];
    }
    rows.push_back(EchelonRow{pivot, std::move(v)});
  };

  // The degree-d ideal component modulo V (x) I_{d-1} is spanned by the
  // classes of r (x) u with u running over the A_{d-2} basis: writing
  // r = sum c_ab x_a x_b, the class of r u in V (x) A_{d-1} has block a
  // equal to sum_b c_ab (x_b u).
  for (const auto& rel : rels_) {
    for (long u = 0; u < prev2; ++u) {
      std::vector<Rational> v(width, Rational(0));
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          const Rational& c = rel(a, b);
          if (c == Rational(0)) continue;
          const Mat<Rational>& xb = mult_[d - 2][b];
          for (long t = 0; t < prev; ++t)
            v[static_cast<std::size_t>(a) * prev + t] +=
                c * xb(static_cast<int>(t), static_cast<int>(u));
        }
      insert_row(std::move(v));
    }
  }

  std::sort(rows.begin(), rows.end(),
            [](const EchelonRow& a, const EchelonRow& b) {
              return a.pivot < b.pivot;
            });

  long rank = static_cast<long>(rows.size());
  long hd = static_cast<long>(width) - rank;

  // The free columns of V (x) A_{d-1} index the basis of A_d.
  std::vector<int> free_cols;
  std::vector<int> coord(width, -1);
  {
    std::size_t next = 0;
    for (std::size_t colp = 0; colp < width; ++colp) {
      if (next < rows.size() &&
          rows[next].pivot == static_cast<int>(colp)) {
        ++next;
        continue;
      }
      coord[colp] = static_cast<int>(free_cols.size());
      free_cols.push_back(static_cast<int>(colp));
    }
  }

  // Left multiplication x_a on the A_{d-1} basis: the class of column
  // a*prev + j is the unit vector when free, and minus the free part of its
  // echelon row when pivotal.
  std::vector<Mat<Rational>> maps;
  std::vector<int> pivot_row(width, -1);
  for (std::size_t k = 0; k < rows.size(); ++k)
    pivot_row[rows[k].pivot] = static_cast<int>(k);
  for (int a = 0; a < n_; ++a) {
    Mat<Rational> xa(static_cast<int>(hd), static_cast<int>(prev));
    for (long j = 0; j < prev; ++j) {
      std::size_t colp = static_cast<std::size_t>(a) * prev + j;
      if (coord[colp] >= 0) {
        xa(coord[colp], static_cast<int>(j)) = Rational(1);
      } else {
        const auto& row = rows[pivot_row[colp]].v;
        for (std::size_t c = 0; c < width; ++c)
          if (coord[c] >= 0 && !(row[c] == Rational(0)))
            xa(coord[c], static_cast<int>(j)) = -row[c];
      }
    }
    maps.push_back(std::move(xa));
  }

  h_.push_back(hd);
  mult_.push_back(std::move(maps));
  echelon_.push_back(std::move(rows));
  basis_.push_back(std::move(free_cols));
}

void HilbertEngine::extend_to(int D) {
  if (D < 0) throw SchemaError("negative truncation degree");
  if (D > kMaxHilbertDegree)
    throw SchemaError("truncation degree exceeds the supported bound " +
                      std::to_string(kMaxHilbertDegree));
  while (computed_degree() < D) step();
}

HilbertPrefix HilbertEngine::prefix(int D) const {
  if (D > computed_degree())
    throw SchemaError("prefix requested beyond the computed degree");
  return HilbertPrefix{
      std::vector<long>(h_.begin(), h_.begin() + D + 1)};
}

bool HilbertEngine::certify_central(const Mat<Rational>& w) {
  if (w.rows() != n_ || w.cols() != n_)
    throw SchemaError("quadric has the wrong shape");
  extend_to(3);
  long h2 = h_[2];
  std::size_t width = static_cast<std::size_t>(n_) * h2;
  for (int i = 0; i < n_; ++i) {
    // Class of w x_i - x_i w in V (x) A_2 coordinates.
    std::vector<Rational> v(width, Rational(0));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        const Rational& c = w(a, b);
        if (c == Rational(0)) continue;
        const Mat<Rational>& xb = mult_[1][b];
        for (long t = 0; t < h2; ++t)
          v[static_cast<std::size_t>(a) * h2 + t] +=
              c * xb(static_cast<int>(t), i);
        const Mat<Rational>& xa = mult_[1][a];
        for (long t = 0; t < h2; ++t)
          v[static_cast<std::size_t>(i) * h2 + t] -=
              c * xa(static_cast<int>(t), b);
      }
    reduce(v, 3);
    for (const auto& x : v)
      if (!(x == Rational(0))) return false;
  }
  return true;
}

HilbertPrefix hilbert_truncated(const QuadraticPresentation& P,
                                const std::vector<Mat<Rational>>& quadrics,
                                int D) {
  HilbertEngine engine(P, quadrics);
  engine.extend_to(D);
  return engine.prefix(D);
}

CentralQuadric central_quadric(const QuadraticPresentation& P,
                               Mat<Rational> w) {
  HilbertEngine engine(P);
  if (!engine.certify_central(w))
    throw MathError("quadric is not central in the presentation");
  return CentralQuadric{std::move(w)};
}

Mat<Rational> diagonal_quadric(int n, const std::vector<Rational>& a) {
  if (static_cast<int>(a.size()) != n)
    throw SchemaError("need one coefficient per generator");
  Mat<Rational> w(n, n);
  for (int m = 0; m < n; ++m) w(m, m) = a[m];
  return w;
}

bool is_regular_sequence(const QuadraticPresentation& P,
                         const std::vector<CentralQuadric>& fs, int D) {
  int r = static_cast<int>(fs.size());
  if (D < 2 * r)
    throw SchemaError("truncation degree too small to certify regularity");
  {
    HilbertEngine certifier(P);
    for (const auto& f : fs)
      if (!certifier.certify_central(f.w))
        throw MathError("quadric is not central in the presentation");
  }
  HilbertPrefix ambient = hilbert_truncated(P, {}, D);
  std::vector<Mat<Rational>> quadrics;
  quadrics.reserve(fs.size());
  for (const auto& f : fs) quadrics.push_back(f.w);
  HilbertPrefix quotient = hilbert_truncated(P, quadrics, D);

  // Coefficients of (1 - t^2)^r * H_P(t) through degree D.
  std::vector<long> expected(D + 1, 0);
  std::vector<long> binom(r + 1, 1);
  for (int k = 1; k <= r; ++k) binom[k] = binom[k - 1] * (r - k + 1) / k;
  for (int d = 0; d <= D; ++d)
    for (int k = 0; 2 * k <= d && k <= r; ++k)
      expected[d] += (k % 2 == 0 ? 1 : -1) * binom[k] * ambient.h[d - 2 * k];

  return quotient.h == expected;
}

DualQuotient dual_of_quotient(const QuadraticPresentation& P,
                              const CentralQuadric& f) {
  int n = P.n;
  int r = static_cast<int>(P.relations.size());

  // w must be a proper lift: outside the relation span.
  std::vector<Mat<Rational>> with_w = P.relations;
  with_w.push_back(f.w);
  if (rank_of(stack_rows(with_w, n)) != r + 1)
    throw MathError("quadric lies in the relation span");

  // Greedy lexicographic complement W: extend R + kw to all of V (x) V by
  // monomial vectors e_(i,j), smallest flat index first.
  std::vector<Mat<Rational>> spanning = with_w;
  std::vector<Mat<Rational>> complement;
  for (int p = 0; p < n * n && static_cast<int>(spanning.size()) < n * n;
       ++p) {
    Mat<Rational> mono(n, n);
    mono(p / n, p % n) = Rational(1);
    spanning.push_back(mono);
    if (rank_of(stack_rows(spanning, n)) ==
        static_cast<int>(spanning.size())) {
      complement.push_back(std::move(mono));
    } else {
      spanning.pop_back();
    }
  }

  // (R + W)^perp is one-dimensional and spanned by the dual lift.
  std::vector<Mat<Rational>> rw = P.relations;
  rw.insert(rw.end(), complement.begin(), complement.end());
  auto perp = kernel_basis(stack_rows(rw, n));
  if (perp.size() != 1)
    throw MathError("complement construction failed to isolate the dual");
  Mat<Rational> w_dual = unflatten(perp[0], n);

  QuadraticPresentation quotient_dual =
      quadratic_dual(make_presentation(n, std::move(with_w)));

  // Reconstruction identity: span(R^perp) = span((R + kw)^perp) + k w^dual.
  QuadraticPresentation ambient_dual = quadratic_dual(P);
  std::vector<Mat<Rational>> rebuilt = quotient_dual.relations;
  rebuilt.push_back(w_dual);
  Mat<Rational> stacked_rebuilt = stack_rows(rebuilt, n);
  std::vector<Mat<Rational>> joined = ambient_dual.relations;
  joined.insert(joined.end(), rebuilt.begin(), rebuilt.end());
  bool ok =
      rank_of(stacked_rebuilt) ==
          static_cast<int>(ambient_dual.relations.size()) &&
      rank_of(stack_rows(joined, n)) ==
          static_cast<int>(ambient_dual.relations.size());
  if (!ok) throw MathError("dual reconstruction identity failed");

  CentralQuadric f_dual = central_quadric(quotient_dual, std::move(w_dual));
  return DualQuotient{std::move(quotient_dual), std::move(f_dual)};
}

CliffordDeformation clifford_deformation(const SymMatrixSeq& F,
                                         const std::vector<Rational>& a) {
  if (!is_normalized(F))
    throw MathError("matrix sequence is not normalized");
  Mat<Rational> w = diagonal_quadric(F.n, a);
  central_quadric(build_SF(F), w);

  CliffordDeformation out;
  out.degenerate = true;
  for (const auto& am : a)
    if (!(am == Rational(0))) out.degenerate = false;
  for (int m = 0; m < F.n; ++m) {
    MultiPoly p;
    for (int i = 0; i < F.n; ++i)
      for (int j = 0; j < F.n; ++j) {
        const Rational& c = F.mats[m](i, j);
        if (c == Rational(0)) continue;
        p = p + MultiPoly(c) * MultiPoly::variable(i) * MultiPoly::variable(j);
      }
    p = p - MultiPoly(Rational(2) * a[m]);
    out.system.push_back(std::move(p));
  }
  return out;
}

}  // namespace qci
