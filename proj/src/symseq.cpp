#include "qci/symseq.hpp"

#include <utility>

#include "qci/errors.hpp"
#include "qci/multipoly.hpp"

namespace qci {

SymMatrixSeq make_seq(int n, std::vector<Mat<Rational>> mats) {
  if (n < 1 || n > kMaxVars)
    throw SchemaError("matrix size must be between 1 and 7");
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n)
      throw SchemaError("matrix size does not match n");
    if (!is_symmetric(m)) throw SchemaError("matrix is not symmetric");
  }
  return SymMatrixSeq{n, std::move(mats)};
}

bool linearly_independent(const SymMatrixSeq& F) {
  int n = F.n, r = F.r();
  int cols = n * (n + 1) / 2;
  Mat<Rational> flat(r, cols);
  for (int m = 0; m < r; ++m) {
    int c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) flat(m, c++) = F.mats[m](i, j);
  }
  return rank_of(flat) == r;
}

bool is_normalized(const SymMatrixSeq& F) {
  if (F.r() != F.n) return false;
  for (int i = 0; i < F.n; ++i)
    for (int j = 0; j < F.n; ++j)
      if (F.mats[i](j, j) != Rational(i == j ? 2 : 0)) return false;
  return true;
}

namespace {

/// Shared normalization loop.  The induction invariant after stage m is that
/// the diagonal-entry matrix D(i,j) = (F_i)_{jj} restricted to i,j <= m is
/// upper triangular with a nonzero diagonal; the final mixing step
/// M = 2 (D^t)^{-1} then turns D into twice the identity, which only needs D
/// invertible.  When a pivot value is a square in the working field the
/// pivot column is scaled so the stage lands on 1 exactly (the textbook
/// construction); otherwise the unscaled column is used, so the procedure
/// never requires a field extension.  SqrtFn(beta) returns a root of beta in
/// the working field when one exists.
template <class Field, class SqrtFn>
NormalizeResult<Field> normalize_impl(const SymMatrixSeq& input, SqrtFn field_root) {
  const int n = input.n;
  if (input.r() != n)
    throw SchemaError("normalization needs exactly n matrices");

  if (is_normalized(input)) {
    std::vector<Mat<Field>> same;
    for (const auto& m : input.mats) {
      Mat<Field> c(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c(i, j) = Field(m(i, j));
      same.push_back(std::move(c));
    }
    return NormalizeResult<Field>{std::move(same), Mat<Field>::identity(n),
                                  Mat<Field>::identity(n)};
  }

  std::vector<Mat<Field>> f;
  f.reserve(n);
  for (const auto& m : input.mats) {
    Mat<Field> c(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c(i, j) = Field(m(i, j));
    f.push_back(std::move(c));
  }

  Mat<Field> s_total = Mat<Field>::identity(n);
  Mat<Field> p_total = Mat<Field>::identity(n);

  auto apply_s = [&](const Mat<Field>& sigma) {
    std::vector<Mat<Field>> mixed(n, Mat<Field>(n, n));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        if (sigma(i, j) == Field(0)) continue;
        mixed[j] = mixed[j] + sigma(i, j) * f[i];
      }
    f = std::move(mixed);
    s_total = s_total * sigma;
  };
  auto apply_t = [&](const Mat<Field>& q) {
    Mat<Field> qt = q.transpose();
    for (int j = 0; j < n; ++j) f[j] = qt * f[j] * q;
    p_total = p_total * q;
  };

  for (int m = 0; m < n; ++m) {
    // Clear the first m diagonal entries of f[m] with earlier members.
    // f[j] has (f[j])_{ll} = 0 for l < j and (f[j])_{jj} nonzero (1 only when
    // the pivot was a square), so subtracting the right multiple in
    // increasing j keeps settled entries settled.
    for (int j = 0; j < m; ++j) {
      Field c = f[m](j, j);
      if (c == Field(0)) continue;
      Mat<Field> sigma = Mat<Field>::identity(n);
      sigma(j, m) = -c / f[j](j, j);
      apply_s(sigma);
    }

    auto lower_right_zero = [&]() {
      for (int i = m; i < n; ++i)
        for (int j = i; j < n; ++j)
          if (!(f[m](i, j) == Field(0))) return false;
      return true;
    };

    if (lower_right_zero()) {
      bool all_zero = true;
      for (int i = 0; i < n && all_zero; ++i)
        for (int j = 0; j < n; ++j)
          if (!(f[m](i, j) == Field(0))) {
            all_zero = false;
            break;
          }
      if (all_zero)
        throw MathError("matrix sequence is linearly dependent");

      // Shear [[E, R], [0, E]] to push a nonzero entry of the upper blocks
      // into the lower-right block: a cross entry C(i,s) lands on the new
      // diagonal as 2*C(i,s); failing that, an off-diagonal A(i,j) of the
      // upper-left block (whose diagonal is already zero) gives 2*A(i,j).
      Mat<Field> shear = Mat<Field>::identity(n);
      int ci = -1, cs = -1;
      for (int i = 0; i < m && ci < 0; ++i)
        for (int s = m; s < n; ++s)
          if (!(f[m](i, s) == Field(0))) {
            ci = i;
            cs = s;
            break;
          }
      if (ci >= 0) {
        shear(ci, cs) = Field(1);
      } else {
        int ai = -1, aj = -1;
        for (int i = 0; i < m && ai < 0; ++i)
          for (int j = i + 1; j < m; ++j)
            if (!(f[m](i, j) == Field(0))) {
              ai = i;
              aj = j;
              break;
            }
        shear(ai, m) = Field(1);
        shear(aj, m) = Field(1);
      }
      apply_t(shear);
    }

    // Pivot: a vector q with q^t B q = beta a nonzero square, scanning the
    // diagonal first, then paired sums and differences, smallest index first.
    std::vector<std::pair<std::vector<int>, Field>> candidates;
    auto push_candidate = [&](std::vector<int> support_signs) {
      // support_signs[i] = coefficient of e_{m+i}
      Field beta(0);
      int int_size = n - m;
      for (int a = 0; a < int_size; ++a)
        for (int b = 0; b < int_size; ++b)
          if (support_signs[a] != 0 && support_signs[b] != 0)
            beta += Field(support_signs[a]) * Field(support_signs[b]) *
                    f[m](m + a, m + b);
      candidates.emplace_back(std::move(support_signs), beta);
    };
    int block = n - m;
    for (int i = 0; i < block; ++i) {
      std::vector<int> v(block, 0);
      v[i] = 1;
      push_candidate(std::move(v));
    }
    for (int i = 0; i < block; ++i)
      for (int j = i + 1; j < block; ++j) {
        std::vector<int> v(block, 0);
        v[i] = 1;
        v[j] = 1;
        push_candidate(std::move(v));
        v = std::vector<int>(block, 0);
        v[i] = 1;
        v[j] = -1;
        push_candidate(std::move(v));
      }

    const std::vector<int>* chosen = nullptr;
    Field scale(1);
    for (const auto& [support, beta] : candidates) {
      if (beta == Field(0)) continue;
      if (auto root = field_root(beta)) {
        chosen = &support;
        scale = Field(1) / *root;
        break;
      }
      if (!chosen) {
        chosen = &support;  // unscaled fallback, kept unless a square shows up
        scale = Field(1);
      }
    }
    if (!chosen) throw MathError("symmetric block vanished unexpectedly");

    // Build the congruence block: first column q (scaled to land on 1 when
    // beta is a square), the rest the standard basis minus the first
    // supported index, which keeps it square and nonsingular.
    int first_support = 0;
    while ((*chosen)[first_support] == 0) ++first_support;
    Mat<Field> q_full = Mat<Field>::identity(n);
    for (int a = 0; a < block; ++a)
      for (int b = 0; b < block; ++b) q_full(m + a, m + b) = Field(0);
    for (int a = 0; a < block; ++a)
      q_full(m + a, m) = Field((*chosen)[a]) * scale;
    int col = m + 1;
    for (int t = 0; t < block; ++t) {
      if (t == first_support) continue;
      q_full(m + t, col++) = Field(1);
    }
    apply_t(q_full);
  }

  // Final mixing: with D(i,j) = (f_i)_{jj} upper triangular with nonzero
  // diagonal, replacing f_j by sum_i M(i,j) f_i with M = 2 * (D^t)^{-1}
  // makes every diagonal matrix equal to twice the identity.
  Mat<Field> dt(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dt(i, j) = f[j](i, i);
  auto dt_inv = inverse(dt);
  if (!dt_inv) throw MathError("diagonal system unexpectedly singular");
  apply_s(Field(2) * *dt_inv);

  return NormalizeResult<Field>{std::move(f), std::move(s_total),
                                std::move(p_total)};
}

}  // namespace

NormalizeResult<Rational> normalize_seq(const SymMatrixSeq& F) {
  auto root = [](const Rational& beta) { return rational_sqrt(beta); };
  return normalize_impl<Rational>(F, root);
}

NormalizeResult<QuadExt> normalize_seq_ext(const SymMatrixSeq& F, long d) {
  auto root = [d](const QuadExt& beta) { return field_sqrt_in(beta, d); };
  return normalize_impl<QuadExt>(F, root);
}

}  // namespace qci
