#pragma once

#include <vector>

#include "qci/matrix.hpp"
#include "qci/quadext.hpp"
#include "qci/rational.hpp"

namespace qci {

/// A sequence F = (F_1, ..., F_r) of symmetric n x n rational matrices, the
/// defining data of a graded Clifford algebra (r = n) or of a commutative
/// quadric quotient B(F) (any r <= n).
struct SymMatrixSeq {
  int n = 0;
  std::vector<Mat<Rational>> mats;

  int r() const { return static_cast<int>(mats.size()); }
};

/// Validates shapes and symmetry; n is capped at 7 by the monomial packing.
SymMatrixSeq make_seq(int n, std::vector<Mat<Rational>> mats);

/// Rank test on the r x n(n+1)/2 flattening of the upper triangles.
bool linearly_independent(const SymMatrixSeq& F);

/// True iff the matrix ((F_i)_{jj}) of diagonal entries is twice the
/// identity, which forces y_m = x_m^2 in C(F).  Requires r = n.
bool is_normalized(const SymMatrixSeq& F);

/// The same diagonal test for a sequence over any scalar field.
template <class Field>
bool is_normalized_mats(const std::vector<Mat<Field>>& f) {
  int n = static_cast<int>(f.size());
  for (int i = 0; i < n; ++i) {
    if (f[i].rows() != n || f[i].cols() != n) return false;
    for (int j = 0; j < n; ++j)
      if (!(f[i](j, j) == Field(i == j ? 2 : 0))) return false;
  }
  return true;
}

/// Result of normalization over a field (Rational, or QuadExt when one
/// quadratic extension is allowed).  The witness maps the input to the
/// output by mixing first, congruence second:
///   seq[j] = t_matrix^t * (sum_i s_matrix(i,j) * F_i) * t_matrix.
template <class Field>
struct NormalizeResult {
  std::vector<Mat<Field>> seq;
  Mat<Field> s_matrix;
  Mat<Field> t_matrix;
};

/// Congruence-and-mixing normalization over Q.  Always succeeds on a
/// linearly independent sequence (MathError otherwise): a pivot whose value
/// is a rational square is scaled to land on 1 exactly, and any other pivot
/// enters unscaled, which the final mixing step absorbs.  Already-normalized
/// input returns unchanged with identity witnesses.
NormalizeResult<Rational> normalize_seq(const SymMatrixSeq& F);

/// The same algorithm with scalars in Q(sqrt d): more pivot values are
/// squares there, so the witness can use the radical where the rational run
/// falls back to unscaled pivots.
NormalizeResult<QuadExt> normalize_seq_ext(const SymMatrixSeq& F, long d);

/// Applies a witness to the input sequence (mixing first, congruence
/// second); used by tests and by the CLI to display the verification.
template <class Field>
std::vector<Mat<Field>> apply_witness(const SymMatrixSeq& F,
                                      const Mat<Field>& s_matrix,
                                      const Mat<Field>& t_matrix) {
  int n = F.n;
  std::vector<Mat<Field>> out;
  for (int j = 0; j < F.r(); ++j) {
    Mat<Field> mixed(n, n);
    for (int i = 0; i < F.r(); ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          mixed(a, b) = mixed(a, b) + s_matrix(i, j) * Field(F.mats[i](a, b));
    out.push_back(t_matrix.transpose() * mixed * t_matrix);
  }
  return out;
}

}  // namespace qci
