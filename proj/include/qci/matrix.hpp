#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "qci/errors.hpp"

namespace qci {

/// Dense row-major matrix over any exact ring scalar (Rational, QuadExt,
/// MultiPoly, UniPoly).  Value-semantic container; algorithms that need a
/// field (rref, kernel, inverse) are free function templates below, and the
/// fraction-free polynomial determinants live in polymatrix.hpp.
template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(int rows, int cols, std::vector<T> vals)
      : rows_(rows), cols_(cols), a_(std::move(vals)) {
    if (static_cast<int>(a_.size()) != rows_ * cols_)
      throw SchemaError("matrix literal has wrong number of entries");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return a_[i * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[i * cols_ + j]; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat r(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat r(x.rows_, x.cols_);
    for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw SchemaError("matrix product shape mismatch");
    Mat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        for (int j = 0; j < y.cols_; ++j) r(i, j) = r(i, j) + xik * y(k, j);
      }
    return r;
  }
  friend Mat operator*(const T& c, const Mat& m) {
    Mat r(m.rows_, m.cols_);
    for (std::size_t k = 0; k < m.a_.size(); ++k) r.a_[k] = c * m.a_[k];
    return r;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  int rows_, cols_;
  std::vector<T> a_;
};

template <class T>
bool is_symmetric(const Mat<T>& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

/// In-place reduced row echelon form over a field; returns the rank and,
/// if requested, the pivot columns.  Pivot choice is the first nonzero entry
/// of the leftmost unfinished column, so results are deterministic.
template <class F>
int rref_in_place(Mat<F>& m, std::vector<int>* pivot_cols = nullptr) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (!(m(i, col) == F(0))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    F inv = F(1) / m(rank, col);
    for (int j = col; j < m.cols(); ++j) m(rank, j) = m(rank, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, col) == F(0)) continue;
      F factor = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        m(i, j) = m(i, j) - factor * m(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

template <class F>
int rank_of(Mat<F> m) {
  return rref_in_place(m);
}

/// Basis of the right kernel {v : m v = 0}, one vector per free column of the
/// RREF, with the free coordinate set to 1 (deterministic).
template <class F>
std::vector<std::vector<F>> kernel_basis(Mat<F> m) {
  std::vector<int> pivots;
  int rank = rref_in_place(m, &pivots);
  std::vector<std::vector<F>> basis;
  std::size_t next_pivot = 0;
  for (int col = 0; col < m.cols(); ++col) {
    if (next_pivot < pivots.size() && pivots[next_pivot] == col) {
      ++next_pivot;
      continue;
    }
    std::vector<F> v(m.cols(), F(0));
    v[col] = F(1);
    for (int r = 0; r < rank; ++r) v[pivots[r]] = -m(r, col);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  if (m.rows() != m.cols()) throw SchemaError("inverse of non-square matrix");
  int n = m.rows();
  Mat<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  std::vector<int> pivots;
  rref_in_place(aug, &pivots);
  // The identity half always contributes pivots, so singularity shows up as
  // a pivot escaping into the right block, not as a low rank.
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] >= n)
    return std::nullopt;
  Mat<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace qci
