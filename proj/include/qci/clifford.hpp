#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qci/matrix.hpp"
#include "qci/multipoly.hpp"
#include "qci/rational.hpp"
#include "qci/symseq.hpp"

namespace qci {

/// Element of the graded Clifford algebra C(F) in its free basis over the
/// central polynomial ring R = k[y_1..y_n]: a finite sum of terms
/// c_S(y) * x_S where S is a strictly increasing subset of generators.
/// The subset is stored as a bitmask (bit i set <=> x_{i+1} present) and the
/// coefficient as a polynomial in the y's (variable m <=> y_{m+1}).
class CliffordElement {
 public:
  explicit CliffordElement(int n);

  static CliffordElement scalar(int n, const Rational& c);
  static CliffordElement generator(int n, int i);    ///< x_{i+1}, 0-based i
  static CliffordElement y_generator(int n, int m);  ///< y_{m+1}, 0-based m
  /// lambda_1 x_1 + ... + lambda_n x_n.
  static CliffordElement linear(int n, const std::vector<Rational>& lambda);

  int n() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<std::uint32_t, MultiPoly>& terms() const { return t_; }

  /// Coefficient of the basis word x_S for the given subset mask (0 if absent).
  const MultiPoly& coeff(std::uint32_t mask) const;
  void add_term(std::uint32_t mask, const MultiPoly& c);

  /// Total grade (|S| + 2 * y-degree) when homogeneous; empty otherwise,
  /// including for the zero element.
  std::optional<int> grade() const;

  CliffordElement operator-() const;
  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement x, const CliffordElement& y) {
    return x += y;
  }
  friend CliffordElement operator-(CliffordElement x, const CliffordElement& y) {
    return x -= y;
  }
  /// Scaling by a central scalar from R = k[y].
  friend CliffordElement operator*(const MultiPoly& c, const CliffordElement& e);
  friend CliffordElement operator*(const Rational& c, const CliffordElement& e) {
    return MultiPoly(c) * e;
  }
  friend bool operator==(const CliffordElement& x, const CliffordElement& y) {
    return x.n_ == y.n_ && x.t_ == y.t_;
  }
  friend bool operator!=(const CliffordElement& x, const CliffordElement& y) {
    return !(x == y);
  }

  std::string str() const;  ///< e.g. "6*x1x2x3", "-4*y1y2 + x1x3"

 private:
  int n_;
  std::map<std::uint32_t, MultiPoly> t_;
};

/// Multiplication context for C(F): the defining sequence plus the linear
/// forms script_f(i,j) = sum_m (F_m)_{ij} y_m fixed at construction.  The
/// multiplication itself is a pure function of its arguments; no products
/// are remembered between calls.
class CliffordAlgebra {
 public:
  /// Requires r = n symmetric matrices (SchemaError otherwise).
  explicit CliffordAlgebra(SymMatrixSeq F);

  int n() const { return seq_.n; }
  const SymMatrixSeq& seq() const { return seq_; }

  const MultiPoly& script_f(int i, int j) const;  ///< sum_m (F_m)_{ij} y_m
  const MultiPoly& half_square(int i) const;      ///< script_f(i,i) / 2

  /// The matrix (script_f(i,j))_{ij} of linear forms, for determinant work.
  Mat<MultiPoly> script_matrix() const;

 private:
  SymMatrixSeq seq_;
  std::vector<MultiPoly> script_;  // row-major n x n
  std::vector<MultiPoly> half_;
};

/// Product in C(F), rewriting every word to the free basis by the relations
/// x_j x_i = -x_i x_j + script_f(i,j) (i < j) and x_i^2 = script_f(i,i)/2.
CliffordElement clifford_mul(const CliffordAlgebra& alg, const CliffordElement& a,
                             const CliffordElement& b);

/// Basis of the degree-2 component of the center, found by solving
/// z x_l = x_l z over the unknown coefficients of a general degree-2 element
/// (all x_i x_j with i < j, and all y_m).  The y_m are always central; for a
/// linearly dependent sequence the answer simply comes out larger.
std::vector<CliffordElement> center_degree2(const CliffordAlgebra& alg);

/// The canonical degree-n central element and its square.
struct CenterElement {
  CliffordElement g;  ///< sum over permutations of sgn(s) x_{s(1)}..x_{s(n)}
  Rational c;         ///< g^2 = c * det(script_f), c = (-1)^(n(n-1)/2) (n!)^2 / 2^n
};

/// Computes the pair above; MathError when det(script_f) = 0, since g is
/// then not regular and the construction degenerates.
CenterElement center_element(const CliffordAlgebra& alg);

/// Coordinates of g^2 in the basis y_1..y_n for a degree-1 element
/// g = sum lambda_i x_i over a normalized sequence: a_m = lambda^t F_m lambda / 2.
/// MathError if g is not of degree 1 or F is not normalized.
std::vector<Rational> square_in_basis(const CliffordElement& g,
                                      const SymMatrixSeq& F);

/// Coefficient matrices of the defining relations of the symmetrized quadric
/// algebra S^F: for each pair i < j (in reverse-lexicographic order, so for
/// n = 3 relation m omits variable m) the matrix C with
///   C(i,j) = C(j,i) = 1,  C(m,m) = -(F_m)_{ij},
/// encoding the relation x_i x_j + x_j x_i - sum_m (F_m)_{ij} x_m^2.
std::vector<Mat<Rational>> sf_relation_matrices(const SymMatrixSeq& F);

/// Dense degree-n tensor w with dw spanning the relations, when one exists.
struct Superpotential {
  int n = 0;
  bool exists = false;
  /// The twist of the Calabi-Yau structure depends on the parity of n; odd n
  /// is the graded-symmetric case.
  bool odd_degree = false;
  /// Row-major tensor of size n^n (first slot most significant); primitive
  /// integer entries with positive first nonzero entry.  Empty when absent.
  std::vector<Rational> w;
};

/// Degree bound above which the dense n^n tensor is refused.
constexpr int kMaxSuperpotentialVars = 4;

/// Solves for w in the intersection of all V^p (x) R (x) V^q (p+q = n-2)
/// with the symmetric tensors, and verifies that the order-(n-2) partial
/// contractions of w span R exactly.  Relations are given by their n x n
/// coefficient matrices (entry (a,b) = coefficient of x_a (x) x_b).
/// Returns exists = false when the intersection is zero; MathError when a
/// candidate exists but fails the span check, or when n exceeds the bound.
Superpotential superpotential_of_relations(int n,
                                           const std::vector<Mat<Rational>>& rels);

/// The same for the relations of S^F.
Superpotential superpotential(const SymMatrixSeq& F);

}  // namespace qci
