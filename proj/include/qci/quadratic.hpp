#pragma once

#include <vector>

#include "qci/matrix.hpp"
#include "qci/multipoly.hpp"
#include "qci/rational.hpp"
#include "qci/symseq.hpp"

namespace qci {

/// Quadratic presentation T(V)/(R): dim V = n, R spanned by the given n x n
/// coefficient matrices, each encoding the relation sum_ij c(i,j) x_i (x) x_j.
/// The commutative flag records that every commutator x_i x_j - x_j x_i lies
/// in the relation span, so the presentation defines a commutative algebra.
struct QuadraticPresentation {
  int n = 0;
  bool commutative = false;
  std::vector<Mat<Rational>> relations;
};

/// Validates shapes and linear independence of the relations and detects the
/// commutative flag. Throws SchemaError on malformed input, MathError on a
/// dependent relation list.
QuadraticPresentation make_presentation(int n,
                                        std::vector<Mat<Rational>> relations);

/// Dual presentation T(V*)/(R^perp) under the trace pairing
/// <u_a u_b, x_i x_j> = delta_ai delta_bj, so R^perp is the nullspace of the
/// flattened relation rows. dim R + dim R^perp = n^2 always.
QuadraticPresentation quadratic_dual(const QuadraticPresentation& P);

/// The quadric algebra presentation with relations
/// x_i x_j + x_j x_i - sum_m (F_m)_{ij} x_m^2 for i < j.
QuadraticPresentation build_SF(const SymMatrixSeq& F);

/// The commutative quotient k[u]/(f_1..f_r) with f_m = sum (F_m)_{ij} u_i u_j,
/// presented by the commutators (lexicographic pair order) followed by the
/// f_m in sequence order.
QuadraticPresentation build_BF(const SymMatrixSeq& F);

/// Dimensions h_0..h_D of the graded components of a quadratic algebra.
struct HilbertPrefix {
  std::vector<long> h;
  int truncation() const { return static_cast<int>(h.size()) - 1; }
  friend bool operator==(const HilbertPrefix& a, const HilbertPrefix& b) {
    return a.h == b.h;
  }
};

constexpr int kMaxHilbertDegree = 8;

/// Degreewise exact linear algebra for A = T(V)/(R + extra quadrics).
///
/// Degree d is computed in V (x) A_{d-1} coordinates: the ideal component is
/// spanned by the images of r (x) u over relations r and basis elements u of
/// A_{d-2}, because occurrences of a relation beyond the first slot already
/// vanish in A_{d-1}. The engine keeps a reduced echelon basis of that span
/// and the left multiplication maps x_a: A_{d-1} -> A_d per degree, so the
/// n^d-dimensional free algebra is never materialized.
class HilbertEngine {
 public:
  explicit HilbertEngine(const QuadraticPresentation& P,
                         std::vector<Mat<Rational>> quadrics = {});

  /// Extends the computed prefix through degree D (at most kMaxHilbertDegree).
  void extend_to(int D);

  int computed_degree() const { return static_cast<int>(h_.size()) - 1; }
  const std::vector<long>& dims() const { return h_; }
  HilbertPrefix prefix(int D) const;

  /// Degree-3 centrality certificate: the class of w x_i - x_i w in A_3
  /// vanishes for every generator x_i.
  bool certify_central(const Mat<Rational>& w);

  int n() const { return n_; }

 private:
  struct EchelonRow {
    int pivot;
    std::vector<Rational> v;
  };

  void step();
  /// Reduces v against the degree-d echelon rows in place.
  void reduce(std::vector<Rational>& v, int d) const;

  int n_ = 0;
  std::vector<Mat<Rational>> rels_;
  std::vector<long> h_;
  /// mult_[d][a] is the matrix of x_a: A_d -> A_{d+1}, shaped h_{d+1} x h_d.
  std::vector<std::vector<Mat<Rational>>> mult_;
  /// echelon_[d]: reduced echelon rows of the ideal component of degree d in
  /// V (x) A_{d-1} coordinates (block a holds slot x_a, width h_{d-1}).
  std::vector<std::vector<EchelonRow>> echelon_;
  /// basis_[d]: the free columns of V (x) A_{d-1} that represent A_d.
  std::vector<std::vector<int>> basis_;
};

/// h_d = dim A_d for A = T(V)/(relations of P plus the extra quadrics),
/// d = 0..D. Quadrics must be n x n coefficient matrices.
HilbertPrefix hilbert_truncated(const QuadraticPresentation& P,
                                const std::vector<Mat<Rational>>& quadrics,
                                int D);

/// A central degree-2 class of a presentation, stored as a lift in V (x) V.
struct CentralQuadric {
  Mat<Rational> w;
};

/// Certifies centrality of the lift w in P (degree-3 certificate) and wraps
/// it; throws MathError when the class is not central.
CentralQuadric central_quadric(const QuadraticPresentation& P,
                               Mat<Rational> w);

/// Coefficient matrix of sum_m a_m x_m^2.
Mat<Rational> diagonal_quadric(int n, const std::vector<Rational>& a);

/// Truncated regularity certificate: true iff the quotient Hilbert prefix
/// equals (1 - t^2)^r times the ambient prefix through degree D. The verdict
/// is only valid "through degree D"; a truncation can refute but not prove.
/// Re-certifies centrality of every quadric; requires D >= 2r so the full
/// alternating product still contributes at the top degree.
bool is_regular_sequence(const QuadraticPresentation& P,
                         const std::vector<CentralQuadric>& fs, int D);

/// Quadratic dual of a quotient by one central quadric: for A = T(V)/(R) and
/// central regular f with lift w, returns Q presenting (A/(f))^! and the lift
/// of the distinguished central class f^! with A^! = (A/(f))^!/(f^!).
struct DualQuotient {
  QuadraticPresentation quotient_dual;
  CentralQuadric f_dual;
};

/// Chooses a complement W with V (x) V = kw + R + W by greedy lexicographic
/// extension over the monomial basis, computes the one-dimensional
/// (R + W)^perp = k w^!, and verifies the reconstruction identity
/// span(R^perp) = span((R + kw)^perp) + k w^! before returning.
/// Throws MathError when w lies in the relation span.
DualQuotient dual_of_quotient(const QuadraticPresentation& P,
                              const CentralQuadric& f);

/// The affine system sum_ij (F_m)_{ij} u_i u_j - 2 a_m cutting out the
/// deformed spectrum for the quotient of the quadric algebra of a normalized
/// F by the central quadric sum_m a_m x_m^2. All a_m zero is flagged
/// degenerate: the system is homogeneous and only cuts the origin.
struct CliffordDeformation {
  std::vector<MultiPoly> system;
  bool degenerate = false;
};

CliffordDeformation clifford_deformation(const SymMatrixSeq& F,
                                         const std::vector<Rational>& a);

}  // namespace qci
