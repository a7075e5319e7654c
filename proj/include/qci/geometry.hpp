#pragma once

#include <string>
#include <vector>

#include "qci/multipoly.hpp"
#include "qci/polymatrix.hpp"
#include "qci/quadext.hpp"
#include "qci/quadratic.hpp"
#include "qci/symseq.hpp"

namespace qci {

/// Point of projective space with exact coordinates in Q or one quadratic
/// extension.  The constructor rescales so the first nonzero coordinate is 1,
/// which makes representatives canonical and comparison exact.
struct ProjPoint {
  std::vector<QuadExt> c;

  explicit ProjPoint(std::vector<QuadExt> coords);

  /// Equality of projective points.  Safe across different extension fields:
  /// coordinates are compared componentwise on the canonical representative,
  /// so elements of Q(sqrt 2) and Q(sqrt 3) simply compare unequal instead of
  /// raising the mixed-radical error of QuadExt arithmetic.
  friend bool operator==(const ProjPoint& x, const ProjPoint& y);
  friend bool operator!=(const ProjPoint& x, const ProjPoint& y) {
    return !(x == y);
  }

  std::string str() const;  ///< "(1 : -1/2 : 0)", "(0 : 1 : sqrt(2))", ...
};

/// Matrix M(x) of linear forms with M(x) (x_1..x_n)^t = the relation list:
/// M(x)_{k,j} = sum_i c_{k,ij} x_i for the k-th relation sum c_{k,ij} x_i x_j.
/// A pair (p, q) is a common zero of the relations iff M(p) q = 0.  Requires
/// exactly n relations (SchemaError otherwise).
PolyMatrix multilinearize(const QuadraticPresentation& P);

/// A quadric algebra with n relations in n variables determines the plane
/// curve E = V(det M(x)) together with the involution sigma sending p to the
/// kernel of M(p).  `curve` stores the canonical generator of (det M).
struct GeometricPair {
  int n = 0;
  PolyMatrix m;
  MultiPoly curve;
};

/// Builds the pair; MathError if det M(x) vanishes identically (the relations
/// do not cut out a plane curve).
GeometricPair geometric_pair(const QuadraticPresentation& P);

bool on_curve(const GeometricPair& pair, const ProjPoint& p);

/// The involution: sigma(p) spans the kernel of M(p).  MathError if p is not
/// on the curve (kernel 0) or the kernel has dimension >= 2, which cannot
/// happen when the input algebra has a well-defined point-pair geometry and
/// is surfaced as "non-(G1) point" for malformed input.
ProjPoint sigma_eval(const GeometricPair& pair, const ProjPoint& p);

/// Coordinatewise (Hadamard) product, canonicalized.  MathError
/// "indeterminate image" if every product vanishes.
ProjPoint phi_map(const ProjPoint& p, const ProjPoint& q);

/// Generators of the s-th characteristic variety X^(s)(F): the s-minors of
/// the matrix of linear forms sum_m (F_m)_{ij} y_m, reduced to canonical
/// generators with duplicates and zeros dropped (first-occurrence order).
struct VarietyIdeal {
  int n = 0;
  int s = 0;
  std::vector<MultiPoly> gens;
};

VarietyIdeal char_variety(const SymMatrixSeq& F, int s);

bool vanishes_at(const VarietyIdeal& V, const ProjPoint& p);

/// A zero-dimensional zero locus, or the flag that the constraints failed to
/// cut down to finitely many points.  `count` is always the exact number of
/// distinct points over the algebraic closure; `points` holds the ones with
/// coordinates in Q or a single quadratic extension and `missed` the rest
/// (count exact, coordinates require an extension of degree >= 3).
struct ZeroLocus {
  bool positive_dimensional = false;
  int count = 0;
  int missed = 0;
  std::vector<ProjPoint> points;
};

/// Common zeros of homogeneous forms (in variables 0..2) on the line through
/// u and v: restricts each form to s*u + t*v and solves the binary forms.
/// positive_dimensional means every restriction vanishes identically, i.e.
/// the whole line lies in the locus.
ZeroLocus line_section(const std::vector<MultiPoly>& forms,
                       const std::vector<Rational>& u,
                       const std::vector<Rational>& v);

/// Common zeros in the projective plane of homogeneous forms in variables
/// 0..2, via resultant elimination chartwise.  Shared one-dimensional
/// components are reported through positive_dimensional.  For systems of
/// three or more forms whose elimination polynomial has an irreducible factor
/// of degree >= 3 the fiber sizes cannot be certified and
/// NeedsDeeperExtension is thrown; two-form systems are always counted
/// exactly (a sheared resultant bounds the projection degree).
ZeroLocus plane_zeros(const std::vector<MultiPoly>& forms);

/// Coefficient vector a with g^2 = sum_m a_m x_m^2 in the quadric algebra of
/// F, for a linear form g = sum_i g_i x_i:
///   a_m = g_m^2 + sum_{j<k} g_j g_k (F_m)_{jk}.
std::vector<Rational> square_vector(const SymMatrixSeq& F,
                                    const std::vector<Rational>& g);

/// Geometry of the quotient by central squares g_1^2, .., g_r^2: the point
/// set E_A = (E cap V(g)) u sigma(E cap V(g)) with the restricted involution,
/// and the counts of the characteristic varieties of the quotient,
/// X^(s)_A = X^(s)(F) cap V(gtilde), where gtilde_i = sum_m a_im y_m comes
/// from the square vectors.  A count of -1 encodes an infinite locus.
struct QuotientGeometry {
  int r = 0;
  std::vector<std::vector<Rational>> g;
  std::vector<std::vector<Rational>> squares;

  /// E cap V(g) is a whole line inside E (possible only for r = 1).  Then
  /// `points` and `sigma` stay empty; line_fixed counts the sigma-fixed
  /// points on the line (-1 if sigma fixes it pointwise) and
  /// line_sigma_stable records whether sigma maps the line to itself.
  bool line = false;
  int line_fixed = 0;
  bool line_sigma_stable = false;

  /// Exact size of E cap V(g) and how many of its points lack coordinates in
  /// a single quadratic extension.  When base_missed > 0 the closure under
  /// sigma cannot be enumerated, so `points` and `sigma` stay empty.
  int base_count = 0;
  int base_missed = 0;

  /// E_A as a canonical point list and sigma_A as an index involution:
  /// sigma_A(points[i]) = points[sigma[i]].
  std::vector<ProjPoint> points;
  std::vector<int> sigma;

  long x3 = 0;
  long x2 = 0;
};

/// Requires n = 3 and 1 <= r <= 3 linearly independent linear forms
/// (coefficient vectors of length 3).  MathError on dependent forms.
QuotientGeometry quotient_geometry(const SymMatrixSeq& F,
                                   const std::vector<std::vector<Rational>>& gs);

/// Double-cover diagnostics for a finite E_A.  Verifies, and throws MathError
/// on any internal inconsistency (these indicate a bug, not bad input):
///   - Phi(E_A) lies in X^(3)_A and hits exactly x3 distinct points,
///   - each fiber of Phi is {p, sigma(p)},
///   - sigma(p) = p exactly when Phi(p) lies on X^(2)_A, with x2 fixed points,
///   - #E_A = 2*x3 - x2,
///   - "strictly 2-to-1", "sigma acts freely" and "X^(2)_A empty" agree.
struct FiberReport {
  int images = 0;
  int fixed = 0;
  bool two_to_one = false;
  bool free_action = false;
  bool x2_empty = false;
};

FiberReport fiber_check(const SymMatrixSeq& F, const QuotientGeometry& data);

/// Computes the singular locus of the cubic X^(3)(F) (common zeros of its
/// partial derivatives) and the point set X^(2)(F) independently and reports
/// whether they agree as finite point sets.  MathError if either locus is
/// positive-dimensional or has points beyond a quadratic extension, since
/// agreement could not be certified pointwise in that case.
bool x2_matches_singular_locus(const SymMatrixSeq& F);

}  // namespace qci
