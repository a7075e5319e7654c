#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qci/matrix.hpp"
#include "qci/quadext.hpp"
#include "qci/rational.hpp"
#include "qci/symseq.hpp"

namespace qci {

/// Segre symbol of a pencil of plane conics: one group of elementary-divisor
/// degrees per root of det(lambda G - G'), where G is a nonsingular member.
/// Groups are sorted by descending degree sum, then descending size, and the
/// degrees inside a group descend, so equal symbols compare equal.  A pencil
/// with no nonsingular member carries no root data and is marked degenerate;
/// it prints as the fixed marker "[1,1;;1]".
struct SegreSymbol {
  bool degenerate = false;
  std::vector<std::vector<int>> groups;

  std::string str() const;  ///< "[1,1,1]", "[(2,1)]", "[1,1;;1]", ...

  friend bool operator==(const SegreSymbol& x, const SegreSymbol& y) {
    return x.degenerate == y.degenerate && x.groups == y.groups;
  }
  friend bool operator!=(const SegreSymbol& x, const SegreSymbol& y) {
    return !(x == y);
  }
};

/// Computes the symbol from the determinantal divisors of lambda G - G'.
/// The root multiplicity data is read off the rational factorization degrees,
/// so conjugate irrational roots need no isolation.  SchemaError if either
/// matrix is not symmetric 3x3; MathError if they are linearly dependent.
SegreSymbol segre_symbol(const Mat<Rational>& g1, const Mat<Rational>& g2);

/// Points of the deformed spectrum u with q_m(u) = 2 a_m, where
/// q_m = sum_ij (F_m)_{ij} u_i u_j.  Solutions come in antipodal pairs
/// u, -u; `count` is the number of pairs.  positive_dimensional flags a
/// solution set that resultant elimination shows is not finite (degenerate
/// input: the quadric was not regular).
struct KfSolution {
  bool positive_dimensional = false;
  std::vector<std::vector<QuadExt>> points;
  int count_tilde = 0;
  int count = 0;
};

/// Solves by eliminating u3 then u2 with pairwise resultants and
/// back-substituting every candidate, so extraneous resultant factors never
/// reach the output.  MathError when every a_m is zero (homogeneous system);
/// NeedsDeeperExtension when a point falls outside every single quadratic
/// extension of Q.
KfSolution solve_Kf(const SymMatrixSeq& F, const std::vector<Rational>& a);

/// Base locus of the quadric part of a dual presentation.  Exactly one of
/// the three shapes applies: a pencil (two quadrics, finite count or a
/// positive-dimensional flag), a single conic (rank decides the curve type),
/// or no quadrics at all (the whole plane).
struct DualBaseLocus {
  int quadrics = 0;  ///< 2 = pencil, 1 = single conic, 0 = none
  bool positive_dimensional = false;
  int count = 0;   ///< pencil: exact number of base points
  int missed = 0;  ///< base points beyond a quadratic extension
  int conic_rank = 0;
  std::string description;  ///< "4 points", "double line", "smooth conic", ...
};

/// Pencil base locus via the exact plane solver.  MathError on dependent
/// quadrics, SchemaError on shape violations.
DualBaseLocus base_locus_conics(const Mat<Rational>& q1,
                                const Mat<Rational>& q2);

/// Single-conic locus: rank 1 = double line, 2 = two lines, 3 = smooth
/// conic.  MathError on the zero matrix.
DualBaseLocus conic_locus(const Mat<Rational>& q);

/// The no-quadric locus: all of the plane.
DualBaseLocus plane_locus();

/// One row of the classification of quotients S^F/(g_1^2, .., g_r^2) in
/// three variables.  Counts of -1 encode infinite loci.  The dual-side and
/// smoothness fields are only defined where the theory defines them: segre,
/// kf and smooth require r = 1.
struct ClassificationRecord {
  std::string ambient;  ///< "S", "S'", "NC"
  int r = 0;
  std::vector<std::vector<Rational>> g;
  std::vector<std::string> quadrics;  ///< printed forms of the g_i^2

  bool e_line = false;
  int e_count = -1;
  std::string orbits;  ///< "1 fixed point and 1 two-cycle", "empty", ...
  long x3 = 0;
  long x2 = 0;

  std::optional<SegreSymbol> segre;
  DualBaseLocus dual_locus;
  std::optional<int> kf;
  std::optional<bool> smooth;
};

/// Runs the full pipeline over the ten classification rows (six quotients by
/// one square, three by two squares, one by three).  Verifies on the way
/// that the six r = 1 rows have pairwise distinct (x3, x2) pairs and
/// pairwise distinct Segre symbols, and that the dual presentations are
/// commutative with exactly 3 - r quadrics; MathError on any violation.
std::vector<ClassificationRecord> classify_all();

/// The three finite smoothness criteria evaluated independently:
/// #E_A = 6, (x3, x2) = (3, 0), and #K_f = 4.  They must agree (MathError
/// otherwise) and the verdict is their common value.  SchemaError unless
/// r = 1 with all counts present.
struct SmoothnessEvidence {
  bool by_points = false;
  bool by_counts = false;
  bool by_kf = false;
  bool smooth = false;
};

SmoothnessEvidence smoothness_check(const ClassificationRecord& rec);

/// Census arithmetic recomputed from a record list: the quotient counts per
/// length, and the totals for quadratic complete intersections of length 1
/// and 2, each the sum of a commutative count (equal to the Clifford count
/// of the dual length) and the Clifford count of the same length.
struct Census {
  int clifford_r1 = 0;
  int clifford_r2 = 0;
  int clifford_r3 = 0;
  int total_r1 = 0;  ///< clifford_r2 + clifford_r1 = 3 + 6
  int total_r2 = 0;  ///< clifford_r1 + clifford_r2 = 6 + 3
};

Census census(const std::vector<ClassificationRecord>& records);

/// Canonical JSON rendering of the record list, stable across runs, used
/// for the golden-table comparison and by the command line tool.
std::string classification_json(const std::vector<ClassificationRecord>& records);

}  // namespace qci
