#pragma once

#include <vector>

#include "qci/matrix.hpp"
#include "qci/multipoly.hpp"

namespace qci {

using PolyMatrix = Mat<MultiPoly>;

/// Determinant by Bareiss fraction-free elimination: every division along the
/// way is exact, so the computation stays in Q[x] with no coefficient blowup
/// from rational normal forms.
MultiPoly poly_det(PolyMatrix m);

/// All s x s minors of m, ordered lexicographically by (row set, column set)
/// with each index set ascending.  Minors are returned as computed, without
/// normalization or deduplication; ideal-generator cleanup is the caller's
/// concern.
std::vector<MultiPoly> poly_minors(const PolyMatrix& m, int s);

}  // namespace qci
