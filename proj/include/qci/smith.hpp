#pragma once

#include <vector>

#include "qci/matrix.hpp"
#include "qci/unipoly.hpp"

namespace qci {

/// Invariant factors d_1 | d_2 | ... | d_r of a matrix over Q[t], monic,
/// in divisibility order, one per nonzero diagonal entry of the Smith normal
/// form.  Zero rows or columns of the normal form are not reported, so r is
/// the rank of the matrix over the fraction field Q(t).
std::vector<UniPoly<Rational>> invariant_factors(Mat<UniPoly<Rational>> m);

}  // namespace qci
