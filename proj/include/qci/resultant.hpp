#pragma once

#include <map>

#include "qci/multipoly.hpp"
#include "qci/polymatrix.hpp"
#include "qci/quadext.hpp"
#include "qci/unipoly.hpp"

namespace qci {

/// Resultant of f and g with respect to `var`, as the determinant of the
/// Sylvester matrix over Q[remaining variables].  Conventions for the edge
/// cases: if either polynomial is zero the resultant is zero; if both have
/// degree 0 in `var` it is 1 (empty matrix); if exactly one does, say g,
/// then res(f, g) = g^{deg f}.  The projection property used downstream only
/// needs: a common zero of f and g forces the resultant to vanish there.
MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// View a polynomial that mentions only `var` as a dense univariate one.
/// Throws MathError if any other variable occurs.
UniPoly<Rational> to_unipoly(const MultiPoly& p, int var);

/// Partial evaluation: substitute the (variable -> value) entries of `vals`,
/// leaving `keep_var` as the indeterminate.  Throws MathError if a variable
/// outside vals + keep_var occurs.
UniPoly<QuadExt> eval_except(const MultiPoly& p, int keep_var,
                             const std::map<int, QuadExt>& vals);

}  // namespace qci
