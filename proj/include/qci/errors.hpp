#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qci {

/// Input violates the documented schema or a structural precondition:
/// wrong JSON shapes, unknown keys, asymmetric matrices where symmetric
/// ones are required, out-of-range sizes.  The CLI maps this to exit code 2.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition fails: linearly dependent matrix sequence,
/// singular matrix where a unit is required, non-central quadric, and so on.
/// The CLI maps this to exit code 3.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A pivot or root needs a square root that does not exist in the current
/// scalar field.  `d` is the witness value whose square root is missing, so
/// the caller can retry the computation over Q(sqrt(d)).
class NeedsFieldExtension : public MathError {
 public:
  NeedsFieldExtension(const std::string& what, mpq_class witness)
      : MathError(what), d(std::move(witness)) {}

  mpq_class d;
};

/// Root extraction hit an irreducible factor whose roots are not expressible
/// in a single quadratic extension of Q.  Counts that do not require
/// coordinates are still reported exactly elsewhere; this error fires only
/// when explicit coordinates (needed e.g. for back-substitution screening)
/// cannot be produced.
class NeedsDeeperExtension : public MathError {
 public:
  using MathError::MathError;
};

/// The quadric pencil is identically singular.  Segre classification catches
/// this and emits the degenerate-pencil marker symbol instead.
class DegeneratePencil : public MathError {
 public:
  using MathError::MathError;
};

}  // namespace qci
