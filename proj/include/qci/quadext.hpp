#pragma once

#include <optional>
#include <string>

#include "qci/rational.hpp"

namespace qci {

/// Element a + b*sqrt(d) of a real or imaginary quadratic extension Q(sqrt d).
///
/// d is a canonical squarefree integer (never 0 or 1 for a genuine radical
/// part); d == 0 marks a pure rational, and the invariant b == 0 <=> d == 0
/// holds after every operation.  Pure rationals mix freely with elements of
/// any one extension; combining two different genuine extensions is a
/// MathError, so a computation stays inside a single Q(sqrt d) as documented.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  QuadExt(long a) : a_(a), b_(0), d_(0) {}                 // NOLINT(google-explicit-constructor)

  /// a + b*sqrt(d); d must be squarefree and not 0 or 1 unless b == 0.
  QuadExt(Rational a, Rational b, long d);

  const Rational& rat() const;  ///< value as a Rational; MathError if b != 0
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return d_ == 0; }

  QuadExt conj() const { return QuadExt(a_, -b_, d_); }
  Rational norm() const { return a_ * a_ - b_ * b_ * d_; }  ///< x * conj(x)

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return (x - y).is_zero();
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  /// Arbitrary strict total order for deterministic sorting (not numeric).
  friend bool operator<(const QuadExt& x, const QuadExt& y);

  std::string str() const;  ///< "3", "1/2*sqrt(2)", "1 - 2/3*sqrt(-1)", ...

 private:
  Rational a_, b_;
  long d_;
};

/// Exact square root inside the *same* field: for a pure rational, a rational
/// root only; for Q(sqrt d) elements, a root in Q(sqrt d) only.  Use
/// quad_sqrt_anywhere to let a rational escape into a fresh extension.
std::optional<QuadExt> field_sqrt(const QuadExt& x);

/// Exact square root inside the *named* field Q(sqrt(field_d)); field_d = 0
/// names Q itself.  Unlike field_sqrt, a pure rational input may pick up the
/// radical: sqrt(2) in Q(sqrt 2) is found even though 2 itself is rational.
/// MathError if x does not lie in the named field.
std::optional<QuadExt> field_sqrt_in(const QuadExt& x, long field_d);

/// Square root of a rational as an element of whatever Q(sqrt d) it needs.
QuadExt quad_sqrt_anywhere(const Rational& x);

}  // namespace qci
