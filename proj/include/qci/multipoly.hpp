#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qci/rational.hpp"

namespace qci {

/// Packed monomial in up to 7 variables: total degree in the top byte, the
/// exponent of variable i in byte 6-i.  Unsigned comparison of keys is then
/// exactly degree-lexicographic order with x0 > x1 > ... > x6.
using Mono = std::uint64_t;

constexpr int kMaxVars = 7;

Mono mono_make(const std::vector<int>& exps);
Mono mono_var(int var);                        ///< the monomial x_var
int mono_exp(Mono m, int var);
int mono_degree(Mono m);
Mono mono_mul(Mono a, Mono b);                 ///< checked: no byte overflow
bool mono_divides(Mono a, Mono b);             ///< a | b componentwise
Mono mono_div(Mono b, Mono a);                 ///< b / a, assuming a | b

/// Sparse multivariate polynomial over Q with deglex-ordered terms.
/// Invariant: no stored coefficient is zero.  The zero polynomial has an
/// empty term map and degree "minus infinity", reported as an empty optional.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT

  static MultiPoly variable(int var);
  static MultiPoly monomial(const Rational& c, const std::vector<int>& exps);

  bool is_zero() const { return t_.empty(); }
  std::optional<int> degree() const;  ///< empty for the zero polynomial
  bool is_constant() const;
  Rational constant_value() const;   ///< MathError unless degree <= 0
  int nterms() const { return static_cast<int>(t_.size()); }

  const Rational& coeff(Mono m) const;        ///< 0 if absent
  Mono leading_mono() const;                  ///< MathError on zero
  const Rational& leading_coeff() const;      ///< MathError on zero
  const std::map<Mono, Rational>& terms() const { return t_; }

  void add_term(Mono m, const Rational& c);   ///< += c * m

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiPoly& x, const MultiPoly& y) {
    return x.t_ == y.t_;
  }
  friend bool operator!=(const MultiPoly& x, const MultiPoly& y) {
    return !(x == y);
  }

  MultiPoly derivative(int var) const;

  /// Substitutes `value` for variable `var` (exact, all other vars kept).
  MultiPoly substitute(int var, const MultiPoly& value) const;

  /// Evaluation over any field constructible from Rational.
  template <class F>
  F eval(const std::vector<F>& point) const {
    F total(0);
    for (const auto& [m, c] : t_) {
      F term{c};
      for (int v = 0; v < static_cast<int>(point.size()); ++v)
        for (int e = 0; e < mono_exp(m, v); ++e) term *= point[v];
      total += term;
    }
    return total;
  }

  bool is_homogeneous() const;
  MultiPoly homogeneous_part(int d) const;
  int max_var_used() const;  ///< -1 for constants

  /// Exact division; MathError if `q` does not divide this polynomial.
  /// (Internal invariant of fraction-free elimination.)
  MultiPoly exact_div(const MultiPoly& q) const;

  /// Positive gcd of all coefficients (0 for the zero polynomial).
  Rational content() const;
  /// this / content, sign-adjusted so the leading (deglex) coefficient is
  /// positive: the canonical generator of the ideal (p) used in golden files.
  MultiPoly normalized_generator() const;

  /// Coefficients of this polynomial viewed in one variable:
  /// index d holds the coefficient of var^d (a polynomial in the others).
  std::vector<MultiPoly> coeffs_in_var(int var) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::map<Mono, Rational> t_;
};

/// Positive gcd of two rationals: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2).
Rational rat_gcd(const Rational& x, const Rational& y);

}  // namespace qci
