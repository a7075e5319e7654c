#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qci/quadext.hpp"
#include "qci/rational.hpp"

namespace qci {

/// Dense univariate polynomial over a field F (Rational or QuadExt).
/// Coefficient i multiplies t^i; the invariant is that the vector is empty
/// (zero polynomial) or its last entry is nonzero.
template <class F>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(F c) {  // NOLINT(google-explicit-constructor)
    if (!(c == F(0))) c_.push_back(std::move(c));
  }
  UniPoly(long c) : UniPoly(F(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly variable() { return UniPoly(std::vector<F>{F(0), F(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  F coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : F(0);
  }
  F leading() const {
    if (is_zero()) throw MathError("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<F>& coeffs() const { return c_; }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    std::vector<F> d;
    for (int i = 1; i < static_cast<int>(c_.size()); ++i)
      d.push_back(F(i) * c_[i]);
    return UniPoly(std::move(d));
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend UniPoly operator+(const UniPoly& x, const UniPoly& y) {
    std::vector<F> s(std::max(x.c_.size(), y.c_.size()), F(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) s[i] = s[i] + x.c_[i];
    for (std::size_t i = 0; i < y.c_.size(); ++i) s[i] = s[i] + y.c_[i];
    return UniPoly(std::move(s));
  }
  friend UniPoly operator-(const UniPoly& x, const UniPoly& y) {
    return x + (-y);
  }
  friend UniPoly operator*(const UniPoly& x, const UniPoly& y) {
    if (x.is_zero() || y.is_zero()) return UniPoly();
    std::vector<F> p(x.c_.size() + y.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i)
      for (std::size_t j = 0; j < y.c_.size(); ++j)
        p[i + j] = p[i + j] + x.c_[i] * y.c_[j];
    return UniPoly(std::move(p));
  }
  friend UniPoly operator*(const F& c, const UniPoly& p) {
    UniPoly r;
    if (c == F(0)) return r;
    r.c_ = p.c_;
    for (auto& pc : r.c_) pc = c * pc;
    return r;
  }
  friend bool operator==(const UniPoly& x, const UniPoly& y) {
    return x.c_ == y.c_;
  }
  friend bool operator!=(const UniPoly& x, const UniPoly& y) {
    return !(x == y);
  }

  /// Euclidean division: returns {quotient, remainder}.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw MathError("polynomial division by zero");
    UniPoly rem = *this;
    std::vector<F> q(std::max(degree() - d.degree() + 1, 0), F(0));
    F lead_inv = F(1) / d.c_.back();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      int shift = rem.degree() - d.degree();
      F factor = rem.c_.back() * lead_inv;
      q[shift] = factor;
      for (int i = 0; i <= d.degree(); ++i)
        rem.c_[shift + i] = rem.c_[shift + i] - factor * d.c_[i];
      rem.trim();
    }
    return {UniPoly(std::move(q)), rem};
  }
  friend UniPoly operator/(const UniPoly& x, const UniPoly& y) {
    return x.divmod(y).first;
  }
  friend UniPoly operator%(const UniPoly& x, const UniPoly& y) {
    return x.divmod(y).second;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return (F(1) / c_.back()) * *this;
  }

  /// True when only even powers of t occur, so p(t) = q(t^2).
  bool is_even() const {
    for (std::size_t i = 1; i < c_.size(); i += 2)
      if (!(c_[i] == F(0))) return false;
    return true;
  }
  /// The q with p(t) = q(t^2); caller must check is_even first.
  UniPoly even_part() const {
    std::vector<F> h;
    for (std::size_t i = 0; i < c_.size(); i += 2) h.push_back(c_[i]);
    return UniPoly(std::move(h));
  }

  std::string str(const std::string& name) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
  }

  std::vector<F> c_;
};

inline std::string scalar_str(const Rational& x) { return rat_str(x); }
inline std::string scalar_str(const QuadExt& x) { return x.str(); }

template <class F>
std::string UniPoly<F>::str(const std::string& name) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i) == F(0)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + scalar_str(coeff(i)) + ")";
    if (i >= 1) out += "*" + name;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
template <class F>
UniPoly<F> poly_gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    UniPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same roots as p, all simple.  Characteristic zero makes
/// this exact for any field used here.
template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& p) {
  if (p.degree() <= 0) return p;
  return (p / poly_gcd(p, p.derivative())).monic();
}

/// Number of distinct roots in the algebraic closure, counted without
/// computing any of them.
template <class F>
int distinct_root_count(const UniPoly<F>& p) {
  if (p.is_zero()) throw MathError("root count of the zero polynomial");
  return squarefree_part(p).degree();
}

/// Distinct roots of a univariate polynomial, each expressed in at most one
/// quadratic extension of Q (different roots may use different extensions).
/// `missed` counts the distinct roots that provably exist in the algebraic
/// closure but fall outside every single quadratic extension, so callers can
/// keep exact point counts even without coordinates.
struct RootSet {
  std::vector<QuadExt> roots;
  int missed = 0;
};

/// Distinct rational roots of p, found by divisor enumeration on the
/// primitive integer form and verified by exact evaluation.
std::vector<Rational> rational_roots(const UniPoly<Rational>& p);

/// Distinct roots of a nonzero rational polynomial (see RootSet).  The
/// extraction cascade is: squarefree reduction, zero-root strip, rational
/// roots, then quadratic formula on what remains; an even remainder recurses
/// on q(t^2).  MathError on the zero polynomial.
RootSet extract_roots(const UniPoly<Rational>& p);

/// Distinct roots of a nonzero polynomial of degree at most 2 whose
/// coefficients lie in Q(sqrt(point_d)), point_d = 0 meaning Q.  When the
/// working field is Q the roots may open one fresh quadratic extension;
/// otherwise they must stay inside Q(sqrt(point_d)), and roots that need a
/// deeper field are reported in `missed`.  Degree 3 or more throws
/// NeedsDeeperExtension, degree 0 has no roots, the zero polynomial is a
/// MathError.
RootSet quadext_roots(const UniPoly<QuadExt>& p, long point_d);

}  // namespace qci
