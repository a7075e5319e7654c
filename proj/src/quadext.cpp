#include "qci/quadext.hpp"

#include <sstream>

namespace qci {
namespace {

/// Common field of two elements: 0 if both rational, else the single
/// genuine d present; mixing two different radicals is an error.
long merge_d(long x, long y) {
  if (x == y) return x;
  if (x == 0) return y;
  if (y == 0) return x;
  throw MathError("mixing elements of Q(sqrt " + std::to_string(x) + ") and Q(sqrt " +
                  std::to_string(y) + ")");
}

}  // namespace

QuadExt::QuadExt(Rational a, Rational b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (sgn(b_) == 0) {
    d_ = 0;
  } else if (d_ == 0 || d_ == 1) {
    throw MathError("QuadExt radicand must be a squarefree integer != 0, 1");
  }
}

const Rational& QuadExt::rat() const {
  if (d_ != 0) throw MathError("value " + str() + " is not rational");
  return a_;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  long d = merge_d(d_, o.d_);
  a_ += o.a_;
  b_ += o.b_;
  d_ = sgn(b_) == 0 ? 0 : d;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  long d = merge_d(d_, o.d_);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = sgn(b_) == 0 ? 0 : d;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  long d = merge_d(d_, o.d_);
  Rational na = a_ * o.a_ + b_ * o.b_ * d;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = sgn(b_) == 0 ? 0 : d;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw MathError("division by zero");
  // 1/(a + b sqrt d) = conj / norm; the norm of a nonzero element is nonzero
  // because d is not a rational square.
  Rational n = o.norm();
  QuadExt inv(o.a_ / n, -o.b_ / n, o.d_);
  return *this *= inv;
}

bool operator<(const QuadExt& x, const QuadExt& y) {
  if (x.d_ != y.d_) return x.d_ < y.d_;
  int c = cmp(x.a_, y.a_);
  if (c != 0) return c < 0;
  return cmp(x.b_, y.b_) < 0;
}

std::string QuadExt::str() const {
  if (d_ == 0) return rat_str(a_);
  std::ostringstream out;
  bool have_a = sgn(a_) != 0;
  if (have_a) out << rat_str(a_);
  if (sgn(b_) > 0 && have_a) out << " + ";
  if (sgn(b_) < 0) out << (have_a ? " - " : "-");
  Rational babs = abs(b_);
  if (babs != 1) out << rat_str(babs) << "*";
  out << "sqrt(" << d_ << ")";
  return out.str();
}

std::optional<QuadExt> field_sqrt_in(const QuadExt& x, long field_d) {
  if (x.d() != 0 && x.d() != field_d)
    throw MathError("value " + x.str() + " is not in Q(sqrt " +
                    std::to_string(field_d) + ")");
  if (x.is_zero()) return QuadExt();
  if (x.is_rational()) {
    // Rational value: sqrt exists in Q(sqrt d) iff x = r^2 or x = r^2 d.
    if (auto r = rational_sqrt(x.rat())) return QuadExt(*r);
    if (field_d != 0)
      if (auto r = rational_sqrt(x.rat() / field_d))
        return QuadExt(0, *r, field_d);
    return std::nullopt;
  }
  // (p + q sqrt d)^2 = x with q = b/(2p) forces p^2 in
  // { (a + sqrt(a^2 - b^2 d))/2, (a - sqrt(a^2 - b^2 d))/2 }.
  auto disc = rational_sqrt(x.norm());
  if (!disc) return std::nullopt;
  for (int s : {+1, -1}) {
    Rational p2 = (x.a() + s * *disc) / 2;
    if (auto p = rational_sqrt(p2)) {
      if (sgn(*p) == 0) continue;
      return QuadExt(*p, x.b() / (2 * *p), x.d());
    }
  }
  return std::nullopt;
}

std::optional<QuadExt> field_sqrt(const QuadExt& x) {
  return field_sqrt_in(x, x.d());
}

QuadExt quad_sqrt_anywhere(const Rational& x) {
  if (sgn(x) == 0) return QuadExt();
  if (auto r = rational_sqrt(x)) return QuadExt(*r);
  auto [d, scale] = squarefree_part(x);
  return QuadExt(0, scale, d);
}

}  // namespace qci
