#include "qci/multipoly.hpp"

#include <sstream>

namespace qci {

namespace {
constexpr int kDegShift = 56;
constexpr Mono kByte = 0xff;

int var_shift(int var) { return 8 * (6 - var); }
}  // namespace

Mono mono_make(const std::vector<int>& exps) {
  if (static_cast<int>(exps.size()) > kMaxVars)
    throw SchemaError("monomial uses more than 7 variables");
  Mono m = 0;
  int deg = 0;
  for (int v = 0; v < static_cast<int>(exps.size()); ++v) {
    if (exps[v] < 0 || exps[v] > 255) throw SchemaError("exponent out of range");
    deg += exps[v];
    m |= static_cast<Mono>(exps[v]) << var_shift(v);
  }
  if (deg > 255) throw SchemaError("total degree out of range");
  return m | (static_cast<Mono>(deg) << kDegShift);
}

Mono mono_var(int var) {
  if (var < 0 || var >= kMaxVars) throw SchemaError("variable index out of range");
  return (Mono(1) << kDegShift) | (Mono(1) << var_shift(var));
}

int mono_exp(Mono m, int var) {
  return static_cast<int>((m >> var_shift(var)) & kByte);
}

int mono_degree(Mono m) { return static_cast<int>((m >> kDegShift) & kByte); }

Mono mono_mul(Mono a, Mono b) {
  for (int byte = 0; byte < 8; ++byte) {
    Mono shift = 8 * byte;
    if (((a >> shift) & kByte) + ((b >> shift) & kByte) > 255)
      throw MathError("monomial exponent overflow");
  }
  return a + b;
}

bool mono_divides(Mono a, Mono b) {
  for (int byte = 0; byte < 8; ++byte) {
    Mono shift = 8 * byte;
    if (((a >> shift) & kByte) > ((b >> shift) & kByte)) return false;
  }
  return true;
}

Mono mono_div(Mono b, Mono a) {
  if (!mono_divides(a, b)) throw MathError("monomial division is not exact");
  return b - a;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) != 0) t_.emplace(Mono(0), c);
}

MultiPoly MultiPoly::variable(int var) {
  MultiPoly p;
  p.t_.emplace(mono_var(var), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, const std::vector<int>& exps) {
  MultiPoly p;
  if (sgn(c) != 0) p.t_.emplace(mono_make(exps), c);
  return p;
}

std::optional<int> MultiPoly::degree() const {
  if (t_.empty()) return std::nullopt;
  return mono_degree(t_.rbegin()->first);
}

bool MultiPoly::is_constant() const { return degree().value_or(0) <= 0; }

Rational MultiPoly::constant_value() const {
  if (t_.empty()) return Rational(0);
  if (!is_constant()) throw MathError("polynomial is not constant");
  return t_.begin()->second;
}

const Rational& MultiPoly::coeff(Mono m) const {
  static const Rational zero(0);
  auto it = t_.find(m);
  return it == t_.end() ? zero : it->second;
}

Mono MultiPoly::leading_mono() const {
  if (t_.empty()) throw MathError("leading term of the zero polynomial");
  return t_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
  if (t_.empty()) throw MathError("leading term of the zero polynomial");
  return t_.rbegin()->second;
}

void MultiPoly::add_term(Mono m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly r;
  for (const auto& [mx, cx] : x.t_)
    for (const auto& [my, cy] : y.t_) r.add_term(mono_mul(mx, my), cx * cy);
  return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  MultiPoly r;
  if (sgn(c) == 0) return r;
  for (const auto& [m, pc] : p.t_) r.t_.emplace(m, c * pc);
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r;
  for (const auto& [m, c] : t_) {
    int e = mono_exp(m, var);
    if (e == 0) continue;
    r.add_term(mono_div(m, mono_var(var)), e * c);
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  // Horner in `var`: collect coefficients by var-degree, then fold.
  std::vector<MultiPoly> coeffs = coeffs_in_var(var);
  MultiPoly r;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * value + *it;
  return r;
}

bool MultiPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = mono_degree(t_.begin()->first);
  for (const auto& [m, c] : t_)
    if (mono_degree(m) != d) return false;
  return true;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r;
  for (const auto& [m, c] : t_)
    if (mono_degree(m) == d) r.t_.emplace(m, c);
  return r;
}

int MultiPoly::max_var_used() const {
  int hi = -1;
  for (const auto& [m, c] : t_)
    for (int v = 0; v < kMaxVars; ++v)
      if (mono_exp(m, v) > 0 && v > hi) hi = v;
  return hi;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& q) const {
  if (q.is_zero()) throw MathError("exact division by zero polynomial");
  MultiPoly rem = *this;
  MultiPoly quot;
  Mono qlead = q.leading_mono();
  const Rational& qc = q.leading_coeff();
  while (!rem.is_zero()) {
    Mono rlead = rem.leading_mono();
    if (!mono_divides(qlead, rlead))
      throw MathError("polynomial division is not exact");
    Mono m = mono_div(rlead, qlead);
    Rational c = rem.leading_coeff() / qc;
    MultiPoly t;
    t.t_.emplace(m, c);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

Rational rat_gcd(const Rational& x, const Rational& y) {
  mpz_class num, den;
  mpz_gcd(num.get_mpz_t(), x.get_num().get_mpz_t(), y.get_num().get_mpz_t());
  mpz_lcm(den.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
  Rational g(num, den);
  g.canonicalize();
  return abs(g);
}

Rational MultiPoly::content() const {
  Rational g(0);
  for (const auto& [m, c] : t_) g = rat_gcd(g, c);
  return g;
}

MultiPoly MultiPoly::normalized_generator() const {
  if (is_zero()) return *this;
  Rational scale = content();
  if (sgn(leading_coeff()) < 0) scale = -scale;
  MultiPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, c / scale);
  return r;
}

std::vector<MultiPoly> MultiPoly::coeffs_in_var(int var) const {
  std::vector<MultiPoly> out;
  for (const auto& [m, c] : t_) {
    int e = mono_exp(m, var);
    if (static_cast<int>(out.size()) <= e) out.resize(e + 1);
    Mono reduced = m;
    for (int k = 0; k < e; ++k) reduced = mono_div(reduced, mono_var(var));
    out[e].add_term(reduced, c);
  }
  if (out.empty()) out.resize(1);
  return out;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Print in descending deglex so the highest term comes first.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational ac = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    bool printed_coeff = false;
    if (ac != 1 || mono_degree(m) == 0) {
      out << rat_str(ac);
      printed_coeff = true;
    }
    for (int v = 0; v < kMaxVars; ++v) {
      int e = mono_exp(m, v);
      if (e == 0) continue;
      if (printed_coeff) out << "*";
      out << (v < static_cast<int>(names.size()) ? names[v]
                                                 : "x" + std::to_string(v));
      if (e > 1) out << "^" << e;
      printed_coeff = true;
    }
  }
  return out.str();
}

}  // namespace qci
