#include "qci/unipoly.hpp"

#include <algorithm>
#include <map>

namespace qci {

namespace {

/// Factorization by trial division up to 10^6 plus a primality check on the
/// cofactor.  The inputs are divisor bounds for rational root search; a large
/// composite cofactor would silently truncate the divisor list, so it is an
/// error instead.
std::map<mpz_class, int> factor_abs(mpz_class n) {
  n = abs(n);
  std::map<mpz_class, int> f;
  if (n <= 1) return f;
  long p = 2;
  while (p <= 1000000 && mpz_class(p) * p <= n) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
    p = (p == 2) ? 3 : p + 2;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
      throw MathError("coefficient too large to factor for root search");
    ++f[n];
  }
  return f;
}

std::vector<mpz_class> divisors_of(const mpz_class& n) {
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factor_abs(n)) {
    std::size_t base = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

/// Divides out the factor t^k, reporting whether 0 was a root.
template <class F>
bool strip_zero_root(UniPoly<F>& p) {
  if (p.is_zero() || !(p.coeff(0) == F(0))) return false;
  std::vector<F> shifted(p.coeffs().begin() + 1, p.coeffs().end());
  p = UniPoly<F>(std::move(shifted));
  return true;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly<Rational>& p) {
  if (p.is_zero()) throw MathError("root search on the zero polynomial");
  UniPoly<Rational> work = p;
  std::vector<Rational> roots;
  if (strip_zero_root(work)) roots.emplace_back(0);
  while (strip_zero_root(work)) {
  }
  if (work.degree() < 1) return roots;

  // Scale to a primitive integer polynomial; then any rational root n/d in
  // lowest terms has n | constant term and d | leading coefficient.
  mpz_class den_lcm = 1;
  for (const Rational& c : work.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> zc;
  mpz_class content = 0;
  for (const Rational& c : work.coeffs()) {
    Rational scaled = c * Rational(den_lcm);
    zc.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
            zc.back().get_mpz_t());
  }
  for (mpz_class& c : zc) c /= content;

  for (const mpz_class& num : divisors_of(zc.front()))
    for (const mpz_class& den : divisors_of(zc.back()))
      for (int sign : {1, -1}) {
        Rational cand(sign * num, den);
        cand.canonicalize();
        if (work.eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

RootSet extract_roots(const UniPoly<Rational>& p) {
  if (p.is_zero()) throw MathError("root extraction on the zero polynomial");
  RootSet out;
  UniPoly<Rational> work = squarefree_part(p);
  if (strip_zero_root(work)) out.roots.emplace_back(Rational(0));

  for (const Rational& r : rational_roots(work)) {
    out.roots.emplace_back(r);
    work = work / UniPoly<Rational>(std::vector<Rational>{-r, Rational(1)});
  }

  if (work.degree() <= 0) return out;
  if (work.degree() == 1) {
    // Unreachable after rational extraction, kept as a safety net.
    out.roots.emplace_back(-work.coeff(0) / work.coeff(1));
    return out;
  }
  if (work.degree() == 2) {
    Rational a = work.coeff(2), b = work.coeff(1), c = work.coeff(0);
    QuadExt s = quad_sqrt_anywhere(b * b - 4 * a * c);
    QuadExt two_a = QuadExt(2 * a);
    out.roots.push_back((QuadExt(-b) + s) / two_a);
    out.roots.push_back((QuadExt(-b) - s) / two_a);
    return out;
  }
  if (work.is_even()) {
    // work(t) = h(t^2): every root of h is the square of two roots of work
    // (never zero here, since zero roots were stripped).
    RootSet inner = extract_roots(work.even_part());
    out.missed += 2 * inner.missed;
    for (const QuadExt& sq : inner.roots) {
      std::optional<QuadExt> s;
      if (sq.is_rational())
        s = quad_sqrt_anywhere(sq.rat());
      else
        s = field_sqrt(sq);
      if (s) {
        out.roots.push_back(*s);
        out.roots.push_back(-*s);
      } else {
        out.missed += 2;
      }
    }
    return out;
  }
  out.missed += work.degree();
  return out;
}

RootSet quadext_roots(const UniPoly<QuadExt>& p, long point_d) {
  if (p.is_zero()) throw MathError("root extraction on the zero polynomial");
  long field_d = point_d;
  for (const QuadExt& c : p.coeffs())
    if (c.d() != 0) {
      if (field_d == 0) field_d = c.d();
      if (c.d() != field_d)
        throw MathError("polynomial coefficients mix two extensions");
    }
  RootSet out;
  UniPoly<QuadExt> work = squarefree_part(p);
  if (strip_zero_root(work)) out.roots.emplace_back(Rational(0));
  if (work.degree() <= 0) return out;
  if (work.degree() == 1) {
    out.roots.push_back(-work.coeff(0) / work.coeff(1));
    return out;
  }
  if (work.degree() == 2) {
    QuadExt a = work.coeff(2), b = work.coeff(1), c = work.coeff(0);
    QuadExt disc = b * b - QuadExt(Rational(4)) * a * c;
    std::optional<QuadExt> s;
    if (field_d == 0)
      s = quad_sqrt_anywhere(disc.rat());  // rational data may open one field
    else
      s = field_sqrt_in(disc, field_d);
    if (!s) {
      out.missed += 2;
      return out;
    }
    QuadExt two_a = QuadExt(Rational(2)) * a;
    out.roots.push_back((-b + *s) / two_a);
    if (!s->is_zero()) out.roots.push_back((-b - *s) / two_a);
    return out;
  }
  throw NeedsDeeperExtension(
      "residual polynomial of degree > 2 over a quadratic extension");
}

}  // namespace qci
