#include "qci/rational.hpp"

#include <cctype>

namespace qci {

Rational rat_parse(const std::string& s) {
  if (s.empty()) throw SchemaError("empty rational literal");
  // mpq_class accepts more than we document (whitespace, hex); validate the
  // shape by hand so schema errors are deterministic.
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (s[i] == '-' || s[i] == '+') ++i;
  std::size_t after_num = digits(i);
  if (after_num == i) throw SchemaError("malformed rational literal: " + s);
  if (after_num != s.size()) {
    if (s[after_num] != '/') throw SchemaError("malformed rational literal: " + s);
    std::size_t den_start = after_num + 1;
    std::size_t after_den = digits(den_start);
    if (after_den == den_start || after_den != s.size())
      throw SchemaError("malformed rational literal: " + s);
  }
  mpq_class x;
  if (x.set_str(s, 10) != 0) throw SchemaError("malformed rational literal: " + s);
  if (x.get_den() == 0) throw SchemaError("zero denominator in rational literal: " + s);
  x.canonicalize();
  return x;
}

std::string rat_str(const Rational& x) { return x.get_str(); }

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (sgn(x) == 0) return Rational(0);
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

std::pair<long, Rational> squarefree_part(const Rational& x) {
  if (sgn(x) == 0) return {0, Rational(0)};
  // x = p/q = (p*q)/q^2, so sqrt(x) = sqrt(p*q)/q and only the integer p*q
  // needs square extraction.
  mpz_class n = x.get_num() * x.get_den();
  int sign = sgn(n) < 0 ? -1 : 1;
  n = abs(n);

  mpz_class square(1);  // product of extracted square roots
  mpz_class rest(1);    // squarefree accumulator
  for (unsigned long p = 2; p <= 1000000UL && n > 1; p += (p == 2 ? 1 : 2)) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    unsigned count = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++count;
    }
    for (unsigned k = 0; k + 1 < count; k += 2) square *= p;
    if (count % 2 == 1) rest *= p;
  }
  // The cofactor has no prime factor below 10^6; it can still be a perfect
  // square of a single large prime.
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      mpz_class r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      square *= r;
    } else {
      rest *= n;
    }
  }
  if (!rest.fits_slong_p())
    throw MathError("squarefree part exceeds long range: " + rest.get_str());
  Rational scale(square, x.get_den());
  scale.canonicalize();
  return {sign * rest.get_si(), scale};
}

}  // namespace qci
