#include "qci/clifford.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>
#include <utility>

#include "qci/errors.hpp"
#include "qci/polymatrix.hpp"

namespace qci {

namespace {

std::vector<std::string> y_names(int n) {
  std::vector<std::string> names;
  for (int m = 0; m < n; ++m) names.push_back("y" + std::to_string(m + 1));
  return names;
}

}  // namespace

CliffordElement::CliffordElement(int n) : n_(n) {
  if (n < 1 || n > kMaxVars)
    throw SchemaError("generator count must be between 1 and 7");
}

CliffordElement CliffordElement::scalar(int n, const Rational& c) {
  CliffordElement e(n);
  e.add_term(0, MultiPoly(c));
  return e;
}

CliffordElement CliffordElement::generator(int n, int i) {
  if (i < 0 || i >= n) throw SchemaError("generator index out of range");
  CliffordElement e(n);
  e.add_term(1u << i, MultiPoly(1));
  return e;
}

CliffordElement CliffordElement::y_generator(int n, int m) {
  if (m < 0 || m >= n) throw SchemaError("central generator index out of range");
  CliffordElement e(n);
  e.add_term(0, MultiPoly::variable(m));
  return e;
}

CliffordElement CliffordElement::linear(int n, const std::vector<Rational>& lambda) {
  if (static_cast<int>(lambda.size()) != n)
    throw SchemaError("coefficient count does not match generator count");
  CliffordElement e(n);
  for (int i = 0; i < n; ++i) e.add_term(1u << i, MultiPoly(lambda[i]));
  return e;
}

const MultiPoly& CliffordElement::coeff(std::uint32_t mask) const {
  static const MultiPoly zero;
  auto it = t_.find(mask);
  return it == t_.end() ? zero : it->second;
}

void CliffordElement::add_term(std::uint32_t mask, const MultiPoly& c) {
  if (mask >= (1u << n_)) throw SchemaError("basis word uses an unknown generator");
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

std::optional<int> CliffordElement::grade() const {
  std::optional<int> g;
  for (const auto& [mask, poly] : t_) {
    if (!poly.is_homogeneous()) return std::nullopt;
    int d = std::popcount(mask) + 2 * *poly.degree();
    if (g && *g != d) return std::nullopt;
    g = d;
  }
  return g;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement e(n_);
  for (const auto& [mask, poly] : t_) e.t_.emplace(mask, -poly);
  return e;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  if (n_ != o.n_) throw SchemaError("mixing elements of different algebras");
  for (const auto& [mask, poly] : o.t_) add_term(mask, poly);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  if (n_ != o.n_) throw SchemaError("mixing elements of different algebras");
  for (const auto& [mask, poly] : o.t_) add_term(mask, -poly);
  return *this;
}

CliffordElement operator*(const MultiPoly& c, const CliffordElement& e) {
  CliffordElement out(e.n_);
  if (c.is_zero()) return out;
  for (const auto& [mask, poly] : e.t_) out.add_term(mask, c * poly);
  return out;
}

std::string CliffordElement::str() const {
  if (t_.empty()) return "0";
  auto names = y_names(n_);
  std::string out;
  for (const auto& [mask, poly] : t_) {
    if (!out.empty()) out += " + ";
    std::string word;
    for (int i = 0; i < n_; ++i)
      if (mask & (1u << i)) word += "x" + std::to_string(i + 1);
    std::string cs = poly.str(names);
    if (word.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += word;
    } else {
      bool simple = poly.nterms() == 1;
      out += (simple ? cs : "(" + cs + ")") + "*" + word;
    }
  }
  return out;
}

CliffordAlgebra::CliffordAlgebra(SymMatrixSeq F) : seq_(std::move(F)) {
  int n = seq_.n;
  if (n < 1 || n > kMaxVars)
    throw SchemaError("generator count must be between 1 and 7");
  if (seq_.r() != n)
    throw SchemaError("a graded Clifford algebra needs exactly n matrices");
  for (const auto& m : seq_.mats) {
    if (m.rows() != n || m.cols() != n)
      throw SchemaError("matrix size does not match n");
    if (!is_symmetric(m)) throw SchemaError("matrix is not symmetric");
  }
  script_.assign(n * n, MultiPoly());
  half_.assign(n, MultiPoly());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MultiPoly form;
      for (int m = 0; m < n; ++m)
        form += seq_.mats[m](i, j) * MultiPoly::variable(m);
      script_[i * n + j] = form;
      if (i == j) half_[i] = Rational(1) / Rational(2) * form;
    }
}

const MultiPoly& CliffordAlgebra::script_f(int i, int j) const {
  return script_[i * n() + j];
}

const MultiPoly& CliffordAlgebra::half_square(int i) const { return half_[i]; }

Mat<MultiPoly> CliffordAlgebra::script_matrix() const {
  int nn = n();
  Mat<MultiPoly> m(nn, nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) m(i, j) = script_[i * nn + j];
  return m;
}

namespace {

/// Rewrites coeff * x_{word[0]} .. x_{word.back()} into the free basis and
/// accumulates the result.  The scan finds the first non-ascending adjacent
/// pair; a repeated generator contracts to script_f(i,i)/2, a descent
/// branches into the swap (with sign) and the contraction.  Each branch
/// strictly decreases (length, inversions) lexicographically, so the
/// recursion terminates.
void reduce_word_into(const CliffordAlgebra& alg, std::vector<int> word,
                      MultiPoly coeff, CliffordElement& out) {
  if (coeff.is_zero()) return;
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    int a = word[k], b = word[k + 1];
    if (a < b) continue;
    if (a == b) {
      MultiPoly contracted = coeff * alg.half_square(a);
      word.erase(word.begin() + k, word.begin() + k + 2);
      reduce_word_into(alg, std::move(word), std::move(contracted), out);
      return;
    }
    MultiPoly drop_coeff = coeff * alg.script_f(b, a);
    std::vector<int> dropped(word);
    dropped.erase(dropped.begin() + k, dropped.begin() + k + 2);
    std::swap(word[k], word[k + 1]);
    reduce_word_into(alg, std::move(word), -coeff, out);
    reduce_word_into(alg, std::move(dropped), std::move(drop_coeff), out);
    return;
  }
  std::uint32_t mask = 0;
  for (int i : word) mask |= 1u << i;
  out.add_term(mask, coeff);
}

std::vector<int> mask_to_word(std::uint32_t mask) {
  std::vector<int> word;
  for (int i = 0; mask >> i; ++i)
    if (mask & (1u << i)) word.push_back(i);
  return word;
}

}  // namespace

CliffordElement clifford_mul(const CliffordAlgebra& alg, const CliffordElement& a,
                             const CliffordElement& b) {
  int n = alg.n();
  if (a.n() != n || b.n() != n)
    throw SchemaError("element size does not match the algebra");
  CliffordElement out(n);
  for (const auto& [ma, pa] : a.terms())
    for (const auto& [mb, pb] : b.terms()) {
      std::vector<int> word = mask_to_word(ma);
      std::vector<int> tail = mask_to_word(mb);
      word.insert(word.end(), tail.begin(), tail.end());
      reduce_word_into(alg, std::move(word), pa * pb, out);
    }
  return out;
}

std::vector<CliffordElement> center_degree2(const CliffordAlgebra& alg) {
  int n = alg.n();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  int p_count = static_cast<int>(pairs.size());
  int cols = p_count + n;

  // One row per basis word of [z, x_l]; the y_m unknowns commute with
  // everything, so their columns stay zero and they reappear in the kernel.
  std::map<std::tuple<int, std::uint32_t, Mono>, std::map<int, Rational>> rows;
  for (int l = 0; l < n; ++l) {
    CliffordElement xl = CliffordElement::generator(n, l);
    for (int p = 0; p < p_count; ++p) {
      CliffordElement e(n);
      e.add_term((1u << pairs[p].first) | (1u << pairs[p].second), MultiPoly(1));
      CliffordElement com =
          clifford_mul(alg, e, xl) - clifford_mul(alg, xl, e);
      for (const auto& [mask, poly] : com.terms())
        for (const auto& [mono, c] : poly.terms())
          rows[{l, mask, mono}][p] += c;
    }
  }

  Mat<Rational> m(static_cast<int>(rows.size()), cols);
  int r = 0;
  for (const auto& [key, entries] : rows) {
    for (const auto& [p, c] : entries) m(r, p) = c;
    ++r;
  }

  std::vector<CliffordElement> basis;
  for (const auto& v : kernel_basis(m)) {
    CliffordElement z(n);
    for (int p = 0; p < p_count; ++p)
      if (sgn(v[p]) != 0)
        z.add_term((1u << pairs[p].first) | (1u << pairs[p].second),
                   MultiPoly(v[p]));
    for (int ym = 0; ym < n; ++ym)
      if (sgn(v[p_count + ym]) != 0)
        z.add_term(0, v[p_count + ym] * MultiPoly::variable(ym));
    basis.push_back(std::move(z));
  }
  return basis;
}

CenterElement center_element(const CliffordAlgebra& alg) {
  int n = alg.n();
  if (poly_det(alg.script_matrix()).is_zero())
    throw MathError(
        "pencil determinant det(sum y_m F_m) vanishes identically, so the "
        "degree-n element is not regular");

  CliffordElement g(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    reduce_word_into(alg, perm, MultiPoly(inversions % 2 == 0 ? 1 : -1), g);
  } while (std::next_permutation(perm.begin(), perm.end()));

  Rational fact(1);
  for (int i = 2; i <= n; ++i) fact *= i;
  Rational c = fact * fact / Rational(1 << n);
  if ((n * (n - 1) / 2) % 2 == 1) c = -c;
  return CenterElement{std::move(g), std::move(c)};
}

std::vector<Rational> square_in_basis(const CliffordElement& g,
                                      const SymMatrixSeq& F) {
  if (!is_normalized(F))
    throw MathError("square coordinates need a normalized sequence");
  int n = F.n;
  if (g.n() != n) throw SchemaError("element size does not match the sequence");
  std::vector<Rational> lambda(n, Rational(0));
  for (const auto& [mask, poly] : g.terms()) {
    if (std::popcount(mask) != 1 || !poly.is_constant())
      throw MathError("square coordinates need a degree-one element");
    lambda[std::countr_zero(mask)] = poly.constant_value();
  }
  std::vector<Rational> a(n);
  for (int m = 0; m < n; ++m) {
    Rational q(0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) q += lambda[i] * F.mats[m](i, j) * lambda[j];
    a[m] = q / Rational(2);
  }
  return a;
}

std::vector<Mat<Rational>> sf_relation_matrices(const SymMatrixSeq& F) {
  int n = F.n;
  if (F.r() != n)
    throw SchemaError("the quadric algebra S^F needs exactly n matrices");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::reverse(pairs.begin(), pairs.end());
  std::vector<Mat<Rational>> rels;
  for (auto [i, j] : pairs) {
    Mat<Rational> c(n, n);
    c(i, j) = Rational(1);
    c(j, i) = Rational(1);
    for (int m = 0; m < n; ++m) c(m, m) -= F.mats[m](i, j);
    rels.push_back(std::move(c));
  }
  return rels;
}

namespace {

/// Scales a rational vector to primitive integer entries whose first nonzero
/// entry is positive; leaves the zero vector alone.
void make_primitive(std::vector<Rational>& v) {
  Rational g(0);
  for (const auto& c : v) g = rat_gcd(g, c);
  if (sgn(g) == 0) return;
  int first = 0;
  while (sgn(v[first]) == 0) ++first;
  if (sgn(v[first]) < 0) g = -g;
  for (auto& c : v) c /= g;
}

}  // namespace

Superpotential superpotential_of_relations(int n,
                                           const std::vector<Mat<Rational>>& rels) {
  if (n < 2) throw SchemaError("superpotentials need at least two generators");
  if (n > kMaxSuperpotentialVars)
    throw MathError(
        "size limit: dense superpotential tensors are only computed for up "
        "to 4 generators");
  for (const auto& rel : rels)
    if (rel.rows() != n || rel.cols() != n)
      throw SchemaError("relation matrix size does not match n");

  int nn = n * n;
  Mat<Rational> relmat(static_cast<int>(rels.size()), nn);
  for (int r = 0; r < relmat.rows(); ++r)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) relmat(r, a * n + b) = rels[r](a, b);
  int rel_rank = rank_of(relmat);
  auto perp = kernel_basis(relmat);

  int tensor_size = 1;
  for (int k = 0; k < n; ++k) tensor_size *= n;
  int outer_count = tensor_size / nn;

  std::vector<std::vector<Rational>> rows;

  // Membership in V^p (x) R (x) V^q for every split: contracting the two
  // middle slots with any functional that kills R must give zero.
  for (int p = 0; p + 1 < n; ++p) {
    for (const auto& phi : perp) {
      std::vector<int> outer(n - 2, 0);
      for (int oc = 0; oc < outer_count; ++oc) {
        std::vector<Rational> row(tensor_size, Rational(0));
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            const Rational& cphi = phi[a * n + b];
            if (sgn(cphi) == 0) continue;
            int idx = 0, oi = 0;
            for (int slot = 0; slot < n; ++slot) {
              int digit = slot == p ? a : slot == p + 1 ? b : outer[oi++];
              idx = idx * n + digit;
            }
            row[idx] += cphi;
          }
        rows.push_back(std::move(row));
        for (int k = n - 3; k >= 0; --k) {
          if (++outer[k] < n) break;
          outer[k] = 0;
        }
      }
    }
  }

  // Full symmetry via adjacent transpositions of the slots.
  std::vector<int> digits(n, 0);
  for (int idx = 0; idx < tensor_size; ++idx) {
    for (int p = 0; p + 1 < n; ++p) {
      if (digits[p] <= digits[p + 1]) continue;
      int swapped = 0;
      for (int slot = 0; slot < n; ++slot) {
        int digit = slot == p ? digits[p + 1] : slot == p + 1 ? digits[p]
                                                              : digits[slot];
        swapped = swapped * n + digit;
      }
      std::vector<Rational> row(tensor_size, Rational(0));
      row[idx] = Rational(1);
      row[swapped] = Rational(-1);
      rows.push_back(std::move(row));
    }
    for (int k = n - 1; k >= 0; --k) {
      if (++digits[k] < n) break;
      digits[k] = 0;
    }
  }

  Mat<Rational> system(static_cast<int>(rows.size()), tensor_size);
  for (int r = 0; r < system.rows(); ++r)
    for (int c = 0; c < tensor_size; ++c) system(r, c) = rows[r][c];

  auto kernel = kernel_basis(system);
  Superpotential result;
  result.n = n;
  result.odd_degree = n % 2 == 1;
  if (kernel.empty()) return result;

  std::vector<Rational> w = kernel.front();
  make_primitive(w);

  // The order-(n-2) contractions of w must span exactly the relation space.
  Mat<Rational> combined(outer_count + relmat.rows(), nn);
  for (int oc = 0; oc < outer_count; ++oc)
    for (int ab = 0; ab < nn; ++ab) combined(oc, ab) = w[oc * nn + ab];
  for (int r = 0; r < relmat.rows(); ++r)
    for (int ab = 0; ab < nn; ++ab) combined(outer_count + r, ab) = relmat(r, ab);
  Mat<Rational> contractions(outer_count, nn);
  for (int oc = 0; oc < outer_count; ++oc)
    for (int ab = 0; ab < nn; ++ab) contractions(oc, ab) = w[oc * nn + ab];
  if (rank_of(contractions) != rel_rank || rank_of(combined) != rel_rank)
    throw MathError(
        "superpotential candidate does not regenerate the relation space");

  result.exists = true;
  result.w = std::move(w);
  return result;
}

Superpotential superpotential(const SymMatrixSeq& F) {
  return superpotential_of_relations(F.n, sf_relation_matrices(F));
}

}  // namespace qci
