#include "ysym/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ysym {

namespace {

void require_same_degree(const AlgebraElement& f, const AlgebraElement& g, const char* op) {
  if (f.degree() != g.degree())
    throw std::invalid_argument(std::string(op) + ": degree mismatch " + std::to_string(f.degree()) +
                                " vs " + std::to_string(g.degree()));
}

std::vector<int> checked_set(std::span<const int> X, int n) {
  std::vector<int> xs(X.begin(), X.end());
  std::sort(xs.begin(), xs.end());
  if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
    throw std::invalid_argument("set has repeated entries");
  for (int x : xs)
    if (x < 1 || x > n)
      throw std::invalid_argument("entry " + std::to_string(x) + " outside 1.." + std::to_string(n));
  return xs;
}

AlgebraElement sum_over_set(std::span<const int> X, int n, bool signed_sum) {
  const std::vector<int> xs = checked_set(X, n);
  AlgebraElement out(n);
  std::vector<int> images = xs;
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    for (std::size_t i = 0; i < xs.size(); ++i) word[static_cast<std::size_t>(xs[i]) - 1] = images[i];
    const Permutation p = Permutation::from_word(word);
    out.add_term(p, signed_sum ? Rational(p.sign()) : Rational(1));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace

AlgebraElement AlgebraElement::scalar(int n, const Rational& c) {
  AlgebraElement out(n);
  out.add_term(Permutation::identity(n), c);
  return out;
}

AlgebraElement AlgebraElement::basis(const Permutation& p, const Rational& c) {
  AlgebraElement out(p.degree());
  out.add_term(p, c);
  return out;
}

void AlgebraElement::require_degree(const Permutation& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("term of degree " + std::to_string(p.degree()) +
                                " in element of degree " + std::to_string(degree_));
}

Rational AlgebraElement::coeff(const Permutation& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const Permutation& p, const Rational& c) {
  if (c.is_zero()) return;
  require_degree(p);
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<std::pair<Permutation, Rational>> AlgebraElement::sorted_terms() const {
  std::vector<std::pair<Permutation, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool AlgebraElement::all_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_integer(); });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_degree(*this, other, "add");
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_degree(*this, other, "subtract");
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

AlgebraElement linear(const Rational& a, const AlgebraElement& f, const Rational& b,
                      const AlgebraElement& g) {
  require_same_degree(f, g, "linear");
  AlgebraElement out(f.degree());
  for (const auto& [p, c] : f.terms()) out.add_term(p, a * c);
  for (const auto& [p, c] : g.terms()) out.add_term(p, b * c);
  return out;
}

AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g) {
  require_same_degree(f, g, "multiply");
  if (f.size() == 1) return f.terms().begin()->second * multiply(f.terms().begin()->first, g);
  if (g.size() == 1) return g.terms().begin()->second * multiply(f, g.terms().begin()->first);
  AlgebraElement out(f.degree());
  for (const auto& [p, a] : f.terms())
    for (const auto& [q, b] : g.terms()) out.add_term(compose(p, q), a * b);
  return out;
}

AlgebraElement multiply(const AlgebraElement& f, const Permutation& p) {
  if (f.degree() != p.degree()) throw std::invalid_argument("multiply: degree mismatch");
  AlgebraElement out(f.degree());
  for (const auto& [q, c] : f.terms()) out.add_term(compose(q, p), c);
  return out;
}

AlgebraElement multiply(const Permutation& p, const AlgebraElement& f) {
  if (f.degree() != p.degree()) throw std::invalid_argument("multiply: degree mismatch");
  AlgebraElement out(f.degree());
  for (const auto& [q, c] : f.terms()) out.add_term(compose(p, q), c);
  return out;
}

AlgebraElement conjugate(const Permutation& d, const AlgebraElement& f) {
  if (f.degree() != d.degree()) throw std::invalid_argument("conjugate: degree mismatch");
  const Permutation dinv = d.inverse();
  AlgebraElement out(f.degree());
  for (const auto& [q, c] : f.terms()) out.add_term(compose(compose(d, q), dinv), c);
  return out;
}

AlgebraElement symmetrize_set(std::span<const int> X, int n) { return sum_over_set(X, n, false); }

AlgebraElement antisymmetrize_set(std::span<const int> X, int n) { return sum_over_set(X, n, true); }

AlgebraElement transposition_sum(int a, std::span<const int> B, int n) {
  AlgebraElement out(n);
  for (int b : B) {
    if (b == a) throw std::invalid_argument("transposition_sum: a lies in B");
    out.add_term(Permutation::transposition(n, a, b), 1);
  }
  return out;
}

AlgebraElement product(int n, std::span<const AlgebraElement> factors) {
  AlgebraElement out = AlgebraElement::identity(n);
  for (const auto& f : factors) out = multiply(out, f);
  return out;
}

AlgebraElement add_scalar(const AlgebraElement& f, const Rational& c) {
  AlgebraElement out = f;
  out.add_term(Permutation::identity(f.degree()), c);
  return out;
}

AlgebraElement evaluate_polynomial(std::span<const Rational> coeffs, const AlgebraElement& x) {
  // Horner, highest degree first.
  AlgebraElement out(x.degree());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = add_scalar(multiply(out, x), *it);
  return out;
}

std::string to_string(const AlgebraElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : f.sorted_terms()) {
    os << (first ? "" : " + ") << c << '*' << p;
    first = false;
  }
  return os.str();
}

}  // namespace ysym
