#pragma once

#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ysym/permutation.hpp"
#include "ysym/rational.hpp"

namespace ysym {

/// Sparse element of the group algebra Q[S_n]: a finite map from permutations
/// of a fixed degree to nonzero rationals.
class AlgebraElement {
 public:
  using TermMap = std::unordered_map<Permutation, Rational, PermutationHash>;

  explicit AlgebraElement(int degree = 0) : degree_(degree) {}

  static AlgebraElement zero(int n) { return AlgebraElement(n); }
  static AlgebraElement identity(int n) { return scalar(n, 1); }
  static AlgebraElement scalar(int n, const Rational& c);
  static AlgebraElement basis(const Permutation& p, const Rational& c = 1);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Rational coeff(const Permutation& p) const;
  /// Adds c to the coefficient of p, dropping the term if it cancels.
  void add_term(const Permutation& p, const Rational& c);
  /// Terms ordered lexicographically by one-line word.
  std::vector<std::pair<Permutation, Rational>> sorted_terms() const;
  bool all_integral() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& c);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void require_degree(const Permutation& p) const;

  int degree_;
  TermMap terms_;
};

/// a f + b g.
AlgebraElement linear(const Rational& a, const AlgebraElement& f, const Rational& b,
                      const AlgebraElement& g);

/// Convolution product: coefficient of r in f g is the sum of f(p) g(q) over p q = r.
AlgebraElement multiply(const AlgebraElement& f, const AlgebraElement& g);
/// f p (re-keys f, no coefficient arithmetic).
AlgebraElement multiply(const AlgebraElement& f, const Permutation& p);
/// p f.
AlgebraElement multiply(const Permutation& p, const AlgebraElement& f);

/// d f d^-1.
AlgebraElement conjugate(const Permutation& d, const AlgebraElement& f);

/// Sum of all permutations of X (fixing everything else) in Q[S_n].
AlgebraElement symmetrize_set(std::span<const int> X, int n);
/// Signed sum of all permutations of X in Q[S_n].
AlgebraElement antisymmetrize_set(std::span<const int> X, int n);
/// Sum of the transpositions (a,b) for b in B.
AlgebraElement transposition_sum(int a, std::span<const int> B, int n);

inline AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
inline AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
inline AlgebraElement operator-(AlgebraElement a) { return a *= Rational(-1); }
inline AlgebraElement operator*(const Rational& c, AlgebraElement a) { return a *= c; }
inline AlgebraElement operator*(const AlgebraElement& f, const AlgebraElement& g) { return multiply(f, g); }
inline AlgebraElement operator*(const AlgebraElement& f, const Permutation& p) { return multiply(f, p); }
inline AlgebraElement operator*(const Permutation& p, const AlgebraElement& f) { return multiply(p, f); }

/// Product of a sequence of elements, left to right; the identity when empty.
AlgebraElement product(int n, std::span<const AlgebraElement> factors);

/// c + f, for a scalar c.
AlgebraElement add_scalar(const AlgebraElement& f, const Rational& c);

/// Polynomial p(X) = sum coeffs[i] X^i evaluated in Q[S_n].
AlgebraElement evaluate_polynomial(std::span<const Rational> coeffs, const AlgebraElement& x);

/// Human-readable "1/1*(1)(2) + -1/1*(1 2)" listing, sorted.
std::string to_string(const AlgebraElement& f);

}  // namespace ysym
