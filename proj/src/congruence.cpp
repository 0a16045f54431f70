#include "ysym/congruence.hpp"

#include <algorithm>
#include <stdexcept>

#include "ysym/symmetrizer.hpp"

namespace ysym {

namespace {

// Scales v to integer coefficients with gcd 1.
AlgebraElement primitive(AlgebraElement v) {
  if (v.is_zero()) return v;
  mpz_class l = 1, g = 0;
  for (const auto& [p, c] : v.terms()) l = lcm(l, c.denominator());
  for (const auto& [p, c] : v.terms()) g = gcd(g, mpz_class(c.numerator() * l / c.denominator()));
  v *= Rational(mpq_class(l, g));
  return v;
}

}  // namespace

// Fraction-free elimination: v <- a v - c row with a the row's pivot entry,
// followed by removing the content, so every stored vector stays integral.
AlgebraElement SparseSpan::reduce(AlgebraElement v) const {
  v = primitive(std::move(v));
  for (const auto& [pivot, row] : rows_) {
    const Rational c = v.coeff(pivot);
    if (!c.is_zero()) v = primitive(linear(row.coeff(pivot), v, -c, row));
  }
  return v;
}

bool SparseSpan::contains(const AlgebraElement& v) const { return reduce(v).is_zero(); }

bool SparseSpan::insert(const AlgebraElement& v) {
  AlgebraElement r = reduce(v);
  if (r.is_zero()) return false;
  // Smallest key as pivot keeps the choice deterministic. Later rows are
  // reduced against earlier ones, so reducing in insertion order suffices.
  Permutation pivot = r.terms().begin()->first;
  for (const auto& [p, c] : r.terms())
    if (p < pivot) pivot = p;
  rows_.emplace_back(pivot, std::move(r));
  return true;
}

CornerCongruence::CornerCongruence(const YoungTableau& T, const YoungTableau& S, int v, int degree) {
  const int n = degree == 0 ? T.max_entry() : degree;
  if (!T.has_subtableau(S) || T.size() != S.size() + 1)
    throw std::invalid_argument("CornerCongruence: S must be T minus one box");
  const Cell corner = rightmost_corner_outside(T.shape(), S.shape());
  if (corner.col != v) throw std::invalid_argument("CornerCongruence: v must be the column of the added box");
  const int a = T.at(corner);

  x_ = AlgebraElement(n);
  for (int j = v; j <= S.shape().columns(); ++j) x_ += transposition_sum(a, S.column(j), n);

  AlgebraElement w = multiply(row_symmetrizer(T, n), young_c(S, n));
  SparseSpan span;
  while (span.insert(w)) {
    krylov_.push_back(w);
    w = multiply(w, x_);
  }
}

bool CornerCongruence::annihilated(const AlgebraElement& h) const {
  return std::all_of(krylov_.begin(), krylov_.end(), [&](const AlgebraElement& w) { return multiply(w, h).is_zero(); });
}

bool CornerCongruence::congruent(const AlgebraElement& f, const AlgebraElement& g) const {
  return annihilated(f - g);
}

bool congruent(const AlgebraElement& f, const AlgebraElement& g, const YoungTableau& T, const YoungTableau& S,
               int v) {
  return CornerCongruence(T, S, v).congruent(f, g);
}

}  // namespace ysym
