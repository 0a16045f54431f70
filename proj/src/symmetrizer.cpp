#include "ysym/symmetrizer.hpp"

#include <stdexcept>

namespace ysym {

namespace {

int resolve_degree(const YoungTableau& T, int degree) {
  const int needed = T.max_entry();
  if (degree == 0) return needed;
  if (degree < needed) throw std::invalid_argument("degree smaller than the largest tableau entry");
  return degree;
}

}  // namespace

AlgebraElement row_symmetrizer(const YoungTableau& T, int degree) {
  const int n = resolve_degree(T, degree);
  AlgebraElement out = AlgebraElement::identity(n);
  for (const auto& r : T.rows()) out = multiply(out, symmetrize_set(r, n));
  return out;
}

AlgebraElement column_antisymmetrizer(const YoungTableau& T, int degree) {
  const int n = resolve_degree(T, degree);
  AlgebraElement out = AlgebraElement::identity(n);
  for (int j = 1; j <= T.shape().columns(); ++j) out = multiply(out, antisymmetrize_set(T.column(j), n));
  return out;
}

SymmetrizerTriple young_symmetrizer(const YoungTableau& T, int degree) {
  SymmetrizerTriple t{row_symmetrizer(T, degree), column_antisymmetrizer(T, degree), AlgebraElement()};
  t.c = multiply(t.a_part, t.b_part);
  return t;
}

AlgebraElement young_c(const YoungTableau& T, int degree) { return young_symmetrizer(T, degree).c; }

CornerData corner_data(const YoungTableau& T, const YoungTableau& S, int degree) {
  const int n = resolve_degree(T, degree);
  if (!T.has_subtableau(S) || T.size() != S.size() + 1)
    throw std::invalid_argument("corner_data: S must be T minus a single corner box");
  CornerData d;
  d.corner = rightmost_corner_outside(T.shape(), S.shape());
  d.entry = T.at(d.corner);
  const int v = d.corner.col;
  if (v <= S.shape().columns()) d.tail = blocks_from_column(S, v);
  d.hooks = d.tail.hook_numbers(d.corner.row);
  for (const Block& b : d.tail.blocks) d.block_sums.push_back(transposition_sum(d.entry, b.entries, n));
  return d;
}

ExpansionMultiplier closed_form_multiplier(const YoungTableau& T, const YoungTableau& S, int degree) {
  const int n = resolve_degree(T, degree);
  const CornerData d = corner_data(T, S, n);
  AlgebraElement e = AlgebraElement::scalar(n, hook_alpha(S.shape()));
  for (std::size_t i = 0; i < d.block_sums.size(); ++i) {
    // e <- e (1 - x_i / r_i)
    const AlgebraElement factor =
        add_scalar(Rational(-1, d.hooks[i]) * d.block_sums[i], Rational(1));
    e = multiply(e, factor);
  }
  return {std::move(e), MultiplierSource::closed_form};
}

ExpansionMultiplier expand_product(const YoungTableau& T, const YoungTableau& S, int degree) {
  const int n = resolve_degree(T, degree);
  if (!T.has_subtableau(S)) throw std::invalid_argument("expand_product: S is not a subtableau of T");
  if (T.size() == S.size()) return {AlgebraElement::scalar(n, hook_alpha(T.shape())), MultiplierSource::closed_form};
  if (T.size() == S.size() + 1) return closed_form_multiplier(T, S, n);

  const Cell corner = rightmost_corner_outside(T.shape(), S.shape());
  const YoungTableau U = T.without(corner);
  const ExpansionMultiplier outer = closed_form_multiplier(T, U, n);
  const ExpansionMultiplier inner = expand_product(U, S, n);
  AlgebraElement e = multiply(outer.element, inner.element);
  e *= Rational(1, hook_alpha(U.shape()));
  return {std::move(e), MultiplierSource::recursive};
}

AlgebraElement garnir_zero(const YoungTableau& T, int i, int j, int a, int degree) {
  const int n = resolve_degree(T, degree);
  const Partition& lambda = T.shape();
  if (i == j || i < 1 || j < 1 || i > lambda.columns() || j > lambda.columns())
    throw std::invalid_argument("garnir_zero: need two distinct columns");
  if (lambda.column_height(i) > lambda.column_height(j))
    throw std::invalid_argument("garnir_zero: column i must not be taller than column j");
  if (T.column_of(a) != i) throw std::invalid_argument("garnir_zero: a must lie in column i");
  const AlgebraElement factor = add_scalar(-transposition_sum(a, T.column(j), n), Rational(1));
  return multiply(young_c(T, n), factor);
}

}  // namespace ysym
