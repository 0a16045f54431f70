#include "ysym/sym_power.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ysym {

namespace {

Permutation canonical_from_word(std::vector<int> w, int d) {
  const std::size_t n = w.size() / static_cast<std::size_t>(d);
  for (std::size_t b = 0; b < n; ++b) std::sort(w.begin() + b * d, w.begin() + (b + 1) * d);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return w[x * d] < w[y * d]; });
  std::vector<int> out;
  out.reserve(w.size());
  for (std::size_t b : order) out.insert(out.end(), w.begin() + b * d, w.begin() + (b + 1) * d);
  return Permutation::from_word(out);
}

void require_divisible(int degree, int d) {
  if (d < 1 || degree % d != 0) throw std::invalid_argument("degree is not divisible by d");
}

// (1 + s * sum_{j in others} (head, j)) applied to y.
AlgebraElement apply_factor(const AlgebraElement& y, int head, const std::vector<int>& others, int s, int d) {
  AlgebraElement out = y;
  for (const auto& [m, c] : y.terms()) {
    std::vector<int> w = m.word();
    for (int o : others) {
      std::vector<int> moved = w;
      for (int& e : moved) {
        if (e == head)
          e = o;
        else if (e == o)
          e = head;
      }
      out.add_term(canonical_from_word(std::move(moved), d), s > 0 ? c : -c);
    }
  }
  return out;
}

}  // namespace

Permutation sym_canonical(const Permutation& w, int d) {
  require_divisible(w.degree(), d);
  return canonical_from_word(w.word(), d);
}

SymElement project_sym(const AlgebraElement& x, int d) {
  require_divisible(x.degree(), d);
  SymElement out{d, AlgebraElement(x.degree())};
  for (const auto& [p, c] : x.terms()) out.terms.add_term(sym_canonical(p, d), c);
  return out;
}

Permutation dn_monomial(const Filling& F, int d) {
  const auto n = F.uniform_multiplicity(d);
  if (!n) throw std::invalid_argument("filling does not use each label exactly d times: " + F.str());
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(*n));
  int label = 0;
  for (const auto& r : F.rows())
    for (int x : r) blocks[static_cast<std::size_t>(x) - 1].push_back(++label);
  std::vector<int> word;
  for (const auto& b : blocks) word.insert(word.end(), b.begin(), b.end());
  return canonical_from_word(std::move(word), d);
}

SymElement act(const AlgebraElement& f, const SymElement& y) {
  if (f.degree() != y.degree()) throw std::invalid_argument("act: degree mismatch");
  SymElement out{y.d, AlgebraElement(y.degree())};
  for (const auto& [s, a] : f.terms())
    for (const auto& [m, b] : y.terms.terms()) out.terms.add_term(sym_canonical(compose(s, m), y.d), a * b);
  return out;
}

SymElement sym_mul(const SymElement& x, const SymElement& y) {
  if (x.d != y.d) throw std::invalid_argument("sym_mul: different d");
  SymElement out{x.d, AlgebraElement(x.degree() + y.degree())};
  // Blocks of y are shifted above all of x, so the concatenation stays canonical.
  for (const auto& [p, a] : x.terms.terms())
    for (const auto& [q, b] : y.terms.terms()) out.terms.add_term(star(p, q), a * b);
  return out;
}

SymElement realize_dn_tabloid(const Filling& F, int d) {
  const Partition& lambda = F.shape();
  const int N = lambda.size();
  SymElement out{d, AlgebraElement::basis(dn_monomial(F, d))};
  const YoungTableau T = YoungTableau::canonical(lambda);

  // b(C) = (1 - z_2)(1 - z_3)...(1 - z_h), z_i = sum_{j<i} (c_i, c_j); rightmost factor acts first.
  for (int j = 1; j <= lambda.columns() && !out.is_zero(); ++j) {
    const auto col = T.column(j);
    for (std::size_t i = col.size(); i-- > 1;)
      out.terms = apply_factor(out.terms, col[i], std::vector<int>(col.begin(), col.begin() + i), -1, d);
  }
  for (int r = 1; r <= lambda.rows() && !out.is_zero(); ++r) {
    const auto& row = T.row(r);
    for (std::size_t i = row.size(); i-- > 1;)
      out.terms = apply_factor(out.terms, row[i], std::vector<int>(row.begin(), row.begin() + i), 1, d);
  }
  if (out.is_zero()) out.terms = AlgebraElement(N);
  return out;
}

Filling collapse_lift(const Filling& lifted, int d) {
  auto rows = lifted.rows();
  for (auto& r : rows)
    for (int& x : r) x = (x + d - 1) / d;
  return Filling(std::move(rows));
}

Filling lift_filling(const Filling& F, int d) {
  const auto n = F.uniform_multiplicity(d);
  if (!n) throw std::invalid_argument("lift_filling: each label must appear exactly d times");
  std::vector<int> used(static_cast<std::size_t>(*n) + 1, 0);
  auto rows = F.rows();
  for (auto& r : rows)
    for (int& x : r) x = d * (x - 1) + (++used[static_cast<std::size_t>(x)]);
  return Filling(std::move(rows));
}

SignedFilling canonical_dn_form(const Filling& F, bool relabel) {
  const int n = F.max_entry();
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  const Partition& lambda = F.shape();
  std::optional<SignedFilling> best;
  do {
    const SignedFilling s = sort_columns(F.relabel(Permutation::from_word(labels)));
    if (s.sign == 0) return {0, F};
    std::vector<std::vector<int>> cols;
    for (int j = 1; j <= lambda.columns(); ++j) cols.push_back(s.filling.column(j));
    // Columns of one height form a contiguous run; sort each run.
    for (std::size_t a = 0; a < cols.size();) {
      std::size_t b = a;
      while (b < cols.size() && cols[b].size() == cols[a].size()) ++b;
      std::sort(cols.begin() + a, cols.begin() + b);
      a = b;
    }
    auto rows = s.filling.rows();
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) rows[i][j] = cols[j][i];
    Filling candidate(std::move(rows));
    if (!best || candidate < best->filling) best = SignedFilling{s.sign, std::move(candidate)};
  } while (relabel && std::next_permutation(labels.begin(), labels.end()));
  return *best;
}

}  // namespace ysym
