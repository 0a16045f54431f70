#include "ysym/tabloid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "ysym/symmetrizer.hpp"

namespace ysym {

TensorElement concat_mul(const TensorElement& x, const TensorElement& y) {
  TensorElement out(x.degree() + y.degree());
  for (const auto& [p, a] : x.terms())
    for (const auto& [q, b] : y.terms()) out.add_term(star(p, q), a * b);
  return out;
}

const AlgebraElement& canonical_symmetrizer(const Partition& lambda) {
  static std::mutex mutex;
  static std::map<Partition, std::unique_ptr<AlgebraElement>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return *it->second;
  }
  auto c = std::make_unique<AlgebraElement>(young_c(YoungTableau::canonical(lambda)));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(lambda, std::move(c));
  return *it->second;
}

Permutation tabloid_monomial(const Filling& F) {
  if (!F.is_bijective()) throw std::invalid_argument("tabloid needs a bijective filling onto 1..n: " + F.str());
  std::vector<int> word(static_cast<std::size_t>(F.size()));
  int label = 0;
  for (const auto& r : F.rows())
    for (int x : r) word[static_cast<std::size_t>(x) - 1] = ++label;
  return Permutation::from_word(word);
}

TensorElement realize_tabloid(const Filling& F) {
  const Permutation w = tabloid_monomial(F);
  return multiply(canonical_symmetrizer(F.shape()), w);
}

std::vector<std::pair<int, Filling>> shuffle_exchanges(const Filling& F, int i, int k) {
  const Partition& lambda = F.shape();
  if (i < 1 || i + 1 > lambda.columns()) throw std::invalid_argument("shuffle_exchanges: no column pair at i");
  std::vector<Cell> xs, ys;
  for (int r = 1; r <= lambda.column_height(i); ++r)
    if (F.at({r, i}) > k) xs.push_back({r, i});
  for (int r = 1; r <= lambda.column_height(i + 1); ++r)
    if (F.at({r, i + 1}) <= k) ys.push_back({r, i + 1});
  if (static_cast<int>(xs.size() + ys.size()) <= lambda.column_height(i))
    throw std::invalid_argument("shuffle_exchanges: |X| + |Y| must exceed the height of column i");

  // Coset representatives of S_X x S_Y in S_{X u Y}: swap an increasing
  // subsequence of X with an increasing subsequence of Y of the same size.
  std::vector<std::pair<int, Filling>> out;
  const std::size_t nx = xs.size(), ny = ys.size();
  for (unsigned mx = 1; mx < (1u << nx); ++mx) {
    const int r = __builtin_popcount(mx);
    for (unsigned my = 1; my < (1u << ny); ++my) {
      if (__builtin_popcount(my) != r) continue;
      Filling G = F;
      std::size_t yi = 0;
      for (std::size_t xi = 0; xi < nx; ++xi) {
        if (!(mx & (1u << xi))) continue;
        while (!(my & (1u << yi))) ++yi;
        G.set(xs[xi], F.at(ys[yi]));
        G.set(ys[yi], F.at(xs[xi]));
        ++yi;
      }
      out.emplace_back(r % 2 == 0 ? 1 : -1, std::move(G));
    }
  }
  return out;
}

std::vector<std::pair<Rational, Filling>> straighten(const Filling& G, int k) {
  // Largest potential first: every shuffling step strictly lowers it, so each
  // filling is expanded at most once, after all its contributions are merged.
  using Key = std::pair<int, Filling>;
  std::map<Key, Rational, std::greater<Key>> pending;
  std::vector<std::pair<Rational, Filling>> done;

  auto push = [&](const Rational& c, const Filling& F) {
    const SignedFilling s = sort_columns(F);
    if (s.sign == 0 || c.is_zero()) return;
    Rational& slot = pending[{s.filling.potential(k), s.filling}];
    slot = slot + (s.sign > 0 ? c : -c);
  };
  push(Rational(1), G);

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Rational coeff = node.mapped();
    const Filling& F = node.key().second;
    if (coeff.is_zero()) continue;

    // Columns are sorted, so labels <= k sit on top; find the leftmost column
    // pair where the count of small labels increases.
    int violation = 0;
    int prev = -1;
    for (int j = 1; j <= F.shape().columns(); ++j) {
      int cnt = 0;
      for (int x : F.column(j)) cnt += x <= k;
      if (prev >= 0 && cnt > prev) {
        violation = j - 1;
        break;
      }
      prev = cnt;
    }
    if (violation == 0) {
      done.emplace_back(coeff, F);
      continue;
    }
    for (const auto& [sgn, H] : shuffle_exchanges(F, violation, k)) push(sgn > 0 ? -coeff : coeff, H);
  }
  std::sort(done.begin(), done.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return done;
}

}  // namespace ysym
