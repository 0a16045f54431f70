#pragma once

// Reference implementations used only by the tests. Nothing here includes or
// calls the library's arithmetic: permutations are plain words, elements are
// std::map<word, mpq_class>, and group sums are built by brute enumeration.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Word = std::vector<int>;  // w[i-1] = w(i)
using Elem = std::map<Word, mpq_class>;

inline Word id(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

// (p q)(i) = p(q(i))
inline Word compose(const Word& p, const Word& q) {
  Word r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i]) - 1];
  return r;
}

inline Word transposition(int n, int a, int b) {
  Word w = id(n);
  std::swap(w[static_cast<std::size_t>(a) - 1], w[static_cast<std::size_t>(b) - 1]);
  return w;
}

inline int sign(const Word& w) {
  int inv = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
  return inv % 2 ? -1 : 1;
}

inline void clean(Elem& f) { std::erase_if(f, [](const auto& kv) { return kv.second == 0; }); }

inline Elem add(Elem f, const Elem& g, const mpq_class& scale = 1) {
  for (const auto& [w, c] : g) f[w] += scale * c;
  clean(f);
  return f;
}

inline Elem mul(const Elem& f, const Elem& g) {
  Elem out;
  for (const auto& [p, a] : f)
    for (const auto& [q, b] : g) out[compose(p, q)] += a * b;
  clean(out);
  return out;
}

inline Elem scale(Elem f, const mpq_class& c) {
  for (auto& [w, v] : f) v *= c;
  clean(f);
  return f;
}

// Sum of all permutations of each set in `groups` (signed if asked), multiplied out.
inline Elem group_sum(const std::vector<std::vector<int>>& groups, int n, bool signed_sum) {
  Elem acc{{id(n), 1}};
  for (const auto& g : groups) {
    std::vector<int> dom = g;
    std::sort(dom.begin(), dom.end());
    std::vector<int> img = dom;
    Elem factor;
    do {
      Word w = id(n);
      for (std::size_t i = 0; i < dom.size(); ++i) w[static_cast<std::size_t>(dom[i]) - 1] = img[i];
      factor[w] = signed_sum ? sign(w) : 1;
    } while (std::next_permutation(img.begin(), img.end()));
    acc = mul(acc, factor);
  }
  return acc;
}

inline std::vector<std::vector<int>> columns_of(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<int>> cols;
  for (std::size_t j = 0; !rows.empty() && j < rows.front().size(); ++j) {
    std::vector<int> c;
    for (const auto& r : rows)
      if (j < r.size()) c.push_back(r[j]);
    cols.push_back(c);
  }
  return cols;
}

// Row symmetrizer times signed column antisymmetrizer.
inline Elem young(const std::vector<std::vector<int>>& rows, int n) {
  return mul(group_sum(rows, n, false), group_sum(columns_of(rows), n, true));
}

inline std::vector<std::vector<int>> canonical_rows(const std::vector<int>& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : shape) {
    rows.emplace_back();
    for (int j = 0; j < len; ++j) rows.back().push_back(next++);
  }
  return rows;
}

// Number of standard tableaux, by removing the largest entry from each corner.
inline long long standard_count(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  long long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = i + 1 == shape.size() || shape[i + 1] < shape[i];
    if (!corner) continue;
    std::vector<int> smaller = shape;
    --smaller[i];
    total += standard_count(smaller);
  }
  return total;
}

// Product of hook lengths as n! / f^lambda.
inline long long hook_product(const std::vector<int>& shape) {
  long long n = std::accumulate(shape.begin(), shape.end(), 0LL), fact = 1;
  for (long long i = 2; i <= n; ++i) fact *= i;
  return fact / standard_count(shape);
}

// Number of partitions of n by the standard two-index recurrence.
inline long long partition_count(int n) {
  std::vector<std::vector<long long>> p(static_cast<std::size_t>(n) + 1,
                                        std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
  for (int m = 0; m <= n; ++m) p[0][static_cast<std::size_t>(m)] = 1;
  for (int s = 1; s <= n; ++s)
    for (int m = 1; m <= n; ++m)
      p[static_cast<std::size_t>(s)][static_cast<std::size_t>(m)] =
          p[static_cast<std::size_t>(s)][static_cast<std::size_t>(m) - 1] +
          (s >= m ? p[static_cast<std::size_t>(s - m)][static_cast<std::size_t>(m)] : 0);
  return p[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

// c_lambda(T_can) z_w with w(F(cell)) = T_can(cell), for a bijective filling.
inline Elem tabloid(const std::vector<std::vector<int>>& filling) {
  std::vector<int> shape;
  for (const auto& r : filling) shape.push_back(static_cast<int>(r.size()));
  const auto can = canonical_rows(shape);
  int n = 0;
  for (const auto& r : filling) n += static_cast<int>(r.size());
  Word w(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < filling.size(); ++i)
    for (std::size_t j = 0; j < filling[i].size(); ++j) w[static_cast<std::size_t>(filling[i][j]) - 1] = can[i][j];
  return mul(young(can, n), Elem{{w, 1}});
}

}  // namespace oracle
