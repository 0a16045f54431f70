#pragma once

#include <random>

#include "oracle.hpp"
#include "ysym/algebra.hpp"

namespace support {

inline oracle::Elem to_oracle(const ysym::AlgebraElement& f) {
  oracle::Elem out;
  for (const auto& [p, c] : f.terms()) {
    mpq_class q(c.str());
    q.canonicalize();
    out[p.word()] = q;
  }
  return out;
}

inline ysym::Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng);
  return ysym::Permutation::from_word(w);
}

inline ysym::AlgebraElement random_element(int n, int terms, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  ysym::AlgebraElement f(n);
  for (int i = 0; i < terms; ++i) f.add_term(random_perm(n, rng), ysym::Rational(num(rng), den(rng)));
  return f;
}

}  // namespace support
