#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ysym {

/// Largest degree a Permutation can carry.
inline constexpr int kMaxDegree = 30;

/// A bijection of {1..n}, stored in one-line form: position i holds p(i).
///
/// Degree 0 is allowed and denotes the unit of the concatenation product.
/// The hash is computed once at construction, since permutations are used
/// almost exclusively as keys of sparse group-algebra elements.
class Permutation {
 public:
  Permutation() { rehash(); }

  static Permutation identity(int n);
  /// Validates that `word` is a bijection of {1..word.size()}.
  static Permutation from_word(std::span<const int> word);
  static Permutation from_word(std::initializer_list<int> word) {
    return from_word(std::span<const int>(word.begin(), word.size()));
  }
  static Permutation transposition(int n, int a, int b);
  /// The product (a,b_1)(a,b_2)...(a,b_r), i.e. the cycle (a,b_r,...,b_1).
  static Permutation cycle(int n, int a, std::span<const int> bs);
  static Permutation cycle(int n, int a, std::initializer_list<int> bs) {
    return cycle(n, a, std::span<const int>(bs.begin(), bs.size()));
  }

  /// "[2,1,3]"
  static Permutation parse_one_line(std::string_view text);
  /// "(1 2)(3)"; the degree is the largest entry mentioned.
  static Permutation parse_cycles(std::string_view text);

  int degree() const { return data_[0]; }
  /// p(i) for 1 <= i <= degree().
  int operator()(int i) const { return data_[static_cast<std::size_t>(i)]; }
  std::vector<int> word() const;

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;
  /// Cycles in order of smallest element, each starting at its smallest element.
  /// Fixed points are included as 1-cycles.
  std::vector<std::vector<int>> cycles() const;
  /// Embeds into S_n by fixing n+1..n (n >= degree()).
  Permutation pad(int n) const;

  std::string to_one_line() const;
  std::string to_cycle_string() const;

  std::size_t hash() const { return hash_; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.hash_ == b.hash_ && a.data_ == b.data_;
  }
  /// Lexicographic on (degree, word).
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.data_ < b.data_; }

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation star(const Permutation& p, const Permutation& q);

 private:
  void rehash();

  // data_[0] is the degree, data_[1..n] the one-line word, the rest zero.
  std::array<std::uint8_t, kMaxDegree + 2> data_{};
  std::size_t hash_ = 0;
};

/// (p q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Concatenation product S_n x S_m -> S_{n+m}: p acts on 1..n, q shifted onto n+1..n+m.
Permutation star(const Permutation& p, const Permutation& q);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

}  // namespace ysym
