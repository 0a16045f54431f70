#include "ysym/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ysym {

namespace {

std::uint64_t mix(std::uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

void check_degree(int n) {
  if (n < 0 || n > kMaxDegree)
    throw std::invalid_argument("permutation degree out of range: " + std::to_string(n));
}

void check_entry(int n, int x) {
  if (x < 1 || x > n)
    throw std::invalid_argument("entry " + std::to_string(x) + " outside 1.." + std::to_string(n));
}

}  // namespace

void Permutation::rehash() {
  static_assert(sizeof(data_) % 8 == 0);
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t off = 0; off < sizeof(data_); off += 8) {
    std::uint64_t chunk;
    std::memcpy(&chunk, data_.data() + off, 8);
    h = mix(h ^ chunk) + off;
  }
  hash_ = static_cast<std::size_t>(h);
}

Permutation Permutation::identity(int n) {
  check_degree(n);
  Permutation p;
  p.data_.fill(0);
  p.data_[0] = static_cast<std::uint8_t>(n);
  for (int i = 1; i <= n; ++i) p.data_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  p.rehash();
  return p;
}

Permutation Permutation::from_word(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  check_degree(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  Permutation p = identity(n);
  for (int i = 0; i < n; ++i) {
    const int x = word[static_cast<std::size_t>(i)];
    check_entry(n, x);
    if (seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("word repeats entry " + std::to_string(x));
    seen[static_cast<std::size_t>(x)] = true;
    p.data_[static_cast<std::size_t>(i) + 1] = static_cast<std::uint8_t>(x);
  }
  p.rehash();
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  check_degree(n);
  check_entry(n, a);
  check_entry(n, b);
  if (a == b) throw std::invalid_argument("transposition needs two distinct entries");
  Permutation p = identity(n);
  std::swap(p.data_[static_cast<std::size_t>(a)], p.data_[static_cast<std::size_t>(b)]);
  p.rehash();
  return p;
}

Permutation Permutation::cycle(int n, int a, std::span<const int> bs) {
  check_degree(n);
  check_entry(n, a);
  std::vector<int> all{a};
  for (int b : bs) {
    check_entry(n, b);
    all.push_back(b);
  }
  std::vector<int> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle repeats an entry");
  // (a, b_r, ..., b_1): a -> b_r -> b_{r-1} -> ... -> b_1 -> a
  Permutation p = identity(n);
  if (bs.empty()) return p;
  const std::size_t r = bs.size();
  p.data_[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(bs[r - 1]);
  for (std::size_t i = r - 1; i > 0; --i)
    p.data_[static_cast<std::size_t>(bs[i])] = static_cast<std::uint8_t>(bs[i - 1]);
  p.data_[static_cast<std::size_t>(bs[0])] = static_cast<std::uint8_t>(a);
  p.rehash();
  return p;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("bad integer '" + token + "'");
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == sep || (sep == ' ' && std::isspace(static_cast<unsigned char>(c)))) {
      flush();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      continue;
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

}  // namespace

Permutation Permutation::parse_one_line(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos || text[first] != '[' || text[last] != ']')
    throw std::invalid_argument("one-line permutation must look like [2,1,3]");
  const auto inner = text.substr(first + 1, last - first - 1);
  if (inner.find_first_not_of(" \t") != std::string_view::npos &&
      (inner.front() == ',' || inner.back() == ','))
    throw std::invalid_argument("stray comma in one-line permutation");
  const auto word = parse_int_list(inner, ',');
  return from_word(word);
}

Permutation Permutation::parse_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw std::invalid_argument("cycle notation must look like (1 2)(3)");
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
    auto body = parse_int_list(text.substr(i + 1, close - i - 1), ' ');
    if (body.empty()) throw std::invalid_argument("empty cycle");
    cycles.push_back(std::move(body));
    i = close + 1;
  }
  int n = 0;
  for (const auto& c : cycles)
    for (int x : c) n = std::max(n, x);
  check_degree(n);
  Permutation p = identity(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      check_entry(n, c[k]);
      if (seen[static_cast<std::size_t>(c[k])])
        throw std::invalid_argument("entry " + std::to_string(c[k]) + " appears in two cycles");
      seen[static_cast<std::size_t>(c[k])] = true;
      p.data_[static_cast<std::size_t>(c[k])] = static_cast<std::uint8_t>(c[(k + 1) % c.size()]);
    }
  }
  p.rehash();
  return p;
}

std::vector<int> Permutation::word() const {
  std::vector<int> w(static_cast<std::size_t>(degree()));
  for (int i = 1; i <= degree(); ++i) w[static_cast<std::size_t>(i) - 1] = (*this)(i);
  return w;
}

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (int i = 1; i <= degree(); ++i) p.data_[data_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  p.rehash();
  return p;
}

int Permutation::sign() const {
  int transpositions = 0;
  for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(degree()) + 1, false);
  for (int i = 1; i <= degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> c;
    for (int x = i; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Permutation Permutation::pad(int n) const {
  if (n < degree()) throw std::invalid_argument("cannot pad to a smaller degree");
  return star(*this, identity(n - degree()));
}

std::string Permutation::to_one_line() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= degree(); ++i) os << (i > 1 ? "," : "") << (*this)(i);
  os << ']';
  return os.str();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  for (const auto& c : cycles()) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  Permutation r = p;
  for (int i = 1; i <= p.degree(); ++i)
    r.data_[static_cast<std::size_t>(i)] = p.data_[q.data_[static_cast<std::size_t>(i)]];
  r.rehash();
  return r;
}

Permutation star(const Permutation& p, const Permutation& q) {
  const int n = p.degree();
  const int m = q.degree();
  check_degree(n + m);
  Permutation r = p;
  r.data_[0] = static_cast<std::uint8_t>(n + m);
  for (int i = 1; i <= m; ++i)
    r.data_[static_cast<std::size_t>(n + i)] = static_cast<std::uint8_t>(n + q(i));
  r.rehash();
  return r;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_cycle_string(); }

}  // namespace ysym
