#include "ysym/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ysym {

namespace {

std::vector<int> parse_list(std::string_view text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw std::invalid_argument("empty entry in '" + std::string(text) + "'");
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
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

std::vector<std::vector<int>> parse_rows(std::string_view text) {
  std::vector<std::vector<int>> rows;
  if (blank(text)) return rows;
  std::size_t start = 0;
  while (true) {
    const auto slash = text.find('/', start);
    const auto piece = text.substr(start, slash == std::string_view::npos ? text.size() - start : slash - start);
    rows.push_back(parse_list(piece));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return rows;
}

std::string format_rows(const std::vector<std::vector<int>>& rows) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << '/';
    for (std::size_t j = 0; j < rows[i].size(); ++j) os << (j ? "," : "") << rows[i][j];
  }
  return os.str();
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  if (blank(text)) return Partition();
  return Partition(parse_list(text));
}

int Partition::row_length(int i) const {
  if (i < 1 || i > rows()) return 0;
  return parts_[static_cast<std::size_t>(i) - 1];
}

int Partition::column_height(int j) const {
  if (j < 1) return 0;
  int h = 0;
  while (h < rows() && parts_[static_cast<std::size_t>(h)] >= j) ++h;
  return h;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.rows() > rows()) return false;
  for (int i = 1; i <= mu.rows(); ++i)
    if (mu.row_length(i) > row_length(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int j = 1; j <= columns(); ++j) out.push_back(column_height(j));
  return Partition(std::move(out));
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows(); ++i)
    for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
  return out;
}

std::vector<Cell> Partition::corners() const {
  std::vector<Cell> out;
  for (int i = 1; i <= rows(); ++i)
    if (row_length(i) > row_length(i + 1)) out.push_back({i, row_length(i)});
  return out;
}

Partition Partition::without(const Cell& corner) const {
  if (!contains(corner) || row_length(corner.row) != corner.col || row_length(corner.row + 1) == corner.col)
    throw std::invalid_argument("not a corner of " + str());
  std::vector<int> parts = parts_;
  if (--parts[static_cast<std::size_t>(corner.row) - 1] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int Partition::hook_length(int x, int y) const {
  if (!contains(Cell{x, y}))
    throw std::invalid_argument("cell (" + std::to_string(x) + "," + std::to_string(y) + ") outside " + str());
  return (row_length(x) - y) + (column_height(y) - x) + 1;
}

std::string Partition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::overflow_error("factorial out of 64-bit range");
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t hook_alpha(const Partition& lambda) {
  std::int64_t a = 1;
  for (const Cell& c : lambda.cells()) {
    if (__builtin_mul_overflow(a, static_cast<std::int64_t>(lambda.hook_length(c.row, c.col)), &a))
      throw std::overflow_error("hook product out of 64-bit range");
  }
  return a;
}

std::int64_t factorial_product(const Partition& lambda) {
  std::int64_t a = 1;
  for (int p : lambda.parts()) a *= factorial(p);
  return a;
}

std::vector<Partition> enumerate_partitions(int n, const std::optional<Partition>& within) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      Partition p(parts);
      if (!within || within->contains(p)) out.push_back(std::move(p));
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      if (within && k > within->row_length(static_cast<int>(parts.size()) + 1)) continue;
      parts.push_back(k);
      rec(remaining - k, k);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// ------------------------------------------------------------- YoungTableau

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  shape_ = Partition(parts);
  std::vector<int> all = entries();
  for (int x : all)
    if (x < 1) throw std::invalid_argument("tableau entries must be positive");
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("tableau entries must be distinct");
}

YoungTableau YoungTableau::canonical(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : shape.parts()) {
    std::vector<int> r;
    for (int j = 0; j < len; ++j) r.push_back(next++);
    rows.push_back(std::move(r));
  }
  return YoungTableau(std::move(rows));
}

YoungTableau YoungTableau::parse(std::string_view text) { return YoungTableau(parse_rows(text)); }

int YoungTableau::at(const Cell& c) const {
  if (!shape_.contains(c))
    throw std::invalid_argument("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") outside tableau");
  return rows_[static_cast<std::size_t>(c.row) - 1][static_cast<std::size_t>(c.col) - 1];
}

const std::vector<int>& YoungTableau::row(int i) const {
  if (i < 1 || i > shape_.rows()) throw std::invalid_argument("row index out of range");
  return rows_[static_cast<std::size_t>(i) - 1];
}

std::vector<int> YoungTableau::column(int j) const {
  std::vector<int> out;
  for (int i = 1; i <= shape_.column_height(j); ++i) out.push_back(at(i, j));
  return out;
}

std::vector<int> YoungTableau::entries() const {
  std::vector<int> out;
  for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
  return out;
}

int YoungTableau::max_entry() const {
  int m = 0;
  for (const auto& r : rows_)
    for (int x : r) m = std::max(m, x);
  return m;
}

bool YoungTableau::has_entry(int x) const {
  for (const auto& r : rows_)
    if (std::find(r.begin(), r.end(), x) != r.end()) return true;
  return false;
}

Cell YoungTableau::find(int x) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] == x) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
  throw std::invalid_argument("entry " + std::to_string(x) + " not in tableau");
}

YoungTableau YoungTableau::restrict_to(const Partition& mu) const {
  if (!shape_.contains(mu)) throw std::invalid_argument("restrict_to: " + mu.str() + " not inside " + shape_.str());
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= mu.rows(); ++i) {
    const auto& r = row(i);
    rows.emplace_back(r.begin(), r.begin() + mu.row_length(i));
  }
  return YoungTableau(std::move(rows));
}

YoungTableau YoungTableau::without(const Cell& corner) const { return restrict_to(shape_.without(corner)); }

bool YoungTableau::has_subtableau(const YoungTableau& S) const {
  if (!shape_.contains(S.shape())) return false;
  return restrict_to(S.shape()) == S;
}

YoungTableau YoungTableau::relabel(const Permutation& d) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (int& x : r) {
      if (x > d.degree()) throw std::invalid_argument("relabel: permutation degree too small");
      x = d(x);
    }
  return YoungTableau(std::move(rows));
}

std::string YoungTableau::str() const { return format_rows(rows_); }

// ------------------------------------------------------------------- blocks

std::vector<int> BlockDecomposition::hook_numbers(int u) const {
  std::vector<int> out;
  int cumulative = 0;
  for (const Block& b : blocks) {
    cumulative += b.length;
    out.push_back(cumulative + u - b.height);
  }
  return out;
}

BlockDecomposition blocks_from_column(const YoungTableau& S, int v) {
  const Partition& mu = S.shape();
  if (v < 0 || v > mu.columns())
    throw std::invalid_argument("blocks_from_column: v=" + std::to_string(v) + " outside 0.." +
                                std::to_string(mu.columns()));
  BlockDecomposition out;
  for (int j = v + 1; j <= mu.columns(); ++j) {
    const int h = mu.column_height(j);
    if (out.blocks.empty() || out.blocks.back().height != h) out.blocks.push_back(Block{j, 0, h, {}});
    Block& b = out.blocks.back();
    ++b.length;
    const auto col = S.column(j);
    b.entries.insert(b.entries.end(), col.begin(), col.end());
  }
  return out;
}

// ------------------------------------------------------- dominance, L(T;S)

bool dominates(const YoungTableau& s_prime, const YoungTableau& s) {
  auto a = s_prime.entries();
  auto b = s.entries();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::invalid_argument("dominates: tableaux have different entries");
  for (int i = 1; i <= static_cast<int>(a.size()); ++i)
    if (a[static_cast<std::size_t>(i) - 1] != i) throw std::invalid_argument("dominates: entries must be 1..k");
  for (int x : a)
    if (s_prime.column_of(x) > s.column_of(x)) return false;
  return true;
}

bool in_L_set(const Permutation& sigma, const YoungTableau& T, const YoungTableau& S) {
  if (!T.has_subtableau(S)) throw std::invalid_argument("in_L_set: S is not a subtableau of T");
  if (sigma.degree() < T.max_entry()) throw std::invalid_argument("in_L_set: permutation degree too small");
  bool fixes_all = true;
  for (int s : S.entries()) {
    const int image = sigma(s);
    if (image == s) continue;
    fixes_all = false;
    if (!T.has_entry(image) || T.column_of(image) >= T.column_of(s)) return false;
  }
  return !fixes_all || sigma.is_identity();
}

Cell rightmost_corner_outside(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu) || lambda == mu)
    throw std::invalid_argument("rightmost_corner_outside: need " + mu.str() + " strictly inside " + lambda.str());
  int v = 0;
  for (int j = 1; j <= lambda.columns(); ++j)
    if (lambda.column_height(j) != mu.column_height(j)) v = j;
  return {lambda.column_height(v), v};
}

Cell rightmost_corner_outside(const YoungTableau& T, const YoungTableau& S) {
  if (!T.has_subtableau(S)) throw std::invalid_argument("rightmost_corner_outside: S is not a subtableau of T");
  return rightmost_corner_outside(T.shape(), S.shape());
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << '(' << p.str() << ')'; }
std::ostream& operator<<(std::ostream& os, const YoungTableau& t) { return os << t.str(); }

}  // namespace ysym
