#include "ysym/filling.hpp"

#include <algorithm>
#include <stdexcept>

namespace ysym {

namespace {

Partition shape_of(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  for (const auto& r : rows) {
    if (r.empty()) throw std::invalid_argument("filling: empty row");
    parts.push_back(static_cast<int>(r.size()));
  }
  return Partition(parts);
}

}  // namespace

Filling::Filling(std::vector<std::vector<int>> rows) : shape_(shape_of(rows)), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    for (int x : r)
      if (x < 1) throw std::invalid_argument("filling: entries must be positive");
}

Filling Filling::parse(std::string_view text) { return Filling(parse_rows(text)); }

std::vector<int> Filling::column(int j) const {
  std::vector<int> out;
  for (const auto& r : rows_)
    if (static_cast<int>(r.size()) >= j) out.push_back(r[static_cast<std::size_t>(j) - 1]);
  return out;
}

int Filling::max_entry() const {
  int m = 0;
  for (const auto& r : rows_)
    for (int x : r) m = std::max(m, x);
  return m;
}

std::map<int, int> Filling::multiplicities() const {
  std::map<int, int> out;
  for (const auto& r : rows_)
    for (int x : r) ++out[x];
  return out;
}

bool Filling::is_bijective() const { return uniform_multiplicity(1).has_value(); }

std::optional<int> Filling::uniform_multiplicity(int d) const {
  const auto mult = multiplicities();
  int expected = 1;
  for (const auto& [label, count] : mult) {
    if (label != expected++ || count != d) return std::nullopt;
  }
  return static_cast<int>(mult.size());
}

std::optional<Partition> Filling::split_shape(int k) const {
  std::vector<int> parts;
  for (const auto& r : rows_) {
    int len = 0;
    while (len < static_cast<int>(r.size()) && r[static_cast<std::size_t>(len)] <= k) ++len;
    for (std::size_t j = static_cast<std::size_t>(len); j < r.size(); ++j)
      if (r[j] <= k) return std::nullopt;
    parts.push_back(len);
  }
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) return std::nullopt;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(parts);
}

int Filling::potential(int k) const {
  int p = 0;
  for (const auto& r : rows_)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] <= k) p += static_cast<int>(j) + 1;
  return p;
}

Filling Filling::restrict_to(const Partition& mu) const {
  if (!shape_.contains(mu)) throw std::invalid_argument("restrict_to: shape not contained");
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= mu.rows(); ++i) {
    const auto& r = rows_[static_cast<std::size_t>(i) - 1];
    rows.emplace_back(r.begin(), r.begin() + mu.row_length(i));
  }
  return Filling(std::move(rows));
}

Filling Filling::relabel(const Permutation& s) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (int& x : r) {
      if (x > s.degree()) throw std::invalid_argument("relabel: permutation degree too small");
      x = s(x);
    }
  return Filling(std::move(rows));
}

std::string Filling::str() const { return format_rows(rows_); }

SignedFilling sort_columns(const Filling& F) {
  auto rows = F.rows();
  int sign = 1;
  for (int j = 1; j <= F.shape().columns(); ++j) {
    const int h = F.shape().column_height(j);
    // Insertion sort counts inversions, which fixes the sign.
    for (int i = 1; i < h; ++i) {
      for (int t = i; t > 0; --t) {
        int& above = rows[static_cast<std::size_t>(t) - 1][static_cast<std::size_t>(j) - 1];
        int& below = rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(j) - 1];
        if (above == below) return {0, F};
        if (above < below) break;
        std::swap(above, below);
        sign = -sign;
      }
    }
  }
  return {sign, Filling(std::move(rows))};
}

}  // namespace ysym
