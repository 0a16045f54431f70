#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ysym/permutation.hpp"
#include "ysym/tableau.hpp"

namespace ysym {

/// A map from the cells of a Young diagram to positive integers. Unlike
/// YoungTableau, entries may repeat (fillings with every label used d times).
class Filling {
 public:
  Filling() = default;
  explicit Filling(std::vector<std::vector<int>> rows);
  static Filling parse(std::string_view text);
  static Filling from_tableau(const YoungTableau& T) { return Filling(T.rows()); }

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(const Cell& c) const { return rows_[static_cast<std::size_t>(c.row) - 1][static_cast<std::size_t>(c.col) - 1]; }
  void set(const Cell& c, int value) { rows_[static_cast<std::size_t>(c.row) - 1][static_cast<std::size_t>(c.col) - 1] = value; }
  /// Column j, top to bottom.
  std::vector<int> column(int j) const;
  int max_entry() const;

  /// label -> number of cells carrying it.
  std::map<int, int> multiplicities() const;
  /// Entries are exactly 1..size(), each once.
  bool is_bijective() const;
  /// Every label 1..n appears exactly d times; returns n.
  std::optional<int> uniform_multiplicity(int d) const;

  /// The cells holding labels <= k form the diagram of a partition; returns it.
  std::optional<Partition> split_shape(int k) const;
  /// Sum over cells with label <= k of the column index.
  int potential(int k) const;

  Filling restrict_to(const Partition& mu) const;
  /// x -> s(x) for every entry.
  Filling relabel(const Permutation& s) const;
  YoungTableau to_tableau() const { return YoungTableau(rows_); }

  std::string str() const;

  friend bool operator==(const Filling&, const Filling&) = default;
  friend auto operator<=>(const Filling& a, const Filling& b) { return a.rows_ <=> b.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Filling with every column sorted ascending, with the sign of the sorting
/// permutation. sign is 0 when some column repeats an entry.
struct SignedFilling {
  int sign = 1;
  Filling filling;
};
SignedFilling sort_columns(const Filling& F);

}  // namespace ysym
