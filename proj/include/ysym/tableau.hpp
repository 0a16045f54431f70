#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ysym/permutation.hpp"

namespace ysym {

/// A box of a Young diagram, 1-based (row, column).
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  /// "4,2,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int columns() const { return parts_.empty() ? 0 : parts_.front(); }
  /// lambda_i, zero past the last row.
  int row_length(int i) const;
  /// lambda'_j, zero past the last column.
  int column_height(int j) const;
  bool contains(const Cell& c) const { return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row); }
  /// mu is a subdiagram of this.
  bool contains(const Partition& mu) const;

  Partition conjugate() const;
  /// Cells row by row, left to right.
  std::vector<Cell> cells() const;
  /// Cells whose removal leaves a partition.
  std::vector<Cell> corners() const;
  Partition without(const Cell& corner) const;

  int hook_length(int x, int y) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Product of all hook lengths of the diagram.
std::int64_t hook_alpha(const Partition& lambda);
/// Product of factorials of the parts.
std::int64_t factorial_product(const Partition& lambda);
std::int64_t factorial(int n);

/// All partitions of n, lexicographically descending; optionally only those inside `within`.
std::vector<Partition> enumerate_partitions(int n, const std::optional<Partition>& within = std::nullopt);

/// Bijection from the cells of a diagram onto a set of distinct positive integers.
class YoungTableau {
 public:
  YoungTableau() = default;
  /// rows[i] lists row i+1 left to right; must be a valid shape with distinct positive entries.
  explicit YoungTableau(std::vector<std::vector<int>> rows);
  /// Fills the diagram with 1..n row by row.
  static YoungTableau canonical(const Partition& shape);
  /// "1,2,3,6/4,5/7"
  static YoungTableau parse(std::string_view text);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(const Cell& c) const;
  int at(int row, int col) const { return at(Cell{row, col}); }
  /// R_i(T), left to right.
  const std::vector<int>& row(int i) const;
  /// C_j(T), top to bottom.
  std::vector<int> column(int j) const;
  std::vector<int> entries() const;
  int max_entry() const;
  bool has_entry(int x) const;
  /// Position of an entry; throws when absent.
  Cell find(int x) const;
  int column_of(int x) const { return find(x).col; }

  /// T restricted to the subdiagram mu.
  YoungTableau restrict_to(const Partition& mu) const;
  /// T with a corner box removed.
  YoungTableau without(const Cell& corner) const;
  /// True when S == T|_{shape(S)}.
  bool has_subtableau(const YoungTableau& S) const;

  /// delta . T: every entry x replaced by d(x).
  YoungTableau relabel(const Permutation& d) const;

  std::string str() const;

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

/// Maximal runs of equal-height columns.
struct Block {
  int first_column = 0;  // column index in the tableau the block was taken from
  int length = 0;
  int height = 0;
  std::vector<int> entries;
};

struct BlockDecomposition {
  std::vector<Block> blocks;

  bool empty() const { return blocks.empty(); }
  std::size_t size() const { return blocks.size(); }
  /// r_i = l_1 + ... + l_i + u - h_i: the hook lengths of the parent diagram at (h_i, v).
  std::vector<int> hook_numbers(int u) const;
};

/// Blocks of the tableau obtained by deleting columns 1..v of S.
BlockDecomposition blocks_from_column(const YoungTableau& S, int v);

/// S' dominates S: every entry sits weakly left in S' of where it sits in S.
bool dominates(const YoungTableau& s_prime, const YoungTableau& s);

/// Membership in L(T;S): every entry of S is fixed or sent strictly left (in T),
/// and only the identity fixes all of S.
bool in_L_set(const Permutation& sigma, const YoungTableau& T, const YoungTableau& S);

/// The corner (u,v) of lambda outside mu with the largest column.
Cell rightmost_corner_outside(const Partition& lambda, const Partition& mu);
Cell rightmost_corner_outside(const YoungTableau& T, const YoungTableau& S);

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const YoungTableau& t);

/// Parses "a,b,c/d,e/f" into rows of integers (no validation beyond syntax).
std::vector<std::vector<int>> parse_rows(std::string_view text);
std::string format_rows(const std::vector<std::vector<int>>& rows);

}  // namespace ysym
