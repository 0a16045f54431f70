#pragma once

#include "ysym/algebra.hpp"
#include "ysym/tableau.hpp"

namespace ysym {

/// Row symmetrizer, column antisymmetrizer and their product c = a b.
struct SymmetrizerTriple {
  AlgebraElement a_part;
  AlgebraElement b_part;
  AlgebraElement c;
};

/// Degrees default to the largest entry of the tableau when passed as 0.
AlgebraElement row_symmetrizer(const YoungTableau& T, int degree = 0);
AlgebraElement column_antisymmetrizer(const YoungTableau& T, int degree = 0);
SymmetrizerTriple young_symmetrizer(const YoungTableau& T, int degree = 0);
/// Just c_lambda(T).
AlgebraElement young_c(const YoungTableau& T, int degree = 0);

enum class MultiplierSource { closed_form, recursive };

/// An element E with c_lambda(T) c_mu(S) = c_lambda(T) E.
struct ExpansionMultiplier {
  AlgebraElement element;
  MultiplierSource source = MultiplierSource::closed_form;

  bool integral() const { return element.all_integral(); }
};

/// Data of the single-box product formula for S = T minus one corner box.
struct CornerData {
  Cell corner;              // (u, v)
  int entry = 0;            // a = T(u, v)
  BlockDecomposition tail;  // blocks of S with its first v columns removed
  std::vector<int> hooks;   // hook lengths r_i of shape(S) at (h_i, v)
  std::vector<AlgebraElement> block_sums;  // x_i = sum over b in block i of (a, b)
};

CornerData corner_data(const YoungTableau& T, const YoungTableau& S, int degree = 0);

/// alpha_mu * prod_i (1 - x_i / r_i), expanded in increasing block order.
ExpansionMultiplier closed_form_multiplier(const YoungTableau& T, const YoungTableau& S, int degree = 0);

/// General product expansion for any subtableau S of T, by peeling off the
/// rightmost box outside S one at a time.
ExpansionMultiplier expand_product(const YoungTableau& T, const YoungTableau& S, int degree = 0);

/// c_lambda(T) (1 - sum_{x in C_j(T)} (a, x)), which vanishes for admissible input:
/// i != j, height(i) <= height(j), a in column i.
AlgebraElement garnir_zero(const YoungTableau& T, int i, int j, int a, int degree = 0);

}  // namespace ysym
