#pragma once

#include <vector>

#include "ysym/algebra.hpp"
#include "ysym/tableau.hpp"

namespace ysym {

/// Incrementally built echelon basis of a subspace of Q[S_n]. Stored vectors
/// are primitive integer vectors; elimination is fraction-free.
class SparseSpan {
 public:
  /// Adds v to the spanning set; returns true when the dimension grew.
  bool insert(const AlgebraElement& v);
  bool contains(const AlgebraElement& v) const;
  std::size_t dimension() const { return rows_.size(); }

 private:
  AlgebraElement reduce(AlgebraElement v) const;

  // Each row vanishes at the pivots of all rows inserted before it.
  std::vector<std::pair<Permutation, AlgebraElement>> rows_;
};

/// The congruence f ~ g  <=>  a_lambda(T) c_mu(S) X^i (f - g) = 0 for all i >= 0,
/// where S is T minus the box (u, v) holding a, z_j = sum_{b in C_j(S)} (a, b)
/// and X = sum_{j >= v} z_j.
///
/// X acts on a finite-dimensional space, so the Krylov sequence
/// a_lambda(T) c_mu(S) X^i spans a subspace that stops growing after finitely
/// many steps. Annihilation by that finite spanning set decides the relation.
class CornerCongruence {
 public:
  CornerCongruence(const YoungTableau& T, const YoungTableau& S, int v, int degree = 0);

  bool congruent(const AlgebraElement& f, const AlgebraElement& g) const;
  /// h ~ 0.
  bool annihilated(const AlgebraElement& h) const;

  const AlgebraElement& X() const { return x_; }
  std::size_t krylov_dimension() const { return krylov_.size(); }

 private:
  AlgebraElement x_;
  std::vector<AlgebraElement> krylov_;
};

bool congruent(const AlgebraElement& f, const AlgebraElement& g, const YoungTableau& T, const YoungTableau& S,
               int v);

}  // namespace ysym
