#pragma once

#include <string>
#include <vector>

#include "ysym/algebra.hpp"
#include "ysym/tableau.hpp"

namespace ysym {

/// Everything attached to a pair (T, S) where T is S plus one box (u, v) holding a.
struct CornerSetup {
  YoungTableau T, S;
  int n = 0;
  int a = 0;
  int u = 0, v = 0;
  std::vector<AlgebraElement> z;  // z[j-1] = sum_{b in C_j(S)} (a, b), j = 1..mu_1
  BlockDecomposition blocks;      // blocks of S with its first v-1 columns removed
  std::vector<int> l, h, r;       // lengths, heights, hook numbers of those blocks
  std::vector<AlgebraElement> x;  // x[i-1] = sum_{b in B_i} (a, b)
  AlgebraElement X;               // sum_{j >= v} z_j
  AlgebraElement Z;               // sum over all of S
  AlgebraElement a_lambda;        // row symmetrizer of T
  AlgebraElement c_mu;            // Young symmetrizer of S

  int m() const { return static_cast<int>(x.size()); }
  /// s^t_i for 1 <= i <= t <= m.
  int s(int t, int i) const;
  /// X_t = x_1 + ... + x_t.
  AlgebraElement X_t(int t) const;
  /// (X_t - s^t_1) ... (X_t - s^t_t).
  AlgebraElement Q(int t) const;
  /// (x_1 - r_1) ... (x_t - r_t).
  AlgebraElement P(int t) const;
};

CornerSetup make_corner_setup(const YoungTableau& T, const YoungTableau& S);

struct IdentityCheck {
  std::string id;
  bool pass = true;
  std::size_t instances = 0;
  AlgebraElement residual;  // first nonzero residual when failing
};

struct CornerReport {
  Partition shape, subshape;
  std::vector<IdentityCheck> checks;

  bool all_pass() const;
  /// "PASS <id> <shape> <subshape>" per check.
  std::vector<std::string> lines() const;
};

/// Runs every single-box identity (factorisations of the symmetrizers, column and
/// block relations, cycle sandwiches, left-column annihilation, commuting of the
/// total sum, polynomial sandwiches, annihilators and the P/Q congruences) on T, S.
CornerReport verify_corner_identities(const YoungTableau& T, const YoungTableau& S);

}  // namespace ysym
