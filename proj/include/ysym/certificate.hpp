#pragma once

#include <string>
#include <vector>

#include "ysym/algebra.hpp"
#include "ysym/filling.hpp"
#include "ysym/sym_power.hpp"

namespace ysym {

/// left . ([generator] * z_right)
struct CertificateSummand {
  AlgebraElement left;
  Filling generator;
  Permutation right;
};

/// scale [target] = sum_s left_s . ([generator_s] * z_{right_s}).
/// With d == 1 the tabloids live in the generic tensor algebra; with d > 1 they
/// are d-to-one fillings realized in S^(d).
struct Certificate {
  Filling target;
  int k = 0;
  int d = 1;
  Rational scale;
  std::vector<CertificateSummand> summands;
};

/// Membership of [F] in the right ideal generated by [F|_mu] and the tabloids
/// [G_0] of fillings whose labels <= k sit weakly (somewhere strictly) further
/// left. F must be bijective onto 1..n with F^-1([k]) the diagram of mu.
Certificate membership_certificate(const Filling& F, int k);

/// Same for a d-to-one filling: lifts F, certifies the lift, projects to S^(d).
Certificate dn_membership_certificate(const Filling& F, int k, int d);

struct CertificateCheck {
  bool ok = false;
  std::string message;
};

/// Re-realizes every tabloid from scratch and compares both sides exactly.
CertificateCheck verify_certificate(const Certificate& cert);

/// Generators restricted to their labels 1..k, as tableaux (d == 1 only): the
/// dominating family S' with c_lambda(T) in the ideal generated by the c_delta(S').
std::vector<YoungTableau> dominance_view(const Certificate& cert);

/// Throws with the offending cell when F^-1([k]) is not a Young diagram.
Partition require_split(const Filling& F, int k);

}  // namespace ysym
