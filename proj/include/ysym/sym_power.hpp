#pragma once

#include "ysym/algebra.hpp"
#include "ysym/filling.hpp"

namespace ysym {

/// Elements of the partial symmetrization S^(d) in degree nd.
///
/// A monomial z_{A_1} ... z_{A_n} (commuting variables indexed by d-subsets)
/// is stored as its canonical permutation: blocks listed in order of their
/// smallest element, each block ascending. The AlgebraElement only serves as
/// a sparse map from those representatives to coefficients.
struct SymElement {
  int d = 1;
  AlgebraElement terms;

  int degree() const { return terms.degree(); }
  bool is_zero() const { return terms.is_zero(); }
  friend bool operator==(const SymElement&, const SymElement&) = default;
};

/// Canonical representative of pi(z_w).
Permutation sym_canonical(const Permutation& w, int d);

/// pi: linear, sends z_w to the monomial with blocks w({d(i-1)+1..di}).
SymElement project_sym(const AlgebraElement& x, int d);

/// The monomial attached to a d-to-one filling: block i is T_can(F^-1(i)).
Permutation dn_monomial(const Filling& F, int d);

/// f . y for f in Q[S_{nd}].
SymElement act(const AlgebraElement& f, const SymElement& y);
/// Product in S^(d): concatenation of monomials.
SymElement sym_mul(const SymElement& x, const SymElement& y);

/// pi(c_lambda(T_can) z_{T_can o F^-1}), computed by applying the column and
/// row factors (1 -/+ sum of transpositions) one at a time to monomials.
SymElement realize_dn_tabloid(const Filling& F, int d);

/// The d-to-one filling obtained by relabelling a lift: j -> ceil(j / d).
Filling collapse_lift(const Filling& lifted, int d);
/// A bijective filling whose collapse is F: the cells holding label i get
/// d(i-1)+1..di in reading order.
Filling lift_filling(const Filling& F, int d);

/// Canonical representative of the class of F under relabelling x -> s(x),
/// permuting entries inside a column (with sign) and swapping equal-height
/// columns. sign 0 means [F] = 0 by a repeated column entry. With
/// relabel = false the labels are kept as they are.
SignedFilling canonical_dn_form(const Filling& F, bool relabel = true);

}  // namespace ysym
