#pragma once

#include <utility>
#include <vector>

#include "ysym/algebra.hpp"
#include "ysym/filling.hpp"

namespace ysym {

/// Elements of the generic tensor algebra sum_n Q[S_n]: the basis monomial z_w
/// of degree n is the permutation w, so a homogeneous element is an AlgebraElement.
using TensorElement = AlgebraElement;

/// Bilinear extension of the star product; degrees add.
TensorElement concat_mul(const TensorElement& x, const TensorElement& y);

/// c_lambda of the canonical tableau of shape lambda (1..n row by row), cached.
const AlgebraElement& canonical_symmetrizer(const Partition& lambda);

/// The monomial T_can o F^-1 of a bijective filling: it sends F(cell) to T_can(cell).
Permutation tabloid_monomial(const Filling& F);

/// c_lambda(T_can) z_{T_can o F^-1}.
TensorElement realize_tabloid(const Filling& F);

/// One shuffling step on F at columns (i, i+1): X = C_i \ [k], Y = C_{i+1} cap [k].
/// Returns the exchanges rho != 1 as (sign(rho), rho o F); then
/// [F] = -sum sign(rho) [rho o F].
std::vector<std::pair<int, Filling>> shuffle_exchanges(const Filling& F, int i, int k);

/// Rewrites [G] as sum c_j [H_j] where each H_j has column-sorted entries and
/// H_j^-1([k]) is a Young diagram. Labels <= k only ever move left.
std::vector<std::pair<Rational, Filling>> straighten(const Filling& G, int k);

}  // namespace ysym
