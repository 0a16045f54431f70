#include "ysym/corner_identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "ysym/congruence.hpp"
#include "ysym/symmetrizer.hpp"

namespace ysym {

int CornerSetup::s(int t, int i) const {
  int sum = 0;
  for (int q = 0; q < i; ++q) sum += l[static_cast<std::size_t>(q)];
  return i < t ? sum - h[static_cast<std::size_t>(i)] : sum;
}

AlgebraElement CornerSetup::X_t(int t) const {
  AlgebraElement out(n);
  for (int i = 0; i < t; ++i) out += x[static_cast<std::size_t>(i)];
  return out;
}

AlgebraElement CornerSetup::Q(int t) const {
  const AlgebraElement xt = X_t(t);
  AlgebraElement out = AlgebraElement::identity(n);
  for (int i = 1; i <= t; ++i) out = multiply(out, add_scalar(xt, Rational(-s(t, i))));
  return out;
}

AlgebraElement CornerSetup::P(int t) const {
  AlgebraElement out = AlgebraElement::identity(n);
  for (int i = 0; i < t; ++i)
    out = multiply(out, add_scalar(x[static_cast<std::size_t>(i)], Rational(-r[static_cast<std::size_t>(i)])));
  return out;
}

CornerSetup make_corner_setup(const YoungTableau& T, const YoungTableau& S) {
  if (!T.has_subtableau(S) || T.size() != S.size() + 1)
    throw std::invalid_argument("single-box identities need S equal to T minus one box");
  CornerSetup c;
  c.T = T;
  c.S = S;
  c.n = T.max_entry();
  const Cell corner = rightmost_corner_outside(T.shape(), S.shape());
  c.u = corner.row;
  c.v = corner.col;
  c.a = T.at(corner);
  const int mu1 = S.shape().columns();
  for (int j = 1; j <= mu1; ++j) c.z.push_back(transposition_sum(c.a, S.column(j), c.n));
  c.blocks = blocks_from_column(S, c.v - 1);
  for (const Block& b : c.blocks.blocks) {
    c.l.push_back(b.length);
    c.h.push_back(b.height);
    c.x.push_back(transposition_sum(c.a, b.entries, c.n));
  }
  if (!c.h.empty()) c.r = c.blocks.hook_numbers(c.h.front());
  c.X = AlgebraElement(c.n);
  for (int j = c.v; j <= mu1; ++j) c.X += c.z[static_cast<std::size_t>(j) - 1];
  c.Z = AlgebraElement(c.n);
  for (const auto& zj : c.z) c.Z += zj;
  c.a_lambda = row_symmetrizer(T, c.n);
  c.c_mu = young_c(S, c.n);
  return c;
}

bool CornerReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

std::vector<std::string> CornerReport::lines() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    out.push_back(std::string(c.pass ? "PASS " : "FAIL ") + c.id + " " + shape.str() + " " + subshape.str());
  return out;
}

namespace {

class Recorder {
 public:
  explicit Recorder(CornerReport& r) : report_(r) {}

  IdentityCheck& slot(const std::string& id) {
    for (auto& c : report_.checks)
      if (c.id == id) return c;
    report_.checks.push_back(IdentityCheck{id, true, 0, AlgebraElement()});
    return report_.checks.back();
  }

  void equal(const std::string& id, const AlgebraElement& lhs, const AlgebraElement& rhs) {
    zero(id, lhs - rhs);
  }

  void zero(const std::string& id, const AlgebraElement& residual) {
    IdentityCheck& c = slot(id);
    ++c.instances;
    if (!residual.is_zero() && c.pass) {
      c.pass = false;
      c.residual = residual;
    }
  }

  // Congruence failures report a_lambda c_mu X^i (f - g) for the first offending i.
  void congruent(const std::string& id, const CornerCongruence& cong, const CornerSetup& cs, const AlgebraElement& f,
                 const AlgebraElement& g) {
    if (cong.congruent(f, g)) {
      zero(id, AlgebraElement(cs.n));
      return;
    }
    AlgebraElement w = multiply(cs.a_lambda, cs.c_mu);
    const AlgebraElement diff = f - g;
    for (;;) {
      AlgebraElement res = multiply(w, diff);
      if (!res.is_zero()) {
        zero(id, res);
        return;
      }
      w = multiply(w, cong.X());
    }
  }

 private:
  CornerReport& report_;
};

AlgebraElement one_minus(const AlgebraElement& f, const Rational& scale = 1) {
  return add_scalar(-(scale * f), Rational(1));
}

// Enumerates every permutation of `support` (fixing everything else) in S_n.
void for_each_permutation_of(const std::vector<int>& support, int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> image = support;
  std::sort(image.begin(), image.end());
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    for (std::size_t i = 0; i < support.size(); ++i) word[static_cast<std::size_t>(support[i]) - 1] = image[i];
    fn(Permutation::from_word(word));
  } while (std::next_permutation(image.begin(), image.end()));
}

}  // namespace

CornerReport verify_corner_identities(const YoungTableau& T, const YoungTableau& S) {
  const CornerSetup cs = make_corner_setup(T, S);
  const int n = cs.n;
  const int m = cs.m();
  const int mu1 = S.shape().columns();
  const Partition& mu = S.shape();
  const Rational alpha_mu(hook_alpha(mu));
  const AlgebraElement& c = cs.c_mu;
  const AlgebraElement ac = multiply(cs.a_lambda, c);
  const AlgebraElement zv = cs.v <= mu1 ? cs.z[static_cast<std::size_t>(cs.v) - 1] : AlgebraElement(n);

  CornerReport report{T.shape(), S.shape(), {}};
  Recorder rec(report);

  // Factorisations of the symmetrizers of T through those of S.
  const AlgebraElement a_mu = row_symmetrizer(S, n);
  const Rational mu_fact(factorial_product(mu));
  rec.equal("row-symmetrizer-absorbs", multiply(cs.a_lambda, a_mu), mu_fact * cs.a_lambda);
  rec.equal("column-antisymmetrizer-splits", column_antisymmetrizer(T, n),
            multiply(column_antisymmetrizer(S, n), one_minus(zv)));
  rec.equal("symmetrizer-splits", mu_fact * young_c(T, n), multiply(ac, one_minus(zv)));

  // Merging column v into the first block.
  const CornerData tilde = corner_data(T, S, n);
  AlgebraElement lhs = multiply(c, one_minus(zv));
  for (std::size_t i = 0; i < tilde.block_sums.size(); ++i)
    lhs = multiply(lhs, one_minus(tilde.block_sums[i], Rational(1, tilde.hooks[i])));
  AlgebraElement prod_x = AlgebraElement::identity(n);
  for (int i = 0; i < m; ++i)
    prod_x = multiply(prod_x, one_minus(cs.x[static_cast<std::size_t>(i)], Rational(1, cs.r[static_cast<std::size_t>(i)])));
  rec.equal("block-merge", lhs, multiply(c, prod_x));
  const AlgebraElement first_factor =
      m > 0 ? one_minus(cs.x[0], Rational(1, cs.r[0])) : AlgebraElement::identity(n);
  rec.equal("block-merge-sandwich", multiply(multiply(c, one_minus(zv)), c), multiply(multiply(c, first_factor), c));
  rec.equal("product-reduction", multiply(multiply(ac, first_factor), c), alpha_mu * multiply(ac, prod_x));

  // Column sums: c z_i z_j = c z_i when height(i) <= height(j), and the square.
  for (int i = 1; i <= mu1; ++i) {
    const AlgebraElement& zi = cs.z[static_cast<std::size_t>(i) - 1];
    const AlgebraElement czi = multiply(c, zi);
    for (int j = 1; j <= mu1; ++j) {
      if (i == j || mu.column_height(i) > mu.column_height(j)) continue;
      rec.equal("column-pair", multiply(czi, cs.z[static_cast<std::size_t>(j) - 1]), czi);
    }
    const int hi = mu.column_height(i);
    rec.equal("column-square", multiply(czi, zi),
              multiply(c, add_scalar(Rational(-(hi - 1)) * zi, Rational(hi))));
  }

  // Block sums.
  for (int i = 1; i <= m; ++i) {
    const auto& xi = cs.x[static_cast<std::size_t>(i) - 1];
    const AlgebraElement cxi = multiply(c, xi);
    const int li = cs.l[static_cast<std::size_t>(i) - 1], hi = cs.h[static_cast<std::size_t>(i) - 1];
    for (int j = 1; j < i; ++j)
      rec.equal("block-pair", multiply(cxi, cs.x[static_cast<std::size_t>(j) - 1]),
                Rational(cs.l[static_cast<std::size_t>(j) - 1]) * cxi);
    rec.equal("block-square", multiply(cxi, xi),
              multiply(c, add_scalar(Rational(li - hi) * xi, Rational(li * hi))));
  }

  // Cycle sandwiches c (a, b_k, ..., b_1) c over entries in distinct columns.
  std::vector<int> cols;
  std::vector<int> chosen;
  std::function<void(int)> pick_columns = [&](int next) {
    if (cols.size() >= 2) {
      std::function<void(std::size_t)> pick_entries = [&](std::size_t idx) {
        if (idx == cols.size()) {
          const Permutation sigma = Permutation::cycle(n, cs.a, chosen);
          const AlgebraElement lhs_c = multiply(multiply(c, sigma), c);
          const int row1 = S.find(chosen[0]).row, row2 = S.find(chosen[1]).row;
          if (row1 != row2) {
            rec.zero("cycle-sandwich", lhs_c);
          } else {
            const std::vector<int> rest(chosen.begin() + 1, chosen.end());
            const Permutation tau = Permutation::cycle(n, cs.a, rest);
            rec.equal("cycle-sandwich", lhs_c, multiply(multiply(c, tau), c));
          }
          return;
        }
        for (int b : S.column(cols[idx])) {
          chosen.push_back(b);
          pick_entries(idx + 1);
          chosen.pop_back();
        }
      };
      pick_entries(0);
    }
    for (int j = next; j <= mu1; ++j) {
      cols.push_back(j);
      pick_columns(j + 1);
      cols.pop_back();
    }
  };
  pick_columns(1);
  rec.equal("cycle-sandwich-product", multiply(multiply(c, first_factor), c), multiply(multiply(c, prod_x), c));

  // Left columns: a_lambda c_mu sigma (1 - z_j) = 0 for j < v and sigma fixing columns 1..v-1 of S.
  if (cs.v >= 2) {
    std::vector<int> moving{cs.a};
    for (int j = cs.v; j <= mu1; ++j)
      for (int b : S.column(j)) moving.push_back(b);
    // Entries of [n] outside T are free to move as well.
    for (int e = 1; e <= n; ++e)
      if (!T.has_entry(e)) moving.push_back(e);
    for_each_permutation_of(moving, n, [&](const Permutation& sigma) {
      const AlgebraElement acs = multiply(ac, sigma);
      for (int j = 1; j < cs.v; ++j) rec.zero("left-column-annihilation", multiply(acs, one_minus(cs.z[static_cast<std::size_t>(j) - 1])));
    });
  }

  // Z commutes with everything fixing a, in particular with c_mu.
  for (const auto& [sigma, coeff] : c.terms()) {
    (void)coeff;
    rec.equal("total-sum-commutes", multiply(sigma, cs.Z), multiply(cs.Z, sigma));
  }
  rec.equal("total-sum-commutes", multiply(c, cs.Z), multiply(cs.Z, c));

  // a_lambda c_mu alpha_mu X^t = a_lambda c_mu X^t c_mu.
  {
    AlgebraElement acx = ac;
    for (int t = 0; t <= 4; ++t) {
      rec.equal("polynomial-sandwich", alpha_mu * acx, multiply(acx, c));
      acx = multiply(acx, cs.X);
    }
  }

  // Annihilators and the P/Q relations.
  const CornerCongruence cong(T, S, cs.v);
  if (m >= 1) {
    const AlgebraElement x1_minus_l1 = add_scalar(cs.x[0], Rational(-cs.l[0]));
    rec.equal("p1-equals-q1", cs.P(1), x1_minus_l1);
    rec.equal("p1-equals-q1", cs.Q(1), x1_minus_l1);
  }
  for (int i = 1; i <= m; ++i) {
    const auto& xi = cs.x[static_cast<std::size_t>(i) - 1];
    const int li = cs.l[static_cast<std::size_t>(i) - 1], hi = cs.h[static_cast<std::size_t>(i) - 1];
    for (int j = 1; j < i; ++j)
      rec.congruent("block-pair-congruence", cong, cs, multiply(xi, cs.x[static_cast<std::size_t>(j) - 1]),
                    Rational(cs.l[static_cast<std::size_t>(j) - 1]) * xi);
    rec.congruent("block-pair-congruence", cong, cs, multiply(xi, xi),
                  add_scalar(Rational(li - hi) * xi, Rational(li * hi)));
  }
  const Rational h1 = m > 0 ? Rational(cs.h[0]) : Rational(0);
  for (int t = 1; t <= m; ++t) {
    const AlgebraElement Pt = cs.P(t);
    const AlgebraElement Qt = cs.Q(t);
    const AlgebraElement shift = add_scalar(cs.X_t(t), h1);
    for (int j = 2; j <= m; ++j) {
      const auto& xj = cs.x[static_cast<std::size_t>(j) - 1];
      rec.zero("annihilator-p", multiply(multiply(c, xj), Pt));
      rec.congruent("annihilator-p-congruence", cong, cs, multiply(xj, Pt), AlgebraElement(n));
      if (j >= t + 1) {
        rec.zero("annihilator-q", multiply(multiply(c, xj), Qt));
        rec.congruent("annihilator-q-congruence", cong, cs, multiply(xj, Qt), AlgebraElement(n));
      }
    }
    rec.zero("annihilator-p", multiply(multiply(c, add_scalar(cs.x[0], h1)), Pt));
    rec.congruent("annihilator-p-congruence", cong, cs, multiply(add_scalar(cs.x[0], h1), Pt), AlgebraElement(n));
    rec.congruent("p-congruent-q", cong, cs, Pt, Qt);
    rec.congruent("p-shift-congruent-zero", cong, cs, multiply(Pt, shift), AlgebraElement(n));
    rec.congruent("p-shift-congruent-zero", cong, cs, multiply(shift, Pt), AlgebraElement(n));
  }
  rec.equal("p-equals-q-polynomial", multiply(ac, cs.P(m)), multiply(ac, cs.Q(m)));

  return report;
}

}  // namespace ysym
