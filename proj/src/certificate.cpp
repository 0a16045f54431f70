#include "ysym/certificate.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "ysym/symmetrizer.hpp"
#include "ysym/tabloid.hpp"

namespace ysym {

Partition require_split(const Filling& F, int k) {
  if (k < 1 || k > F.size()) throw std::invalid_argument("k must lie in 1.." + std::to_string(F.size()));
  if (auto mu = F.split_shape(k)) return *mu;
  // Report a cell holding a label <= k with a larger label left of it or above it.
  const Partition& lambda = F.shape();
  for (const Cell& c : lambda.cells()) {
    if (F.at(c) > k) continue;
    const bool left_big = c.col > 1 && F.at({c.row, c.col - 1}) > k;
    const bool up_big = c.row > 1 && F.at({c.row - 1, c.col}) > k;
    if (left_big || up_big)
      throw std::invalid_argument("labels 1.." + std::to_string(k) + " do not form a Young diagram: cell (" +
                                  std::to_string(c.row) + "," + std::to_string(c.col) + ") holds " +
                                  std::to_string(F.at(c)));
  }
  throw std::invalid_argument("labels 1.." + std::to_string(k) + " do not form a Young diagram");
}

Certificate membership_certificate(const Filling& F, int k) {
  const Partition mu = require_split(F, k);
  if (!F.is_bijective()) throw std::invalid_argument("membership_certificate: filling must be bijective onto 1..n");
  const Partition& lambda = F.shape();
  const int n = lambda.size();
  const Rational alpha_mu(hook_alpha(mu));
  Certificate cert{F, k, 1, alpha_mu, {}};

  if (k == n) {
    cert.summands.push_back({AlgebraElement::scalar(n, alpha_mu), F, Permutation::identity(0)});
    return cert;
  }

  const YoungTableau T = YoungTableau::canonical(lambda);
  const AlgebraElement& c_lambda = canonical_symmetrizer(lambda);
  std::map<Partition, AlgebraElement> multipliers;
  auto multiplier = [&](const Partition& delta) -> const AlgebraElement& {
    auto it = multipliers.find(delta);
    if (it == multipliers.end())
      it = multipliers.emplace(delta, expand_product(T, T.restrict_to(delta), n).element).first;
    return it->second;
  };

  // w [H] still owed, for split fillings H; larger potential first, since each
  // expansion only produces fillings whose small labels moved strictly left.
  using Key = std::pair<int, Filling>;
  std::map<Key, Rational, std::greater<Key>> owed;
  owed[{F.potential(k), F}] = alpha_mu;
  std::map<Filling, AlgebraElement> lefts;

  while (!owed.empty()) {
    auto node = owed.extract(owed.begin());
    const Filling& H = node.key().second;
    const Rational w = node.mapped();
    if (w.is_zero()) continue;

    const Partition delta = *H.split_shape(k);
    const Rational scale = w / Rational(hook_alpha(delta));
    const Permutation pi = tabloid_monomial(H);

    // Phi sends the canonical tableau of delta onto T restricted to delta and
    // agrees with pi above k.
    const YoungTableau T0 = YoungTableau::canonical(delta);
    std::vector<int> phi(static_cast<std::size_t>(n));
    for (const Cell& c : delta.cells()) phi[static_cast<std::size_t>(T0.at(c)) - 1] = T.at(c);
    for (int i = k + 1; i <= n; ++i) phi[static_cast<std::size_t>(i) - 1] = pi(i);
    const Filling H0 = H.restrict_to(delta);
    auto [slot, fresh] = lefts.try_emplace(H0, AlgebraElement(n));
    slot->second += scale * multiply(c_lambda, Permutation::from_word(phi));

    for (const auto& [sigma, m] : multiplier(delta).terms()) {
      if (sigma.is_identity()) continue;
      // G = H o T^-1 o sigma^-1 o T realizes to c_lambda(T) sigma z_pi.
      const Permutation sinv = sigma.inverse();
      Filling G = H;
      for (const Cell& c : lambda.cells()) G.set(c, H.at(T.find(sinv(T.at(c)))));
      for (const auto& [coef, Hn] : straighten(G, k)) {
        Rational& slot_w = owed[{Hn.potential(k), Hn}];
        slot_w = slot_w - scale * m * coef;
      }
    }
  }

  for (auto& [gen, left] : lefts)
    if (!left.is_zero()) cert.summands.push_back({std::move(left), gen, Permutation::identity(n - k)});
  return cert;
}

Certificate dn_membership_certificate(const Filling& F, int k, int d) {
  if (d == 1) return membership_certificate(F, k);
  const auto n = F.uniform_multiplicity(d);
  if (!n) throw std::invalid_argument("dn certificate: each label must appear exactly d times");
  if (k < 1 || k > *n) throw std::invalid_argument("dn certificate: k must lie in 1..n");
  require_split(F, k);

  const Certificate lifted = membership_certificate(lift_filling(F, d), k * d);
  Certificate cert{F, k, d, lifted.scale, {}};
  std::map<Filling, AlgebraElement> lefts;
  for (const auto& s : lifted.summands) {
    const SignedFilling g = canonical_dn_form(collapse_lift(s.generator, d), false);
    if (g.sign == 0) continue;  // repeated column entry: the generator is zero
    auto [it, fresh] = lefts.try_emplace(g.filling, AlgebraElement(s.left.degree()));
    it->second += Rational(g.sign) * s.left;
  }
  for (auto& [gen, left] : lefts)
    if (!left.is_zero()) cert.summands.push_back({std::move(left), gen, Permutation::identity((*n - k) * d)});
  return cert;
}

CertificateCheck verify_certificate(const Certificate& cert) {
  try {
    const int N = cert.target.size();
    if (cert.d == 1) {
      const AlgebraElement lhs = cert.scale * realize_tabloid(cert.target);
      AlgebraElement rhs(N);
      for (const auto& s : cert.summands) {
        const Filling& g = s.generator;
        if (!g.is_bijective() || g.size() != cert.k) return {false, "generator " + g.str() + " is not a tabloid on 1..k"};
        if (g.size() + s.right.degree() != N) return {false, "summand degree mismatch"};
        rhs += multiply(s.left, concat_mul(realize_tabloid(g), AlgebraElement::basis(s.right)));
      }
      const AlgebraElement diff = lhs - rhs;
      if (!diff.is_zero()) return {false, "residual with " + std::to_string(diff.size()) + " terms"};
      return {true, "verified " + std::to_string(cert.summands.size()) + " summands"};
    }
    const SymElement lhs{cert.d, cert.scale * realize_dn_tabloid(cert.target, cert.d).terms};
    SymElement rhs{cert.d, AlgebraElement(N)};
    for (const auto& s : cert.summands) {
      const auto labels = s.generator.uniform_multiplicity(cert.d);
      if (!labels || *labels != cert.k) return {false, "generator " + s.generator.str() + " does not use 1..k d times each"};
      const SymElement right{cert.d, AlgebraElement::basis(s.right)};
      rhs.terms += act(s.left, sym_mul(realize_dn_tabloid(s.generator, cert.d), right)).terms;
    }
    const AlgebraElement diff = lhs.terms - rhs.terms;
    if (!diff.is_zero()) return {false, "residual with " + std::to_string(diff.size()) + " terms"};
    return {true, "verified " + std::to_string(cert.summands.size()) + " summands"};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

std::vector<YoungTableau> dominance_view(const Certificate& cert) {
  if (cert.d != 1) throw std::invalid_argument("dominance_view: only for plain tabloids");
  std::vector<YoungTableau> out;
  for (const auto& s : cert.summands) out.push_back(s.generator.to_tableau());
  return out;
}

}  // namespace ysym
