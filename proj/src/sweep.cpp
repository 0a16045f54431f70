#include "ysym/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "ysym/certificate.hpp"
#include "ysym/graph.hpp"
#include "ysym/symmetrizer.hpp"
#include "ysym/tabloid.hpp"

namespace ysym {

// ------------------------------------------------------------------ helpers

std::vector<Filling> all_fillings(const Partition& lambda) {
  std::vector<int> values(static_cast<std::size_t>(lambda.size()));
  std::iota(values.begin(), values.end(), 1);
  std::vector<Filling> out;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int len : lambda.parts()) {
      rows.emplace_back(values.begin() + static_cast<long>(pos), values.begin() + static_cast<long>(pos + len));
      pos += static_cast<std::size_t>(len);
    }
    out.emplace_back(std::move(rows));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

std::vector<Filling> split_fillings(const Partition& lambda, int k) {
  std::vector<Filling> out;
  const int n = lambda.size();
  for (const Partition& mu : enumerate_partitions(k, lambda)) {
    std::vector<Cell> inner, outer;
    for (const Cell& c : lambda.cells()) (mu.contains(c) ? inner : outer).push_back(c);
    std::vector<int> small(static_cast<std::size_t>(k)), big(static_cast<std::size_t>(n - k));
    std::iota(small.begin(), small.end(), 1);
    do {
      std::iota(big.begin(), big.end(), k + 1);
      do {
        std::vector<std::vector<int>> rows;
        for (int len : lambda.parts()) rows.emplace_back(static_cast<std::size_t>(len), 0);
        for (std::size_t i = 0; i < inner.size(); ++i)
          rows[static_cast<std::size_t>(inner[i].row) - 1][static_cast<std::size_t>(inner[i].col) - 1] = small[i];
        for (std::size_t i = 0; i < outer.size(); ++i)
          rows[static_cast<std::size_t>(outer[i].row) - 1][static_cast<std::size_t>(outer[i].col) - 1] = big[i];
        out.emplace_back(std::move(rows));
      } while (std::next_permutation(big.begin(), big.end()));
    } while (std::next_permutation(small.begin(), small.end()));
  }
  return out;
}

namespace {

// Every filling of lambda using each of 1..n exactly d times.
std::vector<Filling> all_dn_fillings(const Partition& lambda, int d) {
  const int n = lambda.size() / d;
  std::vector<int> values;
  for (int i = 1; i <= n; ++i) values.insert(values.end(), static_cast<std::size_t>(d), i);
  std::vector<Filling> out;
  do {
    std::vector<std::vector<int>> rows;
    std::size_t pos = 0;
    for (int len : lambda.parts()) {
      rows.emplace_back(values.begin() + static_cast<long>(pos), values.begin() + static_cast<long>(pos + len));
      pos += static_cast<std::size_t>(len);
    }
    out.emplace_back(std::move(rows));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

CaseResult ok(std::string label) { return {std::move(label), true, std::nullopt, Json()}; }
CaseResult fail(std::string label, Json detail) { return {std::move(label), false, std::nullopt, std::move(detail)}; }

Json residual_detail(const std::string& what, const AlgebraElement& residual) {
  return {{"check", what}, {"residual", to_json(residual)}};
}

std::string lambda_label(const Partition& lambda) { return "(" + lambda.str() + ")"; }

// Every permutation of values inside each column: calls fn(sign, F o kappa).
void for_each_column_permutation(const Filling& F, const std::function<void(int, const Filling&)>& fn) {
  const Partition& lambda = F.shape();
  std::vector<std::vector<int>> orders;
  for (int j = 1; j <= lambda.columns(); ++j) {
    std::vector<int> o(static_cast<std::size_t>(lambda.column_height(j)));
    std::iota(o.begin(), o.end(), 1);
    orders.push_back(o);
  }
  for (;;) {
    Filling G = F;
    int sign = 1;
    for (int j = 1; j <= lambda.columns(); ++j) {
      const auto& o = orders[static_cast<std::size_t>(j) - 1];
      for (std::size_t r = 0; r < o.size(); ++r) {
        G.set({static_cast<int>(r) + 1, j}, F.at({o[r], j}));
        for (std::size_t s = r + 1; s < o.size(); ++s)
          if (o[r] > o[s]) sign = -sign;
      }
    }
    fn(sign, G);
    std::size_t j = 0;
    while (j < orders.size() && !std::next_permutation(orders[j].begin(), orders[j].end())) ++j;
    if (j == orders.size()) return;
  }
}

// Both shuffling relations on one filling; returns a failure description or null.
Json check_shuffling(const Filling& F) {
  const AlgebraElement base = realize_tabloid(F);
  Json problem;
  for_each_column_permutation(F, [&](int sign, const Filling& G) {
    if (!problem.is_null()) return;
    const AlgebraElement diff = realize_tabloid(G) - Rational(sign) * base;
    if (!diff.is_zero()) problem = residual_detail("column-sign " + G.str(), diff);
  });
  if (!problem.is_null()) return problem;

  const Partition& lambda = F.shape();
  const int n = F.size();
  for (int i = 1; i < lambda.columns(); ++i) {
    const auto ci = F.column(i), cn = F.column(i + 1);
    for (unsigned mx = 0; mx < (1u << ci.size()); ++mx)
      for (unsigned my = 0; my < (1u << cn.size()); ++my) {
        if (__builtin_popcount(mx) + __builtin_popcount(my) <= static_cast<int>(ci.size())) continue;
        std::vector<int> support;
        for (std::size_t t = 0; t < ci.size(); ++t)
          if (mx & (1u << t)) support.push_back(ci[t]);
        for (std::size_t t = 0; t < cn.size(); ++t)
          if (my & (1u << t)) support.push_back(cn[t]);
        std::vector<int> image = support;
        std::sort(image.begin(), image.end());
        std::vector<int> sorted_support = image;
        AlgebraElement sum(n);
        do {
          std::vector<int> word(static_cast<std::size_t>(n));
          std::iota(word.begin(), word.end(), 1);
          for (std::size_t t = 0; t < sorted_support.size(); ++t)
            word[static_cast<std::size_t>(sorted_support[t]) - 1] = image[t];
          const Permutation sigma = Permutation::from_word(word);
          sum += Rational(sigma.sign()) * realize_tabloid(F.relabel(sigma));
        } while (std::next_permutation(image.begin(), image.end()));
        if (!sum.is_zero()) return residual_detail("garnir-sum column " + std::to_string(i), sum);
      }
  }
  return Json();
}

// ------------------------------------------------------------------ suites

std::vector<SweepCase> idempotence_suite(int max_n) {
  std::vector<SweepCase> cases;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lambda : enumerate_partitions(n))
      cases.push_back([lambda] {
        const AlgebraElement& c = canonical_symmetrizer(lambda);
        const AlgebraElement diff = multiply(c, c) - Rational(hook_alpha(lambda)) * c;
        if (!diff.is_zero()) return fail(lambda_label(lambda), residual_detail("c^2 - alpha c", diff));
        return ok(lambda_label(lambda));
      });
  return cases;
}

std::vector<SweepCase> garnir_suite(int max_n) {
  std::vector<SweepCase> cases;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lambda : enumerate_partitions(n))
      cases.push_back([lambda] {
        const YoungTableau T = YoungTableau::canonical(lambda);
        for (int i = 1; i <= lambda.columns(); ++i)
          for (int j = 1; j <= lambda.columns(); ++j) {
            if (i == j || lambda.column_height(i) > lambda.column_height(j)) continue;
            for (int a : T.column(i)) {
              const AlgebraElement r = garnir_zero(T, i, j, a);
              if (!r.is_zero())
                return fail(lambda_label(lambda),
                            residual_detail("i=" + std::to_string(i) + " j=" + std::to_string(j) + " a=" +
                                                std::to_string(a),
                                            r));
            }
          }
        return ok(lambda_label(lambda));
      });
  return cases;
}

std::vector<SweepCase> thm12_suite(int max_n) {
  std::vector<SweepCase> cases;
  for (int n = 2; n <= max_n; ++n)
    for (const Partition& lambda : enumerate_partitions(n))
      for (const Cell& corner : lambda.corners())
        cases.push_back([lambda, corner] {
          const YoungTableau T = YoungTableau::canonical(lambda);
          const YoungTableau S = T.without(corner);
          const std::string label = lambda_label(lambda) + " minus " + std::to_string(T.at(corner));
          const ExpansionMultiplier E = closed_form_multiplier(T, S);
          const AlgebraElement& c = canonical_symmetrizer(lambda);
          const AlgebraElement diff = multiply(c, young_c(S, lambda.size())) - multiply(c, E.element);
          if (!diff.is_zero()) return fail(label, residual_detail("c_lambda c_mu - c_lambda E", diff));
          return ok(label);
        });
  return cases;
}

std::vector<SweepCase> thm11_suite(int max_n) {
  std::vector<SweepCase> cases;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lambda : enumerate_partitions(n))
      for (int k = 1; k <= n; ++k)
        for (const Partition& mu : enumerate_partitions(k, lambda))
          cases.push_back([lambda, mu] {
            const YoungTableau T = YoungTableau::canonical(lambda);
            const YoungTableau S = T.restrict_to(mu);
            const std::string label = lambda_label(lambda) + " over " + lambda_label(mu);
            const ExpansionMultiplier E = expand_product(T, S);
            const AlgebraElement& c = canonical_symmetrizer(lambda);
            const AlgebraElement lhs = multiply(c, young_c(S, lambda.size()));
            CaseResult r = ok(label);
            r.integral = E.integral();
            auto failed = [&](Json detail) {
              CaseResult f = fail(label, std::move(detail));
              f.integral = r.integral;
              return f;
            };
            const AlgebraElement diff = lhs - multiply(c, E.element);
            if (!diff.is_zero()) return failed(residual_detail("product identity", diff));
            if (lhs.is_zero()) return failed(Json{{"check", "product is zero"}});
            if (E.element.coeff(Permutation::identity(lambda.size())) != Rational(hook_alpha(mu)))
              return failed(Json{{"check", "identity coefficient"}, {"multiplier", to_json(E.element)}});
            for (const auto& [sigma, m] : E.element.terms()) {
              if (!in_L_set(sigma, T, S))
                return failed(Json{{"check", "support outside L(T;S)"}, {"perm", sigma.to_cycle_string()}});
              if (m.sign() * sigma.sign() < 0)
                return failed(Json{{"check", "sign pattern"}, {"perm", sigma.to_cycle_string()}, {"coeff", m.str()}});
            }
            return r;
          });
  return cases;
}

std::vector<SweepCase> section4_suite(int max_n) {
  std::vector<SweepCase> cases;
  for (int n = 2; n <= max_n; ++n)
    for (const Partition& lambda : enumerate_partitions(n))
      for (const Cell& corner : lambda.corners())
        cases.push_back([lambda, corner] {
          const YoungTableau T = YoungTableau::canonical(lambda);
          const YoungTableau S = T.without(corner);
          const std::string label = lambda_label(lambda) + " minus " + std::to_string(T.at(corner));
          const CornerReport report = verify_corner_identities(T, S);
          if (!report.all_pass()) return fail(label, to_json(report));
          return ok(label);
        });
  return cases;
}

std::vector<SweepCase> shuffling_suite(int max_n) {
  std::vector<SweepCase> cases;
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lambda : enumerate_partitions(n))
      cases.push_back([lambda] {
        for (const Filling& F : all_fillings(lambda)) {
          Json problem = check_shuffling(F);
          if (!problem.is_null()) {
            problem["filling"] = F.str();
            return fail(lambda_label(lambda), problem);
          }
        }
        return ok(lambda_label(lambda));
      });
  // One size up, a fixed pseudo-random sample of fillings per shape.
  const int m = max_n + 1;
  for (const Partition& lambda : enumerate_partitions(m))
    cases.push_back([lambda, m] {
      std::mt19937 rng(static_cast<unsigned>(1000 * m + lambda.rows()));
      std::vector<int> values(static_cast<std::size_t>(m));
      std::iota(values.begin(), values.end(), 1);
      for (int trial = 0; trial < 12; ++trial) {
        std::shuffle(values.begin(), values.end(), rng);
        std::vector<std::vector<int>> rows;
        std::size_t pos = 0;
        for (int len : lambda.parts()) {
          rows.emplace_back(values.begin() + static_cast<long>(pos), values.begin() + static_cast<long>(pos + len));
          pos += static_cast<std::size_t>(len);
        }
        const Filling F(std::move(rows));
        Json problem = check_shuffling(F);
        if (!problem.is_null()) {
          problem["filling"] = F.str();
          return fail(lambda_label(lambda) + " sampled", problem);
        }
      }
      return ok(lambda_label(lambda) + " sampled");
    });
  return cases;
}

}  // namespace

// Canonical column-sorted forms of the dominating family listed for 1236/45/7, k = 5.
static const char* const kDominatingFamily[] = {"1,2,3/4,5", "1,2,3/4/5", "1,5,3/4/2",
                                                "1,2/4,5/3", "1,2/4,3/5", "1,3/4,5/2"};

namespace {

CaseResult listed_family_case() {
  const Filling F = Filling::parse("1,2,3,6/4,5/7");
  const Certificate cert = membership_certificate(F, 5);
  const CertificateCheck check = verify_certificate(cert);
  const std::string label = "1,2,3,6/4,5/7 k=5";
  if (!check.ok) return fail(label, Json{{"check", "certificate"}, {"message", check.message}});
  const YoungTableau S = YoungTableau::parse("1,2,3/4,5");
  std::vector<Filling> family;
  for (const char* text : kDominatingFamily) family.push_back(sort_columns(Filling::parse(text)).filling);
  for (const YoungTableau& G : dominance_view(cert)) {
    if (!dominates(G, S)) return fail(label, Json{{"check", "dominance"}, {"generator", G.str()}});
    const Filling sorted = sort_columns(Filling::from_tableau(G)).filling;
    if (std::find(family.begin(), family.end(), sorted) == family.end())
      return fail(label, Json{{"check", "listed family"}, {"generator", G.str()}});
  }
  return ok(label);
}

std::vector<SweepCase> certificates_suite(int max_n) {
  std::vector<SweepCase> cases{listed_family_case};
  for (int n = 1; n <= max_n; ++n)
    for (const Partition& lambda : enumerate_partitions(n))
      for (int k = 1; k <= n; ++k)
        cases.push_back([lambda, k] {
          const std::string label = lambda_label(lambda) + " k=" + std::to_string(k);
          for (const Filling& F : split_fillings(lambda, k)) {
            const Certificate cert = membership_certificate(F, k);
            const CertificateCheck check = verify_certificate(cert);
            if (!check.ok) return fail(label, Json{{"filling", F.str()}, {"message", check.message}});
            const YoungTableau S = F.restrict_to(*F.split_shape(k)).to_tableau();
            for (const YoungTableau& G : dominance_view(cert))
              if (!dominates(G, S)) return fail(label, Json{{"filling", F.str()}, {"not dominating", G.str()}});
          }
          return ok(label);
        });
  return cases;
}

std::vector<SweepCase> dn_suite(int max_n) {
  std::vector<SweepCase> cases;
  cases.push_back([] {
    const Filling F = Filling::parse("1,2,3,1,3,3/2,4,4/1,2/4");
    const Filling G = Filling::parse("1,3,4,1,4,4/3,2,2/1,3/2");
    const SymElement f = realize_dn_tabloid(F, 3), g = realize_dn_tabloid(G, 3);
    if (!f.is_zero()) return fail("repeated column entry", Json{{"realization", to_json(f)}});
    if (!(f == g)) return fail("displayed pair", Json{{"left", to_json(f)}, {"right", to_json(g)}});
    return ok("repeated column entry");
  });
  for (int d = 1; d <= 2; ++d)
    for (int n = 1; n <= max_n; ++n)
      for (const Partition& lambda : enumerate_partitions(n * d))
        cases.push_back([lambda, d, n] {
          const std::string label = "d=" + std::to_string(d) + " " + lambda_label(lambda);
          std::vector<int> labels(static_cast<std::size_t>(n));
          for (const Filling& F : all_dn_fillings(lambda, d)) {
            const SymElement base = realize_dn_tabloid(F, d);
            if (sort_columns(F).sign == 0 && !base.is_zero())
              return fail(label, Json{{"check", "repeated column entry"}, {"filling", F.str()}});
            if (d == 1 && !(project_sym(realize_tabloid(F), 1) == base))
              return fail(label, Json{{"check", "d=1 agrees with plain tabloids"}, {"filling", F.str()}});
            std::iota(labels.begin(), labels.end(), 1);
            while (std::next_permutation(labels.begin(), labels.end())) {
              const Filling G = F.relabel(Permutation::from_word(labels));
              if (!(realize_dn_tabloid(G, d) == base))
                return fail(label, Json{{"check", "relabelling"}, {"filling", F.str()}, {"relabelled", G.str()}});
            }
          }
          return ok(label);
        });
  cases.push_back([] {
    const Certificate cert = dn_membership_certificate(Filling::parse("1,1/2,2"), 1, 2);
    const CertificateCheck check = verify_certificate(cert);
    if (!check.ok) return fail("dn certificate 1,1/2,2", Json{{"message", check.message}});
    return ok("dn certificate 1,1/2,2");
  });
  cases.push_back([] {
    const MultiGraph Q = MultiGraph::parse("n=4 d=3; 1-2 1-2 2-3 3-4 3-1");
    const Filling F = graph_tabloid(Q, 3);
    const SignedFilling mine = canonical_dn_form(F);
    const SignedFilling shown = canonical_dn_form(Filling::parse("1,1,1,2,3,4,4/2,2,3,3,4"));
    if (F.shape() != Partition({7, 5}) || !(mine.filling == shown.filling))
      return fail("graph tabloid", Json{{"built", F.str()}, {"canonical", mine.filling.str()},
                                         {"expected", shown.filling.str()}});
    return ok("graph tabloid");
  });
  cases.push_back([] {
    const MultiGraph Q = MultiGraph::parse("n=3 d=2; 1-2 2-3");
    const MultiGraph Qs = MultiGraph::parse("n=2; 1-2");
    const SubgraphMembership r = subgraph_membership(Q, Qs, 2);
    if (!r.verified || !r.generators_in_family)
      return fail("subgraph membership", Json{{"certificate", to_json(r.certificate)}, {"message", r.message},
                                              {"in_family", r.generators_in_family}});
    return ok("subgraph membership");
  });
  return cases;
}

}  // namespace

// ------------------------------------------------------------------ driver

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"idempotence", "garnir",    "thm12",        "thm11",
                                              "section4",    "shuffling", "certificates", "dn"};
  return names;
}

int default_max_n(const std::string& suite) {
  if (suite == "idempotence" || suite == "thm12" || suite == "section4") return 7;
  if (suite == "garnir" || suite == "thm11") return 6;
  if (suite == "shuffling" || suite == "certificates") return 5;
  if (suite == "dn") return 3;
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

int resolve_max_n(const std::string& suite, std::optional<int> requested) {
  const int fallback = default_max_n(suite);
  int n = fallback;
  if (requested) {
    n = *requested;
  } else if (const char* env = std::getenv("YSYM_MAX_N"); env && *env) {
    n = std::atoi(env);
  }
  if (n < 1) throw std::invalid_argument("max_n must be at least 1");
  return n;
}

std::vector<SweepCase> build_suite(const std::string& suite, int max_n) {
  if (suite == "idempotence") return idempotence_suite(max_n);
  if (suite == "garnir") return garnir_suite(max_n);
  if (suite == "thm12") return thm12_suite(max_n);
  if (suite == "thm11") return thm11_suite(max_n);
  if (suite == "section4") return section4_suite(max_n);
  if (suite == "shuffling") return shuffling_suite(max_n);
  if (suite == "certificates") return certificates_suite(max_n);
  if (suite == "dn") return dn_suite(max_n);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

SuiteResult run_suite(const std::string& suite, int max_n, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SweepCase> cases = build_suite(suite, max_n);
  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
      try {
        results[i] = cases[i]();
      } catch (const std::exception& e) {
        results[i] = fail("case " + std::to_string(i), Json{{"exception", e.what()}});
      }
    }
  };
  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult out;
  out.name = suite;
  out.max_n = max_n;
  out.cases = results.size();
  std::size_t integral = 0, probed = 0;
  for (auto& r : results) {
    if (r.integral) {
      ++probed;
      integral += *r.integral;
    }
    if (!r.pass) {
      ++out.failures;
      out.failed.push_back(std::move(r));
    }
  }
  if (probed > 0)
    out.extra["integrality"] = {{"cases", probed},
                                {"integral", integral},
                                {"fraction", static_cast<double>(integral) / static_cast<double>(probed)}};
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

bool SweepReport::all_pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.failures == 0; });
}

Json SweepReport::to_json() const {
  Json suites_json = Json::array();
  for (const auto& s : suites) {
    Json failed = Json::array();
    for (const auto& f : s.failed) failed.push_back({{"case", f.label}, {"detail", f.detail}});
    Json entry = {{"suite", s.name},     {"max_n", s.max_n},     {"cases", s.cases},
                  {"failures", s.failures}, {"seconds", s.seconds}, {"failed", std::move(failed)}};
    for (const auto& [key, value] : s.extra.items()) entry[key] = value;
    suites_json.push_back(std::move(entry));
  }
  return {{"pass", all_pass()}, {"suites", std::move(suites_json)}};
}

SweepReport run_sweep(const SweepConfig& config) {
  if (config.suites.empty()) throw std::invalid_argument("no suites selected");
  SweepReport report;
  for (const auto& suite : config.suites)
    report.suites.push_back(run_suite(suite, resolve_max_n(suite, config.max_n), config.jobs));
  if (!config.out.empty()) {
    std::ofstream out(config.out);
    if (!out) throw std::runtime_error("cannot write " + config.out);
    out << report.to_json().dump(2) << "\n";
  }
  return report;
}

}  // namespace ysym
