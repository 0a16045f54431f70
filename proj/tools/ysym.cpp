// ysym: products of Young symmetrizers, tabloid certificates and the verification sweep.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ysym/certificate.hpp"
#include "ysym/graph.hpp"
#include "ysym/json_io.hpp"
#include "ysym/sweep.hpp"
#include "ysym/symmetrizer.hpp"
#include "ysym/tabloid.hpp"

using namespace ysym;

namespace {

// Dense-word brute force for --brute. Builds the symmetrizers straight from
// the tableau rows and multiplies term by term; nothing here calls the
// library's symmetrizer or product-expansion code.
namespace brute {

using Word = std::vector<int>;  // word[i-1] = p(i)
using Elem = std::map<Word, Rational>;

Word identity(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

Word compose(const Word& p, const Word& q) {
  Word r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i]) - 1];
  return r;
}

Elem mul(const Elem& f, const Elem& g) {
  Elem out;
  for (const auto& [p, a] : f)
    for (const auto& [q, b] : g) {
      Rational& slot = out[compose(p, q)];
      slot += a * b;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// Sum (signed or not) over all permutations of each group of entries.
Elem group_sum(const std::vector<std::vector<int>>& groups, int n, bool signed_sum) {
  Elem acc{{identity(n), Rational(1)}};
  for (const auto& g : groups) {
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> image = sorted;
    Elem factor;
    do {
      Word w = identity(n);
      for (std::size_t i = 0; i < sorted.size(); ++i) w[static_cast<std::size_t>(sorted[i]) - 1] = image[i];
      int inversions = 0;
      for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j) inversions += image[i] > image[j];
      factor[w] = Rational(signed_sum && (inversions % 2) ? -1 : 1);
    } while (std::next_permutation(image.begin(), image.end()));
    acc = mul(acc, factor);
  }
  return acc;
}

Elem symmetrizer(const std::vector<std::vector<int>>& rows, int n) {
  std::vector<std::vector<int>> cols;
  for (std::size_t j = 0; j < rows.front().size(); ++j) {
    std::vector<int> c;
    for (const auto& r : rows)
      if (j < r.size()) c.push_back(r[j]);
    cols.push_back(c);
  }
  return mul(group_sum(rows, n, false), group_sum(cols, n, true));
}

Elem from_algebra(const AlgebraElement& f) {
  Elem out;
  for (const auto& [p, c] : f.terms()) out[p.word()] = c;
  return out;
}

Json to_json(const Elem& f, int n) {
  Json terms = Json::array();
  for (const auto& [w, c] : f) terms.push_back({{"perm", w}, {"coeff", c.str()}});
  return {{"degree", n}, {"terms", std::move(terms)}};
}

}  // namespace brute

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2);
  std::cout << text << "\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text << "\n";
  }
}

std::string slurp_or_text(const std::string& arg) {
  std::ifstream f(arg);
  if (!f) return arg;
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct Options {
  std::string shape, tableau, subshape, suites, out, filling, graph, subgraph;
  int k = 0, d = 1, jobs = 1;
  std::optional<int> max_n;
  bool brute = false, check = false;
};

int cmd_product(const Options& o) {
  const Partition lambda = Partition::parse(o.shape);
  const YoungTableau T = o.tableau.empty() ? YoungTableau::canonical(lambda) : YoungTableau::parse(o.tableau);
  if (T.shape() != lambda) throw std::invalid_argument("tableau shape differs from --shape");
  const Partition mu = Partition::parse(o.subshape);
  if (!lambda.contains(mu) || mu.size() == 0) throw std::invalid_argument("--subshape must be a nonempty subdiagram of --shape");
  const YoungTableau S = T.restrict_to(mu);
  const int n = T.max_entry();

  const ExpansionMultiplier E = expand_product(T, S, n);
  Json j = {{"shape", lambda.str()}, {"tableau", T.str()}, {"subtableau", S.str()},
            {"source", E.source == MultiplierSource::closed_form ? "closed_form" : "recursive"},
            {"integral", E.integral()}, {"multiplier", to_json(E.element)}};
  if (mu.size() + 1 == lambda.size()) {
    const CornerData cd = corner_data(T, S, n);
    Json sums = Json::array();
    for (const auto& x : cd.block_sums) sums.push_back(to_json(x));
    j["corner"] = {{"entry", cd.entry}, {"hooks", cd.hooks}, {"block_sums", std::move(sums)}};
  }
  bool agree = true;
  if (o.brute) {
    const brute::Elem cT = brute::symmetrizer(T.rows(), n);
    const brute::Elem direct = brute::mul(cT, brute::symmetrizer(S.rows(), n));
    const brute::Elem via_E = brute::mul(cT, brute::from_algebra(E.element));
    agree = direct == via_E;
    j["brute_product"] = brute::to_json(direct, n);
    j["agree"] = agree;
  }
  emit(j, o.out);
  return agree ? 0 : 1;
}

int cmd_verify(const Options& o) {
  SweepConfig config;
  config.max_n = o.max_n;
  config.suites = o.suites.empty() ? suite_names() : split_list(o.suites);
  for (const auto& s : config.suites) default_max_n(s);  // rejects unknown names
  config.jobs = o.jobs;
  config.out = o.out;
  const SweepReport report = run_sweep(config);
  for (const auto& s : report.suites)
    std::cerr << (s.failures == 0 ? "PASS " : "FAIL ") << s.name << " max_n=" << s.max_n << " cases=" << s.cases
              << " failures=" << s.failures << " seconds=" << s.seconds << "\n";
  std::cout << report.to_json().dump(2) << "\n";
  return report.all_pass() ? 0 : 1;
}

int cmd_certificate(const Options& o) {
  const std::string text = o.filling.empty() ? o.tableau : o.filling;
  if (text.empty()) throw std::invalid_argument("no filling given");
  const Filling F = Filling::parse(text);
  if (o.k < 1) throw std::invalid_argument("--k must be at least 1");
  const Certificate cert = o.d == 1 ? membership_certificate(F, o.k) : dn_membership_certificate(F, o.k, o.d);
  Json j = {{"certificate", to_json(cert)}};
  bool ok = true;
  if (o.check) {
    // Round-trip through JSON so the check sees only the serialized form.
    const CertificateCheck check = verify_certificate(certificate_from_json(to_json(cert)));
    ok = check.ok;
    j["check"] = {{"ok", check.ok}, {"message", check.message}};
  }
  if (o.d == 1) {
    Json view = Json::array();
    for (const auto& G : dominance_view(cert)) view.push_back(G.str());
    j["dominating"] = std::move(view);
  }
  emit(j, o.out);
  return ok ? 0 : 1;
}

int cmd_graph(const Options& o) {
  const MultiGraph Q = MultiGraph::parse(slurp_or_text(o.graph));
  const int d = o.d > 1 ? o.d : (Q.d > 0 ? Q.d : o.d);
  const Filling F = graph_tabloid(Q, d);
  const SignedFilling canon = canonical_dn_form(F);
  Json j = {{"graph", Q.str()}, {"d", d}, {"shape", F.shape().str()}, {"tabloid", F.str()},
            {"canonical", canon.filling.str()}, {"sign", canon.sign}};
  bool ok = true;
  if (!o.subgraph.empty()) {
    const SubgraphMembership r = subgraph_membership(Q, MultiGraph::parse(slurp_or_text(o.subgraph)), d);
    Json graphs = Json::array();
    for (const auto& g : r.generator_graphs) graphs.push_back(g.str());
    j["membership"] = {{"target", r.target.str()}, {"certificate", to_json(r.certificate)},
                       {"generator_graphs", std::move(graphs)}, {"in_family", r.generators_in_family}};
    if (o.check) {
      const CertificateCheck check = verify_certificate(certificate_from_json(to_json(r.certificate)));
      ok = check.ok && r.generators_in_family;
      j["check"] = {{"ok", check.ok}, {"message", check.message}};
    }
  }
  emit(j, o.out);
  return ok ? 0 : 1;
}

int cmd_straighten(const Options& o) {
  const Filling G = Filling::parse(o.filling);
  Json terms = Json::array();
  for (const auto& [c, H] : straighten(G, o.k)) terms.push_back({{"coeff", c.str()}, {"filling", H.str()}});
  Json j = {{"filling", G.str()}, {"k", o.k}, {"terms", std::move(terms)}};
  bool ok = true;
  if (o.check) {
    TensorElement rhs(G.size());
    for (const auto& [c, H] : straighten(G, o.k)) rhs += c * realize_tabloid(H);
    ok = rhs == realize_tabloid(G);
    j["check"] = {{"ok", ok}};
  }
  emit(j, o.out);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Young symmetrizer products, tabloid certificates and exhaustive verification"};
  app.require_subcommand(1);
  Options o;

  auto* product = app.add_subcommand("product", "Expand c(T) c(S) = c(T) E for a subtableau S");
  product->add_option("--shape", o.shape, "Partition of T, e.g. 4,3,1,1")->required();
  product->add_option("--tableau", o.tableau, "Rows of T, e.g. 1,2,3,4/5,6,7/8/9 (default: canonical)");
  product->add_option("--subshape", o.subshape, "Partition of S inside the shape")->required();
  product->add_flag("--brute", o.brute, "Also multiply the symmetrizers directly and compare");
  product->add_option("--out", o.out, "Also write the JSON here");

  auto* verify = app.add_subcommand("verify", "Run verification suites exhaustively");
  verify->add_option("--suites", o.suites, "Comma separated subset of " + [] {
    std::string s;
    for (const auto& n : suite_names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }());
  verify->add_option("--max-n", o.max_n, "Bound for every selected suite (default: YSYM_MAX_N or per suite)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", o.out, "JSON report path");

  auto* certificate = app.add_subcommand("certificate", "Ideal membership certificate for a tabloid");
  certificate->add_option("filling", o.filling, "Filling, e.g. 1,2,3,6/4,5/7");
  certificate->add_option("--tableau", o.tableau, "Same as the positional filling");
  certificate->add_option("--k", o.k, "Labels 1..k form the subdiagram")->required();
  certificate->add_option("--d", o.d, "Label multiplicity (d > 1: partially symmetrized)")->check(CLI::PositiveNumber);
  certificate->add_flag("--check", o.check, "Re-verify the certificate from its JSON");
  certificate->add_option("--out", o.out, "Also write the JSON here");

  auto* graph = app.add_subcommand("graph", "Tabloid of a multigraph, optionally with a subgraph certificate");
  graph->add_option("graph", o.graph, "Graph file or text, e.g. \"n=4 d=3; 1-2 1-2 2-3 3-4 3-1\"")->required();
  graph->add_option("--d", o.d, "Degree bound (default: the graph's d=)")->check(CLI::PositiveNumber);
  graph->add_option("--subgraph", o.subgraph, "Subgraph on vertices 1..k, file or text");
  graph->add_flag("--check", o.check, "Re-verify the membership certificate");
  graph->add_option("--out", o.out, "Also write the JSON here");

  auto* straighten_cmd = app.add_subcommand("straighten", "Rewrite a tabloid so that labels 1..k form a diagram");
  straighten_cmd->add_option("filling", o.filling, "Bijective filling")->required();
  straighten_cmd->add_option("--k", o.k, "Split label")->required();
  straighten_cmd->add_flag("--check", o.check, "Compare both sides after realization");
  straighten_cmd->add_option("--out", o.out, "Also write the JSON here");

  CLI11_PARSE(app, argc, argv);
  try {
    if (product->parsed()) return cmd_product(o);
    if (verify->parsed()) return cmd_verify(o);
    if (certificate->parsed()) return cmd_certificate(o);
    if (graph->parsed()) return cmd_graph(o);
    if (straighten_cmd->parsed()) return cmd_straighten(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
