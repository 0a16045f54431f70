#include "ysym/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ysym {

namespace {

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw std::invalid_argument("graph: bad " + what + " '" + s + "'");
  return v;
}

bool multiset_contains(std::vector<std::pair<int, int>> big, std::vector<std::pair<int, int>> small) {
  std::sort(big.begin(), big.end());
  std::sort(small.begin(), small.end());
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

MultiGraph MultiGraph::parse(std::string_view text) {
  MultiGraph g;
  std::string cleaned;
  for (std::string_view rest = text; !rest.empty();) {
    const auto nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view() : rest.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    cleaned.append(line);
    cleaned.push_back(' ');
  }
  std::replace(cleaned.begin(), cleaned.end(), ';', ' ');
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string tok;
  bool have_n = false;
  while (in >> tok) {
    if (tok.rfind("n=", 0) == 0) {
      g.n = parse_int(tok.substr(2), "vertex count");
      have_n = true;
    } else if (tok.rfind("d=", 0) == 0) {
      g.d = parse_int(tok.substr(2), "degree bound");
    } else {
      const auto dash = tok.find('-');
      if (dash == std::string::npos) throw std::invalid_argument("graph: expected an edge a-b, got '" + tok + "'");
      int a = parse_int(tok.substr(0, dash), "vertex");
      int b = parse_int(tok.substr(dash + 1), "vertex");
      if (a == b) throw std::invalid_argument("graph: loops are not allowed (" + tok + ")");
      if (a > b) std::swap(a, b);
      g.edges.emplace_back(a, b);
    }
  }
  int largest = 0;
  for (const auto& [a, b] : g.edges) largest = std::max({largest, a, b});
  if (!have_n) g.n = largest;
  if (g.n < 1) throw std::invalid_argument("graph: no vertices");
  for (const auto& [a, b] : g.edges)
    if (a < 1 || b > g.n) throw std::invalid_argument("graph: vertex outside 1..n");
  return g;
}

int MultiGraph::degree(int vertex) const {
  int deg = 0;
  for (const auto& [a, b] : edges) deg += (a == vertex) + (b == vertex);
  return deg;
}

std::string MultiGraph::str() const {
  std::string out = "n=" + std::to_string(n);
  if (d > 0) out += " d=" + std::to_string(d);
  out += ";";
  for (const auto& [a, b] : edges) out += " " + std::to_string(a) + "-" + std::to_string(b);
  return out;
}

Filling graph_tabloid(const MultiGraph& Q, int d) {
  for (int v = 1; v <= Q.n; ++v)
    if (Q.degree(v) > d)
      throw std::invalid_argument("graph_tabloid: vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(Q.degree(v)) + " > d = " + std::to_string(d));
  std::vector<int> top, bottom;
  for (const auto& [a, b] : Q.edges) {
    top.push_back(a);
    bottom.push_back(b);
  }
  for (int v = 1; v <= Q.n; ++v)
    for (int i = Q.degree(v); i < d; ++i) top.push_back(v);
  std::vector<std::vector<int>> rows{top};
  if (!bottom.empty()) rows.push_back(bottom);
  return Filling(std::move(rows));
}

MultiGraph graph_of_tabloid(const Filling& F, int d) {
  if (F.shape().rows() > 2) throw std::invalid_argument("graph_of_tabloid: more than two rows");
  MultiGraph g;
  g.d = d;
  g.n = F.max_entry();
  for (int j = 1; j <= F.shape().columns(); ++j) {
    const auto col = F.column(j);
    if (col.size() == 2) g.edges.emplace_back(std::min(col[0], col[1]), std::max(col[0], col[1]));
  }
  return g;
}

SubgraphMembership subgraph_membership(const MultiGraph& Q, const MultiGraph& Q_sub, int d) {
  const int k = Q_sub.n;
  if (k < 1 || k > Q.n) throw std::invalid_argument("subgraph_membership: subgraph must use vertices 1..k of Q");
  if (!multiset_contains(Q.edges, Q_sub.edges))
    throw std::invalid_argument("subgraph_membership: edges of the subgraph must be edges of Q");
  for (int v = 1; v <= Q.n; ++v)
    if (Q.degree(v) > d) throw std::invalid_argument("subgraph_membership: degree bound violated");

  // Columns: edges inside 1..k (those of Q' first), edges leaving 1..k with the
  // small endpoint on top, edges outside, then singletons of 1..k before the rest.
  std::vector<std::pair<int, int>> inside = Q_sub.edges, leaving, outside;
  std::vector<std::pair<int, int>> remaining = Q.edges;
  for (const auto& e : Q_sub.edges) remaining.erase(std::find(remaining.begin(), remaining.end(), e));
  for (const auto& [a, b] : remaining) {
    if (b <= k)
      inside.emplace_back(a, b);
    else if (a <= k)
      leaving.emplace_back(a, b);
    else
      outside.emplace_back(a, b);
  }
  std::vector<int> top, bottom;
  for (const auto* group : {&inside, &leaving, &outside})
    for (const auto& [a, b] : *group) {
      top.push_back(a);
      bottom.push_back(b);
    }
  for (int v = 1; v <= Q.n; ++v)
    for (int i = Q.degree(v); i < d; ++i) top.push_back(v);
  std::vector<std::vector<int>> rows{top};
  if (!bottom.empty()) rows.push_back(bottom);

  SubgraphMembership out;
  out.target = Filling(std::move(rows));
  out.certificate = dn_membership_certificate(out.target, k, d);
  const CertificateCheck check = verify_certificate(out.certificate);
  out.verified = check.ok;
  out.message = check.message;

  out.generators_in_family = true;
  for (const auto& s : out.certificate.summands) {
    MultiGraph g = graph_of_tabloid(s.generator, d);
    g.n = k;
    bool member = g.edges.size() <= Q.edges.size();
    if (member) {
      // Labels are kept by the certificate; fall back to relabelled containment.
      std::vector<int> labels(static_cast<std::size_t>(k));
      std::iota(labels.begin(), labels.end(), 1);
      bool contained = false;
      do {
        std::vector<std::pair<int, int>> relabelled;
        for (const auto& [a, b] : Q_sub.edges) {
          const int x = labels[static_cast<std::size_t>(a) - 1], y = labels[static_cast<std::size_t>(b) - 1];
          relabelled.emplace_back(std::min(x, y), std::max(x, y));
        }
        contained = multiset_contains(g.edges, relabelled);
      } while (!contained && std::next_permutation(labels.begin(), labels.end()));
      member = contained;
    }
    out.generators_in_family = out.generators_in_family && member;
    out.generator_graphs.push_back(std::move(g));
  }
  return out;
}

}  // namespace ysym
