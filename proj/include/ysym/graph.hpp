#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ysym/certificate.hpp"
#include "ysym/filling.hpp"

namespace ysym {

/// Vertices 1..n, a multiset of edges (loops excluded) and a degree bound d.
struct MultiGraph {
  int n = 0;
  int d = 0;  // 0 when the text did not specify it
  std::vector<std::pair<int, int>> edges;  // stored with first < second

  /// "n=4 d=3; 1-2 1-2 2-3 3-4 3-1". Blank lines and '#' comments are ignored.
  static MultiGraph parse(std::string_view text);
  int degree(int vertex) const;
  std::string str() const;
};

/// Shape (nd - e, e): one height-2 column per edge, then singleton columns so
/// that every vertex appears d times.
Filling graph_tabloid(const MultiGraph& Q, int d);

/// The graph read off a two-row d-to-one filling: one edge per height-2 column.
MultiGraph graph_of_tabloid(const Filling& F, int d);

/// Certificate that [Q] lies in the ideal generated by graphs on the vertices
/// 1..k of Q' that contain the edges of Q' and have at most |E(Q)| edges.
struct SubgraphMembership {
  Filling target;
  Certificate certificate;
  bool verified = false;
  bool generators_in_family = false;
  std::vector<MultiGraph> generator_graphs;
  std::string message;
};

/// Q' must have vertices 1..k (k = Q'.n) and its edges must be edges of Q.
SubgraphMembership subgraph_membership(const MultiGraph& Q, const MultiGraph& Q_sub, int d);

}  // namespace ysym
