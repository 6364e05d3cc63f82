#include "urigid/configuration.hpp"

#include <algorithm>
#include <set>

namespace urigid {

void check_simple_graph(const Framework& fw) {
  const Index n = fw.num_nodes();
  std::set<Edge> seen;
  for (const Edge& e : fw.edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n) throw Error("edge index out of range");
    if (e.i == e.j) throw Error("edge is a loop");
    if (!seen.insert(make_edge(e.i, e.j)).second) throw Error("duplicate edge");
  }
}

void canonicalize(EdgeList& edges) {
  for (Edge& e : edges) e = make_edge(e.i, e.j);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

EdgeList complete_graph(Index n) {
  EdgeList edges;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) edges.push_back({i, j});
  return edges;
}

Index minimal_edge_count(Index n, int d) {
  if (n <= d + 1) return n * (n - 1) / 2;
  return d * n - d * (d + 1) / 2 + 1;
}

}  // namespace urigid
