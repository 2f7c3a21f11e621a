#include "dpmatch/graph.hpp"

#include <algorithm>
#include <numeric>

namespace dpmatch {

bool is_permutation(std::span<const Vertex> p) {
  std::vector<bool> seen(p.size(), false);
  for (Vertex v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  return p;
}

Permutation inverse_permutation(std::span<const Vertex> p) {
  if (!is_permutation(p)) throw ParameterError("inverse_permutation: input is not a permutation");
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<Vertex>(i);
  return inv;
}

Graph::Graph(std::size_t n) : adj_(n), degrees_(n, 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ParameterError("Graph: edge endpoint out of range");
    if (u == v) throw ParameterError("Graph: self-loop on vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& nb = g.adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw ParameterError("Graph: parallel edge at vertex " + std::to_string(v));
    g.degrees_[v] = static_cast<std::uint32_t>(nb.size());
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= size() || v >= size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != size() || !is_permutation(perm))
    throw ParameterError("Graph::relabeled: not a permutation of the vertex set");
  auto es = edges();
  for (auto& [u, v] : es) {
    u = perm[u];
    v = perm[v];
  }
  return from_edges(size(), es);
}

RealMatrix RealMatrix::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_ || !is_permutation(perm))
    throw ParameterError("RealMatrix::relabeled: not a permutation");
  RealMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(perm[i], perm[j]) = (*this)(i, j);
  return out;
}

}  // namespace dpmatch
