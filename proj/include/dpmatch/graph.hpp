#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dpmatch {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised when a caller hands in parameters that violate an operation's
/// preconditions (infeasible probabilities, size mismatches, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A permutation of {0, ..., n-1}, stored as the image vector.
using Permutation = std::vector<Vertex>;

bool is_permutation(std::span<const Vertex> p);
Permutation identity_permutation(std::size_t n);
Permutation inverse_permutation(std::span<const Vertex> p);

/// Undirected simple graph with sorted adjacency lists and cached degrees.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list. Self-loops, duplicate edges and
  /// out-of-range endpoints are rejected with ParameterError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(adj_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Returns the graph whose vertex v is this graph's vertex perm^{-1}(v),
  /// i.e. every edge {u, v} becomes {perm[u], perm[v]}.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint32_t> degrees_;
  std::size_t edge_count_ = 0;
};

/// Dense real symmetric matrix, row-major; used by the Gaussian model.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  const std::vector<double>& data() const { return data_; }

  RealMatrix relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace dpmatch
