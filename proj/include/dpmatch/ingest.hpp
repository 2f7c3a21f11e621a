#pragma once

// SNAP-style edge lists and the preprocessing used for real networks.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpmatch/graph.hpp"

namespace dpmatch {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeList {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw_edges;
  bool directed = true;
  /// Vertex count from a "# n=<n> m=<m>" header, when present.
  std::optional<std::size_t> declared_n;
};

/// Lines "u v" separated by whitespace; '#' comments and blank lines skipped.
EdgeList parse_edge_list(std::istream& in);
EdgeList read_edge_list(const std::string& path);

/// Graph whose vertex v carries the original id ids[v].
struct LabeledGraph {
  Graph graph;
  std::vector<std::int64_t> ids;
};

/// Keeps edges with both endpoints below max_id, drops direction, duplicates
/// and self-loops, and remaps the ids below max_id that occur in the list to
/// 0.. in ascending order. Without max_id every id is kept.
LabeledGraph symmetrize_and_restrict(const EdgeList& e, std::optional<std::int64_t> max_id);

/// Ids present in every graph, ranked by degree in graphs.front(), ties by
/// ascending id; the first k are returned in ascending id order.
std::vector<std::int64_t> common_topk_by_degree(std::span<const LabeledGraph> graphs, std::size_t k);

/// Induced subgraph on the given vertices, remapped to 0.. in ascending vertex order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
LabeledGraph induced_subgraph_by_ids(const LabeledGraph& g, std::span<const std::int64_t> ids);

/// Graph with contiguous ids 0..n-1: n from the header when present,
/// otherwise max id + 1. Direction and duplicates are dropped.
Graph graph_from_edge_list(const EdgeList& e);

/// "# n=<n> m=<m>" header followed by "u v" lines with u < v.
void write_edge_list(std::ostream& os, const Graph& g);

/// Dense matrix text: "# n=<n>" then n rows of n reals.
void write_matrix(std::ostream& os, const RealMatrix& m);
RealMatrix read_matrix(std::istream& in);

}  // namespace dpmatch
