#include <doctest.h>

#include "dpmatch/graph.hpp"
#include "support/reference.hpp"

using namespace dpmatch;

TEST_SUITE("graph") {
  TEST_CASE("degrees and adjacency are cached from the edge list") {
    const auto g = testing::path_graph(3);
    CHECK(g.size() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degrees() == std::vector<std::uint32_t>{1, 2, 1});
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  }

  TEST_CASE("self-loops, parallel edges and bad endpoints are rejected") {
    const std::vector<Edge> loop{{1, 1}};
    const std::vector<Edge> twice{{0, 1}, {1, 0}};
    const std::vector<Edge> outside{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), ParameterError);
    CHECK_THROWS_AS(Graph::from_edges(3, twice), ParameterError);
    CHECK_THROWS_AS(Graph::from_edges(3, outside), ParameterError);
  }

  TEST_CASE("relabeling maps every edge through the permutation") {
    std::mt19937_64 rng(3);
    const auto g = testing::random_graph(25, 0.2, rng);
    const auto perm = testing::random_permutation(25, rng);
    const auto h = g.relabeled(perm);
    CHECK(h.edge_count() == g.edge_count());
    for (auto [u, v] : g.edges()) CHECK(h.has_edge(perm[u], perm[v]));
    for (Vertex v = 0; v < 25; ++v) CHECK(h.degree(perm[v]) == g.degree(v));
    CHECK(h.relabeled(inverse_permutation(perm)) == g);
    const Permutation bad{0, 0, 1};
    CHECK_THROWS_AS(testing::path_graph(3).relabeled(bad), ParameterError);
  }

  TEST_CASE("permutation helpers") {
    CHECK(is_permutation(identity_permutation(5)));
    const Permutation p{2, 0, 1};
    CHECK(inverse_permutation(p) == Permutation{1, 2, 0});
    const Permutation dup{1, 1};
    CHECK_FALSE(is_permutation(dup));
    CHECK_THROWS_AS(inverse_permutation(dup), ParameterError);
  }

  TEST_CASE("real matrices relabel both indices") {
    RealMatrix m(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = 10.0 * i + j;
    const Permutation p{1, 2, 0};
    const auto r = m.relabeled(p);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(r(p[i], p[j]) == m(i, j));
  }
}
