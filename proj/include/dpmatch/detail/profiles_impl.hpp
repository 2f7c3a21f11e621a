#pragma once

#include <algorithm>
#include <vector>

namespace dpmatch {

template <class SupportFn>
ProfileTable build_profiles(const Graph& graph, const StepGrid& grid, SupportFn&& support) {
  const std::size_t n = graph.size();
  const std::size_t cells = grid.cells();
  ProfileTable table;
  table.rows = n;
  table.cols = cells;
  table.counts.assign(n * cells, 0.0f);

  // Pieces depend only on the neighbor's degree; resolve each to a cell range once.
  struct CellRange {
    std::size_t first;
    std::size_t last;  // exclusive
  };
  std::vector<std::vector<CellRange>> by_vertex(n);
  const auto& b = grid.breaks;
  for (Vertex j = 0; j < n; ++j) {
    for (const Interval& piece : support(graph.degree(j))) {
      // cell c is covered iff piece.lo <= b_c and b_{c+1} <= piece.hi
      const auto first = static_cast<std::size_t>(std::lower_bound(b.begin(), b.end(), piece.lo) - b.begin());
      const auto past = static_cast<std::size_t>(std::upper_bound(b.begin(), b.end(), piece.hi) - b.begin());
      const std::size_t last = past == 0 ? 0 : past - 1;
      if (first < last) by_vertex[j].push_back({first, last});
    }
  }

  std::vector<int> diff(cells + 1);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(diff.begin(), diff.end(), 0);
    for (Vertex j : graph.neighbors(v))
      for (const auto& r : by_vertex[j]) {
        ++diff[r.first];
        --diff[r.last];
      }
    float* out = table.counts.data() + v * cells;
    int running = 0;
    for (std::size_t c = 0; c < cells; ++c) {
      running += diff[c];
      out[c] = static_cast<float>(running);
    }
  }
  return table;
}

}  // namespace dpmatch
