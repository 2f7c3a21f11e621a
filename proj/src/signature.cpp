#include "dpmatch/signature.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace dpmatch {

double frac(double x) {
  const double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

std::vector<Interval> ball_support(double x, int L) {
  if (L < 5) throw ParameterError("ball_support requires L >= 5");
  const double s = std::sqrt(x);
  const double radius = 1.0 / L;
  const double lo = frac(s - radius);
  const double hi = frac(s + radius);
  if (lo < hi) return {{lo, hi}};
  return {{0.0, hi}, {lo, 1.0}};
}

double LandmarkTable::at(std::size_t l) const {
  if (l == 0) return 0.0;
  if (l > landmarks.size()) return 1.0;
  return landmarks[l - 1];
}

LandmarkTable build_landmarks(std::span<const std::uint32_t> gdeg,
                              std::span<const std::uint32_t> hdeg, int L) {
  if (gdeg.size() != hdeg.size()) throw ParameterError("build_landmarks: degree vectors differ in length");
  if (L < 5) throw ParameterError("build_landmarks requires L >= 5");
  LandmarkTable table;
  table.L = L;
  table.source = "cyclic L=" + std::to_string(L);
  table.landmarks.reserve(4 * gdeg.size());
  const double radius = 1.0 / L;
  for (auto degs : {gdeg, hdeg})
    for (std::uint32_t d : degs) {
      const double s = std::sqrt(static_cast<double>(d));
      table.landmarks.push_back(frac(s - radius));
      table.landmarks.push_back(frac(s + radius));
    }
  std::sort(table.landmarks.begin(), table.landmarks.end());
  return table;
}

double Signature::mass(const LandmarkTable& table) const {
  double total = 0.0;
  for (std::size_t l = 0; l < values.size(); ++l) total += table.width(l) * values[l];
  return total;
}

Signature build_signature(const Graph& graph, Vertex vertex, const LandmarkTable& table) {
  if (vertex >= graph.size()) throw ParameterError("build_signature: vertex out of range");
  if (table.landmarks.size() != 4 * graph.size())
    throw ParameterError("build_signature: landmark table does not match graph size");

  std::vector<double> padded;
  padded.reserve(table.landmarks.size() + 2);
  padded.push_back(0.0);
  padded.insert(padded.end(), table.landmarks.begin(), table.landmarks.end());
  padded.push_back(1.0);

  const std::size_t intervals = table.interval_count();
  std::vector<int> diff(intervals + 1, 0);
  for (Vertex j : graph.neighbors(vertex)) {
    for (const Interval& piece : ball_support(graph.degree(j), table.L)) {
      const auto first = std::lower_bound(padded.begin(), padded.end(), piece.lo) - padded.begin();
      const auto past = std::upper_bound(padded.begin(), padded.end(), piece.hi) - padded.begin();
      const auto last = past - 1;  // intervals first .. last-1 have both ends inside the piece
      if (first < last) {
        ++diff[static_cast<std::size_t>(first)];
        --diff[static_cast<std::size_t>(last)];
      }
    }
  }
  Signature sig;
  sig.values.resize(intervals);
  int running = 0;
  for (std::size_t l = 0; l < intervals; ++l) {
    running += diff[l];
    sig.values[l] = static_cast<std::uint32_t>(running);
  }
  return sig;
}

void write_signature_csv(std::ostream& os, Vertex vertex, const Signature& sig,
                         const LandmarkTable& table) {
  const auto old_precision = os.precision(17);
  for (std::size_t l = 0; l < sig.values.size(); ++l)
    os << vertex << ',' << l << ',' << table.at(l) << ',' << table.at(l + 1) << ','
       << sig.values[l] << '\n';
  os.precision(old_precision);
}

StepGrid StepGrid::from_sorted(std::span<const double> sorted_points) {
  StepGrid grid;
  grid.breaks.reserve(sorted_points.size());
  for (double x : sorted_points)
    if (grid.breaks.empty() || x > grid.breaks.back()) grid.breaks.push_back(x);
  if (grid.breaks.size() > 1) {
    grid.widths.resize(grid.breaks.size() - 1);
    for (std::size_t c = 0; c + 1 < grid.breaks.size(); ++c)
      grid.widths[c] = grid.breaks[c + 1] - grid.breaks[c];
  }
  return grid;
}

PairProfiles build_cyclic_profiles(const Graph& g, const Graph& h, int L) {
  if (g.size() != h.size()) throw ParameterError("graphs differ in size");
  const LandmarkTable table = build_landmarks(g.degrees(), h.degrees(), L);
  std::vector<double> padded;
  padded.reserve(table.landmarks.size() + 2);
  padded.push_back(0.0);
  padded.insert(padded.end(), table.landmarks.begin(), table.landmarks.end());
  padded.push_back(1.0);

  PairProfiles out;
  out.grid = StepGrid::from_sorted(padded);
  auto support = [L](std::uint32_t d) { return ball_support(d, L); };
  out.g = build_profiles(g, out.grid, support);
  out.h = build_profiles(h, out.grid, support);
  return out;
}

PairProfiles build_line_profiles(const Graph& g, const Graph& h, double r) {
  if (g.size() != h.size()) throw ParameterError("graphs differ in size");
  if (!(r > 0.0)) throw ParameterError("bin radius r must be positive");
  std::vector<double> points;
  points.reserve(4 * g.size());
  for (const Graph* graph : {&g, &h})
    for (std::uint32_t d : graph->degrees()) {
      const double s = std::sqrt(static_cast<double>(d));
      points.push_back(s - r);
      points.push_back(s + r);
    }
  std::sort(points.begin(), points.end());

  PairProfiles out;
  out.grid = StepGrid::from_sorted(points);
  auto support = [r](std::uint32_t d) {
    const double s = std::sqrt(static_cast<double>(d));
    return std::vector<Interval>{{s - r, s + r}};
  };
  out.g = build_profiles(g, out.grid, support);
  out.h = build_profiles(h, out.grid, support);
  return out;
}

}  // namespace dpmatch
