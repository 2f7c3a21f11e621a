#pragma once

// Balls-into-cyclic-bins signatures.
//
// Each neighbor j of a vertex contributes a "ball" at sqrt(deg j); the ball is
// counted in every bin I_t whose cyclic centre t lies within 1/L of
// frac(sqrt(deg j)). As a function of t, the ball count of a vertex is a
// step function whose breakpoints are among the 4n landmarks
// frac(sqrt(X_j) +- 1/L), frac(sqrt(Y_j) +- 1/L).

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dpmatch/graph.hpp"

namespace dpmatch {

/// Closed interval [lo, hi].
struct Interval {
  double lo;
  double hi;
  double length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Fractional part in [0, 1).
double frac(double x);

/// Support on [0,1) of t -> 1{sqrt(x) in I_t}: one interval of length 2/L, or
/// two pieces when the cyclic interval wraps through 0. Requires L >= 5.
std::vector<Interval> ball_support(double x, int L);

/// The 4n sorted landmarks shared by both graphs.
struct LandmarkTable {
  std::vector<double> landmarks;  // a_1 <= ... <= a_4n
  int L = 0;
  std::string source;

  std::size_t n() const { return landmarks.size() / 4; }
  /// Padded access: a_0 = 0, a_{4n+1} = 1.
  double at(std::size_t l) const;
  std::size_t interval_count() const { return landmarks.size() + 1; }
  double width(std::size_t l) const { return at(l + 1) - at(l); }
};

LandmarkTable build_landmarks(std::span<const std::uint32_t> gdeg,
                              std::span<const std::uint32_t> hdeg, int L);

/// Constant values u_l of the ball count on (a_l, a_{l+1}), l = 0..4n.
struct Signature {
  std::vector<std::uint32_t> values;

  /// Integral of the step function over [0, 1) using the table's widths.
  double mass(const LandmarkTable& table) const;
};

/// Progressive sweep over the padded landmarks. Throws ParameterError when
/// vertex is out of range or the table was built for another size.
Signature build_signature(const Graph& graph, Vertex vertex, const LandmarkTable& table);

/// Debug dump, rows "vertex,l,a_l,a_l+1,u_l".
void write_signature_csv(std::ostream& os, Vertex vertex, const Signature& sig,
                         const LandmarkTable& table);

// ---------------------------------------------------------------------------
// Compressed step profiles.
//
// Duplicate breakpoints only produce zero-width intervals, which contribute
// nothing to any integral, so the distance kernels work on the distinct
// breakpoints. Counts are stored as float (exact for integers < 2^24).

/// Strictly increasing breakpoints b_0 < ... < b_K and the K widths between them.
struct StepGrid {
  std::vector<double> breaks;
  std::vector<double> widths;

  /// Deduplicates a sorted breakpoint list.
  static StepGrid from_sorted(std::span<const double> sorted_points);
  std::size_t cells() const { return widths.size(); }
};

/// rows x grid.cells() table of step values.
struct ProfileTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<float> counts;

  std::span<const float> row(std::size_t r) const { return {counts.data() + r * cols, cols}; }
};

/// For every vertex v, the number of neighbors whose support pieces cover
/// each cell of grid. support(x) returns the pieces for a ball at degree x.
template <class SupportFn>
ProfileTable build_profiles(const Graph& graph, const StepGrid& grid, SupportFn&& support);

/// Shared grid and per-vertex profiles for a pair of graphs.
struct PairProfiles {
  StepGrid grid;
  ProfileTable g;
  ProfileTable h;
};
PairProfiles build_cyclic_profiles(const Graph& g, const Graph& h, int L);

/// Same construction on the real line with supports [sqrt(x) - r, sqrt(x) + r].
PairProfiles build_line_profiles(const Graph& g, const Graph& h, double r);

}  // namespace dpmatch

#include "dpmatch/detail/profiles_impl.hpp"
