#pragma once

// Vertex-to-vertex distances between degree profiles.
//
// Every variant fills an n x n table whose entry (i, k) depends only on the
// neighborhood data of i in g and of k in h. Rows are filled in parallel;
// each cell is summed in ascending order so the result does not depend on
// the thread count.

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "dpmatch/graph.hpp"
#include "dpmatch/signature.hpp"

namespace dpmatch {

enum class DistanceKind { cyclic, ref, cdf, bin, disc, gaussian };

std::string to_string(DistanceKind kind);
DistanceKind distance_kind_from_string(const std::string& name);

/// Variant plus its parameter (L for cyclic/gaussian, r for bin/disc).
struct DistanceSpec {
  DistanceKind kind = DistanceKind::cyclic;
  double param = 0.0;

  std::string label() const;
  friend bool operator==(const DistanceSpec&, const DistanceSpec&) = default;
};

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

struct DistanceMatrix {
  std::size_t n = 0;
  std::vector<double> values;
  DistanceSpec spec;

  double operator()(std::size_t i, std::size_t k) const { return values[i * n + k]; }
  double& operator()(std::size_t i, std::size_t k) { return values[i * n + k]; }
  const double* row(std::size_t i) const { return values.data() + i * n; }
};

/// 0 selects std::thread::hardware_concurrency().
struct ParallelOptions {
  unsigned threads = 0;
};

/// D(i,k) = sum_c width_c |u_ic - v_kc| over the shared grid.
std::vector<double> weighted_l1_table(const StepGrid& grid, const ProfileTable& u,
                                      const ProfileTable& v, ParallelOptions opts = {});

/// Cyclic-bin distance with bin half-width 1/L, L >= 5.
DistanceMatrix distance_cyclic(const Graph& g, const Graph& h, int L, ParallelOptions opts = {});

/// L1 distance between the empirical CDFs of the neighbors' degrees. Both
/// neighborhoods empty gives 0, exactly one empty gives kInfiniteDistance.
DistanceMatrix distance_ref(const Graph& g, const Graph& h, ParallelOptions opts = {});
/// As distance_ref with square roots of the degrees.
DistanceMatrix distance_cdf(const Graph& g, const Graph& h, ParallelOptions opts = {});

/// Unnormalized count distance with real-line bins [t - r, t + r].
DistanceMatrix distance_bin(const Graph& g, const Graph& h, double r, ParallelOptions opts = {});

/// Disjoint bins [2mr, 2(m+1)r) of sqrt(degree).
DistanceMatrix distance_disc(const Graph& g, const Graph& h, double r, ParallelOptions opts = {});

/// Row entries binned into [m/L, (m+1)/L); L >= 1.
DistanceMatrix distance_gaussian(const RealMatrix& g, const RealMatrix& h, std::int64_t L,
                                 ParallelOptions opts = {});

/// Dispatches a graph variant (everything except gaussian).
DistanceMatrix compute_distance(const Graph& g, const Graph& h, const DistanceSpec& spec,
                                ParallelOptions opts = {});

/// CSV "i,k,distance", row-major.
void write_distance_csv(std::ostream& os, const DistanceMatrix& d);

}  // namespace dpmatch
