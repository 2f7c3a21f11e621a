#pragma once

// Correlated random graph and Gaussian matrix models.
//
// Every edge pair (G_ij, H_ij) is an independent draw from a joint law on
// {0,1}^2 with equal marginals p_ij and discrepancy mass p_ij * delta_ij on
// each of (1,0) and (0,1). H is published under a uniformly random relabeling
// which is kept as the ground truth.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "dpmatch/graph.hpp"

namespace dpmatch {

using Rng = std::mt19937_64;

/// Uniform double on [0, 1) built from the top 53 bits of one draw.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// SplitMix64 finalizer; derives an independent stream seed from a seed.
std::uint64_t mix_seed(std::uint64_t x);

inline constexpr double kDefaultAlpha = 0.05;

using PairFunction = std::function<double(std::size_t, std::size_t)>;

/// Parameters (alpha, p_ij, delta_ij) of an edge-correlated model plus the
/// seed of its sampling stream. Validated eagerly on construction.
class CorrelatedModelSpec {
 public:
  CorrelatedModelSpec(std::size_t n, PairFunction edge_prob, PairFunction noise, double alpha,
                      std::uint64_t seed, nlohmann::json description = {});

  std::size_t n() const { return n_; }
  double alpha() const { return alpha_; }
  std::uint64_t seed() const { return seed_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  /// p_ij, zero on the diagonal.
  double edge_prob(std::size_t i, std::size_t j) const { return i == j ? 0.0 : edge_prob_(i, j); }
  /// delta_ij, zero on the diagonal.
  double noise(std::size_t i, std::size_t j) const { return i == j ? 0.0 : noise_(i, j); }

  /// d_i = sum_j p_ij.
  double expected_degree(std::size_t i) const;
  double min_expected_degree() const;
  double max_noise() const;

  /// Number of pairs whose probability was clamped to satisfy the cap p <= 1 - alpha.
  std::size_t clamped_pairs() const { return clamped_pairs_; }
  void set_clamped_pairs(std::size_t c) { clamped_pairs_ = c; }

  const nlohmann::json& description() const { return description_; }

 private:
  std::size_t n_;
  PairFunction edge_prob_;
  PairFunction noise_;
  double alpha_;
  std::uint64_t seed_;
  nlohmann::json description_;
  std::size_t clamped_pairs_ = 0;
};

/// Correlated Gaussian matrix model. The correlation of entry (i,j) is stored
/// as its complement decorrelation(i,j) = 1 - rho_ij so that correlations
/// within 1e-16 of one remain representable.
struct GaussianPairSpec {
  std::size_t n = 0;
  PairFunction mean;
  PairFunction decorrelation;
  double rho_floor = -1.0;
  std::uint64_t seed = 0;
  nlohmann::json description;

  double correlation(std::size_t i, std::size_t j) const { return 1.0 - decorrelation(i, j); }
  void validate() const;
};

struct GraphPair {
  Graph g;
  Graph h;
  /// Vertex i of g corresponds to vertex ground_truth[i] of h.
  Permutation ground_truth;
  std::string spec_digest;
};

struct MatrixPair {
  RealMatrix g;
  RealMatrix h;
  Permutation ground_truth;
  std::string spec_digest;
};

struct BitPair {
  bool g;
  bool h;
  friend bool operator==(const BitPair&, const BitPair&) = default;
};

/// One draw of the joint edge law. Throws ParameterError when p(1+delta) > 1.
BitPair sample_correlated_bernoulli(double p, double delta, Rng& rng);

/// Samples all pairs i<j in lexicographic order from one stream seeded by
/// spec.seed(), then draws the relabeling by Fisher-Yates on the same stream.
GraphPair sample_pair(const CorrelatedModelSpec& spec);

CorrelatedModelSpec er_spec(std::size_t n, double q, double s, double alpha = kDefaultAlpha,
                            std::uint64_t seed = 0);

CorrelatedModelSpec sbm_spec(std::vector<std::size_t> partition,
                             std::vector<std::vector<double>> block_probs, double s,
                             double alpha = kDefaultAlpha, std::uint64_t seed = 0);

/// Chung-Lu with p_ij = s w_i w_j / sum(w), requiring max w_i^2 < sum(w).
CorrelatedModelSpec chunglu_spec(std::vector<double> weights, double s,
                                 double alpha = kDefaultAlpha, std::uint64_t seed = 0);

/// Power-law Chung-Lu as simulated in the experiments: p_ij = w_i w_j / sum(w)
/// clamped to the feasible cap, delta_ij = delta. No weight precondition.
CorrelatedModelSpec powerlaw_chunglu_spec(std::vector<double> weights, double delta,
                                          double alpha = kDefaultAlpha, std::uint64_t seed = 0);

/// n iid draws from the Pareto law on [b, inf) with density ~ x^{-gamma}.
std::vector<double> powerlaw_weights(std::size_t n, double gamma, double b, Rng& rng);

/// p_ij = |i-j|^{-1/2} / 2, delta_ij = delta.
CorrelatedModelSpec inhomogeneous_spec_fig2(std::size_t n, double delta,
                                            double alpha = kDefaultAlpha, std::uint64_t seed = 0);

/// Means iid uniform on [mu_low, mu_high] (drawn from the seed), constant
/// decorrelation 1 - rho.
GaussianPairSpec gaussian_uniform_mean_spec(std::size_t n, double mu_low, double mu_high,
                                            double one_minus_rho, std::uint64_t seed);

MatrixPair sample_gaussian_pair(const GaussianPairSpec& spec);

/// Two independent edge subsamples of parent with keep probability s; the
/// second is relabeled by a fresh uniform permutation.
GraphPair subsample_pair(const Graph& parent, double s, Rng& rng);

/// JSON spec files: {"model": ..., "n": ..., "params": {...}, "seed": ...}.
using ModelSpec = std::variant<CorrelatedModelSpec, GaussianPairSpec>;
ModelSpec spec_from_json(const nlohmann::json& j);

}  // namespace dpmatch
