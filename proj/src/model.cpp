#include "dpmatch/model.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

namespace dpmatch {

namespace {

constexpr double kFeasibilitySlack = 1e-12;

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError(msg);
}

void require_probability(double p, const char* name) {
  require(p >= 0.0 && p <= 1.0 && std::isfinite(p), std::string(name) + " must lie in [0, 1]");
}

Permutation draw_permutation(std::size_t n, Rng& rng) {
  auto p = identity_permutation(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CorrelatedModelSpec::CorrelatedModelSpec(std::size_t n, PairFunction edge_prob, PairFunction noise,
                                         double alpha, std::uint64_t seed,
                                         nlohmann::json description)
    : n_(n),
      edge_prob_(std::move(edge_prob)),
      noise_(std::move(noise)),
      alpha_(alpha),
      seed_(seed),
      description_(std::move(description)) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p = edge_prob_(i, j);
      const double d = noise_(i, j);
      require(p >= 0.0 && p <= 1.0 - alpha + kFeasibilitySlack,
              "edge probability outside [0, 1 - alpha] at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
      require(d >= 0.0 && std::isfinite(d), "noise must be nonnegative");
      require(p * (1.0 + d) <= 1.0 + kFeasibilitySlack,
              "infeasible joint law: p(1+delta) > 1 at (" + std::to_string(i) + "," +
                  std::to_string(j) + ")");
    }
  }
}

double CorrelatedModelSpec::expected_degree(std::size_t i) const {
  double d = 0.0;
  for (std::size_t j = 0; j < n_; ++j) d += edge_prob(i, j);
  return d;
}

double CorrelatedModelSpec::min_expected_degree() const {
  if (n_ == 0) return 0.0;
  double best = expected_degree(0);
  for (std::size_t i = 1; i < n_; ++i) best = std::min(best, expected_degree(i));
  return best;
}

double CorrelatedModelSpec::max_noise() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) best = std::max(best, noise(i, j));
  return best;
}

void GaussianPairSpec::validate() const {
  require(static_cast<bool>(mean) && static_cast<bool>(decorrelation),
          "gaussian spec needs mean and correlation functions");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double eps = decorrelation(i, j);
      require(eps >= 0.0 && eps <= 2.0, "correlation must lie in [-1, 1]");
      require(1.0 - eps >= rho_floor - kFeasibilitySlack, "correlation below the configured floor");
      require(std::isfinite(mean(i, j)), "mean must be finite");
    }
  }
}

BitPair sample_correlated_bernoulli(double p, double delta, Rng& rng) {
  require_probability(p, "p");
  require(delta >= 0.0, "delta must be nonnegative");
  require(p * (1.0 + delta) <= 1.0 + kFeasibilitySlack, "infeasible joint law: p(1+delta) > 1");
  const double u = uniform01(rng);
  const double both = p * (1.0 - delta);
  if (u < both) return {true, true};
  if (u < p) return {true, false};
  if (u < p + p * delta) return {false, true};
  return {false, false};
}

GraphPair sample_pair(const CorrelatedModelSpec& spec) {
  const std::size_t n = spec.n();
  Rng rng(spec.seed());
  std::vector<Edge> ge, he;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto [g, h] = sample_correlated_bernoulli(spec.edge_prob(i, j), spec.noise(i, j), rng);
      const Edge e{static_cast<Vertex>(i), static_cast<Vertex>(j)};
      if (g) ge.push_back(e);
      if (h) he.push_back(e);
    }
  }
  GraphPair out;
  out.ground_truth = draw_permutation(n, rng);
  out.g = Graph::from_edges(n, ge);
  out.h = Graph::from_edges(n, he).relabeled(out.ground_truth);
  out.spec_digest = spec.description().dump();
  return out;
}

CorrelatedModelSpec er_spec(std::size_t n, double q, double s, double alpha, std::uint64_t seed) {
  require_probability(q, "q");
  require_probability(s, "s");
  require(q <= s, "er_spec requires q <= s");
  const double delta = 1.0 - s;
  nlohmann::json desc = {{"model", "er"}, {"n", n}, {"params", {{"q", q}, {"s", s}}}, {"seed", seed}};
  return CorrelatedModelSpec(
      n, [q](std::size_t, std::size_t) { return q; },
      [delta](std::size_t, std::size_t) { return delta; }, alpha, seed, std::move(desc));
}

CorrelatedModelSpec sbm_spec(std::vector<std::size_t> partition,
                             std::vector<std::vector<double>> block_probs, double s, double alpha,
                             std::uint64_t seed) {
  require_probability(s, "s");
  const std::size_t r = block_probs.size();
  for (std::size_t a = 0; a < r; ++a) {
    require(block_probs[a].size() == r, "block probability matrix must be square");
    for (std::size_t b = 0; b < r; ++b) {
      require(block_probs[a][b] >= 0.0 && block_probs[a][b] <= s,
              "block probabilities must lie in [0, s]");
      require(block_probs[a][b] == block_probs[b][a], "block probability matrix must be symmetric");
    }
  }
  for (std::size_t b : partition) require(b < r, "partition refers to a missing block");
  const std::size_t n = partition.size();
  const double delta = 1.0 - s;
  nlohmann::json desc = {{"model", "sbm"},
                         {"n", n},
                         {"params", {{"blocks", partition}, {"P", block_probs}, {"s", s}}},
                         {"seed", seed}};
  return CorrelatedModelSpec(
      n,
      [part = std::move(partition), P = std::move(block_probs)](std::size_t i, std::size_t j) {
        return P[part[i]][part[j]];
      },
      [delta](std::size_t, std::size_t) { return delta; }, alpha, seed, std::move(desc));
}

namespace {

// Shared builder for the Chung-Lu style specs: probabilities are
// scale * w_i w_j / W, clamped to the 1 - alpha cap and to feasibility.
CorrelatedModelSpec clamped_chunglu(std::vector<double> weights, double scale, double delta,
                                    double alpha, std::uint64_t seed, nlohmann::json desc) {
  const std::size_t n = weights.size();
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  const double cap = std::min(1.0 - alpha, 1.0 / (1.0 + delta));
  std::size_t clamped = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (scale * weights[i] * weights[j] / total > cap) ++clamped;
  auto prob = [w = std::move(weights), scale, total, cap](std::size_t i, std::size_t j) {
    return std::min(scale * w[i] * w[j] / total, cap);
  };
  CorrelatedModelSpec spec(
      n, std::move(prob), [delta](std::size_t, std::size_t) { return delta; }, alpha, seed,
      std::move(desc));
  spec.set_clamped_pairs(clamped);
  return spec;
}

}  // namespace

CorrelatedModelSpec chunglu_spec(std::vector<double> weights, double s, double alpha,
                                 std::uint64_t seed) {
  require_probability(s, "s");
  require(!weights.empty(), "chunglu_spec needs at least one weight");
  double total = 0.0, max_sq = 0.0;
  for (double w : weights) {
    require(w > 0.0 && std::isfinite(w), "weights must be positive");
    total += w;
    max_sq = std::max(max_sq, w * w);
  }
  require(max_sq < total, "chunglu_spec requires max w_i^2 < sum w_i");
  nlohmann::json desc = {{"model", "chunglu"},
                         {"n", weights.size()},
                         {"params", {{"weights", weights}, {"s", s}}},
                         {"seed", seed}};
  return clamped_chunglu(std::move(weights), s, 1.0 - s, alpha, seed, std::move(desc));
}

CorrelatedModelSpec powerlaw_chunglu_spec(std::vector<double> weights, double delta, double alpha,
                                          std::uint64_t seed) {
  require(delta >= 0.0 && delta < 1.0, "delta must lie in [0, 1)");
  for (double w : weights) require(w > 0.0 && std::isfinite(w), "weights must be positive");
  nlohmann::json desc = {{"model", "chunglu"},
                         {"n", weights.size()},
                         {"params", {{"weights", weights}, {"delta", delta}}},
                         {"seed", seed}};
  return clamped_chunglu(std::move(weights), 1.0, delta, alpha, seed, std::move(desc));
}

std::vector<double> powerlaw_weights(std::size_t n, double gamma, double b, Rng& rng) {
  require(gamma > 1.0, "powerlaw_weights requires gamma > 1");
  require(b > 0.0, "powerlaw_weights requires b > 0");
  const double exponent = -1.0 / (gamma - 1.0);
  std::vector<double> w(n);
  for (auto& x : w) x = b * std::pow(1.0 - uniform01(rng), exponent);
  return w;
}

CorrelatedModelSpec inhomogeneous_spec_fig2(std::size_t n, double delta, double alpha,
                                            std::uint64_t seed) {
  require(n >= 2, "inhomogeneous model needs n >= 2");
  require(delta >= 0.0 && delta < 1.0, "delta must lie in [0, 1)");
  nlohmann::json desc = {{"model", "fig2"}, {"n", n}, {"params", {{"delta", delta}}}, {"seed", seed}};
  return CorrelatedModelSpec(
      n,
      [](std::size_t i, std::size_t j) {
        const double gap = i > j ? static_cast<double>(i - j) : static_cast<double>(j - i);
        return 0.5 / std::sqrt(gap);
      },
      [delta](std::size_t, std::size_t) { return delta; }, alpha, seed, std::move(desc));
}

GaussianPairSpec gaussian_uniform_mean_spec(std::size_t n, double mu_low, double mu_high,
                                            double one_minus_rho, std::uint64_t seed) {
  require(mu_low <= mu_high, "mean range is empty");
  require(one_minus_rho >= 0.0 && one_minus_rho <= 2.0, "correlation must lie in [-1, 1]");
  Rng rng(mix_seed(seed));
  // Upper triangle including the diagonal, mirrored.
  auto means = std::make_shared<std::vector<double>>(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double mu = mu_low + (mu_high - mu_low) * uniform01(rng);
      (*means)[i * n + j] = mu;
      (*means)[j * n + i] = mu;
    }
  GaussianPairSpec spec;
  spec.n = n;
  spec.mean = [means, n](std::size_t i, std::size_t j) { return (*means)[i * n + j]; };
  spec.decorrelation = [one_minus_rho](std::size_t, std::size_t) { return one_minus_rho; };
  spec.rho_floor = 1.0 - one_minus_rho;
  spec.seed = seed;
  spec.description = {{"model", "gaussian"},
                      {"n", n},
                      {"params", {{"mu_low", mu_low}, {"mu_high", mu_high}, {"one_minus_rho", one_minus_rho}}},
                      {"seed", seed}};
  return spec;
}

MatrixPair sample_gaussian_pair(const GaussianPairSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  Rng rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix g(n), h(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double mu = spec.mean(i, j);
      const double eps = spec.decorrelation(i, j);
      const double z1 = normal(rng);
      const double z2 = normal(rng);
      // 1 - rho^2 = eps (2 - eps), evaluated without cancellation.
      const double gv = mu + z1;
      const double hv = mu + (1.0 - eps) * z1 + std::sqrt(eps * (2.0 - eps)) * z2;
      g(i, j) = g(j, i) = gv;
      h(i, j) = h(j, i) = hv;
    }
  }
  MatrixPair out;
  out.ground_truth = draw_permutation(n, rng);
  out.g = std::move(g);
  out.h = h.relabeled(out.ground_truth);
  out.spec_digest = spec.description.dump();
  return out;
}

GraphPair subsample_pair(const Graph& parent, double s, Rng& rng) {
  require_probability(s, "s");
  std::vector<Edge> ge, he;
  for (const auto& e : parent.edges()) {
    if (uniform01(rng) < s) ge.push_back(e);
    if (uniform01(rng) < s) he.push_back(e);
  }
  const std::size_t n = parent.size();
  GraphPair out;
  out.ground_truth = draw_permutation(n, rng);
  out.g = Graph::from_edges(n, ge);
  out.h = Graph::from_edges(n, he).relabeled(out.ground_truth);
  out.spec_digest = nlohmann::json{{"model", "subsample"}, {"n", n}, {"params", {{"s", s}}}}.dump();
  return out;
}

ModelSpec spec_from_json(const nlohmann::json& j) {
  const std::string model = j.at("model").get<std::string>();
  const std::size_t n = j.at("n").get<std::size_t>();
  const nlohmann::json params = j.value("params", nlohmann::json::object());
  const std::uint64_t seed = j.value("seed", std::uint64_t{0});
  const double alpha = params.value("alpha", kDefaultAlpha);

  if (model == "er") {
    return er_spec(n, params.at("q").get<double>(), params.value("s", 1.0), alpha, seed);
  }
  if (model == "sbm") {
    auto blocks = params.at("blocks").get<std::vector<std::size_t>>();
    require(blocks.size() == n, "sbm: blocks must list one block per vertex");
    return sbm_spec(std::move(blocks), params.at("P").get<std::vector<std::vector<double>>>(),
                    params.value("s", 1.0), alpha, seed);
  }
  if (model == "chunglu") {
    std::vector<double> w;
    if (params.contains("weights")) {
      w = params.at("weights").get<std::vector<double>>();
      require(w.size() == n, "chunglu: weights must have length n");
    } else {
      Rng rng(mix_seed(seed));
      w = powerlaw_weights(n, params.at("gamma").get<double>(), params.at("b").get<double>(), rng);
    }
    if (params.contains("delta"))
      return powerlaw_chunglu_spec(std::move(w), params.at("delta").get<double>(), alpha, seed);
    return chunglu_spec(std::move(w), params.value("s", 1.0), alpha, seed);
  }
  if (model == "fig2") {
    return inhomogeneous_spec_fig2(n, params.value("delta", 0.0), alpha, seed);
  }
  if (model == "gaussian") {
    double eps = 0.0;
    if (params.contains("one_minus_rho"))
      eps = params.at("one_minus_rho").get<double>();
    else
      eps = 1.0 - params.value("rho", 1.0);
    return gaussian_uniform_mean_spec(n, params.value("mu_low", -3.0), params.value("mu_high", 3.0),
                                      eps, seed);
  }
  throw ParameterError("unknown model '" + model + "'");
}

}  // namespace dpmatch
