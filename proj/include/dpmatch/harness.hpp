#pragma once

// Experiment presets: sample correlated pairs over a noise grid, run every
// configured distance variant with lenient matching, and record accuracy.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dpmatch/distance.hpp"
#include "dpmatch/graph.hpp"

namespace dpmatch {

enum class Preset { fig1, fig2, fig3, gaussian, realdata };

std::string to_string(Preset p);
Preset preset_from_string(const std::string& name);

struct ExperimentConfig {
  Preset preset = Preset::fig1;
  std::size_t n = 1000;
  /// sqrt(delta) for fig1-3, s for realdata, 1 - rho for gaussian.
  std::vector<double> noise_grid;
  std::vector<DistanceSpec> variants;
  std::size_t runs = 10;
  std::uint64_t seed_base = 1;
  unsigned threads = 0;
  bool record_timing = false;

  double edge_prob = 0.05;     // fig1
  double gamma = 2.5;          // fig3
  double weight_floor = 0.0;   // fig3 power-law lower bound b; 0 selects 10^{4/3}
  double mu_low = -3.0;        // gaussian
  double mu_high = 3.0;

  void validate() const;
};

/// L = ceil(c3 ln n), floored at 5.
int default_cyclic_L(std::size_t n, double c3 = 8.0);
/// ceil(1e5 ln n).
std::int64_t default_gaussian_L(std::size_t n);
/// 1 - rho at the floor 1e-8 L^{-2}.
double gaussian_rho_gap(std::int64_t L);

/// Preset defaults: grid, variants and model constants.
ExperimentConfig default_config(Preset preset, std::size_t n = 1000);

/// Seed used for run r at grid index g.
std::uint64_t run_seed(std::uint64_t base, std::size_t grid_index, std::size_t run);

struct ResultRow {
  std::string preset;
  std::string variant;
  double param = 0.0;
  double noise = 0.0;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  double accuracy = 0.0;
  std::size_t ties = 0;
  double elapsed_ms = 0.0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

std::vector<ResultRow> run_fig1(const ExperimentConfig& cfg);
std::vector<ResultRow> run_fig2(const ExperimentConfig& cfg);
std::vector<ResultRow> run_fig3(const ExperimentConfig& cfg);
std::vector<ResultRow> run_gaussian(const ExperimentConfig& cfg);
std::vector<ResultRow> run_realdata(const ExperimentConfig& cfg, const Graph& parent);

/// Dispatch on cfg.preset; parent is only used by realdata.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, const Graph* parent = nullptr);

inline constexpr const char* kResultCsvHeader =
    "preset,variant,param,noise,run,seed,accuracy,ties,elapsed_ms";

void emit_csv(std::ostream& os, const std::vector<ResultRow>& rows);
void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);
std::vector<ResultRow> parse_results_csv(std::istream& in);

/// Standalone SVG 1.1 line chart: one polyline per (variant, param) of mean
/// accuracy against noise.
void emit_svg(std::ostream& os, const std::vector<ResultRow>& rows);
void emit_svg(const std::vector<ResultRow>& rows, const std::string& path);

/// (variant label) -> noise -> mean accuracy.
using CurveTable = std::map<std::string, std::map<double, double>>;
CurveTable mean_accuracy(const std::vector<ResultRow>& rows);
std::string curve_label(const ResultRow& row);

/// Spearman rank correlation with average ranks for ties.
double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y);

/// One-sided sign test: P[Binomial(wins + losses, 1/2) >= wins].
double sign_test_p_value(std::size_t wins, std::size_t losses);

}  // namespace dpmatch
