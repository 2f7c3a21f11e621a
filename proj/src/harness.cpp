#include "dpmatch/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "dpmatch/matcher.hpp"
#include "dpmatch/model.hpp"
#include "parallel.hpp"

namespace dpmatch {

std::string to_string(Preset p) {
  switch (p) {
    case Preset::fig1: return "fig1";
    case Preset::fig2: return "fig2";
    case Preset::fig3: return "fig3";
    case Preset::gaussian: return "gaussian";
    case Preset::realdata: return "realdata";
  }
  return "unknown";
}

Preset preset_from_string(const std::string& name) {
  for (auto p : {Preset::fig1, Preset::fig2, Preset::fig3, Preset::gaussian, Preset::realdata})
    if (to_string(p) == name) return p;
  throw ParameterError("unknown preset '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (noise_grid.empty()) throw ParameterError("experiment noise grid is empty");
  if (runs == 0) throw ParameterError("experiment needs at least one run per grid point");
  if (variants.empty()) throw ParameterError("experiment needs at least one distance variant");
  if (n < 2) throw ParameterError("experiment needs n >= 2");
}

int default_cyclic_L(std::size_t n, double c3) {
  const double L = std::ceil(c3 * std::log(static_cast<double>(n)));
  return std::max(5, static_cast<int>(L));
}

std::int64_t default_gaussian_L(std::size_t n) {
  return static_cast<std::int64_t>(std::ceil(1e5 * std::log(static_cast<double>(n))));
}

double gaussian_rho_gap(std::int64_t L) {
  const double l = static_cast<double>(L);
  return 1e-8 / (l * l);
}

ExperimentConfig default_config(Preset preset, std::size_t n) {
  ExperimentConfig cfg;
  cfg.preset = preset;
  cfg.n = n;
  const double L = default_cyclic_L(n);
  const std::vector<DistanceSpec> base = {{DistanceKind::cyclic, L},  {DistanceKind::ref, 0.0},
                                          {DistanceKind::cdf, 0.0},   {DistanceKind::bin, 0.25},
                                          {DistanceKind::bin, 0.5},   {DistanceKind::bin, 1.0}};
  switch (preset) {
    case Preset::fig1:
    case Preset::fig2:
    case Preset::fig3:
      for (int i = 0; i <= 10; ++i) cfg.noise_grid.push_back(i / 20.0);
      cfg.variants = base;
      if (preset == Preset::fig3) cfg.variants.push_back({DistanceKind::disc, 0.5});
      break;
    case Preset::realdata:
      for (int i = 12; i <= 20; ++i) cfg.noise_grid.push_back(i / 20.0);
      cfg.variants = base;
      cfg.variants.push_back({DistanceKind::disc, 0.5});
      break;
    case Preset::gaussian: {
      const auto gl = default_gaussian_L(n);
      cfg.noise_grid = {gaussian_rho_gap(gl)};
      cfg.variants = {{DistanceKind::gaussian, static_cast<double>(gl)}};
      break;
    }
  }
  return cfg;
}

std::uint64_t run_seed(std::uint64_t base, std::size_t grid_index, std::size_t run) {
  return base + 1000000ULL * grid_index + run;
}

namespace {

using Clock = std::chrono::steady_clock;

// One run: a sampled instance and the distance matrices for each variant.
using RunFn = std::function<std::vector<ResultRow>(double noise, std::uint64_t seed, unsigned threads)>;

std::vector<ResultRow> run_grid(const ExperimentConfig& cfg, const RunFn& one_run) {
  cfg.validate();
  std::vector<ResultRow> rows;
  const unsigned threads = detail::resolve_threads(cfg.threads);
  // Runs are spread over threads and each run computes single-threaded; a
  // single run gets all threads for its distance fill. Rows land in
  // per-run slots, so the output order is (grid, run, variant) regardless.
  const unsigned outer = cfg.runs > 1 ? threads : 1u;
  const unsigned inner = cfg.runs > 1 ? 1u : threads;
  for (std::size_t g = 0; g < cfg.noise_grid.size(); ++g) {
    std::vector<std::vector<ResultRow>> per_run(cfg.runs);
    detail::parallel_for_chunks(cfg.runs, outer, [&](std::size_t begin, std::size_t end) {
      for (std::size_t r = begin; r < end; ++r) {
        const auto seed = run_seed(cfg.seed_base, g, r);
        per_run[r] = one_run(cfg.noise_grid[g], seed, inner);
        for (auto& row : per_run[r]) {
          row.preset = to_string(cfg.preset);
          row.noise = cfg.noise_grid[g];
          row.run = r;
          row.seed = seed;
          if (!cfg.record_timing) row.elapsed_ms = 0.0;
        }
      }
    });
    for (auto& chunk : per_run) rows.insert(rows.end(), chunk.begin(), chunk.end());
  }
  return rows;
}

std::vector<ResultRow> evaluate_graph_pair(const ExperimentConfig& cfg, const GraphPair& pair,
                                           unsigned threads) {
  std::vector<ResultRow> rows;
  for (const auto& v : cfg.variants) {
    const auto start = Clock::now();
    const auto d = compute_distance(pair.g, pair.h, v, {threads});
    const auto match = match_lenient(d);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    ResultRow row;
    row.variant = to_string(v.kind);
    row.param = v.param;
    row.accuracy = accuracy(match, pair.ground_truth).value_or(0.0);
    row.ties = match.tie_count;
    row.elapsed_ms = ms;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<ResultRow> run_fig1(const ExperimentConfig& cfg) {
  return run_grid(cfg, [&](double root_delta, std::uint64_t seed, unsigned threads) {
    const double delta = root_delta * root_delta;
    const auto spec = er_spec(cfg.n, cfg.edge_prob, 1.0 - delta, kDefaultAlpha, seed);
    return evaluate_graph_pair(cfg, sample_pair(spec), threads);
  });
}

std::vector<ResultRow> run_fig2(const ExperimentConfig& cfg) {
  return run_grid(cfg, [&](double root_delta, std::uint64_t seed, unsigned threads) {
    const auto spec = inhomogeneous_spec_fig2(cfg.n, root_delta * root_delta, kDefaultAlpha, seed);
    return evaluate_graph_pair(cfg, sample_pair(spec), threads);
  });
}

std::vector<ResultRow> run_fig3(const ExperimentConfig& cfg) {
  const double b = cfg.weight_floor > 0.0 ? cfg.weight_floor : std::pow(10.0, 4.0 / 3.0);
  return run_grid(cfg, [&, b](double root_delta, std::uint64_t seed, unsigned threads) {
    Rng weight_rng(mix_seed(seed));
    auto weights = powerlaw_weights(cfg.n, cfg.gamma, b, weight_rng);
    const auto spec = powerlaw_chunglu_spec(std::move(weights), root_delta * root_delta, kDefaultAlpha, seed);
    return evaluate_graph_pair(cfg, sample_pair(spec), threads);
  });
}

std::vector<ResultRow> run_gaussian(const ExperimentConfig& cfg) {
  return run_grid(cfg, [&](double rho_gap, std::uint64_t seed, unsigned threads) {
    const auto spec = gaussian_uniform_mean_spec(cfg.n, cfg.mu_low, cfg.mu_high, rho_gap, seed);
    const auto pair = sample_gaussian_pair(spec);
    std::vector<ResultRow> rows;
    for (const auto& v : cfg.variants) {
      if (v.kind != DistanceKind::gaussian) throw ParameterError("gaussian preset only supports the gaussian distance");
      const auto start = Clock::now();
      const auto d = distance_gaussian(pair.g, pair.h, static_cast<std::int64_t>(v.param), {threads});
      const auto match = match_lenient(d);
      ResultRow row;
      row.variant = to_string(v.kind);
      row.param = v.param;
      row.accuracy = accuracy(match, pair.ground_truth).value_or(0.0);
      row.ties = match.tie_count;
      row.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      rows.push_back(std::move(row));
    }
    return rows;
  });
}

std::vector<ResultRow> run_realdata(const ExperimentConfig& cfg, const Graph& parent) {
  if (parent.size() < 2) throw ParameterError("realdata preset needs a parent graph");
  ExperimentConfig local = cfg;
  local.n = parent.size();
  return run_grid(local, [&](double s, std::uint64_t seed, unsigned threads) {
    Rng rng(seed);
    return evaluate_graph_pair(local, subsample_pair(parent, s, rng), threads);
  });
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, const Graph* parent) {
  switch (cfg.preset) {
    case Preset::fig1: return run_fig1(cfg);
    case Preset::fig2: return run_fig2(cfg);
    case Preset::fig3: return run_fig3(cfg);
    case Preset::gaussian: return run_gaussian(cfg);
    case Preset::realdata:
      if (parent == nullptr) throw ParameterError("realdata preset needs --edges");
      return run_realdata(cfg, *parent);
  }
  throw ParameterError("unknown preset");
}

void emit_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << kResultCsvHeader << '\n';
  for (const auto& r : rows)
    out << r.preset << ',' << r.variant << ',' << r.param << ',' << r.noise << ',' << r.run << ','
        << r.seed << ',' << r.accuracy << ',' << r.ties << ',' << r.elapsed_ms << '\n';
  os << out.str();
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  emit_csv(f, rows);
}

std::vector<ResultRow> parse_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kResultCsvHeader)
    throw std::runtime_error("results CSV: missing or unexpected header");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::vector<std::string> cells;
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    if (cells.size() != 9) throw std::runtime_error("results CSV: expected 9 fields in '" + line + "'");
    ResultRow r;
    r.preset = cells[0];
    r.variant = cells[1];
    r.param = std::stod(cells[2]);
    r.noise = std::stod(cells[3]);
    r.run = std::stoull(cells[4]);
    r.seed = std::stoull(cells[5]);
    r.accuracy = std::stod(cells[6]);
    r.ties = std::stoull(cells[7]);
    r.elapsed_ms = std::stod(cells[8]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string curve_label(const ResultRow& row) {
  if (row.variant == "ref" || row.variant == "cdf") return row.variant;
  std::ostringstream os;
  os << row.variant << '(' << row.param << ')';
  return os.str();
}

CurveTable mean_accuracy(const std::vector<ResultRow>& rows) {
  std::map<std::string, std::map<double, std::pair<double, std::size_t>>> sums;
  for (const auto& r : rows) {
    auto& cell = sums[curve_label(r)][r.noise];
    cell.first += r.accuracy;
    ++cell.second;
  }
  CurveTable out;
  for (const auto& [label, by_noise] : sums)
    for (const auto& [noise, acc] : by_noise) out[label][noise] = acc.first / static_cast<double>(acc.second);
  return out;
}

namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void emit_svg(std::ostream& os, const std::vector<ResultRow>& rows) {
  constexpr double width = 640, height = 420;
  constexpr double left = 60, right = 170, top = 20, bottom = 50;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

  const auto curves = mean_accuracy(rows);
  double xmin = 0.0, xmax = 1.0;
  bool first = true;
  for (const auto& [label, pts] : curves)
    for (const auto& [x, y] : pts) {
      if (first) {
        xmin = xmax = x;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
    }
  if (xmax == xmin) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
  auto py = [&](double y) { return top + (1.0 - y) * plot_h; };
  const std::string xlabel = rows.empty() ? "noise"
                             : rows.front().preset == "realdata" ? "s"
                             : rows.front().preset == "gaussian" ? "1 - rho"
                                                                 : "sqrt(delta)";

  std::ostringstream out;
  out << std::setprecision(6);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  // Axes and ticks.
  out << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
      << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
      << top + plot_h << "\"/>\n"
      << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
      << "\"/>\n</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double y = t / 4.0;
    const double x = xmin + (xmax - xmin) * t / 4.0;
    out << "<text x=\"" << left - 6 << "\" y=\"" << py(y) + 4 << "\" text-anchor=\"end\">" << y << "</text>\n"
        << "<text x=\"" << px(x) << "\" y=\"" << top + plot_h + 16 << "\" text-anchor=\"middle\">" << x
        << "</text>\n";
  }
  out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">"
      << xml_escape(xlabel) << "</text>\n"
      << "<text x=\"16\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << top + plot_h / 2 << ")\">fraction correctly matched</text>\n</g>\n";

  std::size_t index = 0;
  for (const auto& [label, pts] : curves) {
    const char* color = palette[index % std::size(palette)];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    bool sep = false;
    for (const auto& [x, y] : pts) {
      out << (sep ? " " : "") << px(x) << ',' << py(y);
      sep = true;
    }
    out << "\"/>\n";
    const double ly = top + 14 + 16 * static_cast<double>(index);
    out << "<line x1=\"" << left + plot_w + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << left + plot_w + 32
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n"
        << "<text x=\"" << left + plot_w + 38 << "\" y=\"" << ly
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(label) << "</text>\n";
    ++index;
  }
  out << "</svg>\n";
  os << out.str();
}

void emit_svg(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  emit_svg(f, rows);
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman_correlation(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ParameterError("spearman_correlation needs two equal samples of size >= 2");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double sign_test_p_value(std::size_t wins, std::size_t losses) {
  const std::size_t n = wins + losses;
  if (n == 0) return 1.0;
  // sum_{k >= wins} C(n, k) / 2^n, accumulated in log space.
  double p = 0.0;
  for (std::size_t k = wins; k <= n; ++k) {
    const double log_term = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) -
                            static_cast<double>(n) * std::log(2.0);
    p += std::exp(log_term);
  }
  return std::min(1.0, p);
}

}  // namespace dpmatch
