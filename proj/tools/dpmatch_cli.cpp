// dpmatch: sample correlated graph pairs, match them by degree profiles,
// run the experiment presets and the exact oracle checks.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dpmatch/distance.hpp"
#include "dpmatch/harness.hpp"
#include "dpmatch/ingest.hpp"
#include "dpmatch/matcher.hpp"
#include "dpmatch/model.hpp"
#include "dpmatch/oracles.hpp"

using namespace dpmatch;

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}

void write_truth(const std::string& path, const Permutation& truth) {
  auto f = open_out(path);
  f << "# vertex i of g corresponds to vertex truth_i of h\n";
  for (std::size_t i = 0; i < truth.size(); ++i) f << i << ' ' << truth[i] << '\n';
}

Permutation read_truth(const std::string& path) {
  auto f = open_in(path);
  const auto list = parse_edge_list(f);
  Permutation truth(list.raw_edges.size());
  std::vector<bool> seen(truth.size(), false);
  for (auto [i, t] : list.raw_edges) {
    if (i < 0 || static_cast<std::size_t>(i) >= truth.size() || seen[i])
      throw std::runtime_error(path + ": truth file must list each vertex once");
    seen[i] = true;
    truth[i] = static_cast<Vertex>(t);
  }
  if (!is_permutation(truth)) throw std::runtime_error(path + ": truth is not a permutation");
  return truth;
}

// --out is a prefix: <out>.g.txt, <out>.h.txt and <out>.truth.txt.
int cmd_generate(const std::string& spec_path, const std::string& out) {
  auto in = open_in(spec_path);
  const auto spec = spec_from_json(nlohmann::json::parse(in));
  Permutation truth;
  if (const auto* graph_spec = std::get_if<CorrelatedModelSpec>(&spec)) {
    const auto pair = sample_pair(*graph_spec);
    auto g = open_out(out + ".g.txt");
    write_edge_list(g, pair.g);
    auto h = open_out(out + ".h.txt");
    write_edge_list(h, pair.h);
    truth = pair.ground_truth;
    std::cout << "sampled n=" << pair.g.size() << " with " << pair.g.edge_count() << " and "
              << pair.h.edge_count() << " edges";
    if (graph_spec->clamped_pairs() > 0) std::cout << " (" << graph_spec->clamped_pairs() << " pairs clamped)";
    std::cout << '\n';
  } else {
    const auto pair = sample_gaussian_pair(std::get<GaussianPairSpec>(spec));
    auto g = open_out(out + ".g.txt");
    write_matrix(g, pair.g);
    auto h = open_out(out + ".h.txt");
    write_matrix(h, pair.h);
    truth = pair.ground_truth;
    std::cout << "sampled gaussian pair n=" << pair.g.size() << '\n';
  }
  write_truth(out + ".truth.txt", truth);
  std::cout << "wrote " << out << ".g.txt, " << out << ".h.txt, " << out << ".truth.txt\n";
  return 0;
}

struct MatchArgs {
  std::string g, h, distance = "cyclic", mode = "strict", truth, out, dump;
  double L = 0;
  double r = 0.5;
  unsigned threads = 0;
};

int cmd_match(const MatchArgs& a) {
  const auto kind = distance_kind_from_string(a.distance);
  DistanceMatrix d;
  if (kind == DistanceKind::gaussian) {
    auto gf = open_in(a.g);
    auto hf = open_in(a.h);
    const auto g = read_matrix(gf), h = read_matrix(hf);
    const auto L = a.L > 0 ? static_cast<std::int64_t>(a.L) : default_gaussian_L(g.size());
    d = distance_gaussian(g, h, L, {a.threads});
  } else {
    const auto g = graph_from_edge_list(read_edge_list(a.g));
    const auto h = graph_from_edge_list(read_edge_list(a.h));
    DistanceSpec spec{kind, 0.0};
    if (kind == DistanceKind::cyclic) spec.param = a.L > 0 ? a.L : default_cyclic_L(g.size());
    if (kind == DistanceKind::bin || kind == DistanceKind::disc) spec.param = a.r;
    d = compute_distance(g, h, spec, {a.threads});
  }
  if (!a.dump.empty()) {
    auto f = open_out(a.dump);
    write_distance_csv(f, d);
  }
  const auto result = a.mode == "strict" ? match_strict(d) : match_lenient(d);
  const Permutation truth = a.truth.empty() ? Permutation{} : read_truth(a.truth);
  if (!truth.empty() && truth.size() != d.n) throw std::runtime_error("truth size does not match the graphs");
  auto f = open_out(a.out);
  write_match_csv(f, result, truth);

  std::cout << d.spec.label() << ", " << to_string(result.mode) << ": ";
  if (!result.ok()) {
    std::cout << "error (" << to_string(result.error) << ") on " << result.witnesses.size() << " rows\n";
  } else {
    std::cout << "assignment with " << result.tie_count << " tied rows";
    if (!truth.empty()) std::cout << ", accuracy " << *accuracy(result, truth);
    std::cout << '\n';
  }
  return 0;
}

struct ExperimentArgs {
  std::string preset, edges, out_csv, out_svg, grid;
  std::size_t n = 0, runs = 0;
  std::int64_t max_id = 750;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool timing = false;
};

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

int cmd_experiment(const ExperimentArgs& a) {
  const auto preset = preset_from_string(a.preset);
  Graph parent;
  std::size_t n = a.n ? a.n : (preset == Preset::gaussian ? 200 : 1000);
  if (preset == Preset::realdata) {
    if (a.edges.empty()) throw ParameterError("realdata preset needs --edges");
    parent = symmetrize_and_restrict(read_edge_list(a.edges), a.max_id).graph;
    n = parent.size();
    std::cerr << "parent graph: " << parent.size() << " vertices, " << parent.edge_count() << " edges\n";
  }
  auto cfg = default_config(preset, n);
  if (a.runs) cfg.runs = a.runs;
  if (!a.grid.empty()) cfg.noise_grid = parse_grid(a.grid);
  cfg.seed_base = a.seed;
  cfg.threads = a.threads;
  cfg.record_timing = a.timing;
  const auto rows = run_experiment(cfg, preset == Preset::realdata ? &parent : nullptr);
  emit_csv(rows, a.out_csv);
  if (!a.out_svg.empty()) emit_svg(rows, a.out_svg);
  for (const auto& [label, curve] : mean_accuracy(rows)) {
    std::cout << label << ':';
    for (const auto& [x, y] : curve) std::cout << ' ' << x << '=' << y;
    std::cout << '\n';
  }
  return 0;
}

int cmd_verify(std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto probs = [&](std::size_t n, double hi) {
    std::vector<double> p(n);
    for (auto& x : p) x = hi * unit(rng);
    return p;
  };
  int failed = 0;
  auto report = [&](const char* name, std::size_t bad, std::size_t total) {
    std::cout << (bad == 0 ? "PASS " : "FAIL ") << name << ": " << bad << " failures in " << total << '\n';
    failed += bad != 0;
  };

  std::size_t bad = 0;
  for (std::size_t t = 0; t < trials; ++t)
    bad += g_identity_check(10 * unit(rng), 10 * unit(rng), 5 + static_cast<int>(rng() % 46)) >= 1e-12;
  report("overlap identity", bad, trials);

  const std::vector<double> one{0.25}, halves{0.5, 0.5};
  bad = std::fabs(f_n(one) - 0.5) > 1e-12;
  bad += std::fabs(f_n(halves) - 1.0) > 1e-12;
  report("f_n reference values", bad, 2);

  std::size_t c = 0, cmp = 0, mono = 0, bern = 0, h = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = 1 + rng() % 12;
    c += !check_control_f(probs(n, 0.5));
    cmp += !check_compare_f(probs(n, 1.0 / 16));
    mono += !check_monotone_f(probs(n, 0.5), rng() % n, 0.5 * unit(rng));
    bern += !check_bern_to_sym(probs(1 + rng() % 15, 1.0));
    std::vector<std::int64_t> a(n);
    for (auto& x : a) x = static_cast<std::int64_t>(rng() % 11) - 5;
    h += !check_control_h(probs(n, 0.25), a, static_cast<std::int64_t>(rng() % 21) - 10);
  }
  report("control_f", c, trials);
  report("compare_f", cmp, trials);
  report("monotone_f", mono, trials);
  report("bern_to_sym", bern, trials);
  report("control_h", h, trials);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-profile matching of correlated random graphs"};
  app.require_subcommand(1);

  std::string spec_path, gen_out;
  auto* generate = app.add_subcommand("generate", "Sample a correlated pair from a JSON model spec");
  generate->add_option("--spec", spec_path, "JSON spec {model, n, params, seed}")->required()->check(CLI::ExistingFile);
  generate->add_option("--out", gen_out, "Output prefix; writes <out>.g.txt, <out>.h.txt, <out>.truth.txt")->required();

  MatchArgs m;
  auto* match = app.add_subcommand("match", "Match two graphs (or Gaussian matrices) by row-wise argmin");
  match->set_help_flag("--help", "Print this help message and exit");
  match->add_option("--g", m.g, "First graph (edge list) or matrix")->required()->check(CLI::ExistingFile);
  match->add_option("--h", m.h, "Second graph (edge list) or matrix")->required()->check(CLI::ExistingFile);
  match->add_option("--distance", m.distance, "Distance variant")
      ->check(CLI::IsMember({"cyclic", "ref", "cdf", "bin", "disc", "gaussian"}))
      ->capture_default_str();
  match->add_option("--L", m.L, "Bin count for cyclic/gaussian (default ceil(8 ln n) / ceil(1e5 ln n))");
  match->add_option("--r", m.r, "Bin radius for bin/disc")->capture_default_str();
  match->add_option("--mode", m.mode, "strict or lenient")->check(CLI::IsMember({"strict", "lenient"}))->capture_default_str();
  match->add_option("--truth", m.truth, "Ground truth file, adds accuracy")->check(CLI::ExistingFile);
  match->add_option("--dump-distance", m.dump, "Also write the distance matrix as CSV");
  match->add_option("--threads", m.threads, "Worker threads (0 = all cores)");
  match->add_option("--out", m.out, "Match CSV")->required();

  ExperimentArgs e;
  auto* experiment = app.add_subcommand("experiment", "Run an experiment preset");
  experiment->add_option("--preset", e.preset, "Preset")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "gaussian", "realdata"}));
  experiment->add_option("--n", e.n, "Vertex count (default 1000, gaussian 200)");
  experiment->add_option("--runs", e.runs, "Runs per grid point (default 10)");
  experiment->add_option("--seed", e.seed, "Seed base")->capture_default_str();
  experiment->add_option("--edges", e.edges, "Parent edge list for realdata")->check(CLI::ExistingFile);
  experiment->add_option("--max-id", e.max_id, "Keep ids below this for realdata")->capture_default_str();
  experiment->add_option("--grid", e.grid, "Comma-separated noise grid overriding the preset");
  experiment->add_option("--threads", e.threads, "Worker threads (0 = all cores)");
  experiment->add_flag("--timing", e.timing, "Record elapsed_ms (makes the CSV machine dependent)");
  experiment->add_option("--out-csv", e.out_csv, "Result CSV")->required();
  experiment->add_option("--out-svg", e.out_svg, "SVG line chart of mean accuracy");

  std::size_t trials = 1000;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "Run the exact oracle checks");
  verify->add_option("--trials", trials, "Random inputs per check")->capture_default_str();
  verify->add_option("--seed", verify_seed, "Seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*generate) return cmd_generate(spec_path, gen_out);
    if (*match) return cmd_match(m);
    if (*experiment) return cmd_experiment(e);
    if (*verify) return cmd_verify(trials, verify_seed);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
