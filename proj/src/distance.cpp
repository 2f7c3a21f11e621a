#include "dpmatch/distance.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "parallel.hpp"

namespace dpmatch {

std::string to_string(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::cyclic: return "cyclic";
    case DistanceKind::ref: return "ref";
    case DistanceKind::cdf: return "cdf";
    case DistanceKind::bin: return "bin";
    case DistanceKind::disc: return "disc";
    case DistanceKind::gaussian: return "gaussian";
  }
  return "unknown";
}

DistanceKind distance_kind_from_string(const std::string& name) {
  for (auto k : {DistanceKind::cyclic, DistanceKind::ref, DistanceKind::cdf, DistanceKind::bin,
                 DistanceKind::disc, DistanceKind::gaussian})
    if (to_string(k) == name) return k;
  throw ParameterError("unknown distance variant '" + name + "'");
}

std::string DistanceSpec::label() const {
  std::ostringstream os;
  os << to_string(kind);
  if (kind != DistanceKind::ref && kind != DistanceKind::cdf) os << '(' << param << ')';
  return os.str();
}

namespace {

DistanceMatrix make_matrix(std::size_t n, DistanceSpec spec) {
  DistanceMatrix d;
  d.n = n;
  d.values.assign(n * n, 0.0);
  d.spec = spec;
  return d;
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw ParameterError("distance: inputs differ in size");
}

// L1 distance between the empirical CDFs of two sorted samples.
double ecdf_l1(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return kInfiniteDistance;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double prev = std::min(a.front(), b.front());
  double total = 0.0;
  while (i < a.size() || j < b.size()) {
    const double next = std::min(i < a.size() ? a[i] : kInfiniteDistance,
                                 j < b.size() ? b[j] : kInfiniteDistance);
    total += std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb) * (next - prev);
    while (i < a.size() && a[i] == next) ++i;
    while (j < b.size() && b[j] == next) ++j;
    prev = next;
  }
  return total;
}

template <class Transform>
std::vector<std::vector<double>> neighbor_samples(const Graph& g, Transform&& f) {
  std::vector<std::vector<double>> out(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    auto& s = out[v];
    s.reserve(g.degree(v));
    for (Vertex j : g.neighbors(v)) s.push_back(f(g.degree(j)));
    std::sort(s.begin(), s.end());
  }
  return out;
}

DistanceMatrix ecdf_distance(const Graph& g, const Graph& h, bool take_sqrt, ParallelOptions opts) {
  require_same_size(g.size(), h.size());
  auto f = [take_sqrt](std::uint32_t d) {
    return take_sqrt ? std::sqrt(static_cast<double>(d)) : static_cast<double>(d);
  };
  const auto gs = neighbor_samples(g, f);
  const auto hs = neighbor_samples(h, f);
  const std::size_t n = g.size();
  auto d = make_matrix(n, {take_sqrt ? DistanceKind::cdf : DistanceKind::ref, 0.0});
  detail::parallel_for_chunks(n, opts.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t k = 0; k < n; ++k) d(i, k) = ecdf_l1(gs[i], hs[k]);
  });
  return d;
}

using SparseCounts = std::vector<std::pair<std::int64_t, int>>;

SparseCounts to_sparse(std::vector<std::int64_t>& bins) {
  std::sort(bins.begin(), bins.end());
  SparseCounts out;
  for (std::int64_t b : bins) {
    if (!out.empty() && out.back().first == b)
      ++out.back().second;
    else
      out.emplace_back(b, 1);
  }
  return out;
}

double sparse_l1(const SparseCounts& a, const SparseCounts& b) {
  std::int64_t total = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      total += std::abs(a[i].second - b[j].second);
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      total += a[i++].second;
    } else {
      total += b[j++].second;
    }
  }
  for (; i < a.size(); ++i) total += a[i].second;
  for (; j < b.size(); ++j) total += b[j].second;
  return static_cast<double>(total);
}

DistanceMatrix sparse_distance(const std::vector<SparseCounts>& gs,
                               const std::vector<SparseCounts>& hs, DistanceSpec spec,
                               ParallelOptions opts) {
  const std::size_t n = gs.size();
  auto d = make_matrix(n, spec);
  detail::parallel_for_chunks(n, opts.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t k = 0; k < n; ++k) d(i, k) = sparse_l1(gs[i], hs[k]);
  });
  return d;
}

}  // namespace

std::vector<double> weighted_l1_table(const StepGrid& grid, const ProfileTable& u,
                                      const ProfileTable& v, ParallelOptions opts) {
  const std::size_t cells = grid.cells();
  if (u.cols != cells || v.cols != cells) throw ParameterError("profile tables do not match grid");
  const std::size_t rows = u.rows;
  const std::size_t cols = v.rows;

  // v transposed to cells x cols so the inner loop runs over k.
  std::vector<float> vt(cells * cols);
  for (std::size_t k = 0; k < cols; ++k)
    for (std::size_t c = 0; c < cells; ++c) vt[c * cols + k] = v.counts[k * cells + c];

  std::vector<double> out(rows * cols, 0.0);
  detail::parallel_for_chunks(rows, opts.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double* acc = out.data() + i * cols;
      const float* ui = u.counts.data() + i * cells;
      for (std::size_t c = 0; c < cells; ++c) {
        const double w = grid.widths[c];
        const float uc = ui[c];
        const float* vc = vt.data() + c * cols;
        for (std::size_t k = 0; k < cols; ++k)
          acc[k] += w * static_cast<double>(std::fabs(vc[k] - uc));
      }
    }
  });
  return out;
}

DistanceMatrix distance_cyclic(const Graph& g, const Graph& h, int L, ParallelOptions opts) {
  require_same_size(g.size(), h.size());
  const auto profiles = build_cyclic_profiles(g, h, L);
  auto d = make_matrix(g.size(), {DistanceKind::cyclic, static_cast<double>(L)});
  d.values = weighted_l1_table(profiles.grid, profiles.g, profiles.h, opts);
  return d;
}

DistanceMatrix distance_ref(const Graph& g, const Graph& h, ParallelOptions opts) {
  return ecdf_distance(g, h, false, opts);
}

DistanceMatrix distance_cdf(const Graph& g, const Graph& h, ParallelOptions opts) {
  return ecdf_distance(g, h, true, opts);
}

DistanceMatrix distance_bin(const Graph& g, const Graph& h, double r, ParallelOptions opts) {
  require_same_size(g.size(), h.size());
  if (!(r > 0.0)) throw ParameterError("distance_bin requires r > 0");
  const auto profiles = build_line_profiles(g, h, r);
  auto d = make_matrix(g.size(), {DistanceKind::bin, r});
  d.values = weighted_l1_table(profiles.grid, profiles.g, profiles.h, opts);
  return d;
}

DistanceMatrix distance_disc(const Graph& g, const Graph& h, double r, ParallelOptions opts) {
  require_same_size(g.size(), h.size());
  if (!(r > 0.0)) throw ParameterError("distance_disc requires r > 0");
  const double width = 2.0 * r;
  auto sparse = [width](const Graph& graph) {
    std::vector<SparseCounts> out(graph.size());
    std::vector<std::int64_t> bins;
    for (Vertex v = 0; v < graph.size(); ++v) {
      bins.clear();
      for (Vertex j : graph.neighbors(v))
        bins.push_back(static_cast<std::int64_t>(
            std::floor(std::sqrt(static_cast<double>(graph.degree(j))) / width)));
      out[v] = to_sparse(bins);
    }
    return out;
  };
  return sparse_distance(sparse(g), sparse(h), {DistanceKind::disc, r}, opts);
}

DistanceMatrix distance_gaussian(const RealMatrix& g, const RealMatrix& h, std::int64_t L,
                                 ParallelOptions opts) {
  require_same_size(g.size(), h.size());
  if (L < 1) throw ParameterError("distance_gaussian requires L >= 1");
  const double scale = static_cast<double>(L);
  auto sparse = [scale](const RealMatrix& m) {
    std::vector<SparseCounts> out(m.size());
    std::vector<std::int64_t> bins;
    for (std::size_t i = 0; i < m.size(); ++i) {
      bins.clear();
      for (double x : m.row(i)) bins.push_back(static_cast<std::int64_t>(std::floor(scale * x)));
      out[i] = to_sparse(bins);
    }
    return out;
  };
  return sparse_distance(sparse(g), sparse(h), {DistanceKind::gaussian, scale}, opts);
}

DistanceMatrix compute_distance(const Graph& g, const Graph& h, const DistanceSpec& spec,
                                ParallelOptions opts) {
  switch (spec.kind) {
    case DistanceKind::cyclic: return distance_cyclic(g, h, static_cast<int>(spec.param), opts);
    case DistanceKind::ref: return distance_ref(g, h, opts);
    case DistanceKind::cdf: return distance_cdf(g, h, opts);
    case DistanceKind::bin: return distance_bin(g, h, spec.param, opts);
    case DistanceKind::disc: return distance_disc(g, h, spec.param, opts);
    case DistanceKind::gaussian: break;
  }
  throw ParameterError("compute_distance: gaussian distance needs real matrices");
}

void write_distance_csv(std::ostream& os, const DistanceMatrix& d) {
  const auto old_precision = os.precision(17);
  os << "i,k,distance\n";
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t k = 0; k < d.n; ++k) os << i << ',' << k << ',' << d(i, k) << '\n';
  os.precision(old_precision);
}

}  // namespace dpmatch
