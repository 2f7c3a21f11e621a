#include "dpmatch/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace dpmatch {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Reads "<key><int>" from a comment of the form "# <key><int> ...".
std::optional<std::size_t> header_value(std::string_view comment, std::string_view key) {
  comment = trim(comment.substr(1));
  if (comment.substr(0, key.size()) != key) return std::nullopt;
  const char* begin = comment.data() + key.size();
  const char* end = comment.data() + comment.size();
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr == begin) return std::nullopt;
  return value;
}

bool parse_id(std::string_view token, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() && out >= 0;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in) {
  EdgeList out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      if (!out.declared_n)
        if (auto n = header_value(body, "n=")) out.declared_n = n;
      continue;
    }
    std::istringstream fields{std::string(body)};
    std::string a, b, extra;
    if (!(fields >> a >> b)) throw ParseError(lineno, "expected two vertex ids");
    if (fields >> extra) throw ParseError(lineno, "unexpected trailing field '" + extra + "'");
    std::int64_t u = 0, v = 0;
    if (!parse_id(a, u) || !parse_id(b, v))
      throw ParseError(lineno, "vertex ids must be nonnegative integers");
    out.raw_edges.emplace_back(u, v);
  }
  return out;
}

EdgeList read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(in);
}

LabeledGraph symmetrize_and_restrict(const EdgeList& e, std::optional<std::int64_t> max_id) {
  if (max_id && *max_id <= 0) throw ParameterError("max_id must be positive");
  auto keep = [&](std::int64_t id) { return !max_id || id < *max_id; };

  std::set<std::int64_t> ids;
  for (auto [u, v] : e.raw_edges) {
    if (keep(u)) ids.insert(u);
    if (keep(v)) ids.insert(v);
  }
  LabeledGraph out;
  out.ids.assign(ids.begin(), ids.end());
  std::map<std::int64_t, Vertex> index;
  for (std::size_t i = 0; i < out.ids.size(); ++i) index[out.ids[i]] = static_cast<Vertex>(i);

  std::set<Edge> edges;
  for (auto [u, v] : e.raw_edges) {
    if (u == v || !keep(u) || !keep(v)) continue;
    Vertex a = index[u], b = index[v];
    if (a > b) std::swap(a, b);
    edges.insert({a, b});
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  out.graph = Graph::from_edges(out.ids.size(), list);
  return out;
}

std::vector<std::int64_t> common_topk_by_degree(std::span<const LabeledGraph> graphs, std::size_t k) {
  if (graphs.empty()) return {};
  std::set<std::int64_t> common(graphs.front().ids.begin(), graphs.front().ids.end());
  for (std::size_t g = 1; g < graphs.size(); ++g) {
    std::set<std::int64_t> next;
    for (auto id : graphs[g].ids)
      if (common.count(id)) next.insert(id);
    common = std::move(next);
  }
  if (k > common.size()) throw ParameterError("common_topk_by_degree: k exceeds the common vertex set");

  const auto& first = graphs.front();
  std::vector<std::pair<std::uint32_t, std::int64_t>> ranked;
  ranked.reserve(common.size());
  for (std::size_t v = 0; v < first.ids.size(); ++v)
    if (common.count(first.ids[v])) ranked.emplace_back(first.graph.degree(static_cast<Vertex>(v)), first.ids[v]);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<std::int64_t> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(ranked[i].second);
  std::sort(out.begin(), out.end());
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> remap(g.size(), kAbsent);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= g.size()) throw ParameterError("induced_subgraph: vertex out of range");
    remap[sorted[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (remap[u] != kAbsent && remap[v] != kAbsent) edges.emplace_back(remap[u], remap[v]);
  return Graph::from_edges(sorted.size(), edges);
}

LabeledGraph induced_subgraph_by_ids(const LabeledGraph& g, std::span<const std::int64_t> ids) {
  std::map<std::int64_t, Vertex> index;
  for (std::size_t v = 0; v < g.ids.size(); ++v) index[g.ids[v]] = static_cast<Vertex>(v);
  std::vector<Vertex> vertices;
  for (auto id : ids) {
    auto it = index.find(id);
    if (it == index.end()) throw ParameterError("induced_subgraph_by_ids: id " + std::to_string(id) + " not present");
    vertices.push_back(it->second);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  LabeledGraph out;
  out.graph = induced_subgraph(g.graph, vertices);
  for (Vertex v : vertices) out.ids.push_back(g.ids[v]);
  return out;
}

Graph graph_from_edge_list(const EdgeList& e) {
  std::int64_t max_seen = -1;
  for (auto [u, v] : e.raw_edges) max_seen = std::max({max_seen, u, v});
  const std::size_t n = e.declared_n ? *e.declared_n : static_cast<std::size_t>(max_seen + 1);
  if (max_seen >= static_cast<std::int64_t>(n)) throw ParameterError("edge list refers to a vertex beyond the declared n");
  std::set<Edge> edges;
  for (auto [u, v] : e.raw_edges) {
    if (u == v) continue;
    auto a = static_cast<Vertex>(std::min(u, v));
    auto b = static_cast<Vertex>(std::max(u, v));
    edges.insert({a, b});
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << "# n=" << g.size() << " m=" << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

void write_matrix(std::ostream& os, const RealMatrix& m) {
  const auto old_precision = os.precision(17);
  os << "# n=" << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  os.precision(old_precision);
}

RealMatrix read_matrix(std::istream& in) {
  std::string line;
  std::optional<std::size_t> n;
  std::vector<double> values;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      if (!n) n = header_value(body, "n=");
      continue;
    }
    std::istringstream fields{std::string(body)};
    double x = 0.0;
    while (fields >> x) values.push_back(x);
    if (!fields.eof()) throw ParseError(lineno, "malformed matrix entry");
  }
  if (!n) throw ParseError(lineno, "matrix file lacks a '# n=<n>' header");
  if (values.size() != *n * *n) throw ParseError(lineno, "matrix has the wrong number of entries");
  RealMatrix m(*n);
  for (std::size_t i = 0; i < *n; ++i)
    for (std::size_t j = 0; j < *n; ++j) m(i, j) = values[i * *n + j];
  return m;
}

}  // namespace dpmatch
