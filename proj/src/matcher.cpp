#include "dpmatch/matcher.hpp"

#include <algorithm>
#include <ostream>

namespace dpmatch {

std::string to_string(MatchMode mode) { return mode == MatchMode::strict ? "strict" : "lenient"; }

std::string to_string(MatchError error) {
  switch (error) {
    case MatchError::none: return "none";
    case MatchError::tie: return "tie";
    case MatchError::not_a_permutation: return "not-a-permutation";
  }
  return "unknown";
}

namespace {

struct RowMin {
  Vertex first;
  bool tied;
};

RowMin row_min(const DistanceMatrix& d, std::size_t i) {
  const double* row = d.row(i);
  Vertex best = 0;
  bool tied = false;
  for (std::size_t k = 1; k < d.n; ++k) {
    if (row[k] < row[best]) {
      best = static_cast<Vertex>(k);
      tied = false;
    } else if (row[k] == row[best]) {
      tied = true;
    }
  }
  return {best, tied};
}

MatchResult argmin_rows(const DistanceMatrix& d, MatchMode mode) {
  MatchResult r;
  r.mode = mode;
  r.assignment.resize(d.n);
  r.tied.assign(d.n, false);
  for (std::size_t i = 0; i < d.n; ++i) {
    const auto m = row_min(d, i);
    r.assignment[i] = m.first;
    r.tied[i] = m.tied;
    if (m.tied) ++r.tie_count;
  }
  return r;
}

}  // namespace

MatchResult match_strict(const DistanceMatrix& d) {
  MatchResult r = argmin_rows(d, MatchMode::strict);
  if (r.tie_count > 0) {
    r.error = MatchError::tie;
    for (std::size_t i = 0; i < d.n; ++i)
      if (r.tied[i]) r.witnesses.push_back(static_cast<Vertex>(i));
    r.assignment.clear();
    return r;
  }
  if (!is_permutation(r.assignment)) {
    std::vector<std::size_t> hits(d.n, 0);
    for (Vertex k : r.assignment) ++hits[k];
    for (std::size_t i = 0; i < d.n; ++i)
      if (hits[r.assignment[i]] > 1) r.witnesses.push_back(static_cast<Vertex>(i));
    r.error = MatchError::not_a_permutation;
    r.assignment.clear();
  }
  return r;
}

MatchResult match_lenient(const DistanceMatrix& d) { return argmin_rows(d, MatchMode::lenient); }

std::optional<double> accuracy(const MatchResult& result, const Permutation& truth) {
  if (!result.ok() || result.assignment.size() != truth.size()) return std::nullopt;
  if (truth.empty()) return 1.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i)
    if (result.assignment[i] == truth[i]) ++correct;
  return static_cast<double>(correct) / static_cast<double>(truth.size());
}

std::vector<std::vector<Vertex>> argmin_sets(const DistanceMatrix& d) {
  std::vector<std::vector<Vertex>> sets(d.n);
  for (std::size_t i = 0; i < d.n; ++i) {
    const double* row = d.row(i);
    const double best = *std::min_element(row, row + d.n);
    for (std::size_t k = 0; k < d.n; ++k)
      if (row[k] == best) sets[i].push_back(static_cast<Vertex>(k));
  }
  return sets;
}

bool oblivious_check(const Graph& g, const Graph& h, int L, const Permutation& relabel) {
  const auto base = argmin_sets(distance_cyclic(g, h, L));
  const auto moved = argmin_sets(distance_cyclic(g, h.relabeled(relabel), L));
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::vector<Vertex> mapped;
    mapped.reserve(base[i].size());
    for (Vertex k : base[i]) mapped.push_back(relabel[k]);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != moved[i]) return false;
  }
  return true;
}

void write_match_csv(std::ostream& os, const MatchResult& result, const Permutation& truth) {
  os << "i,pi_hat_i,truth_i,correct,tied\n";
  const std::size_t n = result.tied.size();
  for (std::size_t i = 0; i < n; ++i) {
    os << i << ',';
    if (result.assignment.size() == n)
      os << result.assignment[i];
    else
      os << -1;
    os << ',';
    if (truth.size() == n)
      os << truth[i];
    else
      os << -1;
    const bool correct = truth.size() == n && result.assignment.size() == n &&
                         result.assignment[i] == truth[i];
    os << ',' << (correct ? 1 : 0) << ',' << (result.tied[i] ? 1 : 0) << '\n';
  }
}

}  // namespace dpmatch
