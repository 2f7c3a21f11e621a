#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dpmatch/distance.hpp"
#include "dpmatch/graph.hpp"

namespace dpmatch {

enum class MatchMode { strict, lenient };
enum class MatchError { none, tie, not_a_permutation };

std::string to_string(MatchMode mode);
std::string to_string(MatchError error);

/// Outcome of row-wise argmin matching.
///
/// Strict mode either carries a bijection in `assignment` or an error with
/// the offending rows in `witnesses` (assignment is then empty). Lenient mode
/// always carries a total, possibly non-injective, assignment with ties
/// broken towards the smallest column index.
struct MatchResult {
  MatchMode mode = MatchMode::strict;
  MatchError error = MatchError::none;
  std::vector<Vertex> assignment;
  std::vector<Vertex> witnesses;
  /// Per-row flag: the row minimum is attained more than once.
  std::vector<bool> tied;
  std::size_t tie_count = 0;

  bool ok() const { return error == MatchError::none; }
};

MatchResult match_strict(const DistanceMatrix& d);
MatchResult match_lenient(const DistanceMatrix& d);

/// Fraction of rows with assignment[i] == truth[i]; nullopt for a strict
/// error outcome.
std::optional<double> accuracy(const MatchResult& result, const Permutation& truth);

/// For every row, the set of columns attaining the row minimum (exact equality).
std::vector<std::vector<Vertex>> argmin_sets(const DistanceMatrix& d);

/// Checks that matching g against relabel(h) gives, row by row, the argmin
/// sets of matching g against h mapped through relabel. Uses the cyclic distance.
bool oblivious_check(const Graph& g, const Graph& h, int L, const Permutation& relabel);

/// CSV "i,pi_hat_i,truth_i,correct,tied". truth may be empty, in which case
/// truth_i is written as -1 and correct as 0.
void write_match_csv(std::ostream& os, const MatchResult& result, const Permutation& truth);

}  // namespace dpmatch
