#include "dpmatch/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "dpmatch/graph.hpp"
#include "dpmatch/signature.hpp"

namespace dpmatch {

namespace {

void require_L(int L) {
  if (L < 5) throw ParameterError("L must be at least 5");
}

// Cyclic interval of radius 1/L about c, as one or two pieces of [0, 1].
std::vector<Interval> cyclic_interval(double c, int L) {
  const double lo = c - 1.0 / L;
  const double hi = c + 1.0 / L;
  const double flo = frac(lo);
  const double fhi = frac(hi);
  if (flo < fhi) return {{flo, fhi}};
  return {{0.0, fhi}, {flo, 1.0}};
}

}  // namespace

double g_eval(double x, int L) {
  require_L(L);
  const double f = frac(x);
  const double cyclic_distance = std::min(f, 1.0 - f);
  return std::max(0.0, 2.0 / L - cyclic_distance);
}

double cyclic_overlap_measure(double a, double b, int L) {
  require_L(L);
  // t has a in I_t iff t is within 1/L of a on the circle, so the set is the
  // intersection of two cyclic intervals of radius 1/L.
  double total = 0.0;
  for (const Interval& p : cyclic_interval(frac(a), L))
    for (const Interval& q : cyclic_interval(frac(b), L)) {
      const double lo = std::max(p.lo, q.lo);
      const double hi = std::min(p.hi, q.hi);
      if (hi > lo) total += hi - lo;
    }
  return total;
}

double g_identity_check(double a, double b, int L) {
  return std::fabs(cyclic_overlap_measure(a, b, L) - g_eval(a - b, L));
}

SymSumDistribution::SymSumDistribution(std::span<const double> probs) : n_(probs.size()) {
  for (double p : probs)
    if (!(p >= 0.0 && p <= 0.5)) throw ParameterError("symmetric variable probability outside [0, 1/2]");
  // Only v >= 0 is stored during the recursion; pmf(-v) = pmf(v) exactly.
  std::vector<double> half(n_ + 2, 0.0), next(n_ + 2, 0.0);
  half[0] = 1.0;
  for (std::size_t m = 0; m < n_; ++m) {
    const double p = probs[m];
    const double stay = 1.0 - 2.0 * p;
    for (std::size_t v = 0; v <= m + 1; ++v) {
      const double below = v == 0 ? half[1] : half[v - 1];
      next[v] = stay * half[v] + p * (below + half[v + 1]);
    }
    std::swap(half, next);
  }
  pmf_.assign(2 * n_ + 1, 0.0);
  for (std::size_t v = 0; v <= n_; ++v) {
    pmf_[n_ + v] = half[v];
    pmf_[n_ - v] = half[v];
  }
}

double SymSumDistribution::pmf(std::int64_t v) const {
  const std::int64_t n = static_cast<std::int64_t>(n_);
  if (v < -n || v > n) return 0.0;
  return pmf_[static_cast<std::size_t>(v + n)];
}

double SymSumDistribution::mean_abs() const {
  double total = 0.0;
  for (std::size_t v = 1; v <= n_; ++v) total += static_cast<double>(v) * pmf_[n_ + v];
  return 2.0 * total;
}

double SymSumDistribution::total_mass() const {
  double total = 0.0;
  for (double x : pmf_) total += x;
  return total;
}

double f_n(std::span<const double> probs) {
  if (probs.size() > kMaxSymmetricTerms)
    throw ParameterError("f_n supports at most " + std::to_string(kMaxSymmetricTerms) + " terms");
  return SymSumDistribution(probs).mean_abs();
}

bool check_control_f(std::span<const double> probs) {
  double s = 0.0;
  for (double p : probs) s += p;
  return f_n(probs) >= 2.0 * s / std::sqrt(6.0 * s + 1.0) - kLemmaTolerance;
}

bool check_compare_f(std::span<const double> probs) {
  std::vector<double> scaled(probs.begin(), probs.end());
  for (double& p : scaled) {
    if (!(p >= 0.0 && p <= 1.0 / 16.0)) throw ParameterError("check_compare_f needs probabilities in [0, 1/16]");
    p *= 4.0;
  }
  return f_n(scaled) >= 2.0 * f_n(probs) - kLemmaTolerance;
}

bool check_monotone_f(std::span<const double> probs, std::size_t coordinate, double increment) {
  if (coordinate >= probs.size()) throw ParameterError("check_monotone_f: coordinate out of range");
  if (increment < 0.0) throw ParameterError("check_monotone_f: increment must be nonnegative");
  std::vector<double> bumped(probs.begin(), probs.end());
  bumped[coordinate] = std::min(0.5, bumped[coordinate] + increment);
  return f_n(bumped) >= f_n(probs) - kLemmaTolerance;
}

double bernoulli_min_l1(std::span<const double> bern_probs) {
  const std::size_t n = bern_probs.size();
  std::vector<double> pmf(n + 1, 0.0), next(n + 1, 0.0);
  pmf[0] = 1.0;
  for (std::size_t m = 0; m < n; ++m) {
    const double p = bern_probs[m];
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("Bernoulli probability outside [0, 1]");
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t v = 0; v <= m; ++v) {
      next[v] += (1.0 - p) * pmf[v];
      next[v + 1] += p * pmf[v];
    }
    std::swap(pmf, next);
  }
  // The objective is convex and piecewise linear with kinks at the support
  // points, so its minimum is attained at an integer in [0, n].
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x <= n; ++x) {
    double e = 0.0;
    for (std::size_t v = 0; v <= n; ++v)
      e += std::fabs(static_cast<double>(v) - static_cast<double>(x)) * pmf[v];
    best = std::min(best, e);
  }
  return best;
}

bool check_bern_to_sym(std::span<const double> bern_probs) {
  std::vector<double> sym(bern_probs.size());
  for (std::size_t i = 0; i < sym.size(); ++i) sym[i] = std::min(bern_probs[i], 1.0 - bern_probs[i]);
  const double lhs = bernoulli_min_l1(bern_probs);
  return lhs >= 0.5 * f_n(sym) - kLemmaTolerance;
}

std::vector<double> weighted_symmetric_pmf(std::span<const double> probs,
                                           std::span<const std::int64_t> coeffs,
                                           std::int64_t& offset) {
  if (probs.size() != coeffs.size()) throw ParameterError("probabilities and coefficients differ in length");
  std::int64_t span = 0;
  for (auto a : coeffs) span += std::llabs(a);
  offset = span;
  std::vector<double> pmf(static_cast<std::size_t>(2 * span + 1), 0.0);
  std::vector<double> next(pmf.size());
  pmf[static_cast<std::size_t>(span)] = 1.0;
  for (std::size_t m = 0; m < probs.size(); ++m) {
    const double p = probs[m];
    if (!(p >= 0.0 && p <= 0.5)) throw ParameterError("symmetric variable probability outside [0, 1/2]");
    const std::int64_t a = std::llabs(coeffs[m]);
    std::fill(next.begin(), next.end(), 0.0);
    for (std::int64_t v = -span; v <= span; ++v) {
      const double mass = pmf[static_cast<std::size_t>(v + span)];
      if (mass == 0.0) continue;
      next[static_cast<std::size_t>(v + span)] += (1.0 - 2.0 * p) * mass;
      if (a != 0) {
        next[static_cast<std::size_t>(v + a + span)] += p * mass;
        next[static_cast<std::size_t>(v - a + span)] += p * mass;
      } else {
        next[static_cast<std::size_t>(v + span)] += 2.0 * p * mass;
      }
    }
    std::swap(pmf, next);
  }
  return pmf;
}

bool check_control_h(std::span<const double> probs, std::span<const std::int64_t> coeffs,
                     std::int64_t x) {
  for (double p : probs)
    if (!(p >= 0.0 && p <= 0.25)) throw ParameterError("check_control_h needs probabilities in [0, 1/4]");
  std::int64_t offset = 0;
  const auto pmf = weighted_symmetric_pmf(probs, coeffs, offset);
  const double at_zero = pmf[static_cast<std::size_t>(offset)];
  const double at_x = (x < -offset || x > offset) ? 0.0 : pmf[static_cast<std::size_t>(x + offset)];
  return at_zero >= at_x - kLemmaTolerance;
}

}  // namespace dpmatch
