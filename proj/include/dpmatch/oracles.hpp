#pragma once

// Exact checks for the supporting identities and inequalities behind the
// matching guarantee: the overlap function g of two cyclic bins, and the L1
// norm f_n of sums of independent symmetric {-1,0,1} variables.

#include <cstdint>
#include <span>
#include <vector>

namespace dpmatch {

/// g(x) = max{0, 2/L - min_m |x - m|}.
double g_eval(double x, int L);

/// Measure of {t in [0,1): a, b in I_t} by intersecting the two cyclic
/// intervals exactly. Independent of g_eval.
double cyclic_overlap_measure(double a, double b, int L);

/// |cyclic_overlap_measure(a, b, L) - g_eval(a - b, L)|.
double g_identity_check(double a, double b, int L);

/// Exact law of sum X_i for independent symmetric {-1,0,1} variables with
/// P[X_i = 1] = P[X_i = -1] = p_i.
class SymSumDistribution {
 public:
  explicit SymSumDistribution(std::span<const double> probs);

  std::size_t n() const { return n_; }
  /// P[sum = v] for v in [-n, n], zero outside.
  double pmf(std::int64_t v) const;
  /// E|sum|.
  double mean_abs() const;
  double total_mass() const;

 private:
  std::size_t n_;
  std::vector<double> pmf_;  // index v + n
};

/// Largest n accepted by f_n.
inline constexpr std::size_t kMaxSymmetricTerms = 25;

/// f_n(p_1..p_n) = E|sum X_i|. Throws ParameterError for p outside [0, 1/2]
/// or n > kMaxSymmetricTerms.
double f_n(std::span<const double> probs);

/// Slack applied to every inequality below.
inline constexpr double kLemmaTolerance = 1e-9;

/// f_n(p) >= 2S / sqrt(6S + 1), S = sum p_i.
bool check_control_f(std::span<const double> probs);
/// f_n(4p) >= 2 f_n(p) for p in [0, 1/16]^n.
bool check_compare_f(std::span<const double> probs);
/// f_n does not decrease when probs[coordinate] grows by increment (result kept <= 1/2).
bool check_monotone_f(std::span<const double> probs, std::size_t coordinate, double increment);
/// inf_x E|sum B_i - x| >= f_n(min(p_i, 1 - p_i)) / 2 for independent Bernoulli(p_i).
bool check_bern_to_sym(std::span<const double> bern_probs);
/// P[sum a_i X_i = 0] >= P[sum a_i X_i = x] for p in [0, 1/4]^n and integer a, x.
bool check_control_h(std::span<const double> probs, std::span<const std::int64_t> coeffs,
                     std::int64_t x);

/// Exact law of sum a_i X_i over [-sum|a_i|, sum|a_i|]; index v + offset.
std::vector<double> weighted_symmetric_pmf(std::span<const double> probs,
                                           std::span<const std::int64_t> coeffs,
                                           std::int64_t& offset);

/// min over integers x of E|sum B_i - x| for independent Bernoulli(p_i).
double bernoulli_min_l1(std::span<const double> bern_probs);

}  // namespace dpmatch
