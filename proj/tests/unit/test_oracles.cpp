#include <doctest.h>

#include <cmath>
#include <random>

#include "dpmatch/oracles.hpp"
#include "dpmatch/graph.hpp"
#include "support/reference.hpp"

using namespace dpmatch;

namespace {

std::vector<double> random_probs(std::mt19937_64& rng, std::size_t n, double hi) {
  std::uniform_real_distribution<double> u(0.0, hi);
  std::vector<double> p(n);
  for (auto& x : p) x = u(rng);
  return p;
}

}  // namespace

TEST_SUITE("oracles") {
  TEST_CASE("g function") {
    CHECK(g_eval(0.0, 5) == doctest::Approx(0.4));
    CHECK(g_eval(0.4, 5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(g_eval(2.3, 5) == doctest::Approx(0.1));
    CHECK(g_eval(-0.1, 10) == doctest::Approx(0.1));
    CHECK_THROWS_AS(g_eval(0.0, 4), ParameterError);
  }

  TEST_CASE("g is 1-periodic and 1-Lipschitz") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int t = 0; t < 2000; ++t) {
      const double x = u(rng), y = u(rng);
      const int L = 5 + t % 40;
      CHECK(std::fabs(g_eval(x, L) - g_eval(x + 1.0, L)) < 1e-12);
      CHECK(std::fabs(g_eval(x, L) - g_eval(y, L)) <= testing::cyc_dist(x, y) + 1e-12);
    }
  }

  TEST_CASE("overlap measure equals g(a - b)") {
    CHECK(g_identity_check(0.3, 0.3, 5) == 0.0);
    CHECK(cyclic_overlap_measure(0.3, 0.3, 5) == doctest::Approx(0.4));
    CHECK(cyclic_overlap_measure(0.7, 0.2, 5) == 0.0);
    CHECK(g_identity_check(0.7, 0.2, 5) < 1e-15);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0, 10);
    double worst = 0.0;
    for (int t = 0; t < 10000; ++t) worst = std::max(worst, g_identity_check(u(rng), u(rng), 5 + t % 46));
    CHECK(worst < 1e-12);
  }

  TEST_CASE("overlap measure agrees with numeric integration") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0, 3);
    const int grid = 100000;
    for (int t = 0; t < 20; ++t) {
      const double a = u(rng), b = u(rng);
      const int L = 5 + t;
      int hits = 0;
      for (int s = 0; s < grid; ++s) {
        const double c = (s + 0.5) / grid;
        hits += testing::cyc_dist(a, c) <= 1.0 / L && testing::cyc_dist(b, c) <= 1.0 / L;
      }
      CHECK(std::fabs(cyclic_overlap_measure(a, b, L) - static_cast<double>(hits) / grid) <= 4.0 / grid);
    }
  }

  TEST_CASE("f_n examples") {
    const std::vector<double> one{0.3}, halves{0.5, 0.5}, zeros(7, 0.0);
    CHECK(f_n(one) == doctest::Approx(0.6));
    CHECK(f_n(halves) == doctest::Approx(1.0));
    CHECK(f_n(zeros) == 0.0);
    const std::vector<double> bad{0.6};
    CHECK_THROWS_AS(f_n(bad), ParameterError);
    CHECK_THROWS_AS(f_n(std::vector<double>(26, 0.1)), ParameterError);
  }

  TEST_CASE("symmetric sum law matches enumeration") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; ++t) {
      const auto p = random_probs(rng, 1 + t % 9, 0.5);
      const SymSumDistribution dist(p);
      CHECK(std::fabs(dist.total_mass() - 1.0) < 1e-12);
      const auto n = static_cast<std::int64_t>(p.size());
      for (std::int64_t v = -n; v <= n; ++v) CHECK(dist.pmf(v) == dist.pmf(-v));
      CHECK(dist.pmf(n + 1) == 0.0);
      CHECK(f_n(p) == doctest::Approx(testing::brute_force_f(p)).epsilon(1e-12));
    }
  }

  TEST_CASE("f_n agrees with Monte Carlo within 4 sigma") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 5; ++t) {
      const auto p = random_probs(rng, 20, 0.5);
      const int draws = 200000;
      double sum = 0, sq = 0;
      for (int d = 0; d < draws; ++d) {
        int s = 0;
        for (double q : p) {
          const double x = u(rng);
          s += x < q ? 1 : (x < 2 * q ? -1 : 0);
        }
        sum += std::abs(s);
        sq += static_cast<double>(s) * s;
      }
      const double mean = sum / draws;
      const double sd = std::sqrt((sq / draws - mean * mean) / draws);
      CHECK(std::fabs(mean - f_n(p)) < 4 * sd);
    }
  }

  TEST_CASE("lemma checks: fixed examples") {
    const std::vector<double> halves{0.5, 0.5}, zeros(4, 0.0), sixteenth{1.0 / 16};
    CHECK(check_control_f(halves));
    CHECK(check_control_f(zeros));
    CHECK(check_compare_f(sixteenth));
    CHECK(check_compare_f(zeros));
    const std::vector<double> too_big{0.1};
    CHECK_THROWS_AS(check_compare_f(too_big), ParameterError);
    CHECK(check_monotone_f(halves, 0, 0.0));
    CHECK(check_bern_to_sym(halves));
    const std::vector<double> degenerate{0.0, 1.0, 1.0};
    CHECK(check_bern_to_sym(degenerate));
    const std::vector<double> quarter{0.25};
    const std::vector<std::int64_t> unit{1};
    CHECK(check_control_h(quarter, unit, 1));
    CHECK(check_control_h(quarter, unit, 0));
    CHECK_THROWS_AS(check_control_h(halves, std::vector<std::int64_t>{1, 1}, 1), ParameterError);
  }

  TEST_CASE("monotonicity: increment from zero adds exactly 2 dp") {
    std::vector<double> p(5, 0.0);
    auto bumped = p;
    bumped[0] = 0.2;
    CHECK(f_n(bumped) - f_n(p) == doctest::Approx(0.4));
  }

  TEST_CASE("Bernoulli minimum L1 matches enumeration over real x") {
    std::mt19937_64 rng(6);
    const std::vector<double> halves{0.5, 0.5};
    CHECK(bernoulli_min_l1(halves) == doctest::Approx(0.5));
    for (int t = 0; t < 40; ++t) {
      const auto p = random_probs(rng, 1 + t % 12, 1.0);
      const double exact = bernoulli_min_l1(p);
      double best = 1e300;
      for (int s = 0; s <= 40 * static_cast<int>(p.size()); ++s)
        best = std::min(best, testing::brute_force_bernoulli_l1(p, s / 40.0));
      CHECK(exact == doctest::Approx(best).epsilon(1e-12));
    }
  }

  TEST_CASE("weighted symmetric law matches enumeration") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
      const std::size_t n = 1 + t % 7;
      const auto p = random_probs(rng, n, 0.25);
      std::vector<std::int64_t> a(n);
      for (auto& c : a) c = static_cast<std::int64_t>(rng() % 11) - 5;
      std::int64_t offset = 0;
      const auto pmf = weighted_symmetric_pmf(p, a, offset);
      for (std::int64_t v = -offset; v <= offset; ++v)
        CHECK(pmf[static_cast<std::size_t>(v + offset)] ==
              doctest::Approx(testing::brute_force_weighted_mass(p, a, v)).epsilon(1e-12));
    }
  }

  TEST_CASE("lemma checks hold on random admissible inputs") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0, 1);
    int failures = 0;
    for (int t = 0; t < 10000; ++t) {
      const std::size_t n = 1 + rng() % 10;
      failures += !check_control_f(random_probs(rng, n, 0.5));
      failures += !check_compare_f(random_probs(rng, n, 1.0 / 16));
      const auto p = random_probs(rng, n, 0.5);
      failures += !check_monotone_f(p, rng() % n, 0.5 * u(rng));
    }
    for (int t = 0; t < 1000; ++t) {
      failures += !check_bern_to_sym(random_probs(rng, 1 + rng() % 15, 1.0));
      const std::size_t n = 1 + rng() % 12;
      std::vector<std::int64_t> a(n);
      for (auto& c : a) c = static_cast<std::int64_t>(rng() % 11) - 5;
      const std::int64_t x = static_cast<std::int64_t>(rng() % 21) - 10;
      failures += !check_control_h(random_probs(rng, n, 0.25), a, x);
    }
    CHECK(failures == 0);
  }
}
