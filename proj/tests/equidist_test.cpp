#include "atoral/equidist.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "atoral/mahler.hpp"
#include "atoral/numtheory.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace atoral {

namespace {

// Every box with faces at point coordinates or 0, 1, evaluated closed and open.
double brute_discrepancy(const std::vector<std::vector<double>>& pts) {
  const std::size_t d = pts.front().size();
  const double n = static_cast<double>(pts.size());
  std::vector<std::vector<double>> cand(d);
  for (std::size_t j = 0; j < d; ++j) {
    cand[j] = {0.0, 1.0};
    for (const auto& x : pts) cand[j].push_back(x[j]);
    std::sort(cand[j].begin(), cand[j].end());
    cand[j].erase(std::unique(cand[j].begin(), cand[j].end()), cand[j].end());
  }
  double best = 0.0;
  std::vector<std::size_t> lo(d, 0), hi(d, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == d) {
      double vol = 1.0;
      for (std::size_t k = 0; k < d; ++k) vol *= cand[k][hi[k]] - cand[k][lo[k]];
      std::size_t closed = 0, open = 0;
      for (const auto& x : pts) {
        bool c = true, o = true;
        for (std::size_t k = 0; k < d; ++k) {
          c = c && x[k] >= cand[k][lo[k]] && x[k] <= cand[k][hi[k]];
          o = o && x[k] > cand[k][lo[k]] && x[k] < cand[k][hi[k]];
        }
        closed += c;
        open += o;
      }
      best = std::max({best, static_cast<double>(closed) / n - vol, vol - static_cast<double>(open) / n});
      return;
    }
    for (lo[j] = 0; lo[j] < cand[j].size(); ++lo[j])
      for (hi[j] = lo[j]; hi[j] < cand[j].size(); ++hi[j]) rec(j + 1);
  };
  rec(0);
  return std::min(best, 1.0);
}

std::vector<std::vector<double>> random_points(std::mt19937_64& rng, std::size_t n, std::size_t d, int grid) {
  std::uniform_int_distribution<int> g(0, grid - 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> pts(n, std::vector<double>(d));
  for (auto& x : pts)
    for (auto& t : x) t = grid > 0 ? static_cast<double>(g(rng)) / grid : u(rng);
  return pts;
}

PointSet line_grid(std::size_t n, double offset) {
  std::vector<std::vector<double>> pts;
  for (std::size_t k = 0; k < n; ++k) pts.push_back({(static_cast<double>(k) + offset) / static_cast<double>(n)});
  return PointSet(1, pts);
}

}  // namespace

TEST(PointSetTest, Parsing) {
  const PointSet ps = PointSet::parse("# comment\n1/2, 0.25\n\n0,3/4\n");
  EXPECT_EQ(ps.dim(), 2);
  ASSERT_EQ(ps.size(), 2u);
  EXPECT_EQ(ps[0], (std::vector<double>{0.5, 0.25}));
  EXPECT_EQ(ps[1], (std::vector<double>{0.0, 0.75}));
  EXPECT_THROW(PointSet::parse("1/2\n0.1,0.2\n"), InputError);
  EXPECT_THROW(PointSet::parse("1\n"), InputError);
  EXPECT_THROW(PointSet::parse("1/0\n"), InputError);
  EXPECT_THROW(PointSet::parse("abc\n"), InputError);
  EXPECT_THROW(PointSet::parse(""), InputError);
  const PointSet orbit = PointSet::orbit(TorsionPoint({1}, 5), GaloisSubgroup::full(5));
  EXPECT_EQ(orbit.size(), 4u);
}

TEST(DiscrepancyTest, Examples) {
  for (std::size_t n = 1; n <= 512; ++n) {
    const auto r = discrepancy(line_grid(n, 0.0));
    EXPECT_TRUE(r.exact);
    EXPECT_NEAR(r.value, 1.0 / static_cast<double>(n), 1e-15) << n;
  }
  EXPECT_DOUBLE_EQ(discrepancy(PointSet(1, {{0.0}, {0.5}})).value, 0.5);
  EXPECT_DOUBLE_EQ(discrepancy(PointSet(1, {{0.0}})).value, 1.0);
  EXPECT_NEAR(discrepancy(line_grid(10, 0.5)).value, 0.1, 1e-15);
}

TEST(DiscrepancyTest, MatchesBruteForce) {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 60; ++t) {
    const std::size_t d = 1 + static_cast<std::size_t>(t % 3);
    const std::size_t n = d == 1 ? 1 + t % 30 : d == 2 ? 1 + t % 10 : 1 + t % 5;
    const int grid = t % 2 == 0 ? 8 : 0;
    const auto pts = random_points(rng, n, d, grid);
    EXPECT_NEAR(discrepancy(PointSet(static_cast<int>(d), pts)).value, brute_discrepancy(pts), 1e-12)
        << "d=" << d << " n=" << n;
  }
}

TEST(DiscrepancyTest, InvariantUnderPermutations) {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 10; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
    auto pts = random_points(rng, d == 2 ? 40 : 12, d, t % 3 == 0 ? 5 : 0);
    const double base = discrepancy(PointSet(static_cast<int>(d), pts)).value;
    std::shuffle(pts.begin(), pts.end(), rng);
    for (auto& x : pts) std::reverse(x.begin(), x.end());
    EXPECT_NEAR(discrepancy(PointSet(static_cast<int>(d), pts)).value, base, 1e-12);
  }
}

TEST(DiscrepancyTest, SizeCapAndLowerBound) {
  std::mt19937_64 rng(89);
  const PointSet big(2, random_points(rng, 65, 2, 0));
  EXPECT_THROW(discrepancy(big), InputError);
  const auto lb = discrepancy(big, true, 20000);
  EXPECT_FALSE(lb.exact);
  EXPECT_GT(lb.value, 0.0);
  EXPECT_LE(lb.value, 1.0);
  EXPECT_THROW(discrepancy(PointSet(4, {{0.1, 0.2, 0.3, 0.4}})), InputError);
}

TEST(DiscrepancyTest, ThreeDimensionalAtTheCap) {
  std::mt19937_64 rng(97);
  const PointSet ps(3, random_points(rng, 64, 3, 0));
  const auto start = std::chrono::steady_clock::now();
  const auto r = discrepancy(ps);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(r.exact);
  EXPECT_GT(r.value, 1.0 / 64.0);
  EXPECT_LT(seconds, 30.0);
}

TEST(KoksmaTest, Examples) {
  const auto id = [](double x) { return x; };
  for (std::size_t n : {1u, 7u, 50u}) {
    const auto mid = koksma_audit(id, 1.0, line_grid(n, 0.5), 0.5);
    EXPECT_NEAR(mid.lhs, 0.0, 1e-15);
    EXPECT_TRUE(mid.ok);
    const auto left = koksma_audit(id, 1.0, line_grid(n, 0.0), 0.5);
    EXPECT_NEAR(left.lhs, 0.5 / static_cast<double>(n), 1e-15);
    EXPECT_NEAR(left.rhs, 1.0 / static_cast<double>(n), 1e-15);
    EXPECT_TRUE(left.ok);
  }
  EXPECT_THROW(koksma_audit(id, -1.0, line_grid(3, 0.0), 0.5), InputError);
  EXPECT_THROW(koksma_audit(id, 1.0, PointSet(2, {{0.1, 0.2}}), 0.5), InputError);
}

TEST(KoksmaTest, FalphaOnOrbits) {
  const FAlphaR f(2.0, 0.5);
  const double integral = f.integral();
  EXPECT_NEAR(integral, std::log(2.0), 1e-12);
  for (std::int64_t n = 2; n <= 200; ++n) {
    const auto a = koksma_audit(f, f.var_bound(), PointSet::orbit(TorsionPoint({1}, n), GaloisSubgroup::full(n)),
                                integral);
    EXPECT_TRUE(a.ok) << n;
  }
}

TEST(KoksmaTest, NeverFailsOnMonotoneFunctions) {
  std::mt19937_64 rng(101);
  const std::vector<std::pair<std::function<double(double)>, std::pair<double, double>>> fs{
      {[](double x) { return x * x; }, {1.0, 1.0 / 3.0}},
      {[](double x) { return std::exp(3.0 * x); }, {std::exp(3.0) - 1.0, (std::exp(3.0) - 1.0) / 3.0}},
      {[](double x) { return -std::sqrt(x); }, {1.0, -2.0 / 3.0}},
      {[](double x) { return x < 0.3 ? 0.0 : 1.0; }, {1.0, 0.7}}};
  for (int t = 0; t < 100; ++t) {
    const PointSet ps(1, random_points(rng, 1 + static_cast<std::size_t>(t), 1, t % 2 ? 0 : 16));
    for (const auto& [f, vi] : fs) EXPECT_TRUE(koksma_audit(f, vi.first, ps, vi.second).ok);
  }
}

TEST(FAlphaRTest, ValuesAndVariation) {
  const FAlphaR zero(0.0, 0.3);
  EXPECT_EQ(zero(0.37), 0.0);
  EXPECT_EQ(zero.var_bound(), 0.0);
  EXPECT_NEAR(zero.integral(), 0.0, 1e-15);
  const FAlphaR two(2.0, 0.7);
  EXPECT_NEAR(two(0.0), 0.0, 1e-15);
  EXPECT_NEAR(two(0.5), std::log(3.0), 1e-15);
  EXPECT_NEAR(two.var_bound(), 2.0 * std::log(3.0), 1e-15);
  const FAlphaR one(1.0, 0.1);
  EXPECT_NEAR(one(0.0), std::log(0.1), 1e-15);
  EXPECT_NEAR(one.var_bound(), 2.0 * (std::log(2.0) + std::abs(std::log(0.1))), 1e-14);
  EXPECT_THROW(FAlphaR(1.0, 0.0), InputError);
  EXPECT_THROW(FAlphaR(1.0, 1.5), InputError);
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> u(-2.5, 2.5), ru(0.01, 1.0);
  for (int t = 0; t < 20; ++t) {
    const std::complex<double> alpha(u(rng), u(rng));
    const FAlphaR f(alpha, ru(rng));
    double var = 0.0, prev = f(0.0);
    const int nodes = 200000;
    for (int i = 1; i <= nodes; ++i) {
      const double cur = f(static_cast<double>(i) / nodes);
      var += std::abs(cur - prev);
      prev = cur;
    }
    EXPECT_NEAR(f.var_bound(), var, 1e-6 * (1.0 + var));
    EXPECT_NEAR(f.integral(), oracle::periodic_mean(f, 400000), 1e-7);
  }
}

TEST(TruncatedLogTest, Examples) {
  const auto zero = truncated_log_average(TorsionPoint({1}, 7), GaloisSubgroup::full(7), 0.0, 0.5);
  EXPECT_NEAR(zero.average, 0.0, 1e-15);
  EXPECT_NEAR(zero.residual, 0.0, 1e-15);
  const auto two = truncated_log_average(TorsionPoint({1}, 3), GaloisSubgroup::full(3), 2.0, 0.1);
  EXPECT_NEAR(two.average, std::log(7.0) / 2, 1e-14);
  EXPECT_NEAR(two.residual, 0.2798, 1e-4);
  const auto one = truncated_log_average(TorsionPoint({1}, 4), GaloisSubgroup::full(4), 1.0, 0.1);
  EXPECT_EQ(one.excluded, 0u);
  EXPECT_NEAR(one.average, 0.5 * std::log(2.0), 1e-14);
  EXPECT_NEAR(one.residual, 0.5 * std::log(2.0), 1e-14);
  const auto hit = truncated_log_average(TorsionPoint({1}, 6), GaloisSubgroup::full(6), std::polar(1.0, M_PI / 3), 0.1);
  EXPECT_EQ(hit.excluded, 1u);
}

TEST(TruncatedLogTest, ResidualDecays) {
  for (const std::complex<double> alpha : {std::complex<double>(2.0), std::complex<double>(0.5, 0.2)}) {
    double previous = std::numeric_limits<double>::infinity();
    for (std::int64_t n : {11, 101, 1009}) {
      const auto r = truncated_log_average(TorsionPoint({1}, n), GaloisSubgroup::full(n), alpha, 0.1);
      EXPECT_LT(std::abs(r.residual), previous) << n;
      EXPECT_GT(r.error_shape, 0.0);
      previous = std::abs(r.residual);
    }
    EXPECT_LT(previous, 1e-3);
  }
}

TEST(OrbitDiscrepancyTest, BoundedRatioOverPrimes) {
  double worst = 0.0;
  for (std::int64_t n = 3; n <= 997; n += 2) {
    if (!is_prime(n)) continue;
    const double disc = discrepancy(PointSet::orbit(TorsionPoint({1}, n), GaloisSubgroup::full(n))).value;
    worst = std::max(worst, disc * static_cast<double>(euler_phi(n)) /
                                (std::log(2.0 * static_cast<double>(n)) * static_cast<double>(num_divisors(n))));
  }
  EXPECT_LT(worst, 2.0);
}

TEST(IntegrationAuditTest, Examples) {
  std::vector<std::vector<double>> grid;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) grid.push_back({(i + 0.5) / 4.0, (j + 0.5) / 4.0});
  const PointSet ps(2, grid);
  const auto constant = numerical_integration_audit([](const std::vector<double>&) { return 3.0; }, ps, 3.0);
  EXPECT_EQ(constant.lhs, 0.0);
  EXPECT_EQ(constant.rhs, 0.0);
  EXPECT_TRUE(constant.ok);
  const auto x1 = [](const std::vector<double>& x) { return x[0]; };
  const auto exact = numerical_integration_audit(x1, ps, 0.5, [](double t) { return t; });
  EXPECT_FALSE(exact.omega_estimated);
  EXPECT_TRUE(exact.discrepancy_exact);
  EXPECT_NEAR(exact.lhs, 0.0, 1e-15);
  EXPECT_NEAR(exact.rhs, 9.0 * exact.t, 1e-15);
  EXPECT_TRUE(exact.ok);
  const auto estimated = numerical_integration_audit(x1, ps, 0.5);
  EXPECT_TRUE(estimated.omega_estimated);
  EXPECT_LE(estimated.omega, estimated.t + 1e-15);
  EXPECT_GT(estimated.omega, 0.9 * estimated.t);
  EXPECT_TRUE(estimated.ok);
}

TEST(IntegrationAuditTest, ClippedLogOnOrbit) {
  const LaurentPoly p = parse_poly("1 + x1 + x2", 2);
  const auto psi = [&](const std::vector<double>& x) {
    const std::vector<std::complex<double>> z{oracle::e(x[0]), oracle::e(x[1])};
    return std::max(std::log(std::abs(evaluate(p, z))), -3.0);
  };
  const double integral = mahler_qmc(p, 1000000).value;
  const PointSet orbit = PointSet::orbit(TorsionPoint({1, 5}, 61), GaloisSubgroup::full(61));
  const auto a = numerical_integration_audit(psi, orbit, integral);
  EXPECT_TRUE(a.discrepancy_exact);
  EXPECT_TRUE(a.ok);
  EXPECT_GT(a.omega, 0.0);
}

TEST(FiberAverageTest, Examples) {
  const auto constant = fiber_mahler_average(parse_poly("x1*x2 + 2", 2), 1, line_grid(7, 0.3));
  EXPECT_NEAR(constant.mean_fiber_measure, std::log(2.0), 1e-12);
  EXPECT_NEAR(constant.diff, 0.0, 1e-9);
  EXPECT_NEAR(constant.hat_residual, 0.0, 1e-12);
  const LaurentPoly s = parse_poly("1 + x1 + x2", 2);
  const auto small = fiber_mahler_average(s, 1, PointSet::orbit(TorsionPoint({1}, 11), GaloisSubgroup::full(11)));
  const auto large = fiber_mahler_average(s, 1, PointSet::orbit(TorsionPoint({1}, 101), GaloisSubgroup::full(101)));
  EXPECT_LT(std::abs(large.diff), std::abs(small.diff));
  EXPECT_LT(std::abs(large.diff), 0.01);
  const auto sixth = fiber_mahler_average(parse_poly("x1 + x2 - 1", 2), 1, PointSet(1, {{1.0 / 6.0}, {0.25}}));
  EXPECT_TRUE(std::isfinite(sixth.diff));
  EXPECT_THROW(fiber_mahler_average(parse_poly("x1*x2 - x2", 2), 1, PointSet(1, {{0.0}, {0.5}})), InputError);
  EXPECT_THROW(fiber_mahler_average(s, 2, line_grid(3, 0.0)), InputError);
}

}  // namespace atoral
