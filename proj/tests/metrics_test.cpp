#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "hgc/metrics.hpp"
#include "oracles.hpp"

using namespace hgc;

namespace {

std::vector<double> random_scores(std::size_t n, int levels, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, levels - 1);
  std::vector<double> x(n);
  for (auto& v : x) v = pick(rng) * 0.25;
  return x;
}

}  // namespace

TEST(Kendall, WorkedValues) {
  EXPECT_NEAR(kendall_tau(std::vector<double>{1, 2, 3, 4}, std::vector<double>{1, 3, 2, 4}),
              2.0 / 3.0, 1e-12);
  std::vector<double> up{1, 2, 3, 4, 5}, down{5, 4, 3, 2, 1};
  EXPECT_EQ(kendall_tau(up, up), 1.0);
  EXPECT_EQ(kendall_tau(up, down), -1.0);
  std::vector<double> flat{2, 2, 2, 2, 2};
  EXPECT_EQ(kendall_tau(up, flat), 0.0);
}

TEST(Kendall, Errors) {
  EXPECT_THROW(kendall_tau(std::vector<double>{1, 2}, std::vector<double>{1}), DomainError);
  EXPECT_THROW(kendall_tau(std::vector<double>{1}, std::vector<double>{1}), DomainError);
}

TEST(Kendall, PropertiesAgainstOracle) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 40;
    auto a = random_scores(n, 1 + trial % 7, rng);
    auto b = random_scores(n, 1 + trial % 5, rng);
    const double tau = kendall_tau(a, b);
    EXPECT_NEAR(tau, oracle::kendall_tau(a, b), 1e-12);
    EXPECT_GE(tau, -1.0);
    EXPECT_LE(tau, 1.0);
    EXPECT_EQ(tau, kendall_tau(b, a));
    std::vector<double> neg(b.size());
    std::transform(b.begin(), b.end(), neg.begin(), [](double x) { return -x; });
    EXPECT_NEAR(kendall_tau(a, neg), -tau, 1e-12);
    // strictly monotone transforms keep tau
    std::vector<double> warped(a.size());
    std::transform(a.begin(), a.end(), warped.begin(), [](double x) { return std::exp(3 * x) + 1; });
    EXPECT_EQ(kendall_tau(warped, b), tau);
  }
}

TEST(Jaccard, Basics) {
  std::vector<NodeId> a{0, 1, 2, 3}, b{1, 0, 3, 2}, c{3, 2, 1, 0};
  EXPECT_EQ(jaccard_top_k(a, b, 2), 1.0);
  EXPECT_EQ(jaccard_top_k(a, c, 2), 0.0);
  EXPECT_NEAR(jaccard_top_k(a, std::vector<NodeId>{0, 2, 1, 3}, 2), 1.0 / 3.0, 1e-15);
  EXPECT_THROW(jaccard_top_k(a, b, 0), DomainError);
  EXPECT_THROW(jaccard_top_k(a, b, 5), DomainError);
}

TEST(Jaccard, PropertiesAgainstOracle) {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 30;
    auto a = fixtures::random_permutation(n, rng);
    auto b = fixtures::random_permutation(n, rng);
    for (std::size_t k = 1; k <= n; ++k) {
      const double j = jaccard_top_k(a, b, k);
      EXPECT_NEAR(j, oracle::jaccard(a, b, k), 1e-15);
      EXPECT_GE(j, 0.0);
      EXPECT_LE(j, 1.0);
      EXPECT_EQ(j, jaccard_top_k(b, a, k));
      EXPECT_EQ(jaccard_top_k(a, a, k), 1.0);
    }
    EXPECT_EQ(jaccard_top_k(a, b, n), 1.0);
  }
}

TEST(Monotonicity, WorkedValues) {
  EXPECT_NEAR(monotonicity(std::vector<double>{5, 5, 3, 1}), 25.0 / 36.0, 1e-12);
  EXPECT_EQ(monotonicity(std::vector<double>{1, 2, 3}), 1.0);
  EXPECT_EQ(monotonicity(std::vector<double>{7, 7, 7}), 0.0);
  EXPECT_THROW(monotonicity(std::vector<double>{1}), DomainError);
}

TEST(Monotonicity, PropertiesAgainstOracle) {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 50;
    auto x = random_scores(n, 1 + trial % 9, rng);
    const double m = monotonicity(x);
    EXPECT_NEAR(m, oracle::monotonicity(x), 1e-12);
    EXPECT_GE(m, 0.0);
    EXPECT_LE(m, 1.0);
    auto shuffled = x;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(monotonicity(shuffled), m);
  }
}

TEST(Evaluate, SelfComparison) {
  auto g = fixtures::example_network();
  std::vector<double> x{3, 1, 4, 1.5, 5, 9, 2, 6};
  ScoreMap s("X", x);
  SirSummary truth;
  truth.influence = x;
  const std::size_t ks[] = {1, 3, 8};
  auto r = evaluate_method(s, truth, ks);
  EXPECT_EQ(r.method, "X");
  EXPECT_EQ(r.kendall_tau, 1.0);
  EXPECT_EQ(r.monotonicity, 1.0);
  for (std::size_t k : ks) EXPECT_EQ(r.jaccard_at_k.at(k), 1.0);
  truth.influence.pop_back();
  EXPECT_THROW(evaluate_method(s, truth, ks), DomainError);
}
