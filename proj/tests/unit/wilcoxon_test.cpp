#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "etr/bench/wilcoxon.hpp"
#include "etr/error.hpp"

namespace etr::bench {
namespace {

// Every sign pattern of the nonzero |d| ranks, counted directly.
double BruteP(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> d;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) d.push_back(x[i] - y[i]);
  if (d.empty()) return 1.0;
  std::vector<double> mag;
  for (double v : d) mag.push_back(std::fabs(v));
  // average ranks, coded independently
  std::vector<double> ranks(mag.size());
  for (std::size_t i = 0; i < mag.size(); ++i) {
    double less = 0, equal = 0;
    for (double m : mag) {
      less += m < mag[i];
      equal += m == mag[i];
    }
    ranks[i] = less + (equal + 1) / 2;
  }
  double total = 0, observed = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    total += ranks[i];
    if (d[i] > 0) observed += ranks[i];
  }
  const double mean = total / 2, dev = std::fabs(observed - mean);
  const std::size_t n = d.size();
  double extreme = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    double w = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) w += ranks[i];
    if (std::fabs(w - mean) >= dev - 1e-9) ++extreme;
  }
  return std::min(1.0, extreme / static_cast<double>(1ull << n));
}

TEST(Wilcoxon, UniformShift) {
  auto r = WilcoxonSignedRank({1, 2, 3, 4, 5}, {2, 3, 4, 5, 6});
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.n, 5u);
  EXPECT_DOUBLE_EQ(r.p, 0.0625);
}

TEST(Wilcoxon, ThreeDiscordantPairs) {
  auto r = WilcoxonSignedRank({1, 1, 1, 0, 0, 1}, {0, 0, 0, 0, 0, 1});
  EXPECT_DOUBLE_EQ(r.p, 0.25);
}

TEST(Wilcoxon, NoDifferences) {
  auto r = WilcoxonSignedRank({1, 0, 1}, {1, 0, 1});
  EXPECT_EQ(r.p, 1.0);
  EXPECT_EQ(r.n, 0u);
  EXPECT_FALSE(r.note.empty());
}

TEST(Wilcoxon, BadInput) {
  EXPECT_THROW(WilcoxonSignedRank({}, {}), Error);
  EXPECT_THROW(WilcoxonSignedRank({1, 2}, {1}), Error);
}

TEST(Wilcoxon, MatchesEnumeration) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 14;
    std::vector<double> x(n), y(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = rng() % 5;
      y[j] = rng() % 5;
    }
    EXPECT_NEAR(WilcoxonSignedRank(x, y).p, BruteP(x, y), 1e-12) << i;
  }
}

TEST(Wilcoxon, SwapSymmetry) {
  std::mt19937 rng(19);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 60;
    std::vector<double> x(n), y(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = rng() % 7;
      y[j] = rng() % 7;
    }
    for (ZeroMethod z : {ZeroMethod::kDiscard, ZeroMethod::kPratt}) {
      const auto a = WilcoxonSignedRank(x, y, z), b = WilcoxonSignedRank(y, x, z);
      EXPECT_DOUBLE_EQ(a.p, b.p);
      EXPECT_DOUBLE_EQ(a.w_plus, b.w_minus);
      EXPECT_GE(a.p, 0.0);
      EXPECT_LE(a.p, 1.0);
    }
  }
}

TEST(Wilcoxon, NormalApproximationAboveLimit) {
  std::vector<double> x(40), y(40);
  for (int i = 0; i < 40; ++i) {
    x[i] = i + 1;
    y[i] = 0;
  }
  auto r = WilcoxonSignedRank(x, y);
  EXPECT_FALSE(r.exact);
  EXPECT_LT(r.p, 1e-6);
}

TEST(Wilcoxon, PrattKeepsZerosInRanking) {
  // zeros shift the ranks of the nonzero differences upward
  auto d = WilcoxonSignedRank({0, 0, 1, 2, 3}, {0, 0, 0, 0, 0}, ZeroMethod::kDiscard);
  auto p = WilcoxonSignedRank({0, 0, 1, 2, 3}, {0, 0, 0, 0, 0}, ZeroMethod::kPratt);
  EXPECT_DOUBLE_EQ(d.w_plus, 6.0);
  EXPECT_DOUBLE_EQ(p.w_plus, 12.0);
}

TEST(Ranks, Average) {
  EXPECT_EQ(AverageRanks({3, 1, 3, 2}), (std::vector<double>{3.5, 1, 3.5, 2}));
}

TEST(Marks, Thresholds) {
  EXPECT_EQ(SignificanceMark(0.01), "strong");
  EXPECT_EQ(SignificanceMark(0.03), "fair");
  EXPECT_EQ(SignificanceMark(0.05), "fair");
  EXPECT_EQ(SignificanceMark(0.06), "");
}

}  // namespace
}  // namespace etr::bench
