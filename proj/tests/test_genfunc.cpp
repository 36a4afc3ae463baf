#include "oracle.hpp"

#include "subseq/genfunc.hpp"
#include "subseq/report.hpp"

#include <gtest/gtest.h>

using namespace subseq;

namespace {

std::string shape(int i, int j) {
  return std::string(static_cast<std::size_t>(i), '1') + "0" + std::string(static_cast<std::size_t>(j), '1');
}

const std::vector<std::pair<int, int>> kPairs{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};

} // namespace

TEST(BivariateSeries, NoStoredZeros) {
  BivariateSeries s(3);
  s.add_term(1, 2, 5);
  s.add_term(1, 2, -5);
  s.add_term(2, 0, 0);
  s.add_term(7, 0, 1);
  EXPECT_TRUE(s.at_degree(1).empty());
  EXPECT_TRUE(s.at_degree(2).empty());
  EXPECT_EQ(s.coefficient(7, 0), 0);
}

TEST(BivariateSeries, GeometricTimesOneMinusIsOne) {
  // (1 - x t^3) / (1 - x t^3) = 1
  BivariateSeries lin(6);
  lin.add_term(0, 0, 1);
  lin.add_term(1, 3, -1);
  const auto prod = lin * BivariateSeries::geometric(6, 3, 0);
  EXPECT_EQ(prod.coefficient(0, 0), 1);
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(prod.at_degree(n).empty()) << n;
}

TEST(GfCoefficients, Examples) {
  const auto a = gf_coefficients(1, 1, 6);
  EXPECT_EQ(a.coefficient(6, 5), 0);
  EXPECT_EQ(a.coefficient(6, 6), 9);

  const auto b = gf_coefficients(0, 0, 4);
  for (int n = 0; n <= 4; ++n) {
    for (int k = 0; k <= n + 1; ++k) EXPECT_EQ(b.coefficient(n, k), oracle::choose(n, k)) << n << "," << k;
  }

  const auto c = gf_coefficients(1, 0, 8);
  for (int n = 0; n <= 8; ++n) {
    const auto expected = oracle::spectrum("10", n);
    std::size_t terms = 0;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      EXPECT_EQ(c.coefficient(n, k), expected[k]) << n << "," << k;
      terms += expected[k] != 0;
    }
    EXPECT_EQ(c.at_degree(n).size(), terms);
  }
}

TEST(GfCoefficients, MatchesStringOracle) {
  for (auto [i, j] : kPairs) {
    const auto s = gf_coefficients(i, j, 12);
    for (int n = 0; n <= 12; ++n) {
      const auto expected = oracle::spectrum(shape(i, j), n);
      for (const auto& [k, c] : s.at_degree(n)) {
        ASSERT_LT(k, expected.size()) << i << "," << j << " n=" << n;
      }
      for (std::size_t k = 0; k < expected.size(); ++k) {
        ASSERT_EQ(s.coefficient(n, k), expected[k]) << i << "," << j << " n=" << n << " k=" << k;
      }
    }
  }
}

TEST(GfCoefficients, ColumnSumsArePowersOfTwo) {
  for (auto [i, j] : kPairs) {
    const auto s = gf_coefficients(i, j, 12);
    for (int n = 0; n <= 12; ++n) {
      BigCount total = 0;
      for (const auto& [k, c] : s.at_degree(n)) total += c;
      ASSERT_EQ(total, pow2(static_cast<unsigned>(n))) << i << "," << j << " n=" << n;
    }
  }
}

TEST(GfCheck, WeightedFormHasNoMismatches) {
  for (auto [i, j] : kPairs) EXPECT_TRUE(gf_check(i, j, 12).empty()) << i << "," << j;
}

TEST(GfCheck, UnweightedLeadingZerosFailOnlyWithoutLeadingOnes) {
  // The unweighted leading factor coincides with the weighted one when
  // i >= 1, and miscounts the zeros ahead of the first 1 when i = 0.
  for (auto [i, j] : kPairs) {
    const auto mismatches = gf_check(i, j, 10, LeadingZeros::Plain);
    if (i >= 1) {
      EXPECT_TRUE(mismatches.empty()) << i << "," << j;
    } else {
      EXPECT_FALSE(mismatches.empty()) << i << "," << j;
    }
  }
  const auto m = gf_check(0, 0, 2, LeadingZeros::Plain);
  ASSERT_FALSE(m.empty());
  EXPECT_EQ(m.front().n, 1);
}

TEST(GfCheck, SeriesJsonShape) {
  const auto j = series_json(1, 1, gf_coefficients(1, 1, 3));
  EXPECT_EQ(j["N"], 3);
  ASSERT_EQ(j["coeffs"].size(), 4u);
  EXPECT_EQ(j["coeffs"][3]["n"], 3);
  EXPECT_EQ(j["coeffs"][3]["terms"][0]["k"], 0);
  EXPECT_EQ(j["coeffs"][3]["terms"][0]["c"], "7");
}
