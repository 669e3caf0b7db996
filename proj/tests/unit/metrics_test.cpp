#include <gtest/gtest.h>

#include <random>

#include "colorlab/metrics.hpp"
#include "colorlab/transforms.hpp"
#include "oracles/ciede2000_pairs.hpp"
#include "oracles/delta_e_oracle.hpp"

namespace colorlab {
namespace {

Lab lab(const oracle::LabValue& v) { return {v.L, v.a, v.b}; }

std::vector<std::pair<oracle::LabValue, oracle::LabValue>> random_pairs(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> l(0.0, 100.0);
  std::uniform_real_distribution<double> ab(-110.0, 110.0);
  std::vector<std::pair<oracle::LabValue, oracle::LabValue>> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({{l(rng), ab(rng), ab(rng)}, {l(rng), ab(rng), ab(rng)}});
  }
  return out;
}

TEST(DeltaE76, Anchors) {
  EXPECT_EQ(delta_e_76({50, 0, 0}, {53, 4, 0}), 5.0);
  EXPECT_EQ(delta_e_76({100, 0, 0}, {0, 0, 0}), 100.0);
  EXPECT_EQ(delta_e_76({42, -3, 7}, {42, -3, 7}), 0.0);
}

TEST(DeltaE94, Anchors) {
  EXPECT_EQ(delta_e_94({42, -3, 7}, {42, -3, 7}), 0.0);
  EXPECT_NEAR(delta_e_94({50, 0, 0}, {60, 0, 0}), 10.0, 1e-12);
}

TEST(DeltaE94, MatchesOracleOnRandomPairs) {
  for (const auto& [x, y] : random_pairs(200, 94)) {
    ASSERT_NEAR(delta_e_94(lab(x), lab(y)), oracle::cie94(x, y), 1e-6);
    const DeltaEParams textiles{2.0, 1.0, 1.0, Cie94Application::Textiles};
    ASSERT_NEAR(delta_e_94(lab(x), lab(y), textiles), oracle::cie94(x, y, 2.0, 1.0, 1.0, 0.048, 0.014), 1e-6);
  }
}

TEST(DeltaE94, UsesFirstSampleAsReference) {
  const Lab a{50, 40, 10};
  const Lab b{55, 10, -5};
  EXPECT_NE(delta_e_94(a, b), delta_e_94(b, a));
}

TEST(DeltaE2000, Identity) { EXPECT_EQ(delta_e_2000({42, -3, 7}, {42, -3, 7}), 0.0); }

TEST(DeltaE2000, LightnessOnlyPairMatchesOracle) {
  const double expected = oracle::ciede2000({50, 0, 0}, {60, 0, 0});
  EXPECT_NEAR(delta_e_2000({50, 0, 0}, {60, 0, 0}), expected, 1e-12);
  // S_L = 1 + 0.015 * 25 / sqrt(45) at L' mean 55.
  EXPECT_NEAR(expected, 10.0 / (1.0 + 0.375 / std::sqrt(45.0)), 1e-12);
  EXPECT_NEAR(expected, 9.4706, 1e-4);
}

TEST(DeltaE2000, ReferencePairs) {
  for (const auto& p : oracle::kCiede2000Pairs) {
    const double got = delta_e_2000(lab(p.first), lab(p.second));
    EXPECT_NEAR(got, p.delta_e_2000, 1e-4);
    EXPECT_NEAR(got, oracle::ciede2000(p.first, p.second), 1e-4);
    EXPECT_NEAR(got, delta_e_2000(lab(p.second), lab(p.first)), 1e-12);
  }
}

TEST(DeltaE2000, MatchesOracleOnRandomPairs) {
  for (const auto& [x, y] : random_pairs(500, 2000)) {
    ASSERT_NEAR(delta_e_2000(lab(x), lab(y)), oracle::ciede2000(x, y), 1e-9);
    ASSERT_NEAR(delta_e_2000(lab(x), lab(y), {2.0, 1.5, 0.5}), oracle::ciede2000(x, y, 2.0, 1.5, 0.5), 1e-9);
  }
}

TEST(DeltaE76, MatchesOracleOnRandomPairs) {
  for (const auto& [x, y] : random_pairs(200, 76)) ASSERT_NEAR(delta_e_76(lab(x), lab(y)), oracle::cie76(x, y), 1e-12);
}

TEST(DeltaEParams, RejectsNonPositiveWeights) {
  EXPECT_THROW(delta_e_2000({50, 0, 0}, {60, 0, 0}, {0.0, 1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(delta_e_94({50, 0, 0}, {60, 0, 0}, {1.0, -1.0, 1.0}), std::invalid_argument);
}

TEST(LabFromCoord, RequiresLabModel) {
  const auto c = rgb_to_lab(Rgb8{255, 255, 255});
  EXPECT_NEAR(lab_from_coord(c).l, 100.0, 1e-3);
  EXPECT_THROW(lab_from_coord(rgb_to_cmy({0, 0, 0})), std::invalid_argument);
}

}  // namespace
}  // namespace colorlab
