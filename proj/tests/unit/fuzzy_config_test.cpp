#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "colorlab/fuzzy.hpp"

namespace colorlab::fuzzy {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t error_line(const std::string& text) {
  try {
    parse_space(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return 0;
}

constexpr const char* kTwoColors = R"(# test space
space warm
model hsl
partition none

color red
  hue triangular 330 0 30
  saturation gaussian 1 0.3
  lightness trapezoidal 0.2 0.4 0.6 0.8
  combiner product

color orange
  hue trapezoidal 10 25 35 50
  saturation triangular 0.5 1 1
  lightness triangular 0 0.5 1
)";

TEST(FuzzyConfig, ParsesEveryKind) {
  const auto s = parse_space(kTwoColors);
  EXPECT_EQ(s.name(), "warm");
  EXPECT_EQ(s.model(), ColorModel::Hsl);
  EXPECT_EQ(s.partition_mode(), PartitionMode::None);
  ASSERT_EQ(s.colors().size(), 2u);
  const auto& red = s.colors()[0];
  EXPECT_EQ(red.combiner(), Combiner::Product);
  EXPECT_EQ(red.hue().kind(), MembershipKind::Triangular);
  EXPECT_EQ(red.saturation().kind(), MembershipKind::Gaussian);
  EXPECT_EQ(red.third().parameters(), (std::vector<double>{0.2, 0.4, 0.6, 0.8}));
  EXPECT_EQ(s.colors()[1].combiner(), Combiner::Min);
}

TEST(FuzzyConfig, WriteThenParseRoundTrips) {
  for (const auto& space : {parse_space(kTwoColors), illustrative_hue_partition(), canonical_six_hue_partition()}) {
    const auto text = write_space(space, {"round trip"});
    EXPECT_EQ(parse_space(text), space);
    EXPECT_EQ(write_space(parse_space(text), {"round trip"}), text);
  }
}

TEST(FuzzyConfig, BundledExampleMatchesGenerator) {
  const auto bundled = read_file(COLORLAB_DATA_DIR "/illustrative_hue10.fcs");
  ASSERT_FALSE(bundled.empty());
  EXPECT_EQ(bundled, write_space(illustrative_hue_partition(), illustrative_header()));
  EXPECT_EQ(load_space(COLORLAB_DATA_DIR "/illustrative_hue10.fcs"), illustrative_hue_partition());
}

TEST(FuzzyConfig, BundledExamplePartitionsUnity) {
  const auto space = load_space(COLORLAB_DATA_DIR "/illustrative_hue10.fcs");
  EXPECT_LE(validate_partition(space, 10000).max_deviation, 1e-6);
}

TEST(FuzzyConfig, ThirdComponentKeywordFollowsModel) {
  const std::string hsv_space = "space s\nmodel hsv\ncolor c\nhue triangular 0 60 120\n"
                                "saturation triangular 0 1 1\nlightness triangular 0 1 1\n";
  EXPECT_EQ(error_line(hsv_space), 6u);
  std::string fixed = hsv_space;
  fixed.replace(fixed.find("lightness"), 9, "value");
  EXPECT_NO_THROW(parse_space(fixed));
}

TEST(FuzzyConfig, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("space s\nmodel lab\n"), 2u);
  EXPECT_EQ(error_line("space s\ncolor red\n"), 2u);
  EXPECT_EQ(error_line("space s\nmodel hsv\ncolor red\n  hue triangular 0 1\n"), 4u);
  EXPECT_EQ(error_line("space s\nmodel hsv\ncolor red\n  hue triangular 0 x 2\n"), 4u);
  EXPECT_EQ(error_line("space s\nmodel hsv\ncolor red\n  hue sigmoid 0 1\n"), 4u);
  EXPECT_EQ(error_line("space s\nmodel hsv\ncolor red\n  hue blob 0 1\n"), 4u);
  EXPECT_EQ(error_line("space s\nmodel hsv\n\n\ncolor red\n  hue triangular 0 60 120\n"), 5u);
  EXPECT_EQ(error_line("space s\nmodel hsv\nbogus\n"), 3u);
  EXPECT_EQ(error_line("space s\nmodel hsv\npartition sometimes\n"), 3u);
  EXPECT_EQ(error_line("model hsv\ncolor a\nhue triangular 0 60 120\nsaturation triangular 0 1 1\n"
                       "value triangular 0 1 1\n"),
            5u);
}

TEST(FuzzyConfig, ErrorMessageNamesTheLine) {
  try {
    parse_space("space s\nmodel hsv\ncolor red\n  hue sigmoid 0 1\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("sigmoid"), std::string::npos);
  }
}

TEST(FuzzyConfig, MissingFile) { EXPECT_THROW(load_space("/nonexistent/space.fcs"), std::runtime_error); }

}  // namespace
}  // namespace colorlab::fuzzy
