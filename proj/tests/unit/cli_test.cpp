#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "colorlab/bench.hpp"
#include "colorlab/tools/cli.hpp"
#include "colorlab/tools/ppm.hpp"

namespace colorlab::tools {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "colorlab");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("colorlab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_image(const std::string& name, const PixelBuffer& img) {
    const auto p = (dir_ / name).string();
    write_ppm_file(p, img);
    return p;
  }

  std::string write_text(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

TEST(Cli, NoSubcommandIsUsageError) { EXPECT_EQ(run({}).code, kExitUsage); }

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("convert"), std::string::npos);
}

TEST(Cli, UnknownFlag) { EXPECT_EQ(run({"gamut", "--model", "hsv", "--bogus"}).code, kExitUsage); }

TEST_F(CliFiles, ConvertWhiteToLab) {
  const auto in = write_image("white.ppm", PixelBuffer(1, 1, Rgb8{255, 255, 255}));
  const auto r = run({"convert", "--to", "lab", "--in", in, "--precision", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"L,a,b", "100.000,0.000,0.000"}));
}

TEST_F(CliFiles, ConvertTwoByTwoEveryModel) {
  const auto in = write_image("quad.ppm", PixelBuffer(2, 2, bench::random_pixels(4, 2)));
  for (const char* model : {"cmy", "cmyk", "hsi", "hsl", "hsv", "xyz", "lab", "luv", "yiq", "yuv", "ycbcr"}) {
    const auto r = run({"convert", "--to", model, "--in", in});
    ASSERT_EQ(r.code, kExitOk) << model << r.err;
    EXPECT_EQ(lines(r.out).size(), 5u) << model;
  }
}

TEST_F(CliFiles, ConvertWritesFileAndThreadsAgree) {
  const auto in = write_image("img.ppm", PixelBuffer(9, 11, bench::random_pixels(99, 6)));
  const auto a = (dir_ / "a.csv").string();
  const auto b = (dir_ / "b.csv").string();
  ASSERT_EQ(run({"convert", "--to", "luv", "--in", in, "--out", a}).code, kExitOk);
  ASSERT_EQ(run({"convert", "--to", "luv", "--in", in, "--out", b, "--threads", "4"}).code, kExitOk);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(lines(slurp(a)).size(), 100u);
}

TEST_F(CliFiles, ConvertStudioYCbCrBlack) {
  const auto in = write_image("black.ppm", PixelBuffer(1, 1, Rgb8{0, 0, 0}));
  const auto r = run({"convert", "--to", "ycbcr", "--in", in, "--precision", "1", "--bt601-studio"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(lines(r.out)[1], "16.0,128.0,128.0");
}

TEST_F(CliFiles, ConvertErrors) {
  const auto in = write_image("px.ppm", PixelBuffer(1, 1));
  const auto unknown = run({"convert", "--to", "foo", "--in", in});
  EXPECT_EQ(unknown.code, kExitUsage);
  for (const char* m : {"cmy", "lab", "ycbcr"}) EXPECT_NE(unknown.err.find(m), std::string::npos);
  EXPECT_EQ(run({"convert", "--from", "hsv", "--to", "lab", "--in", in}).code, kExitUsage);
  EXPECT_EQ(run({"convert", "--to", "lab", "--in", (dir_ / "missing.ppm").string()}).code, kExitUsage);
  const auto bad = write_text("bad.ppm", "P3\n1 1\n255\n0 0 0\n");
  EXPECT_EQ(run({"convert", "--to", "lab", "--in", bad}).code, kExitUsage);
}

TEST(Cli, GamutCountsAndCorners) {
  const auto r = run({"gamut", "--model", "xyz", "--stride", "64"});
  ASSERT_EQ(r.code, kExitOk);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 65u);
  EXPECT_EQ(l[0], "r,g,b,X,Y,Z");
  std::istringstream last(l.back());
  std::string field;
  std::vector<double> v;
  while (std::getline(last, field, ',')) v.push_back(std::stod(field));
  ASSERT_EQ(v.size(), 6u);
  EXPECT_EQ(v[0], 255);
  EXPECT_NEAR(v[3], 0.9505, 5e-4);
  EXPECT_NEAR(v[4], 1.0000, 5e-4);
  EXPECT_NEAR(v[5], 1.0888, 5e-4);

  const auto hsv = lines(run({"gamut", "--model", "hsv", "--stride", "128", "--precision", "0"}).out);
  EXPECT_EQ(hsv.size(), 9u);
  EXPECT_NE(std::find(hsv.begin(), hsv.end(), "255,0,0,0,1,1"), hsv.end());
  EXPECT_EQ(lines(run({"gamut", "--model", "cmyk"}).out).size(), 16u * 16u * 16u + 1u);
}

TEST(Cli, GamutRejectsBadStride) {
  EXPECT_EQ(run({"gamut", "--model", "hsv", "--stride", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"gamut", "--model", "hsv", "--stride", "129"}).code, kExitUsage);
}

TEST(Cli, DeltaE) {
  EXPECT_EQ(run({"delta-e", "--metric", "76", "--lab1", "50,0,0", "--lab2", "53,4,0"}).out, "5.0000\n");
  EXPECT_EQ(run({"delta-e", "--metric", "94", "--lab1", "50,1,2", "--lab2", "50,1,2"}).out, "0.0000\n");
  EXPECT_EQ(run({"delta-e", "--metric", "2000", "--lab1", "50,0,0", "--lab2", "60,0,0"}).out, "9.4706\n");
  EXPECT_EQ(run({"delta-e", "--metric", "2000", "--lab1", "50,2.6772,-79.7751", "--lab2", "50,0,-82.7485"}).out,
            "2.0425\n");
  EXPECT_EQ(run({"delta-e", "--metric", "94", "--lab1", "50,0,0", "--lab2", "60,0,0", "--textiles", "--kl", "2"}).out,
            "5.0000\n");
}

TEST(Cli, DeltaEErrors) {
  EXPECT_EQ(run({"delta-e", "--metric", "50", "--lab1", "0,0,0", "--lab2", "0,0,0"}).code, kExitUsage);
  EXPECT_EQ(run({"delta-e", "--metric", "76", "--lab1", "0,0", "--lab2", "0,0,0"}).code, kExitUsage);
  EXPECT_EQ(run({"delta-e", "--metric", "2000", "--lab1", "0,0,0", "--lab2", "0,0,0", "--kl", "0"}).code, kExitUsage);
}

TEST(Cli, BenchHeaderAndOrdering) {
  const auto r = run({"bench", "--models", "yiq,lab", "--iters", "20000", "--warmup", "1000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("7 runs"), std::string::npos);
  EXPECT_NE(r.out.find("20000 iterations"), std::string::npos);
}

TEST_F(CliFiles, BenchWritesCsvAndJson) {
  const auto csv = (dir_ / "b.csv").string();
  const auto json = (dir_ / "b.json").string();
  const auto r = run({"bench", "--mode", "image", "--models", "yiq,lab", "--runs", "2", "--iters", "1", "--width",
                      "32", "--height", "32", "--out", csv, "--json", json, "--baseline"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("image 32x32"), std::string::npos);
  EXPECT_NE(r.out.find("identity"), std::string::npos);
  const auto rows = lines(slurp(csv));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], bench::kCsvHeader);
  EXPECT_NE(slurp(json).find("\"baseline\""), std::string::npos);
}

TEST(Cli, BenchRejectsOneRun) {
  const auto r = run({"bench", "--runs", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("runs"), std::string::npos);
  EXPECT_EQ(run({"bench", "--models", "yiq,foo"}).code, kExitUsage);
  EXPECT_EQ(run({"bench", "--direction", "sideways"}).code, kExitUsage);
}

TEST(Cli, AnalyzeReplay) {
  const auto r = run({"analyze", "--replay-paper"});
  ASSERT_EQ(r.code, kExitOk);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 13u);
  auto category = [&](const std::string& model) {
    for (const auto& row : l) {
      if (row.rfind(model + " ", 0) == 0) return row.substr(row.find_last_of(' ') + 1);
    }
    return std::string();
  };
  for (const char* m : {"HSV", "LUV", "YUV"}) EXPECT_EQ(category(m), "High") << m;
  EXPECT_EQ(category("XYZ"), "Low");
  for (const char* m : {"CMY", "CMYK", "HSI", "HSL", "LAB", "RGB", "YCbCr", "YIQ"}) EXPECT_EQ(category(m), "Medium");
}

TEST_F(CliFiles, AnalyzeSessions) {
  const auto r = run({"analyze", "--sessions", COLORLAB_FIXTURE_DIR "/sessions_three_models.csv", "--out",
                      (dir_ / "t.csv").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(slurp(dir_ / "t.csv"), "model,mean_s,cluster,category\nHSV,25.875,0,High\nLAB,55.625,1,Medium\n"
                                   "XYZ,124.75,2,Low\n");
}

TEST(Cli, AnalyzeReportsRejects) {
  const auto r = run({"analyze", "--sessions", COLORLAB_FIXTURE_DIR "/sessions_with_rejects.csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("line 3: elapsed_s must be positive"), std::string::npos);
  EXPECT_NE(r.err.find("line 4:"), std::string::npos);
  EXPECT_NE(r.err.find("3 records, 2 rejected"), std::string::npos);
}

TEST_F(CliFiles, AnalyzeErrors) {
  EXPECT_EQ(run({"analyze", "--sessions", write_text("empty.csv", "")}).code, kExitUsage);
  EXPECT_EQ(run({"analyze"}).code, kExitUsage);
  EXPECT_EQ(run({"analyze", "--sessions", (dir_ / "nope.csv").string()}).code, kExitUsage);
  // Two distinct means cannot form three clusters.
  const auto two = write_text("two.csv", std::string("participant_id,model,target_hex,components,elapsed_s,timestamp\n"
                                                     "p,hsv,#000000,0;0;0,10,2026-01-01\n"
                                                     "p,lab,#000000,0;0;0,20,2026-01-01\n"));
  EXPECT_EQ(run({"analyze", "--sessions", two}).code, kExitUsage);
}

TEST_F(CliFiles, FuzzyExampleClassifyValidate) {
  const auto example = run({"fuzzy", "example"});
  ASSERT_EQ(example.code, kExitOk);
  const auto path = write_text("hue.fcs", example.out);
  EXPECT_EQ(run({"fuzzy", "classify", "--space", path, "--coord", "15,1,1"}).out, "orange 0.500000\nred 0.500000\n");
  EXPECT_EQ(run({"fuzzy", "classify", "--coord", "0,1,1"}).out, "red 1.000000\n");
  const auto v = run({"fuzzy", "validate", "--space", path, "--samples", "1000"});
  ASSERT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find("121000 points"), std::string::npos);
}

TEST_F(CliFiles, FuzzyBadSpaceFile) {
  const auto path = write_text("bad.fcs", "space s\nmodel hsv\ncolor red\n  hue sigmoid 0 1\n");
  const auto r = run({"fuzzy", "validate", "--space", path});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("line 4"), std::string::npos);
}

TEST(Cli, Gamma) {
  EXPECT_EQ(run({"gamma", "0", "0.01"}).out, "0.000000000\n0.045000000\n");
  EXPECT_EQ(run({"gamma", "--curve", "srgb", "--decode", "0.04045"}).out, "0.003130805\n");
  auto encoded = run({"gamma", "--gamma", "2.2", "0.5"}).out;
  encoded.pop_back();
  const auto rt = run({"gamma", "--gamma", "2.2", "--decode", encoded});
  EXPECT_EQ(rt.out, "0.500000000\n");
  EXPECT_EQ(run({"gamma", "--curve", "srgb", "--gamma", "2.2", "0.5"}).code, kExitUsage);
}

TEST(Cli, VersionFlag) {
  const auto r = run({"--version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("0.1.0"), std::string::npos);
}

}  // namespace
}  // namespace colorlab::tools
