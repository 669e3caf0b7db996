#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colorlab/transforms.hpp"
#include "colorlab/types.hpp"

namespace colorlab::bench {

struct BenchConfig {
  std::size_t runs = 7;
  std::size_t iterations_per_run = 100'000;
  std::size_t image_width = 200;
  std::size_t image_height = 200;
  std::size_t warmup_iterations = 10'000;
  std::uint64_t seed = 20240601;

  /// Throws std::invalid_argument for runs < 2 or zero iterations / image size.
  void validate() const;

  /// Whole-image defaults: 7 runs of 10 images, one warmup image.
  static BenchConfig image_defaults();
};

/// What one timed iteration does. Scalar mode defaults to Both, image mode to Forward.
enum class Direction { Both, Forward, Inverse };

std::string_view to_string(Direction d);
std::optional<Direction> parse_direction(std::string_view text);

enum class SpeedClass { VeryFast, Fast, Moderate, Slow, VerySlow };

/// "Very Fast", "Fast", ...
std::string_view to_string(SpeedClass c);

/// Tier for a percentage of the slowest model's time.
/// Cutoffs: < 5 Very Fast, < 7 Fast, < 15 Moderate, < 50 Slow, otherwise Very Slow.
/// Throws std::invalid_argument outside (0, 100].
SpeedClass classify_speed(double relative_overhead_percent);

struct Summary {
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation (n - 1)
};

/// Two-pass mean and sample standard deviation. Needs at least two values.
Summary summarize(std::span<const double> values);

struct BenchEntry {
  std::string model;
  double mean_s = 0.0;  // seconds per iteration
  double std_s = 0.0;
  double overhead_pct = 0.0;
  SpeedClass speed_class = SpeedClass::VerySlow;
  std::vector<double> run_means_s;
};

enum class BenchMode { Scalar, Image };

std::string_view to_string(BenchMode m);

struct BenchReport {
  BenchMode mode = BenchMode::Scalar;
  Direction direction = Direction::Both;
  BenchConfig config;
  std::vector<BenchEntry> entries;
  /// Identity pass over the same inputs; excluded from overhead normalization.
  std::optional<BenchEntry> baseline;
};

struct BenchOptions {
  /// Unset picks the mode's default (Both for scalar, Forward for image).
  std::optional<Direction> direction;
  ConversionOptions conversion;
  bool include_baseline = false;
};

/// Times per-pixel conversions over a seeded stream of Rgb8 inputs that is
/// identical for every model. Throws std::invalid_argument on an empty model
/// list or invalid config.
BenchReport bench_scalar(const BenchConfig& cfg, std::span<const ColorModel> models, const BenchOptions& opts = {});

/// Times whole-image conversions of a seeded cfg.image_width x cfg.image_height image.
BenchReport bench_image(const BenchConfig& cfg, std::span<const ColorModel> models, const BenchOptions& opts = {});

/// Fills overhead_pct and speed_class from the entries' means.
void normalize(std::vector<BenchEntry>& entries);

/// Seeded pseudo-random pixels shared by the scalar and image harnesses.
std::vector<Rgb8> random_pixels(std::size_t count, std::uint64_t seed);

inline constexpr std::string_view kCsvHeader = "model,mean_s,std_s,overhead_pct,class";

/// CSV with kCsvHeader; the baseline is not a row.
std::string to_csv(const BenchReport& report);
std::string to_json(const BenchReport& report);

/// Human-readable table with a header echoing the configuration.
std::string to_table(const BenchReport& report);

}  // namespace colorlab::bench
