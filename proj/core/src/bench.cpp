#include "colorlab/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "colorlab/image.hpp"

namespace colorlab::bench {

namespace {

// Keeps the optimizer from discarding a computed value without forcing it
// through memory.
template <typename T>
inline void keep(const T& value) {
  asm volatile("" : : "m"(value) : "memory");
}

using Clock = std::chrono::steady_clock;

template <typename Body>
double time_run(std::size_t iterations, Body&& body) {
  const auto start = Clock::now();
  for (std::size_t i = 0; i < iterations; ++i) body(i);
  const auto stop = Clock::now();
  return std::chrono::duration<double>(stop - start).count() / static_cast<double>(iterations);
}

template <typename Body>
BenchEntry measure(std::string name, const BenchConfig& cfg, std::size_t iterations, std::size_t warmup,
                   Body&& body) {
  for (std::size_t i = 0; i < warmup; ++i) body(i % iterations);
  BenchEntry entry;
  entry.model = std::move(name);
  entry.run_means_s.reserve(cfg.runs);
  for (std::size_t r = 0; r < cfg.runs; ++r) entry.run_means_s.push_back(time_run(iterations, body));
  const auto s = summarize(entry.run_means_s);
  entry.mean_s = s.mean;
  entry.std_s = s.std_dev;
  return entry;
}

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(9);
  out << std::scientific << v;
  return out.str();
}

std::string format_pct(double v) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << v;
  return out.str();
}

nlohmann::json entry_json(const BenchEntry& e) {
  return {{"model", e.model},
          {"mean_s", e.mean_s},
          {"std_s", e.std_s},
          {"overhead_pct", e.overhead_pct},
          {"class", std::string(to_string(e.speed_class))},
          {"runs_s", e.run_means_s}};
}

}  // namespace

void BenchConfig::validate() const {
  if (runs < 2) throw std::invalid_argument("runs must be >= 2 for a standard deviation");
  if (iterations_per_run == 0) throw std::invalid_argument("iterations per run must be positive");
  if (image_width == 0 || image_height == 0) throw std::invalid_argument("image dimensions must be positive");
}

BenchConfig BenchConfig::image_defaults() {
  BenchConfig cfg;
  cfg.iterations_per_run = 10;
  cfg.warmup_iterations = 1;
  return cfg;
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::Both: return "both";
    case Direction::Forward: return "forward";
    case Direction::Inverse: return "inverse";
  }
  return "both";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "both") return Direction::Both;
  if (text == "forward") return Direction::Forward;
  if (text == "inverse") return Direction::Inverse;
  return std::nullopt;
}

std::string_view to_string(SpeedClass c) {
  switch (c) {
    case SpeedClass::VeryFast: return "Very Fast";
    case SpeedClass::Fast: return "Fast";
    case SpeedClass::Moderate: return "Moderate";
    case SpeedClass::Slow: return "Slow";
    case SpeedClass::VerySlow: return "Very Slow";
  }
  return "Very Slow";
}

std::string_view to_string(BenchMode m) { return m == BenchMode::Scalar ? "scalar" : "image"; }

SpeedClass classify_speed(double pct) {
  if (!(pct > 0.0) || pct > 100.0) throw std::invalid_argument("relative overhead must be in (0, 100]");
  if (pct < 5.0) return SpeedClass::VeryFast;
  if (pct < 7.0) return SpeedClass::Fast;
  if (pct < 15.0) return SpeedClass::Moderate;
  if (pct < 50.0) return SpeedClass::Slow;
  return SpeedClass::VerySlow;
}

Summary summarize(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("need at least two samples");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

void normalize(std::vector<BenchEntry>& entries) {
  double slowest = 0.0;
  for (const auto& e : entries) slowest = std::max(slowest, e.mean_s);
  for (auto& e : entries) {
    e.overhead_pct = slowest > 0.0 ? 100.0 * e.mean_s / slowest : 100.0;
    // The slowest entry reads exactly 100 even if the division rounds.
    if (e.mean_s == slowest) e.overhead_pct = 100.0;
    e.speed_class = e.overhead_pct > 0.0 ? classify_speed(e.overhead_pct) : SpeedClass::VeryFast;
  }
}

std::vector<Rgb8> random_pixels(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rgb8> out(count);
  for (auto& p : out) {
    const auto bits = rng();
    p = {static_cast<std::uint8_t>(bits), static_cast<std::uint8_t>(bits >> 8), static_cast<std::uint8_t>(bits >> 16)};
  }
  return out;
}

BenchReport bench_scalar(const BenchConfig& cfg, std::span<const ColorModel> models, const BenchOptions& opts) {
  cfg.validate();
  if (models.empty()) throw std::invalid_argument("no models to benchmark");

  const std::size_t n = cfg.iterations_per_run;
  const auto inputs = random_pixels(n, cfg.seed);
  const auto& conv = opts.conversion;

  BenchReport report;
  report.mode = BenchMode::Scalar;
  report.direction = opts.direction.value_or(Direction::Both);
  report.config = cfg;

  if (opts.include_baseline) {
    report.baseline = measure("identity", cfg, n, cfg.warmup_iterations, [&](std::size_t i) { keep(inputs[i]); });
  }

  std::vector<ColorCoord> coords;
  for (ColorModel model : models) {
    const auto& k = kernel_for(model);
    const std::string name(to_string(model));
    switch (report.direction) {
      case Direction::Both:
        report.entries.push_back(measure(name, cfg, n, cfg.warmup_iterations, [&](std::size_t i) {
          const UnitRgb back = k.inverse(k.forward(unit_from_rgb8(inputs[i]), conv), conv);
          keep(back);
        }));
        break;
      case Direction::Forward:
        report.entries.push_back(measure(name, cfg, n, cfg.warmup_iterations, [&](std::size_t i) {
          const ColorCoord c = k.forward(unit_from_rgb8(inputs[i]), conv);
          keep(c);
        }));
        break;
      case Direction::Inverse:
        coords.clear();
        coords.reserve(n);
        for (const auto& p : inputs) coords.push_back(k.forward(unit_from_rgb8(p), conv));
        report.entries.push_back(measure(name, cfg, n, cfg.warmup_iterations, [&](std::size_t i) {
          const UnitRgb back = k.inverse(coords[i], conv);
          keep(back);
        }));
        break;
    }
  }
  normalize(report.entries);
  return report;
}

BenchReport bench_image(const BenchConfig& cfg, std::span<const ColorModel> models, const BenchOptions& opts) {
  cfg.validate();
  if (models.empty()) throw std::invalid_argument("no models to benchmark");

  const PixelBuffer image(cfg.image_width, cfg.image_height,
                          random_pixels(cfg.image_width * cfg.image_height, cfg.seed));
  const auto& conv = opts.conversion;
  const std::size_t n = cfg.iterations_per_run;

  BenchReport report;
  report.mode = BenchMode::Image;
  report.direction = opts.direction.value_or(Direction::Forward);
  report.config = cfg;

  CoordBuffer coords(image.width(), image.height());
  PixelBuffer rendered(image.width(), image.height());

  if (opts.include_baseline) {
    report.baseline = measure("identity", cfg, n, cfg.warmup_iterations, [&](std::size_t) {
      for (const auto& p : image.pixels()) keep(p);
    });
  }

  for (ColorModel model : models) {
    const std::string name(to_string(model));
    switch (report.direction) {
      case Direction::Both:
        report.entries.push_back(measure(name, cfg, n, cfg.warmup_iterations, [&](std::size_t) {
          convert_image_into(image, model, coords, conv);
          render_image_into(coords, rendered, conv);
          keep(rendered.pixels()[0]);
        }));
        break;
      case Direction::Forward:
        report.entries.push_back(measure(name, cfg, n, cfg.warmup_iterations, [&](std::size_t) {
          convert_image_into(image, model, coords, conv);
          keep(coords.pixels()[0]);
        }));
        break;
      case Direction::Inverse:
        convert_image_into(image, model, coords, conv);
        report.entries.push_back(measure(name, cfg, n, cfg.warmup_iterations, [&](std::size_t) {
          render_image_into(coords, rendered, conv);
          keep(rendered.pixels()[0]);
        }));
        break;
    }
  }
  normalize(report.entries);
  return report;
}

std::string to_csv(const BenchReport& report) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& e : report.entries) {
    out += e.model + ',' + format_double(e.mean_s) + ',' + format_double(e.std_s) + ',' + format_pct(e.overhead_pct) +
           ',' + std::string(to_string(e.speed_class)) + '\n';
  }
  return out;
}

std::string to_json(const BenchReport& report) {
  nlohmann::json j;
  j["mode"] = std::string(to_string(report.mode));
  j["direction"] = std::string(to_string(report.direction));
  j["config"] = {{"runs", report.config.runs},
                 {"iterations_per_run", report.config.iterations_per_run},
                 {"image_width", report.config.image_width},
                 {"image_height", report.config.image_height},
                 {"warmup_iterations", report.config.warmup_iterations},
                 {"seed", report.config.seed}};
  j["entries"] = nlohmann::json::array();
  for (const auto& e : report.entries) j["entries"].push_back(entry_json(e));
  j["baseline"] = report.baseline ? entry_json(*report.baseline) : nlohmann::json(nullptr);
  return j.dump(2) + '\n';
}

std::string to_table(const BenchReport& report) {
  const auto& c = report.config;
  std::ostringstream out;
  out << "mode: " << to_string(report.mode) << " (" << to_string(report.direction) << ")\n";
  out << c.runs << " runs, " << c.iterations_per_run << " iterations per run, " << c.warmup_iterations
      << " warmup iterations";
  if (report.mode == BenchMode::Image) out << ", image " << c.image_width << "x" << c.image_height;
  out << ", seed " << c.seed << "\n\n";

  auto row = [&](const BenchEntry& e, bool with_class) {
    char line[160];
    std::snprintf(line, sizeof line, "%-9s %14.6e %14.6e %9.2f%%  %s\n", e.model.c_str(), e.mean_s, e.std_s,
                  e.overhead_pct, with_class ? std::string(to_string(e.speed_class)).c_str() : "-");
    out << line;
  };
  char head[160];
  std::snprintf(head, sizeof head, "%-9s %14s %14s %10s  %s\n", "model", "mean_s", "std_s", "overhead", "class");
  out << head;
  for (const auto& e : report.entries) row(e, true);
  if (report.baseline) {
    BenchEntry b = *report.baseline;
    double slowest = 0.0;
    for (const auto& e : report.entries) slowest = std::max(slowest, e.mean_s);
    b.overhead_pct = slowest > 0.0 ? 100.0 * b.mean_s / slowest : 0.0;
    row(b, false);
  }
  return out.str();
}

}  // namespace colorlab::bench
