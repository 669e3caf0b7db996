#include "colorlab/tools/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "colorlab/analysis.hpp"
#include "colorlab/bench.hpp"
#include "colorlab/fuzzy.hpp"
#include "colorlab/gamma.hpp"
#include "colorlab/image.hpp"
#include "colorlab/metrics.hpp"
#include "colorlab/tools/picker_service.hpp"
#include "colorlab/tools/ppm.hpp"

namespace colorlab::tools {

namespace {

struct ConversionFlags {
  std::string white;
  bool studio = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--white", white, "Reference white as X,Y,Z (default D65 95.047,100,108.883)");
    cmd->add_flag("--bt601-studio", studio, "YCbCr studio range (luma 16-235, chroma 16-240)");
  }

  ConversionOptions options() const {
    ConversionOptions o;
    if (!white.empty()) {
      try {
        o.white = parse_white_point(white);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (studio) o.ycbcr_range = YCbCrRange::Studio;
    return o;
  }
};

ColorModel require_model(const std::string& name) {
  const auto m = parse_model(name);
  if (!m) throw UsageError("unknown model '" + name + "'; valid models: " + model_list());
  return *m;
}

std::vector<double> parse_numbers(const std::string& text, std::size_t expected, const std::string& what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    const std::string tok = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    double v = 0.0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    if (!tok.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (tok.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
      throw UsageError(what + ": '" + tok + "' is not a number");
    }
    out.push_back(v);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (out.size() != expected) {
    throw UsageError(what + ": expected " + std::to_string(expected) + " comma-separated values, got " +
                     std::to_string(out.size()));
  }
  return out;
}

std::string fixed(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s(buf);
  // Print -0.000 as 0.000.
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

void append_coord(std::string& line, const ColorCoord& c, int precision) {
  const std::size_t n = component_count(c.model);
  for (std::size_t i = 0; i < n; ++i) {
    if (!line.empty()) line += ',';
    line += fixed(c[i], precision);
  }
}

std::string component_header(ColorModel m) {
  std::string h;
  for (const auto& c : components(m)) {
    if (!h.empty()) h += ',';
    h += c.name;
  }
  return h;
}

// Writes to a file, or to `out` when the path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("write failed for " + path);
}

std::vector<ColorModel> parse_model_list(const std::string& list) {
  std::vector<ColorModel> out;
  if (list.empty() || list == "all") return {kAllModels.begin(), kAllModels.end()};
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(require_model(item));
  if (out.empty()) throw UsageError("no models given");
  return out;
}

fuzzy::FuzzyColorSpace load_space_or_default(const std::string& path) {
  if (path.empty()) return fuzzy::illustrative_hue_partition();
  try {
    return fuzzy::load_space(path);
  } catch (const fuzzy::ConfigError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Color model conversion, color difference, fuzzy color and benchmark toolkit", "colorlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "colorlab 0.1.0");

  // convert
  auto* convert = app.add_subcommand("convert", "Convert a P6 PPM image to per-pixel components (CSV)");
  std::string conv_from = "rgb", conv_to, conv_in, conv_out;
  int conv_precision = 6;
  unsigned conv_threads = 1;
  ConversionFlags conv_flags;
  convert->add_option("--from", conv_from, "Source model (only rgb)")->capture_default_str();
  convert->add_option("--to", conv_to, "Target model")->required();
  convert->add_option("--in", conv_in, "Input .ppm file")->required();
  convert->add_option("--out", conv_out, "Output .csv file (default stdout)");
  convert->add_option("--precision", conv_precision, "Decimal places")->check(CLI::Range(0, 17))->capture_default_str();
  convert->add_option("--threads", conv_threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  conv_flags.attach(convert);

  // gamut
  auto* gamut = app.add_subcommand("gamut", "Sample the RGB cube and convert every sample (CSV)");
  std::string gamut_model, gamut_out;
  int gamut_stride = 16;
  int gamut_precision = 6;
  ConversionFlags gamut_flags;
  gamut->add_option("--model", gamut_model, "Target model")->required();
  gamut->add_option("--stride", gamut_stride, "Step between samples, 1-128")->capture_default_str();
  gamut->add_option("--out", gamut_out, "Output .csv file (default stdout)");
  gamut->add_option("--precision", gamut_precision, "Decimal places")->check(CLI::Range(0, 17))->capture_default_str();
  gamut_flags.attach(gamut);

  // delta-e
  auto* delta = app.add_subcommand("delta-e", "Color difference between two L*a*b* colors");
  std::string de_metric, de_lab1, de_lab2;
  double de_kl = 1.0, de_kc = 1.0, de_kh = 1.0;
  bool de_textiles = false;
  delta->add_option("--metric", de_metric, "76, 94 or 2000")->required()->check(CLI::IsMember({"76", "94", "2000"}));
  delta->add_option("--lab1", de_lab1, "First color as L,a,b")->required();
  delta->add_option("--lab2", de_lab2, "Second color as L,a,b")->required();
  delta->add_option("--kl", de_kl, "Lightness weight k_L")->capture_default_str();
  delta->add_option("--kc", de_kc, "Chroma weight k_C")->capture_default_str();
  delta->add_option("--kh", de_kh, "Hue weight k_H")->capture_default_str();
  delta->add_flag("--textiles", de_textiles, "CIE94 textile constants (0.048 / 0.014)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time conversions per model");
  std::string b_mode = "scalar", b_models, b_out, b_json, b_direction;
  std::optional<std::size_t> b_runs, b_iters, b_warmup, b_width, b_height;
  std::uint64_t b_seed = bench::BenchConfig{}.seed;
  bool b_baseline = false;
  ConversionFlags b_flags;
  bench_cmd->add_option("--mode", b_mode, "scalar or image")->check(CLI::IsMember({"scalar", "image"}))->capture_default_str();
  bench_cmd->add_option("--models", b_models, "Comma-separated models (default all)");
  bench_cmd->add_option("--runs", b_runs, "Independent runs (>= 2)");
  bench_cmd->add_option("--iters", b_iters, "Iterations per run");
  bench_cmd->add_option("--warmup", b_warmup, "Warmup iterations");
  bench_cmd->add_option("--width", b_width, "Image width (image mode)");
  bench_cmd->add_option("--height", b_height, "Image height (image mode)");
  bench_cmd->add_option("--seed", b_seed, "Input seed")->capture_default_str();
  bench_cmd->add_option("--direction", b_direction, "both, forward or inverse")
      ->check(CLI::IsMember({"both", "forward", "inverse"}));
  bench_cmd->add_flag("--baseline", b_baseline, "Also time an identity pass over the same inputs");
  bench_cmd->add_option("--out", b_out, "CSV report path");
  bench_cmd->add_option("--json", b_json, "JSON report path");
  b_flags.attach(bench_cmd);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Mean completion times and k-means intuitiveness categories");
  std::string a_sessions, a_out, a_json;
  bool a_replay = false;
  auto* a_sessions_opt = analyze->add_option("--sessions", a_sessions, "Session CSV");
  auto* a_replay_opt = analyze->add_flag("--replay-paper", a_replay, "Use the twelve published mean times");
  a_sessions_opt->excludes(a_replay_opt);
  analyze->add_option("--out", a_out, "Category table CSV path");
  analyze->add_option("--json", a_json, "Category table JSON path");

  // fuzzy
  auto* fuzzy_cmd = app.add_subcommand("fuzzy", "Fuzzy color spaces over HSI / HSL / HSV");
  fuzzy_cmd->require_subcommand(1);
  std::string f_space, f_coord;
  std::size_t f_samples = 10000;
  auto* f_example = fuzzy_cmd->add_subcommand("example", "Print the bundled illustrative hue partition");
  auto* f_classify = fuzzy_cmd->add_subcommand("classify", "Memberships of one color");
  f_classify->add_option("--space", f_space, "Space file (default: bundled example)");
  f_classify->add_option("--coord", f_coord, "H,S,third component in the space's model")->required();
  auto* f_validate = fuzzy_cmd->add_subcommand("validate", "Check that memberships sum to one");
  f_validate->add_option("--space", f_space, "Space file (default: bundled example)");
  f_validate->add_option("--samples", f_samples, "Hue samples")->check(CLI::PositiveNumber)->capture_default_str();

  // gamma
  auto* gamma_cmd = app.add_subcommand("gamma", "Evaluate a transfer curve");
  std::string g_curve = "rec709";
  std::optional<double> g_gamma;
  bool g_strict = false, g_decode = false;
  std::vector<double> g_values;
  gamma_cmd->add_option("--curve", g_curve, "rec709 or srgb")->check(CLI::IsMember({"rec709", "srgb"}))->capture_default_str();
  gamma_cmd->add_option("--gamma", g_gamma, "Camera gamma (default: value that makes the curve continuous)");
  gamma_cmd->add_flag("--rec709-strict", g_strict, "ITU form without the outer division by 1.099");
  gamma_cmd->add_flag("--decode", g_decode, "Apply the inverse curve");
  gamma_cmd->add_option("values", g_values, "Values in [0, 1]")->required();

  // serve
  auto* serve = app.add_subcommand("serve", "Run the color picker HTTP service");
  ServiceConfig s_cfg;
  std::string s_dir;
  ConversionFlags s_flags;
  serve->add_option("--host", s_cfg.host, "Bind address")->capture_default_str();
  serve->add_option("--port", s_cfg.port, "Port (0 picks a free one)")->check(CLI::Range(0, 65535))->capture_default_str();
  serve->add_option("--seed", s_cfg.seed, "Target color seed")->capture_default_str();
  serve->add_option("--session-dir", s_dir, "Session log directory (default $COLORLAB_SESSION_DIR or .)");
  s_flags.attach(serve);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();  // program name
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (convert->parsed()) {
      if (analysis::model_label(conv_from) != "RGB") {
        throw UsageError("--from must be rgb; conversions start from RGB images");
      }
      const ColorModel model = require_model(conv_to);
      const auto opts = conv_flags.options();
      PixelBuffer image;
      try {
        image = read_ppm_file(conv_in);
      } catch (const PpmError& e) {
        throw UsageError(conv_in + ": " + e.what());
      }
      const auto coords = convert_image(image, model, opts, conv_threads);
      std::string text = component_header(model) + '\n';
      for (const auto& c : coords.pixels()) {
        std::string line;
        append_coord(line, c, conv_precision);
        text += line + '\n';
      }
      emit(conv_out, text, out);
    } else if (gamut->parsed()) {
      if (gamut_stride < 1 || gamut_stride > 128) throw UsageError("--stride must be in [1, 128]");
      const ColorModel model = require_model(gamut_model);
      const auto opts = gamut_flags.options();
      std::vector<int> levels;
      for (int v = 0; v < 256; v += gamut_stride) levels.push_back(v);
      levels.back() = 255;  // always include the cube's far corner
      std::string text = "r,g,b," + component_header(model) + '\n';
      for (int r : levels) {
        for (int g : levels) {
          for (int b : levels) {
            const Rgb8 px{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g), static_cast<std::uint8_t>(b)};
            std::string line = std::to_string(r) + ',' + std::to_string(g) + ',' + std::to_string(b);
            append_coord(line, to_model(px, model, opts), gamut_precision);
            text += line + '\n';
          }
        }
      }
      emit(gamut_out, text, out);
    } else if (delta->parsed()) {
      const auto l1 = parse_numbers(de_lab1, 3, "--lab1");
      const auto l2 = parse_numbers(de_lab2, 3, "--lab2");
      const Lab a{l1[0], l1[1], l1[2]};
      const Lab b{l2[0], l2[1], l2[2]};
      DeltaEParams params{de_kl, de_kc, de_kh,
                          de_textiles ? Cie94Application::Textiles : Cie94Application::GraphicArts};
      double value = 0.0;
      if (de_metric == "76") {
        value = delta_e_76(a, b);
      } else if (de_metric == "94") {
        value = delta_e_94(a, b, params);
      } else {
        value = delta_e_2000(a, b, params);
      }
      out << fixed(value, 4) << '\n';
    } else if (bench_cmd->parsed()) {
      const bool image_mode = b_mode == "image";
      auto cfg = image_mode ? bench::BenchConfig::image_defaults() : bench::BenchConfig{};
      if (b_runs) cfg.runs = *b_runs;
      if (b_iters) cfg.iterations_per_run = *b_iters;
      if (b_warmup) cfg.warmup_iterations = *b_warmup;
      if (b_width) cfg.image_width = *b_width;
      if (b_height) cfg.image_height = *b_height;
      cfg.seed = b_seed;
      cfg.validate();
      const auto models = parse_model_list(b_models);
      bench::BenchOptions bopts;
      if (!b_direction.empty()) bopts.direction = bench::parse_direction(b_direction);
      bopts.conversion = b_flags.options();
      bopts.include_baseline = b_baseline;
      const auto report = image_mode ? bench::bench_image(cfg, models, bopts) : bench::bench_scalar(cfg, models, bopts);
      out << bench::to_table(report);
      if (!b_out.empty()) emit(b_out, bench::to_csv(report), out);
      if (!b_json.empty()) emit(b_json, bench::to_json(report), out);
    } else if (analyze->parsed()) {
      if (!a_replay && a_sessions.empty()) throw UsageError("give --sessions FILE or --replay-paper");
      analysis::MeanTable means;
      if (a_replay) {
        means = analysis::published_intuitiveness_means();
      } else {
        analysis::IngestResult ingested;
        try {
          ingested = analysis::ingest_sessions_file(a_sessions);
        } catch (const std::exception& e) {
          throw UsageError(a_sessions + ": " + e.what());
        }
        for (const auto& r : ingested.rejected) err << a_sessions << ": line " << r.line << ": " << r.reason << '\n';
        err << ingested.records.size() << " records, " << ingested.rejected.size() << " rejected\n";
        means = analysis::mean_times(ingested.records);
      }
      const auto rows = analysis::categorize_intuitiveness(means);
      char line[128];
      std::snprintf(line, sizeof line, "%-6s %10s %8s  %s\n", "model", "mean_s", "cluster", "category");
      out << line;
      for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-6s %10.2f %8zu  %s\n", r.model.c_str(), r.mean_s, r.cluster,
                      std::string(analysis::to_string(r.category)).c_str());
        out << line;
      }
      if (!a_out.empty()) emit(a_out, analysis::to_csv(rows), out);
      if (!a_json.empty()) emit(a_json, analysis::to_json(rows), out);
    } else if (fuzzy_cmd->parsed()) {
      if (f_example->parsed()) {
        out << fuzzy::write_space(fuzzy::illustrative_hue_partition(), fuzzy::illustrative_header());
      } else if (f_classify->parsed()) {
        const auto space = load_space_or_default(f_space);
        const auto v = parse_numbers(f_coord, 3, "--coord");
        const ColorCoord c{space.model(), v[0], v[1], v[2], std::nullopt};
        for (const auto& [label, mu] : fuzzy::classify(space, c)) out << label << ' ' << fixed(mu, 6) << '\n';
      } else if (f_validate->parsed()) {
        const auto space = load_space_or_default(f_space);
        const auto report = fuzzy::validate_partition(space, f_samples);
        out << space.name() << ": " << report.points << " points, max |sum - 1| = " << report.max_deviation
            << " at (" << report.worst_hue << ", " << report.worst_saturation << ", " << report.worst_third << ")\n";
      }
    } else if (gamma_cmd->parsed()) {
      const auto form = g_strict ? Rec709Form::Strict : Rec709Form::Printed;
      GammaCurve curve = g_curve == "srgb" ? GammaCurve::srgb() : GammaCurve::camera(form);
      if (g_gamma) {
        if (g_curve == "srgb") throw UsageError("--gamma applies to the rec709 curve only");
        curve.gamma_c = *g_gamma;
      }
      for (double v : g_values) out << fixed(g_decode ? curve.decode(v) : curve.encode(v), 9) << '\n';
    } else if (serve->parsed()) {
      s_cfg.session_dir = s_dir.empty() ? session_dir_from_env(".") : std::filesystem::path(s_dir);
      s_cfg.conversion = s_flags.options();
      PickerServer server(s_cfg);
      const int port = server.bind();
      if (port < 0) throw UsageError("cannot bind " + s_cfg.host + ":" + std::to_string(s_cfg.port));
      out << "listening on http://" << s_cfg.host << ':' << port << "  (sessions: "
          << server.service().session_file().string() << ")" << std::endl;
      if (!server.listen_after_bind()) {
        err << "server stopped with an error\n";
        return kExitInternal;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace colorlab::tools
