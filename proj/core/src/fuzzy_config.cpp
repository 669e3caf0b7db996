#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "colorlab/fuzzy.hpp"

namespace colorlab::fuzzy {

namespace {

std::string_view third_component_keyword(ColorModel model) {
  switch (model) {
    case ColorModel::Hsi: return "intensity";
    case ColorModel::Hsl: return "lightness";
    default: return "value";
  }
}

std::string_view kind_keyword(MembershipKind kind) {
  switch (kind) {
    case MembershipKind::Triangular: return "triangular";
    case MembershipKind::Trapezoidal: return "trapezoidal";
    case MembershipKind::Gaussian: return "gaussian";
  }
  return "triangular";
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_number(const std::string& tok, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw ConfigError(line, "not a number: '" + tok + "'");
  return v;
}

MembershipFunction parse_membership(const std::vector<std::string>& tok, Domain domain, std::size_t line) {
  if (tok.size() < 2) throw ConfigError(line, "missing membership kind after '" + tok[0] + "'");
  const std::string& kind = tok[1];
  std::vector<double> p;
  for (std::size_t i = 2; i < tok.size(); ++i) p.push_back(parse_number(tok[i], line));

  auto expect = [&](std::size_t n) {
    if (p.size() != n) {
      throw ConfigError(line, kind + " takes " + std::to_string(n) + " parameters, got " + std::to_string(p.size()));
    }
  };
  try {
    if (kind == "triangular") {
      expect(3);
      return MembershipFunction::triangular(p[0], p[1], p[2], domain);
    }
    if (kind == "trapezoidal") {
      expect(4);
      return MembershipFunction::trapezoidal(p[0], p[1], p[2], p[3], domain);
    }
    if (kind == "gaussian") {
      expect(2);
      return MembershipFunction::gaussian(p[0], p[1], domain);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(line, e.what());
  }
  if (kind == "sigmoid") throw ConfigError(line, "membership kind 'sigmoid' is reserved and not supported yet");
  throw ConfigError(line, "unknown membership kind '" + kind + "'");
}

struct PendingColor {
  std::string label;
  std::size_t line = 0;
  std::optional<MembershipFunction> hue;
  std::optional<MembershipFunction> saturation;
  std::optional<MembershipFunction> third;
  Combiner combiner = Combiner::Min;
};

}  // namespace

ConfigError::ConfigError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

FuzzyColorSpace parse_space(std::istream& in) {
  std::optional<std::string> name;
  std::optional<ColorModel> model;
  PartitionMode mode = PartitionMode::Ruspini;
  std::vector<FuzzyColor> colors;
  std::optional<PendingColor> pending;

  auto finish_color = [&]() {
    if (!pending) return;
    const auto& pc = *pending;
    if (!pc.hue || !pc.saturation || !pc.third) {
      throw ConfigError(pc.line, "color '" + pc.label + "' needs hue, saturation and " +
                                     std::string(third_component_keyword(*model)) + " memberships");
    }
    try {
      colors.emplace_back(pc.label, *pc.hue, *pc.saturation, *pc.third, pc.combiner);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(pc.line, e.what());
    }
    pending.reset();
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto tok = tokenize(raw);
    if (tok.empty() || tok[0].front() == '#') continue;
    const std::string& key = tok[0];

    if (key == "space") {
      if (tok.size() != 2) throw ConfigError(line, "expected 'space <name>'");
      name = tok[1];
    } else if (key == "model") {
      if (tok.size() != 2) throw ConfigError(line, "expected 'model <hsi|hsl|hsv>'");
      model = parse_model(tok[1]);
      if (!model || (*model != ColorModel::Hsi && *model != ColorModel::Hsl && *model != ColorModel::Hsv)) {
        throw ConfigError(line, "model must be hsi, hsl or hsv");
      }
    } else if (key == "partition") {
      if (tok.size() != 2 || (tok[1] != "ruspini" && tok[1] != "none")) {
        throw ConfigError(line, "expected 'partition <ruspini|none>'");
      }
      mode = tok[1] == "ruspini" ? PartitionMode::Ruspini : PartitionMode::None;
    } else if (key == "color") {
      if (!model) throw ConfigError(line, "'model' must precede the first color");
      if (tok.size() != 2) throw ConfigError(line, "expected 'color <label>'");
      finish_color();
      pending = PendingColor{tok[1], line, std::nullopt, std::nullopt, std::nullopt, Combiner::Min};
    } else if (pending && key == "hue") {
      pending->hue = parse_membership(tok, Domain::HueCircular, line);
    } else if (pending && key == "saturation") {
      pending->saturation = parse_membership(tok, Domain::UnitInterval, line);
    } else if (pending && key == third_component_keyword(*model)) {
      pending->third = parse_membership(tok, Domain::UnitInterval, line);
    } else if (pending && key == "combiner") {
      if (tok.size() != 2 || (tok[1] != "min" && tok[1] != "product")) {
        throw ConfigError(line, "expected 'combiner <min|product>'");
      }
      pending->combiner = tok[1] == "min" ? Combiner::Min : Combiner::Product;
    } else {
      throw ConfigError(line, "unexpected '" + key + "'");
    }
  }
  if (!model) throw ConfigError(line, "missing 'model'");
  finish_color();
  if (!name) throw ConfigError(line, "missing 'space'");
  try {
    return FuzzyColorSpace(*name, *model, std::move(colors), mode);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(line, e.what());
  }
}

FuzzyColorSpace parse_space(const std::string& text) {
  std::istringstream in(text);
  return parse_space(in);
}

FuzzyColorSpace load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fuzzy space file: " + path);
  return parse_space(in);
}

std::string write_space(const FuzzyColorSpace& space, const std::vector<std::string>& header_comments) {
  std::ostringstream out;
  for (const auto& c : header_comments) out << (c.empty() ? "#" : "# " + c) << '\n';
  if (!header_comments.empty()) out << '\n';
  out << "space " << space.name() << '\n';
  out << "model " << to_string(space.model()) << '\n';
  out << "partition " << (space.partition_mode() == PartitionMode::Ruspini ? "ruspini" : "none") << '\n';

  auto write_fn = [&](std::string_view key, const MembershipFunction& f) {
    out << "  " << key << ' ' << kind_keyword(f.kind());
    for (double p : f.parameters()) out << ' ' << format_number(p);
    out << '\n';
  };
  for (const auto& color : space.colors()) {
    out << "\ncolor " << color.label() << '\n';
    write_fn("hue", color.hue());
    write_fn("saturation", color.saturation());
    write_fn(third_component_keyword(space.model()), color.third());
    out << "  combiner " << (color.combiner() == Combiner::Min ? "min" : "product") << '\n';
  }
  return out.str();
}

const std::vector<std::string>& illustrative_header() {
  static const std::vector<std::string> header = {
      "Illustrative ten-label hue partition over HSV.",
      "Each hue label is a triangle whose feet sit on the neighbouring apexes,",
      "so adjacent memberships always sum to one. The apex positions are",
      "conventional hue names, not survey-derived membership data.",
  };
  return header;
}

}  // namespace colorlab::fuzzy
