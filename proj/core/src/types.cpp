#include "colorlab/types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace colorlab {

namespace {

struct ModelNames {
  ColorModel model;
  std::string_view cli;
  std::string_view display;
};

constexpr std::array<ModelNames, 11> kNames = {{
    {ColorModel::Cmy, "cmy", "CMY"},
    {ColorModel::Cmyk, "cmyk", "CMYK"},
    {ColorModel::Hsi, "hsi", "HSI"},
    {ColorModel::Hsl, "hsl", "HSL"},
    {ColorModel::Hsv, "hsv", "HSV"},
    {ColorModel::Xyz, "xyz", "XYZ"},
    {ColorModel::Lab, "lab", "LAB"},
    {ColorModel::Luv, "luv", "LUV"},
    {ColorModel::Yiq, "yiq", "YIQ"},
    {ColorModel::Yuv, "yuv", "YUV"},
    {ColorModel::YCbCr, "ycbcr", "YCbCr"},
}};

constexpr std::array<ComponentRange, 3> kCmy = {{
    {"C", 0.0, 1.0, 0.01, true},
    {"M", 0.0, 1.0, 0.01, true},
    {"Y", 0.0, 1.0, 0.01, true},
}};
constexpr std::array<ComponentRange, 4> kCmyk = {{
    {"C", 0.0, 1.0, 0.01, true},
    {"M", 0.0, 1.0, 0.01, true},
    {"Y", 0.0, 1.0, 0.01, true},
    {"K", 0.0, 1.0, 0.01, true},
}};
constexpr std::array<ComponentRange, 3> kHsi = {{
    {"H", 0.0, 360.0, 1.0, true, true},
    {"S", 0.0, 1.0, 0.01, true},
    {"I", 0.0, 1.0, 0.01, true},
}};
constexpr std::array<ComponentRange, 3> kHsl = {{
    {"H", 0.0, 360.0, 1.0, true, true},
    {"S", 0.0, 1.0, 0.01, true},
    {"L", 0.0, 1.0, 0.01, true},
}};
constexpr std::array<ComponentRange, 3> kHsv = {{
    {"H", 0.0, 360.0, 1.0, true, true},
    {"S", 0.0, 1.0, 0.01, true},
    {"V", 0.0, 1.0, 0.01, true},
}};
// XYZ inverse accepts any finite triple; the hints bound the sRGB gamut.
constexpr std::array<ComponentRange, 3> kXyz = {{
    {"X", 0.0, 0.9505, 0.001, false},
    {"Y", 0.0, 1.0, 0.001, false},
    {"Z", 0.0, 1.0889, 0.001, false},
}};
constexpr std::array<ComponentRange, 3> kLab = {{
    {"L", 0.0, 100.0, 0.1, true},
    {"a", -128.0, 127.0, 0.1, false},
    {"b", -128.0, 127.0, 0.1, false},
}};
constexpr std::array<ComponentRange, 3> kLuv = {{
    {"L", 0.0, 100.0, 0.1, true},
    {"u", -134.0, 220.0, 0.1, false},
    {"v", -140.0, 122.0, 0.1, false},
}};
constexpr std::array<ComponentRange, 3> kYiq = {{
    {"Y", 0.0, 1.0, 0.001, true},
    {"I", -0.596, 0.596, 0.001, false},
    {"Q", -0.523, 0.523, 0.001, false},
}};
constexpr std::array<ComponentRange, 3> kYuv = {{
    {"Y", 0.0, 1.0, 0.001, true},
    {"U", -0.436, 0.436, 0.001, false},
    {"V", -0.615, 0.615, 0.001, false},
}};
constexpr std::array<ComponentRange, 3> kYcbcr = {{
    {"Y", 0.0, 255.0, 1.0, true},
    {"Cb", 0.0, 255.0, 1.0, true},
    {"Cr", 0.0, 255.0, 1.0, true},
}};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string_view to_string(ColorModel model) {
  return kNames[static_cast<std::size_t>(model)].cli;
}

std::string_view display_name(ColorModel model) {
  return kNames[static_cast<std::size_t>(model)].display;
}

std::optional<ColorModel> parse_model(std::string_view text) {
  for (const auto& n : kNames) {
    if (iequals(text, n.cli)) return n.model;
  }
  return std::nullopt;
}

std::string model_list() {
  std::string out;
  for (const auto& n : kNames) {
    if (!out.empty()) out += ", ";
    out += n.cli;
  }
  return out;
}

std::span<const ComponentRange> components(ColorModel model) {
  switch (model) {
    case ColorModel::Cmy: return kCmy;
    case ColorModel::Cmyk: return kCmyk;
    case ColorModel::Hsi: return kHsi;
    case ColorModel::Hsl: return kHsl;
    case ColorModel::Hsv: return kHsv;
    case ColorModel::Xyz: return kXyz;
    case ColorModel::Lab: return kLab;
    case ColorModel::Luv: return kLuv;
    case ColorModel::Yiq: return kYiq;
    case ColorModel::Yuv: return kYuv;
    case ColorModel::YCbCr: return kYcbcr;
  }
  throw std::invalid_argument("unknown color model");
}

double ColorCoord::operator[](std::size_t i) const {
  switch (i) {
    case 0: return c1;
    case 1: return c2;
    case 2: return c3;
    case 3:
      if (c4) return *c4;
      break;
    default: break;
  }
  throw std::out_of_range("component index out of range for " + std::string(to_string(model)));
}

ColorCoord make_coord(ColorModel model, std::span<const double> values) {
  if (values.size() != component_count(model)) {
    throw std::invalid_argument(std::string(to_string(model)) + " expects " +
                                std::to_string(component_count(model)) + " components, got " +
                                std::to_string(values.size()));
  }
  ColorCoord c{model, values[0], values[1], values[2], std::nullopt};
  if (model == ColorModel::Cmyk) c.c4 = values[3];
  return c;
}

WhitePoint parse_white_point(std::string_view text) {
  std::array<double, 3> v{};
  std::size_t idx = 0;
  std::size_t pos = 0;
  bool consumed_all = false;
  while (idx < 3) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? text.size() - pos : comma - pos);
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v[idx]);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v[idx]) || v[idx] <= 0.0) {
      throw std::invalid_argument("white point must be three positive numbers X,Y,Z");
    }
    ++idx;
    if (comma == std::string_view::npos) {
      consumed_all = true;
      break;
    }
    pos = comma + 1;
  }
  if (idx != 3 || !consumed_all) {
    throw std::invalid_argument("white point must be three positive numbers X,Y,Z");
  }
  return {v[0], v[1], v[2]};
}

std::uint8_t quantize_channel(double unit) {
  if (!(unit > 0.0)) return 0;  // also catches NaN
  const double scaled = std::round(unit * 255.0);
  return scaled >= 255.0 ? 255 : static_cast<std::uint8_t>(scaled);
}

Rgb8 rgb8_from_unit(UnitRgb c) {
  return {quantize_channel(c.r), quantize_channel(c.g), quantize_channel(c.b)};
}

std::string to_hex(Rgb8 c) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out = "#000000";
  const std::array<std::uint8_t, 3> ch = {c.r, c.g, c.b};
  for (std::size_t i = 0; i < 3; ++i) {
    out[1 + 2 * i] = kDigits[ch[i] >> 4];
    out[2 + 2 * i] = kDigits[ch[i] & 0xF];
  }
  return out;
}

std::optional<Rgb8> parse_hex(std::string_view text) {
  if (!text.empty() && text.front() == '#') text.remove_prefix(1);
  if (text.size() != 6) return std::nullopt;
  std::array<std::uint8_t, 3> ch{};
  for (std::size_t i = 0; i < 3; ++i) {
    const int hi = hex_digit(text[2 * i]);
    const int lo = hex_digit(text[2 * i + 1]);
    if (hi < 0 || lo < 0) return std::nullopt;
    ch[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return Rgb8{ch[0], ch[1], ch[2]};
}

double normalize_hue(double degrees) {
  double h = std::fmod(degrees, 360.0);
  if (h < 0.0) h += 360.0;
  // fmod of a tiny negative value can round back up to exactly 360
  if (h >= 360.0) h = 0.0;
  return h;
}

}  // namespace colorlab
