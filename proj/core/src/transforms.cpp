#include "colorlab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "colorlab/gamma.hpp"

namespace colorlab {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

// CIE 1976 compression constants in the form they are usually printed.
constexpr double kLabEpsilon = 0.008856;
constexpr double kLabSlope = 7.787;
constexpr double kLabOffset = 16.0 / 116.0;
constexpr double kLabInverseLimit = 0.206893;
constexpr double kLuvKappa = 903.3;

void expect_model(const ColorCoord& c, ColorModel model) {
  if (c.model != model) {
    throw std::invalid_argument("expected a " + std::string(to_string(model)) + " coordinate, got " +
                                std::string(to_string(c.model)));
  }
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

ColorCoord coord(ColorModel model, const std::array<double, 3>& v) {
  return {model, v[0], v[1], v[2], std::nullopt};
}

// Hue shared by HSL and HSV; `delta` must be positive.
double hexcone_hue(UnitRgb c, double max, double delta) {
  double h;
  if (max == c.r) {
    h = std::fmod((c.g - c.b) / delta, 6.0);
    if (h < 0.0) h += 6.0;
  } else if (max == c.g) {
    h = (c.b - c.r) / delta + 2.0;
  } else {
    h = (c.r - c.g) / delta + 4.0;
  }
  return normalize_hue(60.0 * h);
}

// Chroma / second-largest / offset reconstruction over six 60-degree sectors.
UnitRgb hexcone_rgb(double hue, double chroma, double offset) {
  const double h = normalize_hue(hue) / 60.0;
  const double x = chroma * (1.0 - std::abs(std::fmod(h, 2.0) - 1.0));
  const int sector = std::min(static_cast<int>(h), 5);
  UnitRgb out;
  switch (sector) {
    case 0: out = {chroma, x, 0.0}; break;
    case 1: out = {x, chroma, 0.0}; break;
    case 2: out = {0.0, chroma, x}; break;
    case 3: out = {0.0, x, chroma}; break;
    case 4: out = {x, 0.0, chroma}; break;
    default: out = {chroma, 0.0, x}; break;
  }
  return clamp_unit({out.r + offset, out.g + offset, out.b + offset});
}

double lab_f(double t) { return t > kLabEpsilon ? std::cbrt(t) : kLabSlope * t + kLabOffset; }

double lab_f_inverse(double t) {
  return t > kLabInverseLimit ? t * t * t : (t - kLabOffset) / kLabSlope;
}

// Nonlinear RGB -> XYZ on the 0-100 scale.
std::array<double, 3> xyz100_from_rgb(UnitRgb c) {
  const UnitRgb lin = srgb_decode(c);
  auto xyz = multiply(kRgbToXyz, lin.r, lin.g, lin.b);
  for (auto& v : xyz) v *= 100.0;
  return xyz;
}

UnitRgb rgb_from_xyz100(double x, double y, double z) {
  const auto lin = multiply(kXyzToRgb, x / 100.0, y / 100.0, z / 100.0);
  return clamp_unit(srgb_encode(UnitRgb{lin[0], lin[1], lin[2]}));
}

double studio_scale(YCbCrRange range, double full_span) {
  return range == YCbCrRange::Studio ? full_span / 255.0 : 1.0;
}

}  // namespace

UnitRgb clamp_unit(UnitRgb c) { return {clamp01(c.r), clamp01(c.g), clamp01(c.b)}; }

// --- CMY / CMYK --------------------------------------------------------------

ColorCoord rgb_to_cmy(UnitRgb c) { return {ColorModel::Cmy, 1.0 - c.r, 1.0 - c.g, 1.0 - c.b, std::nullopt}; }

UnitRgb cmy_to_rgb(const ColorCoord& c) {
  expect_model(c, ColorModel::Cmy);
  return clamp_unit({1.0 - c.c1, 1.0 - c.c2, 1.0 - c.c3});
}

ColorCoord rgb_to_cmyk(Rgb8 c) { return rgb_to_cmyk(unit_from_rgb8(c)); }

ColorCoord rgb_to_cmyk(UnitRgb c) {
  const double k = 1.0 - std::max({c.r, c.g, c.b});
  const double rest = 1.0 - k;
  if (rest == 0.0) return {ColorModel::Cmyk, 0.0, 0.0, 0.0, k};
  return {ColorModel::Cmyk, clamp01((1.0 - c.r - k) / rest), clamp01((1.0 - c.g - k) / rest),
          clamp01((1.0 - c.b - k) / rest), k};
}

UnitRgb cmyk_to_rgb(const ColorCoord& c) {
  expect_model(c, ColorModel::Cmyk);
  const double k = c.c4.value_or(0.0);
  return clamp_unit({(1.0 - c.c1) * (1.0 - k), (1.0 - c.c2) * (1.0 - k), (1.0 - c.c3) * (1.0 - k)});
}

// --- HSI ---------------------------------------------------------------------

ColorCoord rgb_to_hsi(UnitRgb c) {
  const double intensity = (c.r + c.g + c.b) / 3.0;
  if (intensity <= 0.0) return {ColorModel::Hsi, 0.0, 0.0, 0.0, std::nullopt};

  const double saturation = clamp01(1.0 - std::min({c.r, c.g, c.b}) / intensity);
  const double num = 0.5 * ((c.r - c.g) + (c.r - c.b));
  const double den = std::sqrt((c.r - c.g) * (c.r - c.g) + (c.r - c.b) * (c.g - c.b));
  double hue = 0.0;
  if (den > 0.0) {
    const double theta = std::acos(std::clamp(num / den, -1.0, 1.0)) * kRadToDeg;
    // arccos only covers [0, 180]; the lower half-plane is mirrored
    hue = c.b > c.g ? 360.0 - theta : theta;
  }
  return {ColorModel::Hsi, normalize_hue(hue), saturation, intensity, std::nullopt};
}

UnitRgb hsi_to_rgb(const ColorCoord& c) {
  expect_model(c, ColorModel::Hsi);
  const double s = c.c2;
  const double i = c.c3;
  if (!(i >= 0.0 && i <= 1.0)) throw std::invalid_argument("HSI intensity must lie in [0, 1]");
  if (i == 0.0) return {0.0, 0.0, 0.0};

  double h = normalize_hue(c.c1);
  const int sector = h < 120.0 ? 0 : (h < 240.0 ? 1 : 2);
  h -= 120.0 * sector;

  // Within a sector: the trailing channel is I(1 - S), the leading channel
  // follows the cosine ratio, and the remaining one closes the sum to 3I.
  const double lead = i * (1.0 + s * std::cos(h * kDegToRad) / std::cos((60.0 - h) * kDegToRad));
  const double trail = i * (1.0 - s);
  const double middle = 3.0 * i - (lead + trail);

  UnitRgb out;
  switch (sector) {
    case 0: out = {lead, middle, trail}; break;
    case 1: out = {trail, lead, middle}; break;
    default: out = {middle, trail, lead}; break;
  }
  return clamp_unit(out);
}

// --- HSL / HSV ---------------------------------------------------------------

ColorCoord rgb_to_hsl(UnitRgb c) {
  const double max = std::max({c.r, c.g, c.b});
  const double min = std::min({c.r, c.g, c.b});
  const double delta = max - min;
  const double lightness = (max + min) / 2.0;
  if (delta == 0.0) return {ColorModel::Hsl, 0.0, 0.0, lightness, std::nullopt};
  const double saturation = clamp01(delta / (1.0 - std::abs(2.0 * lightness - 1.0)));
  return {ColorModel::Hsl, hexcone_hue(c, max, delta), saturation, lightness, std::nullopt};
}

UnitRgb hsl_to_rgb(const ColorCoord& c) {
  expect_model(c, ColorModel::Hsl);
  const double chroma = (1.0 - std::abs(2.0 * c.c3 - 1.0)) * c.c2;
  return hexcone_rgb(c.c1, chroma, c.c3 - chroma / 2.0);
}

ColorCoord rgb_to_hsv(UnitRgb c) {
  const double max = std::max({c.r, c.g, c.b});
  const double min = std::min({c.r, c.g, c.b});
  const double delta = max - min;
  const double saturation = max == 0.0 ? 0.0 : delta / max;
  const double hue = delta == 0.0 ? 0.0 : hexcone_hue(c, max, delta);
  return {ColorModel::Hsv, hue, saturation, max, std::nullopt};
}

UnitRgb hsv_to_rgb(const ColorCoord& c) {
  expect_model(c, ColorModel::Hsv);
  const double chroma = c.c3 * c.c2;
  return hexcone_rgb(c.c1, chroma, c.c3 - chroma);
}

// --- CIE ---------------------------------------------------------------------

ColorCoord rgb_to_xyz(UnitRgb c) { return coord(ColorModel::Xyz, multiply(kRgbToXyz, c.r, c.g, c.b)); }

UnitRgb xyz_to_rgb(const ColorCoord& c) {
  expect_model(c, ColorModel::Xyz);
  const auto rgb = multiply(kXyzToRgb, c.c1, c.c2, c.c3);
  return clamp_unit({rgb[0], rgb[1], rgb[2]});
}

ColorCoord rgb_to_lab(Rgb8 c, const WhitePoint& wp) { return rgb_to_lab(unit_from_rgb8(c), wp); }

ColorCoord rgb_to_lab(UnitRgb c, const WhitePoint& wp) {
  const auto xyz = xyz100_from_rgb(c);
  const double fx = lab_f(xyz[0] / wp.xn());
  const double fy = lab_f(xyz[1] / wp.yn());
  const double fz = lab_f(xyz[2] / wp.zn());
  return {ColorModel::Lab, 116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz), std::nullopt};
}

UnitRgb lab_to_rgb(const ColorCoord& c, const WhitePoint& wp) {
  expect_model(c, ColorModel::Lab);
  const double fy = (c.c1 + 16.0) / 116.0;
  const double fx = c.c2 / 500.0 + fy;
  const double fz = fy - c.c3 / 200.0;
  return rgb_from_xyz100(wp.xn() * lab_f_inverse(fx), wp.yn() * lab_f_inverse(fy), wp.zn() * lab_f_inverse(fz));
}

ColorCoord rgb_to_luv(Rgb8 c, const WhitePoint& wp) { return rgb_to_luv(unit_from_rgb8(c), wp); }

ColorCoord rgb_to_luv(UnitRgb c, const WhitePoint& wp) {
  const auto [x, y, z] = xyz100_from_rgb(c);
  const double denom = x + 15.0 * y + 3.0 * z;
  const double un = wp.un_prime();
  const double vn = wp.vn_prime();
  const double u_prime = denom > 0.0 ? 4.0 * x / denom : un;
  const double v_prime = denom > 0.0 ? 9.0 * y / denom : vn;
  const double yr = y / wp.yn();
  const double l = yr > kLabEpsilon ? 116.0 * std::cbrt(yr) - 16.0 : kLuvKappa * yr;
  return {ColorModel::Luv, l, 13.0 * l * (u_prime - un), 13.0 * l * (v_prime - vn), std::nullopt};
}

UnitRgb luv_to_rgb(const ColorCoord& c, const WhitePoint& wp) {
  expect_model(c, ColorModel::Luv);
  const double l = c.c1;
  if (l <= 0.0) return {0.0, 0.0, 0.0};
  const double u_prime = c.c2 / (13.0 * l) + wp.un_prime();
  const double v_prime = c.c3 / (13.0 * l) + wp.vn_prime();
  const double fy = (l + 16.0) / 116.0;
  const double y = l > 8.0 ? fy * fy * fy * wp.yn() : l / kLuvKappa * wp.yn();
  if (v_prime <= 0.0) return rgb_from_xyz100(0.0, y, 0.0);
  const double x = 9.0 * y * u_prime / (4.0 * v_prime);
  const double z = y * (12.0 - 3.0 * u_prime - 20.0 * v_prime) / (4.0 * v_prime);
  return rgb_from_xyz100(x, y, z);
}

// --- Luma / chroma -----------------------------------------------------------

ColorCoord rgb_to_yiq(UnitRgb c) { return coord(ColorModel::Yiq, multiply(kRgbToYiq, c.r, c.g, c.b)); }

UnitRgb yiq_to_rgb(const ColorCoord& c) {
  expect_model(c, ColorModel::Yiq);
  const auto rgb = multiply(kYiqToRgb, c.c1, c.c2, c.c3);
  return clamp_unit({rgb[0], rgb[1], rgb[2]});
}

ColorCoord rgb_to_yuv(UnitRgb c) { return coord(ColorModel::Yuv, multiply(kRgbToYuv, c.r, c.g, c.b)); }

UnitRgb yuv_to_rgb(const ColorCoord& c) {
  expect_model(c, ColorModel::Yuv);
  const auto rgb = multiply(kYuvToRgb, c.c1, c.c2, c.c3);
  return clamp_unit({rgb[0], rgb[1], rgb[2]});
}

ColorCoord rgb_to_ycbcr(Rgb8 c, YCbCrRange range) { return rgb_to_ycbcr(unit_from_rgb8(c), range); }

ColorCoord rgb_to_ycbcr(UnitRgb c, YCbCrRange range) {
  const auto full = multiply(kRgbToYCbCr, 255.0 * c.r, 255.0 * c.g, 255.0 * c.b);
  const double luma_scale = studio_scale(range, 219.0);
  const double chroma_scale = studio_scale(range, 224.0);
  const double luma_offset = range == YCbCrRange::Studio ? 16.0 : 0.0;
  return {ColorModel::YCbCr, luma_offset + luma_scale * full[0], 128.0 + chroma_scale * full[1],
          128.0 + chroma_scale * full[2], std::nullopt};
}

UnitRgb ycbcr_to_rgb(const ColorCoord& c, YCbCrRange range) {
  expect_model(c, ColorModel::YCbCr);
  const double luma_offset = range == YCbCrRange::Studio ? 16.0 : 0.0;
  const double y = (c.c1 - luma_offset) / studio_scale(range, 219.0);
  const double cb = (c.c2 - 128.0) / studio_scale(range, 224.0);
  const double cr = (c.c3 - 128.0) / studio_scale(range, 224.0);
  const auto rgb = multiply(kYCbCrToRgb, y, cb, cr);
  return clamp_unit({rgb[0] / 255.0, rgb[1] / 255.0, rgb[2] / 255.0});
}

// --- Dispatch ----------------------------------------------------------------

namespace {

constexpr std::array<ConversionKernel, 11> kKernels = {{
    {ColorModel::Cmy, [](UnitRgb c, const ConversionOptions&) { return rgb_to_cmy(c); },
     [](const ColorCoord& c, const ConversionOptions&) { return cmy_to_rgb(c); }},
    {ColorModel::Cmyk, [](UnitRgb c, const ConversionOptions&) { return rgb_to_cmyk(c); },
     [](const ColorCoord& c, const ConversionOptions&) { return cmyk_to_rgb(c); }},
    {ColorModel::Hsi, [](UnitRgb c, const ConversionOptions&) { return rgb_to_hsi(c); },
     [](const ColorCoord& c, const ConversionOptions&) { return hsi_to_rgb(c); }},
    {ColorModel::Hsl, [](UnitRgb c, const ConversionOptions&) { return rgb_to_hsl(c); },
     [](const ColorCoord& c, const ConversionOptions&) { return hsl_to_rgb(c); }},
    {ColorModel::Hsv, [](UnitRgb c, const ConversionOptions&) { return rgb_to_hsv(c); },
     [](const ColorCoord& c, const ConversionOptions&) { return hsv_to_rgb(c); }},
    {ColorModel::Xyz, [](UnitRgb c, const ConversionOptions&) { return rgb_to_xyz(c); },
     [](const ColorCoord& c, const ConversionOptions&) { return xyz_to_rgb(c); }},
    {ColorModel::Lab, [](UnitRgb c, const ConversionOptions& o) { return rgb_to_lab(c, o.white); },
     [](const ColorCoord& c, const ConversionOptions& o) { return lab_to_rgb(c, o.white); }},
    {ColorModel::Luv, [](UnitRgb c, const ConversionOptions& o) { return rgb_to_luv(c, o.white); },
     [](const ColorCoord& c, const ConversionOptions& o) { return luv_to_rgb(c, o.white); }},
    {ColorModel::Yiq, [](UnitRgb c, const ConversionOptions&) { return rgb_to_yiq(c); },
     [](const ColorCoord& c, const ConversionOptions&) { return yiq_to_rgb(c); }},
    {ColorModel::Yuv, [](UnitRgb c, const ConversionOptions&) { return rgb_to_yuv(c); },
     [](const ColorCoord& c, const ConversionOptions&) { return yuv_to_rgb(c); }},
    {ColorModel::YCbCr, [](UnitRgb c, const ConversionOptions& o) { return rgb_to_ycbcr(c, o.ycbcr_range); },
     [](const ColorCoord& c, const ConversionOptions& o) { return ycbcr_to_rgb(c, o.ycbcr_range); }},
}};

}  // namespace

std::span<const ConversionKernel> kernels() { return kKernels; }

const ConversionKernel& kernel_for(ColorModel model) { return kKernels[static_cast<std::size_t>(model)]; }

ColorCoord to_model(Rgb8 c, ColorModel model, const ConversionOptions& opts) {
  return kernel_for(model).forward(unit_from_rgb8(c), opts);
}

ColorCoord to_model(UnitRgb c, ColorModel model, const ConversionOptions& opts) {
  return kernel_for(model).forward(c, opts);
}

UnitRgb to_unit_rgb(const ColorCoord& c, const ConversionOptions& opts) {
  return kernel_for(c.model).inverse(c, opts);
}

Rgb8 to_rgb8(const ColorCoord& c, const ConversionOptions& opts) { return rgb8_from_unit(to_unit_rgb(c, opts)); }

namespace {

// Copies field by field: a whole-struct assignment makes GCC spill the
// temporary and reload it with wide loads that defeat store forwarding.
template <typename Forward>
void convert_run(std::span<const Rgb8> in, std::span<ColorCoord> out, Forward&& forward) {
  for (std::size_t i = 0; i < in.size(); ++i) {
    const ColorCoord c = forward(unit_from_rgb8(in[i]));
    ColorCoord& o = out[i];
    o.model = c.model;
    o.c1 = c.c1;
    o.c2 = c.c2;
    o.c3 = c.c3;
    if (c.c4) {
      o.c4.emplace(*c.c4);
    } else {
      o.c4.reset();
    }
  }
}

}  // namespace

void convert_pixels(std::span<const Rgb8> in, std::span<ColorCoord> out, ColorModel model,
                    const ConversionOptions& opts) {
  if (in.size() != out.size()) throw std::invalid_argument("input and output spans differ in length");
  switch (model) {
    case ColorModel::Cmy: return convert_run(in, out, [](UnitRgb c) { return rgb_to_cmy(c); });
    case ColorModel::Cmyk: return convert_run(in, out, [](UnitRgb c) { return rgb_to_cmyk(c); });
    case ColorModel::Hsi: return convert_run(in, out, [](UnitRgb c) { return rgb_to_hsi(c); });
    case ColorModel::Hsl: return convert_run(in, out, [](UnitRgb c) { return rgb_to_hsl(c); });
    case ColorModel::Hsv: return convert_run(in, out, [](UnitRgb c) { return rgb_to_hsv(c); });
    case ColorModel::Xyz: return convert_run(in, out, [](UnitRgb c) { return rgb_to_xyz(c); });
    case ColorModel::Lab: return convert_run(in, out, [&](UnitRgb c) { return rgb_to_lab(c, opts.white); });
    case ColorModel::Luv: return convert_run(in, out, [&](UnitRgb c) { return rgb_to_luv(c, opts.white); });
    case ColorModel::Yiq: return convert_run(in, out, [](UnitRgb c) { return rgb_to_yiq(c); });
    case ColorModel::Yuv: return convert_run(in, out, [](UnitRgb c) { return rgb_to_yuv(c); });
    case ColorModel::YCbCr:
      return convert_run(in, out, [&](UnitRgb c) { return rgb_to_ycbcr(c, opts.ycbcr_range); });
  }
}

}  // namespace colorlab
