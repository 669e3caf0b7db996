#pragma once

#include <span>

#include "colorlab/types.hpp"

namespace colorlab {

/// YCbCr quantization range. `Full` uses no luma offset so the matrix pair
/// round-trips; `Studio` uses the BT.601 16-235 / 16-240 footroom and
/// headroom with a luma offset of 16.
enum class YCbCrRange { Full, Studio };

struct ConversionOptions {
  WhitePoint white = WhitePoint::d65();
  YCbCrRange ycbcr_range = YCbCrRange::Full;
};

// Matrix constants exactly as published; the inverse matrices are the
// printed (truncated) ones, not computed inverses.
using Matrix3 = std::array<std::array<double, 3>, 3>;

inline constexpr Matrix3 kRgbToXyz = {{
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
}};
inline constexpr Matrix3 kXyzToRgb = {{
    {3.2404542, -1.5371385, -0.4985314},
    {-0.9692660, 1.8760108, 0.0415560},
    {0.0556434, -0.2040259, 1.0572252},
}};
inline constexpr Matrix3 kRgbToYiq = {{
    {0.299, 0.587, 0.114},
    {0.596, -0.274, -0.322},
    {0.211, -0.523, 0.312},
}};
inline constexpr Matrix3 kYiqToRgb = {{
    {1.000, 0.956, 0.621},
    {1.000, -0.272, -0.647},
    {1.000, -1.106, 1.703},
}};
inline constexpr Matrix3 kRgbToYuv = {{
    {0.299, 0.587, 0.114},
    {-0.147, -0.289, 0.436},
    {0.615, -0.515, -0.100},
}};
inline constexpr Matrix3 kYuvToRgb = {{
    {1.000, 0.000, 1.140},
    {1.000, -0.396, -0.581},
    {1.000, 2.029, 0.000},
}};
inline constexpr Matrix3 kRgbToYCbCr = {{
    {0.299, 0.587, 0.114},
    {-0.1687, -0.3313, 0.5000},
    {0.5000, -0.4187, -0.0813},
}};
inline constexpr Matrix3 kYCbCrToRgb = {{
    {1.000, 0.000, 1.402},
    {1.000, -0.344, -0.714},
    {1.000, 1.772, 0.000},
}};

constexpr std::array<double, 3> multiply(const Matrix3& m, double x, double y, double z) {
  return {m[0][0] * x + m[0][1] * y + m[0][2] * z, m[1][0] * x + m[1][1] * y + m[1][2] * z,
          m[2][0] * x + m[2][1] * y + m[2][2] * z};
}

constexpr Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

UnitRgb clamp_unit(UnitRgb c);

// Scalar kernels. Forward functions take nonlinear RGB in [0, 1]; inverse
// functions return RGB clamped to [0, 1] and throw std::invalid_argument
// when handed a coord of another model.

ColorCoord rgb_to_cmy(UnitRgb c);
UnitRgb cmy_to_rgb(const ColorCoord& c);

ColorCoord rgb_to_cmyk(Rgb8 c);
ColorCoord rgb_to_cmyk(UnitRgb c);
UnitRgb cmyk_to_rgb(const ColorCoord& c);

/// HSI with hue in degrees. I == 0 maps to H = 0, S = 0.
ColorCoord rgb_to_hsi(UnitRgb c);
/// Throws std::invalid_argument when I is outside [0, 1].
UnitRgb hsi_to_rgb(const ColorCoord& c);

ColorCoord rgb_to_hsl(UnitRgb c);
UnitRgb hsl_to_rgb(const ColorCoord& c);

ColorCoord rgb_to_hsv(UnitRgb c);
UnitRgb hsv_to_rgb(const ColorCoord& c);

/// Plain matrix transform of the [0, 1] channels, no linearization.
ColorCoord rgb_to_xyz(UnitRgb c);
UnitRgb xyz_to_rgb(const ColorCoord& c);

/// sRGB decode, XYZ scaled to the white point's 0-100 convention, then the
/// CIE 1976 cube-root compression.
ColorCoord rgb_to_lab(Rgb8 c, const WhitePoint& wp = WhitePoint::d65());
ColorCoord rgb_to_lab(UnitRgb c, const WhitePoint& wp = WhitePoint::d65());
UnitRgb lab_to_rgb(const ColorCoord& c, const WhitePoint& wp = WhitePoint::d65());

/// Black (X + 15Y + 3Z == 0) takes the white point's chromaticity so u = v = 0.
ColorCoord rgb_to_luv(Rgb8 c, const WhitePoint& wp = WhitePoint::d65());
ColorCoord rgb_to_luv(UnitRgb c, const WhitePoint& wp = WhitePoint::d65());
UnitRgb luv_to_rgb(const ColorCoord& c, const WhitePoint& wp = WhitePoint::d65());

ColorCoord rgb_to_yiq(UnitRgb c);
UnitRgb yiq_to_rgb(const ColorCoord& c);

ColorCoord rgb_to_yuv(UnitRgb c);
UnitRgb yuv_to_rgb(const ColorCoord& c);

/// Y, Cb, Cr on the 0-255 scale.
ColorCoord rgb_to_ycbcr(Rgb8 c, YCbCrRange range = YCbCrRange::Full);
ColorCoord rgb_to_ycbcr(UnitRgb c, YCbCrRange range = YCbCrRange::Full);
UnitRgb ycbcr_to_rgb(const ColorCoord& c, YCbCrRange range = YCbCrRange::Full);

/// One entry of the dispatch table: forward and inverse for one model.
struct ConversionKernel {
  ColorModel model;
  ColorCoord (*forward)(UnitRgb, const ConversionOptions&);
  UnitRgb (*inverse)(const ColorCoord&, const ConversionOptions&);
};

std::span<const ConversionKernel> kernels();
const ConversionKernel& kernel_for(ColorModel model);

ColorCoord to_model(Rgb8 c, ColorModel model, const ConversionOptions& opts = {});
ColorCoord to_model(UnitRgb c, ColorModel model, const ConversionOptions& opts = {});
UnitRgb to_unit_rgb(const ColorCoord& c, const ConversionOptions& opts = {});

/// Forward-converts a run of pixels; out.size() must equal in.size().
/// Produces exactly what to_model gives per pixel, with the model dispatch
/// hoisted out of the loop.
void convert_pixels(std::span<const Rgb8> in, std::span<ColorCoord> out, ColorModel model,
                    const ConversionOptions& opts = {});
Rgb8 to_rgb8(const ColorCoord& c, const ConversionOptions& opts = {});

}  // namespace colorlab
