#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace colorlab {

/// 8-bit RGB triple, channels in [0, 255].
struct Rgb8 {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend constexpr bool operator==(const Rgb8&, const Rgb8&) = default;
};

/// Normalized RGB triple. Channels are nominally in [0, 1]; intermediate
/// results may leave that range and are clamped on quantization.
struct UnitRgb {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;

  friend constexpr bool operator==(const UnitRgb&, const UnitRgb&) = default;
};

/// Color models reachable from the RGB hub. RGB itself is not a member.
enum class ColorModel : std::uint8_t {
  Cmy,
  Cmyk,
  Hsi,
  Hsl,
  Hsv,
  Xyz,
  Lab,
  Luv,
  Yiq,
  Yuv,
  YCbCr,
};

inline constexpr std::array<ColorModel, 11> kAllModels = {
    ColorModel::Cmy, ColorModel::Cmyk, ColorModel::Hsi, ColorModel::Hsl,
    ColorModel::Hsv, ColorModel::Xyz,  ColorModel::Lab, ColorModel::Luv,
    ColorModel::Yiq, ColorModel::Yuv,  ColorModel::YCbCr,
};

/// Lower-case CLI name ("cmy", "lab", "ycbcr", ...).
std::string_view to_string(ColorModel model);

/// Conventional display name ("CMY", "LAB", "YCbCr", ...).
std::string_view display_name(ColorModel model);

/// Case-insensitive inverse of to_string / display_name.
std::optional<ColorModel> parse_model(std::string_view text);

/// Comma-separated list of every CLI model name, for error messages.
std::string model_list();

/// Declared range of one component of a model.
///
/// `bounded` is false for components the model leaves unbounded (a*, b*, u*,
/// v*); their min/max are then only slider hints.
struct ComponentRange {
  std::string_view name;
  double min;
  double max;
  double step;
  bool bounded;
  bool circular = false;
};

std::span<const ComponentRange> components(ColorModel model);

inline std::size_t component_count(ColorModel model) { return components(model).size(); }

/// A point in one of the non-RGB models. `c4` is present iff the model is CMYK.
struct ColorCoord {
  ColorModel model = ColorModel::Cmy;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  std::optional<double> c4;

  /// Component by zero-based index; index 3 is only valid for CMYK.
  double operator[](std::size_t i) const;

  friend bool operator==(const ColorCoord&, const ColorCoord&) = default;
};

/// Builds a coord from a component list, validating the arity for the model.
ColorCoord make_coord(ColorModel model, std::span<const double> values);

/// Reference white in the 0-100 tristimulus convention.
class WhitePoint {
 public:
  constexpr WhitePoint(double xn, double yn, double zn) : xn_(xn), yn_(yn), zn_(zn) {}

  static constexpr WhitePoint d65() { return {95.047, 100.000, 108.883}; }

  constexpr double xn() const { return xn_; }
  constexpr double yn() const { return yn_; }
  constexpr double zn() const { return zn_; }

  constexpr double un_prime() const { return 4.0 * xn_ / (xn_ + 15.0 * yn_ + 3.0 * zn_); }
  constexpr double vn_prime() const { return 9.0 * yn_ / (xn_ + 15.0 * yn_ + 3.0 * zn_); }

  friend constexpr bool operator==(const WhitePoint&, const WhitePoint&) = default;

 private:
  double xn_;
  double yn_;
  double zn_;
};

/// Parses "X,Y,Z" into a white point. Throws std::invalid_argument.
WhitePoint parse_white_point(std::string_view text);

inline UnitRgb unit_from_rgb8(Rgb8 c) { return {c.r / 255.0, c.g / 255.0, c.b / 255.0}; }

/// Scales by 255, clamps to [0, 255] and rounds half away from zero.
Rgb8 rgb8_from_unit(UnitRgb c);

std::uint8_t quantize_channel(double unit);

/// "#RRGGBB" (upper-case hex).
std::string to_hex(Rgb8 c);

/// Accepts "#RRGGBB" or "RRGGBB", either case.
std::optional<Rgb8> parse_hex(std::string_view text);

/// Maps any finite angle in degrees to [0, 360).
double normalize_hue(double degrees);

}  // namespace colorlab
