#include "colorlab/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace colorlab {

namespace {

constexpr double kScale = 1.099;
constexpr double kOffset = 0.099;

void require_positive_gamma(double gamma_c) {
  if (!(gamma_c > 0.0) || !std::isfinite(gamma_c)) {
    throw std::invalid_argument("camera gamma must be a positive finite number");
  }
}

}  // namespace

double continuous_camera_gamma(Rec709Form form) {
  // Solve power_segment(0.018) == 4.5 * 0.018 for the exponent.
  const double base = form == Rec709Form::Printed ? (kRec709EncodedLimit * kScale + kOffset) / kScale
                                                  : (kRec709EncodedLimit + kOffset) / kScale;
  return std::log(kRec709LinearLimit) / std::log(base);
}

double rec709_encode(double linear, double gamma_c, Rec709Form form) {
  require_positive_gamma(gamma_c);
  if (linear <= kRec709LinearLimit) return kRec709LinearSlope * linear;
  const double power = kScale * std::pow(linear, 1.0 / gamma_c) - kOffset;
  return form == Rec709Form::Printed ? power / kScale : power;
}

double rec709_decode(double encoded, double gamma_c, Rec709Form form) {
  require_positive_gamma(gamma_c);
  if (encoded <= kRec709EncodedLimit) return encoded / kRec709LinearSlope;
  const double power = form == Rec709Form::Printed ? encoded * kScale : encoded;
  return std::pow((power + kOffset) / kScale, gamma_c);
}

UnitRgb gamma_encode_rec709(UnitRgb linear, double gamma_c, Rec709Form form) {
  return {rec709_encode(linear.r, gamma_c, form), rec709_encode(linear.g, gamma_c, form),
          rec709_encode(linear.b, gamma_c, form)};
}

UnitRgb gamma_decode_rec709(UnitRgb encoded, double gamma_c, Rec709Form form) {
  return {rec709_decode(encoded.r, gamma_c, form), rec709_decode(encoded.g, gamma_c, form),
          rec709_decode(encoded.b, gamma_c, form)};
}

double srgb_decode(double encoded) {
  if (encoded <= 0.04045) return encoded / 12.92;
  return std::pow((encoded + 0.055) / 1.055, 2.4);
}

double srgb_encode(double linear) {
  if (linear > 0.0031308) return 1.055 * std::pow(linear, 1.0 / 2.4) - 0.055;
  return 12.92 * linear;
}

UnitRgb srgb_decode(UnitRgb encoded) {
  return {srgb_decode(encoded.r), srgb_decode(encoded.g), srgb_decode(encoded.b)};
}

UnitRgb srgb_encode(UnitRgb linear) {
  return {srgb_encode(linear.r), srgb_encode(linear.g), srgb_encode(linear.b)};
}

double GammaCurve::encode(double linear) const {
  return kind == GammaKind::Srgb ? srgb_encode(linear) : rec709_encode(linear, gamma_c, form);
}

double GammaCurve::decode(double encoded) const {
  return kind == GammaKind::Srgb ? srgb_decode(encoded) : rec709_decode(encoded, gamma_c, form);
}

}  // namespace colorlab
