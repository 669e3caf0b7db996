#pragma once

#include "colorlab/types.hpp"

namespace colorlab {

/// Shape of the camera (Rec.709-style) power segment.
///
/// `Printed` keeps the outer division by 1.099 of the camera transfer
/// curve as commonly published in review literature; `Strict` is the ITU
/// Rec.709 OETF without it.
enum class Rec709Form { Printed, Strict };

inline constexpr double kRec709LinearLimit = 0.018;
inline constexpr double kRec709LinearSlope = 4.5;
inline constexpr double kRec709EncodedLimit = kRec709LinearSlope * kRec709LinearLimit;

/// Camera gamma for which the power segment meets the linear segment at the
/// breakpoint, making the curve continuous and strictly increasing. For the
/// strict form this is about 2.2205, close to the familiar 1/0.45.
double continuous_camera_gamma(Rec709Form form);

double rec709_encode(double linear, double gamma_c, Rec709Form form = Rec709Form::Printed);
double rec709_decode(double encoded, double gamma_c, Rec709Form form = Rec709Form::Printed);

UnitRgb gamma_encode_rec709(UnitRgb linear, double gamma_c, Rec709Form form = Rec709Form::Printed);
UnitRgb gamma_decode_rec709(UnitRgb encoded, double gamma_c, Rec709Form form = Rec709Form::Printed);

/// sRGB electro-optical transfer (0.04045 / 12.92 / 2.4).
double srgb_decode(double encoded);
double srgb_encode(double linear);

UnitRgb srgb_decode(UnitRgb encoded);
UnitRgb srgb_encode(UnitRgb linear);

enum class GammaKind { CameraRec709, Srgb };

/// A transfer curve bundled with its parameters.
struct GammaCurve {
  GammaKind kind = GammaKind::Srgb;
  double gamma_c = 2.2;
  Rec709Form form = Rec709Form::Printed;

  static GammaCurve srgb() { return {GammaKind::Srgb, 2.4, Rec709Form::Printed}; }
  static GammaCurve camera(Rec709Form form = Rec709Form::Printed) {
    return {GammaKind::CameraRec709, continuous_camera_gamma(form), form};
  }

  double encode(double linear) const;
  double decode(double encoded) const;
};

}  // namespace colorlab
