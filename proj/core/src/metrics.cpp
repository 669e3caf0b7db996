#include "colorlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace colorlab {

namespace {

constexpr double kDeg = 180.0 / std::numbers::pi;
constexpr double kPow25To7 = 6103515625.0;

double sq(double v) { return v * v; }

// Hue angle in degrees, [0, 360); zero for the achromatic axis.
double hue_angle(double b, double a) {
  if (a == 0.0 && b == 0.0) return 0.0;
  const double h = std::atan2(b, a) * kDeg;
  return h < 0.0 ? h + 360.0 : h;
}

double cos_deg(double d) { return std::cos(d / kDeg); }

}  // namespace

Lab lab_from_coord(const ColorCoord& c) {
  if (c.model != ColorModel::Lab) throw std::invalid_argument("color difference requires LAB coordinates");
  return {c.c1, c.c2, c.c3};
}

void DeltaEParams::validate() const {
  if (!(k_l > 0.0) || !(k_c > 0.0) || !(k_h > 0.0)) {
    throw std::invalid_argument("k_L, k_C and k_H must be strictly positive");
  }
}

double delta_e_76(const Lab& first, const Lab& second) {
  return std::sqrt(sq(second.l - first.l) + sq(second.a - first.a) + sq(second.b - first.b));
}

double delta_e_94(const Lab& first, const Lab& second, const DeltaEParams& params) {
  params.validate();
  const bool textiles = params.application == Cie94Application::Textiles;
  const double k1 = textiles ? 0.048 : 0.045;
  const double k2 = textiles ? 0.014 : 0.015;

  const double c1 = std::hypot(first.a, first.b);
  const double c2 = std::hypot(second.a, second.b);
  const double dl = second.l - first.l;
  const double dc = c2 - c1;
  // Rounding can push the hue radicand a hair below zero.
  const double dh_sq = std::max(0.0, sq(second.a - first.a) + sq(second.b - first.b) - sq(dc));

  const double sc = 1.0 + k1 * c1;
  const double sh = 1.0 + k2 * c1;
  return std::sqrt(sq(dl / params.k_l) + sq(dc / (params.k_c * sc)) + dh_sq / sq(params.k_h * sh));
}

double delta_e_2000(const Lab& first, const Lab& second, const DeltaEParams& params) {
  params.validate();

  const double c_mean = 0.5 * (std::hypot(first.a, first.b) + std::hypot(second.a, second.b));
  const double c_mean7 = std::pow(c_mean, 7.0);
  const double g = 0.5 * (1.0 - std::sqrt(c_mean7 / (c_mean7 + kPow25To7)));

  const double a1 = (1.0 + g) * first.a;
  const double a2 = (1.0 + g) * second.a;
  const double c1 = std::hypot(a1, first.b);
  const double c2 = std::hypot(a2, second.b);
  const double h1 = hue_angle(first.b, a1);
  const double h2 = hue_angle(second.b, a2);

  const double dl = second.l - first.l;
  const double dc = c2 - c1;
  const bool achromatic = c1 * c2 == 0.0;

  double dh = 0.0;
  double h_mean = h1 + h2;
  if (!achromatic) {
    const double diff = h2 - h1;
    if (diff > 180.0) {
      dh = diff - 360.0;
    } else if (diff < -180.0) {
      dh = diff + 360.0;
    } else {
      dh = diff;
    }

    if (std::abs(diff) <= 180.0) {
      h_mean = 0.5 * (h1 + h2);
    } else {
      h_mean = 0.5 * (h1 + h2 + (h1 + h2 < 360.0 ? 360.0 : -360.0));
    }
  }
  const double dh_big = 2.0 * std::sqrt(c1 * c2) * std::sin(0.5 * dh / kDeg);

  const double l_mean = 0.5 * (first.l + second.l);
  const double cp_mean = 0.5 * (c1 + c2);

  const double t = 1.0 - 0.17 * cos_deg(h_mean - 30.0) + 0.24 * cos_deg(2.0 * h_mean) +
                   0.32 * cos_deg(3.0 * h_mean + 6.0) - 0.20 * cos_deg(4.0 * h_mean - 63.0);
  const double l_off = sq(l_mean - 50.0);
  const double s_l = 1.0 + 0.015 * l_off / std::sqrt(20.0 + l_off);
  const double s_c = 1.0 + 0.045 * cp_mean;
  const double s_h = 1.0 + 0.015 * cp_mean * t;

  const double theta = 30.0 * std::exp(-sq((h_mean - 275.0) / 25.0));
  const double cp_mean7 = std::pow(cp_mean, 7.0);
  const double r_c = 2.0 * std::sqrt(cp_mean7 / (cp_mean7 + kPow25To7));
  const double r_t = -std::sin(2.0 * theta / kDeg) * r_c;

  const double lt = dl / (params.k_l * s_l);
  const double ct = dc / (params.k_c * s_c);
  const double ht = dh_big / (params.k_h * s_h);
  return std::sqrt(std::max(0.0, lt * lt + ct * ct + ht * ht + r_t * ct * ht));
}

}  // namespace colorlab
