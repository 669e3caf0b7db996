#include "colorlab/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace colorlab::fuzzy {

namespace {

constexpr std::size_t kQuadraturePoints = 10001;

bool is_hs_model(ColorModel m) { return m == ColorModel::Hsi || m == ColorModel::Hsl || m == ColorModel::Hsv; }

double circular_distance(double x, double y) {
  const double d = std::abs(normalize_hue(x) - normalize_hue(y));
  return std::min(d, 360.0 - d);
}

template <typename F>
double trapezoid_rule(F&& f, double lo, double hi, std::size_t n) {
  const double step = (hi - lo) / static_cast<double>(n - 1);
  double sum = 0.5 * (f(lo) + f(hi));
  for (std::size_t i = 1; i + 1 < n; ++i) sum += f(lo + step * static_cast<double>(i));
  return sum * step;
}

}  // namespace

MembershipFunction::MembershipFunction(MembershipKind kind, Domain domain, std::array<double, 4> raw,
                                       std::size_t count)
    : kind_(kind), domain_(domain), raw_(raw), count_(count), knots_(raw) {
  for (std::size_t i = 0; i < count_; ++i) {
    if (!std::isfinite(raw_[i])) throw std::invalid_argument("membership parameters must be finite");
  }
  if (kind_ == MembershipKind::Gaussian) {
    if (!(raw_[1] > 0.0)) throw std::invalid_argument("gaussian sigma must be positive");
    if (domain_ == Domain::HueCircular) knots_[0] = normalize_hue(raw_[0]);
  } else if (domain_ == Domain::HueCircular) {
    knots_[0] = normalize_hue(raw_[0]);
    for (std::size_t i = 1; i < count_; ++i) {
      double k = normalize_hue(raw_[i]);
      while (k < knots_[i - 1]) k += 360.0;
      knots_[i] = k;
    }
    if (knots_[count_ - 1] - knots_[0] > 360.0) {
      throw std::invalid_argument("hue membership support exceeds a full turn");
    }
  } else {
    for (std::size_t i = 1; i < count_; ++i) {
      if (raw_[i] < raw_[i - 1]) throw std::invalid_argument("membership breakpoints must be non-decreasing");
    }
  }

}

MembershipFunction MembershipFunction::triangular(double a, double b, double c, Domain domain) {
  return {MembershipKind::Triangular, domain, {a, b, c, 0.0}, 3};
}

MembershipFunction MembershipFunction::trapezoidal(double a, double b, double c, double d, Domain domain) {
  return {MembershipKind::Trapezoidal, domain, {a, b, c, d}, 4};
}

MembershipFunction MembershipFunction::gaussian(double mean, double sigma, Domain domain) {
  return {MembershipKind::Gaussian, domain, {mean, sigma, 0.0, 0.0}, 2};
}

std::vector<double> MembershipFunction::parameters() const {
  return {raw_.begin(), raw_.begin() + static_cast<std::ptrdiff_t>(count_)};
}

double MembershipFunction::peak() const {
  const double p = kind_ == MembershipKind::Gaussian ? knots_[0] : knots_[1];
  if (domain_ == Domain::HueCircular) return normalize_hue(p);
  // The plateau point closest to 0, so a plateau overlapping [0, 1] peaks inside it.
  if (kind_ == MembershipKind::Trapezoidal) return std::clamp(0.0, knots_[1], knots_[2]);
  return p;
}

double MembershipFunction::evaluate_linear(double x) const {
  const auto& k = knots_;
  if (kind_ == MembershipKind::Triangular) {
    if (x < k[0] || x > k[2]) return 0.0;
    if (x == k[1]) return 1.0;
    if (x < k[1]) return (x - k[0]) / (k[1] - k[0]);
    return (k[2] - x) / (k[2] - k[1]);
  }
  if (x < k[0] || x > k[3]) return 0.0;
  if (x >= k[1] && x <= k[2]) return 1.0;
  if (x < k[1]) return (x - k[0]) / (k[1] - k[0]);
  return (k[3] - x) / (k[3] - k[2]);
}

double MembershipFunction::operator()(double x) const {
  if (kind_ == MembershipKind::Gaussian) {
    const double d = domain_ == Domain::HueCircular ? circular_distance(x, knots_[0]) : x - knots_[0];
    return std::exp(-(d * d) / (2.0 * raw_[1] * raw_[1]));
  }
  if (domain_ == Domain::UnitInterval) return evaluate_linear(x);
  const double h = normalize_hue(x);
  return std::max({evaluate_linear(h), evaluate_linear(h + 360.0), evaluate_linear(h - 360.0)});
}

double membership(const MembershipFunction& f, double x) { return f(x); }

double defuzzify_centroid(const MembershipFunction& f) {
  const auto p = f.parameters();
  double centroid = 0.0;
  switch (f.kind()) {
    case MembershipKind::Triangular: {
      // Work on the unwrapped breakpoints so a wrap-around triangle stays contiguous.
      double a = p[0], b = p[1], c = p[2];
      if (f.domain() == Domain::HueCircular) {
        a = normalize_hue(a);
        b = normalize_hue(b);
        while (b < a) b += 360.0;
        c = normalize_hue(c);
        while (c < b) c += 360.0;
      }
      if (c - a <= 0.0) throw std::domain_error("membership function has zero area");
      centroid = (a + b + c) / 3.0;
      break;
    }
    case MembershipKind::Trapezoidal: {
      double a = p[0], b = p[1], c = p[2], d = p[3];
      if (f.domain() == Domain::HueCircular) {
        a = normalize_hue(a);
        b = normalize_hue(b);
        while (b < a) b += 360.0;
        c = normalize_hue(c);
        while (c < b) c += 360.0;
        d = normalize_hue(d);
        while (d < c) d += 360.0;
      }
      const double width_sum = (c + d) - (a + b);
      if (width_sum <= 0.0) throw std::domain_error("membership function has zero area");
      // Difference of the first moments of two triangles-with-shared-base, in closed form.
      centroid = ((c * c + d * d + c * d) - (a * a + b * b + a * b)) / (3.0 * width_sum);
      break;
    }
    case MembershipKind::Gaussian: {
      const double mean = p[0];
      const double lo = f.domain() == Domain::HueCircular ? mean - 180.0 : 0.0;
      const double hi = f.domain() == Domain::HueCircular ? mean + 180.0 : 1.0;
      const double area = trapezoid_rule([&](double x) { return f(x); }, lo, hi, kQuadraturePoints);
      if (!(area > 0.0)) throw std::domain_error("membership function has zero area");
      const double moment = trapezoid_rule([&](double x) { return x * f(x); }, lo, hi, kQuadraturePoints);
      centroid = moment / area;
      break;
    }
  }
  return f.domain() == Domain::HueCircular ? normalize_hue(centroid) : centroid;
}

// --- FuzzyColor / FuzzyColorSpace ----------------------------------------------

FuzzyColor::FuzzyColor(std::string label, MembershipFunction hue, MembershipFunction saturation,
                       MembershipFunction third, Combiner combiner)
    : label_(std::move(label)),
      hue_(std::move(hue)),
      saturation_(std::move(saturation)),
      third_(std::move(third)),
      combiner_(combiner) {
  if (label_.empty()) throw std::invalid_argument("fuzzy color label must not be empty");
  if (hue_.domain() != Domain::HueCircular) throw std::invalid_argument(label_ + ": hue membership must be circular");
  if (saturation_.domain() != Domain::UnitInterval || third_.domain() != Domain::UnitInterval) {
    throw std::invalid_argument(label_ + ": saturation and third memberships must be on [0, 1]");
  }
  for (const auto* f : {&saturation_, &third_}) {
    const double p = f->peak();
    if (p < 0.0 || p > 1.0) throw std::invalid_argument(label_ + ": membership never reaches 1 inside [0, 1]");
  }
  // Normalized fuzzy subset: the joint peak must score exactly 1.
  if (membership(hue_.peak(), saturation_.peak(), third_.peak()) != 1.0) {
    throw std::invalid_argument(label_ + ": fuzzy color is not normalized");
  }
}

double FuzzyColor::membership(double h, double s, double third) const {
  const double mh = hue_(h);
  const double ms = saturation_(s);
  const double mt = third_(third);
  return combiner_ == Combiner::Min ? std::min({mh, ms, mt}) : mh * ms * mt;
}

FuzzyColorSpace::FuzzyColorSpace(std::string name, ColorModel model, std::vector<FuzzyColor> colors,
                                 PartitionMode mode)
    : name_(std::move(name)), model_(model), colors_(std::move(colors)), mode_(mode) {
  if (!is_hs_model(model_)) throw std::invalid_argument("fuzzy color spaces are defined over HSI, HSL or HSV");
  if (colors_.empty()) throw std::invalid_argument("fuzzy color space needs at least one color");
  std::set<std::string> seen;
  for (const auto& c : colors_) {
    if (!seen.insert(c.label()).second) throw std::invalid_argument("duplicate fuzzy color label: " + c.label());
  }
}

Classification classify(const FuzzyColorSpace& space, const ColorCoord& c) {
  if (c.model != space.model()) {
    throw std::invalid_argument("space " + space.name() + " is defined over " + std::string(to_string(space.model())) +
                                ", got a " + std::string(to_string(c.model)) + " coordinate");
  }
  Classification out;
  for (const auto& color : space.colors()) {
    const double mu = color.membership(c.c1, c.c2, c.c3);
    if (mu > 0.0) out.emplace_back(color.label(), mu);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.second != y.second ? x.second > y.second : x.first < y.first;
  });
  return out;
}

PartitionReport validate_partition(const FuzzyColorSpace& space, std::size_t samples) {
  if (samples == 0) throw std::invalid_argument("validate_partition needs at least one sample");
  const std::size_t unit_samples = std::min<std::size_t>(samples, 11);
  auto unit_point = [&](std::size_t j) {
    return unit_samples == 1 ? 0.5 : static_cast<double>(j) / static_cast<double>(unit_samples - 1);
  };

  PartitionReport report;
  report.max_deviation = -1.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double h = 360.0 * static_cast<double>(k) / static_cast<double>(samples);
    for (std::size_t js = 0; js < unit_samples; ++js) {
      const double s = unit_point(js);
      for (std::size_t jt = 0; jt < unit_samples; ++jt) {
        const double t = unit_point(jt);
        double sum = 0.0;
        for (const auto& color : space.colors()) sum += color.membership(h, s, t);
        const double dev = std::abs(sum - 1.0);
        if (dev > report.max_deviation) report = {dev, h, s, t, report.points};
        ++report.points;
      }
    }
  }
  return report;
}

namespace {

FuzzyColor hue_band(std::string label, double left, double apex, double right) {
  return FuzzyColor(std::move(label), MembershipFunction::triangular(left, apex, right, Domain::HueCircular),
                    MembershipFunction::trapezoidal(0.0, 0.0, 1.0, 1.0, Domain::UnitInterval),
                    MembershipFunction::trapezoidal(0.0, 0.0, 1.0, 1.0, Domain::UnitInterval));
}

FuzzyColorSpace ruspini_ring(std::string name, const std::vector<std::pair<std::string, double>>& apexes) {
  std::vector<FuzzyColor> colors;
  const std::size_t n = apexes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double left = apexes[(i + n - 1) % n].second;
    const double right = apexes[(i + 1) % n].second;
    colors.push_back(hue_band(apexes[i].first, left, apexes[i].second, right));
  }
  return FuzzyColorSpace(std::move(name), ColorModel::Hsv, std::move(colors), PartitionMode::Ruspini);
}

}  // namespace

FuzzyColorSpace illustrative_hue_partition() {
  return ruspini_ring("illustrative-hue10", {{"red", 0.0},
                                             {"orange", 30.0},
                                             {"yellow", 60.0},
                                             {"chartreuse", 90.0},
                                             {"green", 120.0},
                                             {"cyan", 180.0},
                                             {"azure", 210.0},
                                             {"blue", 240.0},
                                             {"violet", 270.0},
                                             {"magenta", 300.0}});
}

FuzzyColorSpace canonical_six_hue_partition() {
  return ruspini_ring("canonical-hue6", {{"red", 0.0},
                                         {"yellow", 60.0},
                                         {"green", 120.0},
                                         {"cyan", 180.0},
                                         {"blue", 240.0},
                                         {"magenta", 300.0}});
}

}  // namespace colorlab::fuzzy
