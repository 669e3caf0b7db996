#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "colorlab/types.hpp"

namespace colorlab::fuzzy {

enum class MembershipKind { Triangular, Trapezoidal, Gaussian };

/// HueCircular evaluates modulo 360 degrees; UnitInterval is the plain real line
/// (S, I, L and V live in [0, 1]).
enum class Domain { HueCircular, UnitInterval };

/// A normalized membership function over one color component.
///
/// Triangular and trapezoidal parameters must be non-decreasing. On the hue
/// circle they are read going counter-clockwise, so (350, 0, 10) is a valid
/// triangle straddling 0 degrees. The factories throw std::invalid_argument
/// for unordered breakpoints, a non-positive sigma or non-finite parameters.
class MembershipFunction {
 public:
  static MembershipFunction triangular(double a, double b, double c, Domain domain);
  static MembershipFunction trapezoidal(double a, double b, double c, double d, Domain domain);
  static MembershipFunction gaussian(double mean, double sigma, Domain domain);

  /// Membership degree in [0, 1]. Hue inputs are normalized first.
  double operator()(double x) const;

  MembershipKind kind() const { return kind_; }
  Domain domain() const { return domain_; }

  /// Parameters as given (a, b, c[, d]) or (mean, sigma).
  std::vector<double> parameters() const;

  /// A point where the membership is exactly 1. For trapezoids off the hue
  /// circle, the plateau point closest to 0.
  double peak() const;

  friend bool operator==(const MembershipFunction&, const MembershipFunction&) = default;

 private:
  MembershipFunction(MembershipKind kind, Domain domain, std::array<double, 4> raw, std::size_t count);

  double evaluate_linear(double x) const;

  MembershipKind kind_;
  Domain domain_;
  std::array<double, 4> raw_{};
  std::size_t count_ = 0;
  // Breakpoints unwrapped onto a monotone axis (identical to raw_ off the hue circle).
  std::array<double, 4> knots_{};
};

double membership(const MembershipFunction& f, double x);

/// Center of gravity of the area under the function.
///
/// Closed form for triangles and trapezoids; 10,001-point trapezoidal
/// quadrature for Gaussians. On the hue circle the centroid is taken over the
/// contiguous support and wrapped back into [0, 360). Throws
/// std::domain_error for zero-area functions.
double defuzzify_centroid(const MembershipFunction& f);

enum class Combiner { Min, Product };

/// A linguistic label over an HS* model: one membership per component,
/// joined by a t-norm. Saturation and third memberships must reach 1 inside
/// [0, 1].
class FuzzyColor {
 public:
  FuzzyColor(std::string label, MembershipFunction hue, MembershipFunction saturation, MembershipFunction third,
             Combiner combiner = Combiner::Min);

  const std::string& label() const { return label_; }
  const MembershipFunction& hue() const { return hue_; }
  const MembershipFunction& saturation() const { return saturation_; }
  const MembershipFunction& third() const { return third_; }
  Combiner combiner() const { return combiner_; }

  double membership(double h, double s, double third) const;

  friend bool operator==(const FuzzyColor&, const FuzzyColor&) = default;

 private:
  std::string label_;
  MembershipFunction hue_;
  MembershipFunction saturation_;
  MembershipFunction third_;
  Combiner combiner_;
};

enum class PartitionMode { Ruspini, None };

/// A named set of fuzzy colors over HSI, HSL or HSV.
class FuzzyColorSpace {
 public:
  FuzzyColorSpace(std::string name, ColorModel model, std::vector<FuzzyColor> colors,
                  PartitionMode mode = PartitionMode::Ruspini);

  const std::string& name() const { return name_; }
  ColorModel model() const { return model_; }
  PartitionMode partition_mode() const { return mode_; }
  const std::vector<FuzzyColor>& colors() const { return colors_; }

  friend bool operator==(const FuzzyColorSpace&, const FuzzyColorSpace&) = default;

 private:
  std::string name_;
  ColorModel model_;
  std::vector<FuzzyColor> colors_;
  PartitionMode mode_;
};

using Classification = std::vector<std::pair<std::string, double>>;

/// Labels with positive membership, strongest first (ties by label).
/// Throws std::invalid_argument if the coord's model differs from the space's.
Classification classify(const FuzzyColorSpace& space, const ColorCoord& c);

struct PartitionReport {
  double max_deviation = 0.0;
  double worst_hue = 0.0;
  double worst_saturation = 0.0;
  double worst_third = 0.0;
  std::size_t points = 0;
};

/// Samples the (H, S, third) box and reports the largest |sum of memberships - 1|.
/// `samples` points are taken on the hue circle and min(samples, 11) on each
/// unit axis.
PartitionReport validate_partition(const FuzzyColorSpace& space, std::size_t samples);

/// Ten hue labels with Ruspini triangles between conventional hue names.
/// Saturation and value memberships are constant 1. Illustrative only.
FuzzyColorSpace illustrative_hue_partition();

/// Six triangles with apexes every 60 degrees.
FuzzyColorSpace canonical_six_hue_partition();

// --- config text format ---------------------------------------------------------

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

FuzzyColorSpace parse_space(std::istream& in);
FuzzyColorSpace parse_space(const std::string& text);
FuzzyColorSpace load_space(const std::string& path);

/// Canonical text form; parse_space(write_space(s)) == s.
std::string write_space(const FuzzyColorSpace& space, const std::vector<std::string>& header_comments = {});

/// Header comment lines written in front of the bundled example file.
const std::vector<std::string>& illustrative_header();

}  // namespace colorlab::fuzzy
