#pragma once

#include "colorlab/types.hpp"

namespace colorlab {

struct Lab {
  double l = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// Extracts L*, a*, b* from a LAB coord; throws std::invalid_argument otherwise.
Lab lab_from_coord(const ColorCoord& c);

/// Which published constant set CIE94 uses for its S_C / S_H slopes.
enum class Cie94Application { GraphicArts, Textiles };

struct DeltaEParams {
  double k_l = 1.0;
  double k_c = 1.0;
  double k_h = 1.0;
  Cie94Application application = Cie94Application::GraphicArts;

  /// Throws std::invalid_argument unless every weight is strictly positive.
  void validate() const;
};

/// CIE 1976: Euclidean distance in L*a*b*.
double delta_e_76(const Lab& first, const Lab& second);

/// CIE 1994. Chroma weighting uses the first argument, so the result is not
/// symmetric in its arguments.
double delta_e_94(const Lab& first, const Lab& second, const DeltaEParams& params = {});

/// CIEDE2000.
double delta_e_2000(const Lab& first, const Lab& second, const DeltaEParams& params = {});

}  // namespace colorlab
