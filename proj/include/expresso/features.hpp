#ifndef EXPRESSO_FEATURES_HPP
#define EXPRESSO_FEATURES_HPP

#include <array>
#include <vector>

#include "expresso/drawing.hpp"
#include "expresso/geometry.hpp"

namespace expresso {

// The eight composition values: half-plane averages of feature-point
// coordinates relative to the bounding-box centre, and the mean absolute
// deviations about those averages. Empty half-planes contribute zeros.
struct CompositionSummary {
  double avg_right = 0.0;
  double avg_left = 0.0;
  double avg_above = 0.0;
  double avg_below = 0.0;
  double dev_right = 0.0;
  double dev_left = 0.0;
  double dev_above = 0.0;
  double dev_below = 0.0;
};

// The twelve perceptron inputs: composition summary, then #p, L in mm,
// S in 0.1 mm units, and the line diversity.
struct InputVector {
  std::array<double, 12> v{};

  double& operator[](std::size_t i) { return v[i]; }
  double operator[](std::size_t i) const { return v[i]; }
};

CompositionSummary composition_reduction(const std::vector<FeaturePoint>& points);

InputVector assemble_input(const Drawing& d, const ElementaryAspects& ea,
                           const CompositionSummary& cs);

// Portrait-to-landscape score in [0.2, 0.8]: 0.5 + 0.3 * log2(width/height)
// of the drawing's bounding box, clamped. A degenerate box is neutral (0.5).
double composition_type(const Drawing& d);

// The five targets: ends-bends ratio #e/#p, %s, %c, composition type, M/L.
// Hand-measured targets carried by the drawing override computed values.
TargetVector assemble_target(const ElementaryAspects& ea, const Drawing& d);

}  // namespace expresso

#endif
