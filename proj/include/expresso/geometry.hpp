#ifndef EXPRESSO_GEOMETRY_HPP
#define EXPRESSO_GEOMETRY_HPP

#include <stdexcept>
#include <vector>

#include "expresso/drawing.hpp"

namespace expresso {

struct GeometryConfig {
  double resample_step_mm = 1.0;
  double theta_soft_deg = 5.0;
  double theta_corner_deg = 40.0;

  void validate() const;
};

enum class FeatureKind { End, SoftBend, CornerBend, Intersection };

struct FeaturePoint {
  Point position;
  FeatureKind kind = FeatureKind::End;
  int polyline_index = -1;  // owning polyline for ends/bends, -1 for intersections
  int intersect_a = -1;     // the two crossing polylines, intersections only
  int intersect_b = -1;
};

// The directly countable and measurable quantities of a drawing.
struct ElementaryAspects {
  int n_points = 0;       // #p: ends + bends + intersections
  int n_ends_bends = 0;   // #e: ends + bends
  double pct_soft = 0.0;  // %s in [0,1]
  double pct_corner = 0.0;
  double largest = 0.0;    // L, mm: max pairwise feature distance
  double smallest = 0.0;   // S, mm: min pairwise feature distance, pairs
                           // closer than the resample step excluded
  double main_form = 0.0;  // M, mm: diameter of the largest connected component
  double lseg = 0.0;       // sqrt(S * L)
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inserts vertices so no span exceeds `step` in arc length; every original
// vertex is kept (so corner locations and the total arc length are exact) and
// each original span is subdivided into equal pieces.
Polyline resample(const Polyline& p, double step);

// Classifies ends and bends of a resampled polyline.
//
// Interior vertices turning by at least theta_corner are corner bends, one
// per vertex. Gentler turning is grouped: a maximal same-direction run of
// turning vertices (interruptions of nearly straight vertices are tolerated
// up to twice the resample step) counts as one soft bend when the run's
// accumulated turning reaches theta_soft, placed at the run's arc-length
// midpoint. A closed polyline has no ends and is scanned cyclically.
std::vector<FeaturePoint> classify_vertices(const Polyline& p,
                                            const GeometryConfig& cfg,
                                            int polyline_index = 0);

// Transversal crossings between non-adjacent segments, inter- and
// intra-polyline, deduplicated within 1e-6 mm. Shared endpoints of
// consecutive segments and endpoint touches are not intersections.
std::vector<FeaturePoint> find_intersections_bruteforce(const Drawing& d);
std::vector<FeaturePoint> find_intersections_sweep(const Drawing& d);

// All feature points of the drawing: per-polyline ends/bends (after
// resampling at cfg.resample_step_mm) plus sweep-line intersections.
std::vector<FeaturePoint> feature_points(const Drawing& d, const GeometryConfig& cfg);

// Measures every elementary aspect. Throws GeometryError for degenerate
// drawings (fewer than two feature points, or no pair surviving the
// smallest-distance exclusion).
ElementaryAspects elementary_aspects(const Drawing& d, const GeometryConfig& cfg);

// Groups polyline indices into connected components; polylines sharing an
// intersection or touching endpoints within 1e-6 mm are joined.
std::vector<std::vector<int>> connected_components(
    const Drawing& d, const std::vector<FeaturePoint>& intersections);

}  // namespace expresso

#endif
