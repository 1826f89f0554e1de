#include "expresso/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace expresso {

namespace {

struct SideStats {
  double avg = 0.0;
  double dev = 0.0;
};

SideStats side_stats(const std::vector<double>& values) {
  SideStats st;
  if (values.empty()) return st;
  for (double v : values) st.avg += v;
  st.avg /= static_cast<double>(values.size());
  for (double v : values) st.dev += std::abs(v - st.avg);
  st.dev /= static_cast<double>(values.size());
  return st;
}

}  // namespace

CompositionSummary composition_reduction(const std::vector<FeaturePoint>& points) {
  if (points.size() < 2)
    throw GeometryError("composition reduction needs at least 2 feature points");

  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = max_x;
  for (const auto& fp : points) {
    min_x = std::min(min_x, fp.position.x);
    max_x = std::max(max_x, fp.position.x);
    min_y = std::min(min_y, fp.position.y);
    max_y = std::max(max_y, fp.position.y);
  }
  const double cx = 0.5 * (min_x + max_x);
  const double cy = 0.5 * (min_y + max_y);

  std::vector<double> right, left, above, below;
  for (const auto& fp : points) {
    const double rx = fp.position.x - cx;
    const double ry = fp.position.y - cy;
    if (rx > 0.0) right.push_back(rx);
    if (rx < 0.0) left.push_back(rx);
    if (ry > 0.0) above.push_back(ry);
    if (ry < 0.0) below.push_back(ry);
  }

  const SideStats r = side_stats(right), l = side_stats(left);
  const SideStats a = side_stats(above), b = side_stats(below);
  CompositionSummary cs;
  cs.avg_right = r.avg;
  cs.avg_left = l.avg;
  cs.avg_above = a.avg;
  cs.avg_below = b.avg;
  cs.dev_right = r.dev;
  cs.dev_left = l.dev;
  cs.dev_above = a.dev;
  cs.dev_below = b.dev;
  return cs;
}

InputVector assemble_input(const Drawing& d, const ElementaryAspects& ea,
                           const CompositionSummary& cs) {
  InputVector in;
  in[0] = cs.avg_right;
  in[1] = cs.avg_left;
  in[2] = cs.avg_above;
  in[3] = cs.avg_below;
  in[4] = cs.dev_right;
  in[5] = cs.dev_left;
  in[6] = cs.dev_above;
  in[7] = cs.dev_below;
  in[8] = static_cast<double>(ea.n_points);
  in[9] = ea.largest;
  in[10] = 10.0 * ea.smallest;  // S enters the network in 0.1 mm units
  in[11] = d.annotations.ldiv;
  return in;
}

double composition_type(const Drawing& d) {
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = max_x;
  for (const auto& p : d.polylines)
    for (const auto& v : p.vertices) {
      min_x = std::min(min_x, v.x);
      max_x = std::max(max_x, v.x);
      min_y = std::min(min_y, v.y);
      max_y = std::max(max_y, v.y);
    }
  const double w = max_x - min_x;
  const double h = max_y - min_y;
  if (!(w > 0.0) || !(h > 0.0)) return 0.5;
  const double value = 0.5 + 0.3 * std::log2(w / h);
  return std::clamp(value, 0.2, 0.8);
}

TargetVector assemble_target(const ElementaryAspects& ea, const Drawing& d) {
  if (d.annotations.hand_targets) return *d.annotations.hand_targets;
  TargetVector t;
  t[0] = static_cast<double>(ea.n_ends_bends) / ea.n_points;
  t[1] = ea.pct_soft;
  t[2] = ea.pct_corner;
  t[3] = composition_type(d);
  t[4] = ea.largest > 0.0 ? ea.main_form / ea.largest : 0.0;
  return t;
}

}  // namespace expresso
