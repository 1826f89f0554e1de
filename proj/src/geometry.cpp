#include "expresso/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace expresso {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTouchTol = 1e-6;      // mm, endpoint sharing and dedup
constexpr double kStraightDeg = 1e-3;   // below this a vertex counts as straight
constexpr double kSpanEps = 1e-9;       // guards ceil() against fp wobble

double deg(double rad) { return rad * 180.0 / kPi; }

// Signed turning angle at vertex i, degrees in (-180, 180].
double turning_deg(const Point& prev, const Point& at, const Point& next) {
  const double ux = at.x - prev.x, uy = at.y - prev.y;
  const double wx = next.x - at.x, wy = next.y - at.y;
  return deg(std::atan2(ux * wy - uy * wx, ux * wx + uy * wy));
}

Point point_at_arc(const std::vector<Point>& v, const std::vector<double>& s, double target) {
  if (target <= 0.0) return v.front();
  if (target >= s.back()) return v.back();
  const auto it = std::upper_bound(s.begin(), s.end(), target);
  const std::size_t i = static_cast<std::size_t>(it - s.begin());
  const double span = s[i] - s[i - 1];
  const double t = span > 0.0 ? (target - s[i - 1]) / span : 0.0;
  return Point{v[i - 1].x + t * (v[i].x - v[i - 1].x),
               v[i - 1].y + t * (v[i].y - v[i - 1].y)};
}

struct Segment {
  Point a, b;
  int polyline;
  int index;  // segment position within its polyline
};

std::vector<Segment> collect_segments(const Drawing& d) {
  std::vector<Segment> segs;
  for (std::size_t p = 0; p < d.polylines.size(); ++p) {
    const auto& v = d.polylines[p].vertices;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      segs.push_back(Segment{v[i], v[i + 1], static_cast<int>(p), static_cast<int>(i)});
  }
  return segs;
}

// Segments of one polyline sharing a vertex are adjacent; for a closed
// polyline the first and last segments are adjacent too.
bool adjacent(const Segment& s, const Segment& t, const Drawing& d) {
  if (s.polyline != t.polyline) return false;
  if (std::abs(s.index - t.index) <= 1) return true;
  const auto& poly = d.polylines[static_cast<std::size_t>(s.polyline)];
  if (poly.closed()) {
    const int last = static_cast<int>(poly.vertices.size()) - 2;
    const int lo = std::min(s.index, t.index), hi = std::max(s.index, t.index);
    if (lo == 0 && hi == last) return true;
  }
  return false;
}

double orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Transversal crossing strictly interior to both segments.
bool segment_crossing(const Segment& s, const Segment& t, Point& out) {
  const double d1 = orient(t.a, t.b, s.a);
  const double d2 = orient(t.a, t.b, s.b);
  const double d3 = orient(s.a, s.b, t.a);
  const double d4 = orient(s.a, s.b, t.b);
  if (d1 == 0.0 || d2 == 0.0 || d3 == 0.0 || d4 == 0.0) return false;
  if ((d1 > 0.0) == (d2 > 0.0) || (d3 > 0.0) == (d4 > 0.0)) return false;
  const double u = d1 / (d1 - d2);
  out.x = s.a.x + u * (s.b.x - s.a.x);
  out.y = s.a.y + u * (s.b.y - s.a.y);
  return true;
}

struct RawCross {
  Point at;
  int pa, pb;
};

std::vector<FeaturePoint> dedup_crossings(std::vector<RawCross> raw) {
  std::sort(raw.begin(), raw.end(), [](const RawCross& l, const RawCross& r) {
    if (l.at.x != r.at.x) return l.at.x < r.at.x;
    if (l.at.y != r.at.y) return l.at.y < r.at.y;
    if (l.pa != r.pa) return l.pa < r.pa;
    return l.pb < r.pb;
  });
  std::vector<FeaturePoint> out;
  for (const auto& c : raw) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (c.at.x - it->position.x > kTouchTol) break;
      if (distance(c.at, it->position) <= kTouchTol) {
        dup = true;
        break;
      }
    }
    if (!dup)
      out.push_back(FeaturePoint{c.at, FeatureKind::Intersection, -1, c.pa, c.pb});
  }
  return out;
}

}  // namespace

void GeometryConfig::validate() const {
  if (!(resample_step_mm > 0.0)) throw GeometryError("resample step must be > 0");
  if (!(theta_soft_deg > 0.0 && theta_soft_deg < theta_corner_deg && theta_corner_deg < 180.0))
    throw GeometryError("need 0 < theta_soft < theta_corner < 180");
}

Polyline resample(const Polyline& p, double step) {
  if (!(step > 0.0)) throw GeometryError("resample step must be > 0");
  Polyline out;
  out.vertices.push_back(p.vertices.front());
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    const Point& a = p.vertices[i - 1];
    const Point& b = p.vertices[i];
    const double span = distance(a, b);
    const int pieces = std::max(1, static_cast<int>(std::ceil(span / step - kSpanEps)));
    for (int k = 1; k < pieces; ++k) {
      const double t = static_cast<double>(k) / pieces;
      out.vertices.push_back(Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
    out.vertices.push_back(b);
  }
  return out;
}

std::vector<FeaturePoint> classify_vertices(const Polyline& p, const GeometryConfig& cfg,
                                            int polyline_index) {
  cfg.validate();
  const auto& v = p.vertices;
  const std::size_t n = v.size();
  std::vector<double> s(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) s[i] = s[i - 1] + distance(v[i - 1], v[i]);

  const bool closed = p.closed();
  std::vector<FeaturePoint> out;
  if (!closed) {
    out.push_back(FeaturePoint{v.front(), FeatureKind::End, polyline_index});
    out.push_back(FeaturePoint{v.back(), FeatureKind::End, polyline_index});
  }

  // Turning vertices in scan order: (arc position, signed angle).
  struct Turn {
    double s;
    double theta;  // signed degrees
  };
  std::vector<Turn> turns;
  if (!closed) {
    turns.reserve(n);
    for (std::size_t i = 1; i + 1 < n; ++i)
      turns.push_back(Turn{s[i], turning_deg(v[i - 1], v[i], v[i + 1])});
  } else {
    // m distinct vertices; scanning is rotated to start at a run boundary
    // (a straight or corner vertex, else a turn-direction change) so runs
    // may wrap the junction.
    const std::size_t m = n - 1;
    std::vector<Turn> cyc(m);
    for (std::size_t i = 0; i < m; ++i) {
      const Point& prev = v[(i + m - 1) % m];
      const Point& next = v[(i + 1) % m];
      cyc[i] = Turn{s[i], turning_deg(prev, v[i], next)};
    }
    std::size_t anchor = 0;
    bool found = false;
    for (std::size_t i = 0; i < m && !found; ++i)
      if (std::abs(cyc[i].theta) < kStraightDeg || std::abs(cyc[i].theta) >= cfg.theta_corner_deg) {
        anchor = i;
        found = true;
      }
    for (std::size_t i = 1; i < m && !found; ++i)
      if ((cyc[i].theta > 0.0) != (cyc[i - 1].theta > 0.0)) {
        anchor = i;
        found = true;
      }
    const double perimeter = s.back();
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t i = (anchor + k) % m;
      const double pos = cyc[i].s + (i < anchor ? perimeter : 0.0);
      turns.push_back(Turn{pos, cyc[i].theta});
    }
  }

  const double gap_max = 2.0 * cfg.resample_step_mm;
  bool run_active = false;
  bool run_positive = false;
  double run_total = 0.0, run_first = 0.0, run_last = 0.0;

  const double perimeter = s.back();
  auto emit_at = [&](double pos) {
    double target = pos;
    if (closed && target > perimeter) target -= perimeter;
    return point_at_arc(v, s, target);
  };
  auto close_run = [&]() {
    if (run_active && run_total >= cfg.theta_soft_deg - 1e-12)
      out.push_back(FeaturePoint{emit_at(0.5 * (run_first + run_last)),
                                 FeatureKind::SoftBend, polyline_index});
    run_active = false;
    run_total = 0.0;
  };

  for (const Turn& t : turns) {
    const double mag = std::abs(t.theta);
    if (mag >= cfg.theta_corner_deg) {
      close_run();
      out.push_back(FeaturePoint{emit_at(t.s), FeatureKind::CornerBend, polyline_index});
      continue;
    }
    if (mag < kStraightDeg) {
      if (run_active && t.s - run_last > gap_max) close_run();
      continue;
    }
    const bool positive = t.theta > 0.0;
    if (run_active && (positive != run_positive || t.s - run_last > gap_max)) close_run();
    if (!run_active) {
      run_active = true;
      run_positive = positive;
      run_first = t.s;
    }
    run_total += mag;
    run_last = t.s;
  }
  close_run();
  return out;
}

std::vector<FeaturePoint> find_intersections_bruteforce(const Drawing& d) {
  const auto segs = collect_segments(d);
  std::vector<RawCross> raw;
  Point hit;
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (adjacent(segs[i], segs[j], d)) continue;
      if (segment_crossing(segs[i], segs[j], hit))
        raw.push_back(RawCross{hit, segs[i].polyline, segs[j].polyline});
    }
  return dedup_crossings(std::move(raw));
}

std::vector<FeaturePoint> find_intersections_sweep(const Drawing& d) {
  auto segs = collect_segments(d);
  struct Box {
    double min_x, max_x, min_y, max_y;
    std::size_t seg;
  };
  std::vector<Box> boxes(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    boxes[i] = Box{std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x),
                   std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y), i};
  }
  std::sort(boxes.begin(), boxes.end(),
            [](const Box& l, const Box& r) { return l.min_x < r.min_x; });

  // Sweep over x; the active structure is ordered by min_y so each query
  // scans only candidates with min_y <= cur.max_y. Segments whose x-extent
  // ended are dropped lazily during the scan.
  std::multimap<double, Box> active;
  std::vector<RawCross> raw;
  Point hit;
  for (const Box& cur : boxes) {
    auto it = active.begin();
    const auto stop = active.upper_bound(cur.max_y);
    while (it != stop) {
      const Box& cand = it->second;
      if (cand.max_x < cur.min_x) {
        it = active.erase(it);
        continue;
      }
      if (cand.max_y >= cur.min_y) {
        const Segment& a = segs[cand.seg];
        const Segment& b = segs[cur.seg];
        if (!adjacent(a, b, d) && segment_crossing(a, b, hit)) {
          const bool ordered = cand.seg < cur.seg;
          raw.push_back(RawCross{hit, ordered ? a.polyline : b.polyline,
                                 ordered ? b.polyline : a.polyline});
        }
      }
      ++it;
    }
    active.emplace(cur.min_y, cur);
  }
  return dedup_crossings(std::move(raw));
}

std::vector<FeaturePoint> feature_points(const Drawing& d, const GeometryConfig& cfg) {
  cfg.validate();
  validate_drawing(d);
  std::vector<FeaturePoint> out;
  for (std::size_t i = 0; i < d.polylines.size(); ++i) {
    const Polyline r = resample(d.polylines[i], cfg.resample_step_mm);
    auto fps = classify_vertices(r, cfg, static_cast<int>(i));
    out.insert(out.end(), fps.begin(), fps.end());
  }
  auto crossings = find_intersections_sweep(d);
  out.insert(out.end(), crossings.begin(), crossings.end());
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> connected_components(
    const Drawing& d, const std::vector<FeaturePoint>& intersections) {
  const int n = static_cast<int>(d.polylines.size());
  UnionFind uf(static_cast<std::size_t>(n));
  for (const auto& fp : intersections)
    if (fp.kind == FeatureKind::Intersection) uf.unite(fp.intersect_a, fp.intersect_b);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& vi = d.polylines[static_cast<std::size_t>(i)].vertices;
      const auto& vj = d.polylines[static_cast<std::size_t>(j)].vertices;
      const Point ei[2] = {vi.front(), vi.back()};
      const Point ej[2] = {vj.front(), vj.back()};
      bool touch = false;
      for (const auto& a : ei)
        for (const auto& b : ej)
          if (distance(a, b) <= kTouchTol) touch = true;
      if (touch) uf.unite(i, j);
    }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

ElementaryAspects elementary_aspects(const Drawing& d, const GeometryConfig& cfg) {
  const auto fps = feature_points(d, cfg);
  if (fps.size() < 2) throw GeometryError("degenerate drawing: fewer than 2 feature points");

  ElementaryAspects ea;
  int ends = 0, softs = 0, corners = 0, crossings = 0;
  for (const auto& fp : fps) {
    switch (fp.kind) {
      case FeatureKind::End: ++ends; break;
      case FeatureKind::SoftBend: ++softs; break;
      case FeatureKind::CornerBend: ++corners; break;
      case FeatureKind::Intersection: ++crossings; break;
    }
  }
  ea.n_points = static_cast<int>(fps.size());
  ea.n_ends_bends = ends + softs + corners;
  if (ea.n_ends_bends > 0) {
    ea.pct_soft = static_cast<double>(softs) / ea.n_ends_bends;
    ea.pct_corner = static_cast<double>(corners) / ea.n_ends_bends;
  }

  double largest = 0.0;
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < fps.size(); ++i)
    for (std::size_t j = i + 1; j < fps.size(); ++j) {
      const double dist = distance(fps[i].position, fps[j].position);
      largest = std::max(largest, dist);
      if (dist >= cfg.resample_step_mm) smallest = std::min(smallest, dist);
    }
  if (!std::isfinite(smallest) || smallest <= 0.0)
    throw GeometryError("degenerate drawing: no feature pair at or beyond the resample step");
  ea.largest = largest;
  ea.smallest = smallest;
  ea.lseg = std::sqrt(ea.smallest * ea.largest);

  // Main form: diameter of the component with the greatest total arc length.
  auto crossings_only = std::vector<FeaturePoint>();
  for (const auto& fp : fps)
    if (fp.kind == FeatureKind::Intersection) crossings_only.push_back(fp);
  const auto comps = connected_components(d, crossings_only);
  double best_len = -1.0;
  std::size_t best = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    double len = 0.0;
    for (int pi : comps[c]) len += d.polylines[static_cast<std::size_t>(pi)].arc_length();
    if (len > best_len + 1e-12) {  // ties keep the first component
      best_len = len;
      best = c;
    }
  }
  std::vector<char> in_best(d.polylines.size(), 0);
  for (int pi : comps[best]) in_best[static_cast<std::size_t>(pi)] = 1;
  std::vector<const FeaturePoint*> member;
  for (const auto& fp : fps) {
    const int owner = fp.kind == FeatureKind::Intersection ? fp.intersect_a : fp.polyline_index;
    if (in_best[static_cast<std::size_t>(owner)]) member.push_back(&fp);
  }
  double diam = 0.0;
  for (std::size_t i = 0; i < member.size(); ++i)
    for (std::size_t j = i + 1; j < member.size(); ++j)
      diam = std::max(diam, distance(member[i]->position, member[j]->position));
  ea.main_form = diam;
  return ea;
}

}  // namespace expresso
