#include "expresso/synth.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "expresso/expressiveness.hpp"
#include "expresso/numfmt.hpp"
#include "expresso/rng.hpp"

namespace expresso {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kStep = 1.0;  // default geometry resample step; arcs are sampled at it

double lerp(double a, double b, double t) { return a + (b - a) * t; }
double rad(double degrees) { return degrees * kPi / 180.0; }

struct Box {
  double x0, y0, x1, y1;
  double w() const { return x1 - x0; }
  double h() const { return y1 - y0; }
};

// Translates pts so their bounding box lands at a seeded position inside the
// box, shrinking uniformly first when the shape does not fit.
void place_into(std::vector<Point>& pts, const Box& box, Rng& rng) {
  double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const auto& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double bw = max_x - min_x, bh = max_y - min_y;
  double scale = 1.0;
  if (bw > 0.92 * box.w()) scale = std::min(scale, 0.92 * box.w() / bw);
  if (bh > 0.92 * box.h()) scale = std::min(scale, 0.92 * box.h() / bh);
  const double cx = 0.5 * (min_x + max_x), cy = 0.5 * (min_y + max_y);
  const double sw = bw * scale, sh = bh * scale;
  const double tx = rng.uniform(box.x0 + 0.5 * sw, box.x1 - 0.5 * sw);
  const double ty = rng.uniform(box.y0 + 0.5 * sh, box.y1 - 0.5 * sh);
  for (auto& p : pts) {
    p.x = tx + (p.x - cx) * scale;
    p.y = ty + (p.y - cy) * scale;
  }
}

Polyline make_straight(Rng& rng, const Box& box, double len) {
  const double theta = rng.uniform(0.0, kPi);
  std::vector<Point> pts{{0.0, 0.0}, {len * std::cos(theta), len * std::sin(theta)}};
  place_into(pts, box, rng);
  return Polyline{pts};
}

Polyline make_zigzag(Rng& rng, const Box& box, double arm, int kinks) {
  std::vector<Point> pts;
  double heading = rng.uniform(0.0, 2.0 * kPi);
  double x = 0.0, y = 0.0;
  pts.push_back(Point{x, y});
  double sign = rng.chance(0.5) ? 1.0 : -1.0;
  for (int k = 0; k < kinks; ++k) {
    x += arm * std::cos(heading);
    y += arm * std::sin(heading);
    pts.push_back(Point{x, y});
    heading += sign * rad(rng.uniform(60.0, 110.0));
    sign = -sign;
  }
  x += arm * std::cos(heading);
  y += arm * std::sin(heading);
  pts.push_back(Point{x, y});
  place_into(pts, box, rng);
  return Polyline{pts};
}

Polyline make_arc(Rng& rng, const Box& box, double radius, double span_deg) {
  const double r = std::max(2.0, std::min(radius, 0.4 * std::min(box.w(), box.h())));
  const double span = rad(span_deg) * (rng.chance(0.5) ? 1.0 : -1.0);
  const double start = rng.uniform(0.0, 2.0 * kPi);
  const int n = std::max(3, static_cast<int>(std::ceil(r * std::abs(span) / kStep)));
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double phi = start + span * k / n;
    pts.push_back(Point{r * std::cos(phi), r * std::sin(phi)});
  }
  place_into(pts, box, rng);
  return Polyline{pts};
}

Polyline make_circle(Rng& rng, const Box& box, double radius) {
  const double r = std::max(2.0, std::min(radius, 0.4 * std::min(box.w(), box.h())));
  const double start = rng.uniform(0.0, 2.0 * kPi);
  const int n = std::max(8, static_cast<int>(std::ceil(2.0 * kPi * r / kStep)));
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < n; ++k) {
    const double phi = start + 2.0 * kPi * k / n;
    pts.push_back(Point{r * std::cos(phi), r * std::sin(phi)});
  }
  pts.push_back(pts.front());
  place_into(pts, box, rng);
  return Polyline{pts};
}

// Two strokes through a common interior point; exactly one transversal
// crossing by construction.
std::pair<Polyline, Polyline> make_xpair(Rng& rng, const Box& box, double len) {
  const double theta1 = rng.uniform(0.0, kPi);
  const double theta2 = theta1 + rad(rng.uniform(35.0, 145.0));
  const double reach = 0.42 * std::min(box.w(), box.h());
  const double half = std::min(0.5 * len, reach);
  const double cx = rng.uniform(box.x0 + reach, box.x1 - reach);
  const double cy = rng.uniform(box.y0 + reach, box.y1 - reach);
  auto stroke = [&](double theta) {
    const double t = rng.uniform(0.35, 0.65);
    const Point a{cx - 2.0 * half * t * std::cos(theta), cy - 2.0 * half * t * std::sin(theta)};
    const Point b{cx + 2.0 * half * (1.0 - t) * std::cos(theta),
                  cy + 2.0 * half * (1.0 - t) * std::sin(theta)};
    return Polyline{{a, b}};
  };
  return {stroke(theta1), stroke(theta2)};
}

void check_range(const Range& r, const char* name, double min_lo) {
  if (!(r.lo <= r.hi) || !(r.lo >= min_lo))
    throw std::invalid_argument(std::string("invalid range for ") + name);
}

}  // namespace

void GenSpec::validate() const {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  if (polyline_count.lo < 1 || polyline_count.lo > polyline_count.hi)
    throw std::invalid_argument("invalid polyline count range");
  check_range(segment_length_mm, "segment length", 2.0);
  check_range(corner_mix, "corner mix", 0.0);
  check_range(soft_mix, "soft mix", 0.0);
  if (corner_mix.hi + soft_mix.hi > 1.0 + 1e-9)
    throw std::invalid_argument("corner and soft mix fractions exceed 1");
  check_range(canvas_aspect, "canvas aspect", 0.1);
  check_range(ldiv_range, "ldiv", 1e-9);
  check_range(intersection_density, "intersection density", 0.0);
  if (intersection_density.lo >= 0.5 && polyline_count.hi < 2)
    throw std::invalid_argument(
        "infeasible spec: intersections forced but polyline budget below 2");
}

Corpus generate(const GenSpec& spec) {
  spec.validate();
  Corpus corpus;
  Rng rng(spec.seed);

  for (int idx = 0; idx < spec.count; ++idx) {
    const double u = spec.trend_mode
                         ? (spec.count > 1 ? static_cast<double>(idx) / (spec.count - 1) : 0.5)
                         : rng.next_double();
    const double detail = spec.trend_mode ? lerp(1.0, 0.4, u) : 1.0;
    const double canvas_h = spec.trend_mode ? lerp(55.0, 170.0, u) * rng.uniform(0.96, 1.04)
                                            : rng.uniform(55.0, 120.0);
    const double aspect = rng.uniform(spec.canvas_aspect.lo, spec.canvas_aspect.hi);
    const double canvas_w = canvas_h * aspect;

    int n_total = spec.trend_mode
                      ? spec.polyline_count.lo +
                            static_cast<int>(std::lround(
                                u * (spec.polyline_count.hi - spec.polyline_count.lo)))
                      : rng.uniform_int(spec.polyline_count.lo, spec.polyline_count.hi);
    int nx = static_cast<int>(std::lround(
        rng.uniform(spec.intersection_density.lo, spec.intersection_density.hi) *
        (spec.trend_mode ? 0.5 + u : 1.0)));
    nx = std::min(nx, n_total / 2);
    const int n_rest = n_total - 2 * nx;

    const double fc = rng.uniform(spec.corner_mix.lo, spec.corner_mix.hi);
    const double fs = rng.uniform(spec.soft_mix.lo, spec.soft_mix.hi);
    int n_zig = static_cast<int>(std::lround(fc * n_rest));
    int n_arc = static_cast<int>(std::lround(fs * n_rest));
    n_zig = std::min(n_zig, n_rest);
    n_arc = std::min(n_arc, n_rest - n_zig);
    const int n_straight = n_rest - n_zig - n_arc;
    const bool s_stroke = spec.trend_mode;

    enum class Prim { straight, zigzag, arc, xpair, small_stroke };
    std::vector<Prim> prims;
    for (int i = 0; i < n_zig; ++i) prims.push_back(Prim::zigzag);
    for (int i = 0; i < n_arc; ++i) prims.push_back(Prim::arc);
    for (int i = 0; i < n_straight; ++i) prims.push_back(Prim::straight);
    for (int i = 0; i < nx; ++i) prims.push_back(Prim::xpair);
    if (s_stroke) prims.push_back(Prim::small_stroke);
    for (std::size_t i = prims.size(); i > 1; --i)
      std::swap(prims[i - 1], prims[static_cast<std::size_t>(
                                  rng.uniform_int(0, static_cast<int>(i) - 1))]);

    const int g = std::max(1, static_cast<int>(
                                  std::ceil(std::sqrt(static_cast<double>(prims.size())))));
    std::vector<int> cells(static_cast<std::size_t>(g) * static_cast<std::size_t>(g));
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<int>(i);
    for (std::size_t i = cells.size(); i > 1; --i)
      std::swap(cells[i - 1], cells[static_cast<std::size_t>(
                                  rng.uniform_int(0, static_cast<int>(i) - 1))]);

    const double cw = canvas_w / g, ch = canvas_h / g;
    const double margin = 0.1 * std::min(cw, ch);
    auto cell_box = [&](int cell) {
      const int cxi = cell % g, cyi = cell / g;
      return Box{cxi * cw + margin, cyi * ch + margin, (cxi + 1) * cw - margin,
                 (cyi + 1) * ch - margin};
    };

    Drawing d;
    DrawingTruth truth;
    bool used_straight = false, used_zig = false, used_soft = false;

    for (std::size_t pi = 0; pi < prims.size(); ++pi) {
      const Box box = cell_box(cells[pi]);
      const double seg = rng.uniform(spec.segment_length_mm.lo, spec.segment_length_mm.hi);
      switch (prims[pi]) {
        case Prim::straight: {
          const double len =
              std::clamp(seg * detail, 2.0, 0.85 * std::min(box.w(), box.h()));
          d.polylines.push_back(make_straight(rng, box, len));
          used_straight = true;
          break;
        }
        case Prim::small_stroke: {
          const double len = std::max(1.35, lerp(9.0, 1.5, u) * rng.uniform(0.92, 1.08));
          d.polylines.push_back(make_straight(rng, box, len));
          used_straight = true;
          break;
        }
        case Prim::zigzag: {
          const int kinks = rng.uniform_int(1, 4);
          const double arm =
              std::clamp(seg * 0.45 * detail, 1.6, 0.33 * std::min(box.w(), box.h()));
          d.polylines.push_back(make_zigzag(rng, box, arm, kinks));
          truth.corners += kinks;
          used_zig = true;
          break;
        }
        case Prim::arc: {
          const double radius = std::max(2.0, seg * 0.5 * detail);
          if (n_total >= 2 && rng.chance(0.25)) {
            d.polylines.push_back(make_circle(rng, box, radius * 0.8));
          } else {
            d.polylines.push_back(make_arc(rng, box, radius, rng.uniform(50.0, 160.0)));
          }
          truth.softs += 1;
          used_soft = true;
          break;
        }
        case Prim::xpair: {
          const double len =
              std::clamp(seg * detail, 4.0, 0.8 * std::min(box.w(), box.h()));
          auto [s1, s2] = make_xpair(rng, box, len);
          d.polylines.push_back(std::move(s1));
          d.polylines.push_back(std::move(s2));
          truth.crossings += 1;
          used_straight = true;
          break;
        }
      }
    }

    const int types_used = (used_straight ? 1 : 0) + (used_zig ? 1 : 0) + (used_soft ? 1 : 0);
    double raw = 0.7 * (types_used - 1) / 2.0 + 0.3 * rng.next_double();
    if (spec.trend_mode) raw = 0.45 * raw + 0.55 * u;
    d.annotations.ldiv = spec.ldiv_range.lo + (spec.ldiv_range.hi - spec.ldiv_range.lo) * raw;
    if (!(d.annotations.ldiv > 0.0)) d.annotations.ldiv = spec.ldiv_range.lo;
    d.annotations.content = static_cast<Content>(rng.uniform_int(0, 2));

    char idbuf[16];
    std::snprintf(idbuf, sizeof idbuf, "d%04d", idx + 1);
    d.id = idbuf;
    validate_drawing(d);

    truth.id = d.id;
    truth.polylines = static_cast<int>(d.polylines.size());
    truth.ldiv = d.annotations.ldiv;
    truth.canvas_w = canvas_w;
    truth.canvas_h = canvas_h;
    corpus.drawings.push_back(std::move(d));
    corpus.truth.push_back(std::move(truth));
  }
  return corpus;
}

InjectionIds extreme_injection(Corpus& corpus, int k, const GeometryConfig& cfg) {
  if (k < 1) throw std::invalid_argument("extreme injection needs k >= 1");
  if (corpus.drawings.size() < 10)
    throw std::invalid_argument("base corpus too small for extreme injection (< 10)");

  double max_a = 0.0, max_b = 0.0, max_ldiv = 0.0;
  int max_e = 0;
  std::vector<double> ldivs;
  for (const auto& d : corpus.drawings) {
    const ElementaryAspects ea = elementary_aspects(d, cfg);
    const AspectValues av = aspects_from_elementary(ea, d.annotations.ldiv);
    max_a = std::max(max_a, av.a);
    max_b = std::max(max_b, av.b);
    max_e = std::max(max_e, ea.n_ends_bends);
    max_ldiv = std::max(max_ldiv, d.annotations.ldiv);
    ldivs.push_back(d.annotations.ldiv);
  }
  std::sort(ldivs.begin(), ldivs.end());
  const double med_ldiv = ldivs[ldivs.size() / 2];

  Rng rng(0x5eedba5eULL + 1315423911ULL * corpus.drawings.size() + static_cast<std::uint64_t>(k));
  InjectionIds ids;

  // High-(a) extremes: a single short stroke has S = L = lseg = its length,
  // so a = ldiv / length; pick the length directly from the target value.
  const double min_len = 1.3 * cfg.resample_step_mm + 0.05;
  for (int j = 0; j < k; ++j) {
    const double want = 1.6 * max_a * (1.0 + 0.07 * j);
    const double len = std::max(min_len, std::min(8.0, max_ldiv / want));
    Drawing d;
    char idbuf[16];
    std::snprintf(idbuf, sizeof idbuf, "xa%02d", j + 1);
    d.id = idbuf;
    d.annotations.ldiv = max_ldiv;
    d.annotations.content = Content::setup;
    const double theta = rng.uniform(0.0, kPi);
    const Point origin{rng.uniform(3.0, 12.0), rng.uniform(3.0, 12.0)};
    d.polylines.push_back(Polyline{
        {origin, Point{origin.x + len * std::cos(theta), origin.y + len * std::sin(theta)}}});
    validate_drawing(d);
    const ElementaryAspects ea = elementary_aspects(d, cfg);
    const AspectValues av = aspects_from_elementary(ea, d.annotations.ldiv);
    if (!(av.a > 1.2 * max_a))
      throw GeometryError("cannot inject aspect-a extreme beyond the base corpus");
    corpus.drawings.push_back(std::move(d));
    corpus.truth.push_back(DrawingTruth{idbuf, 1, 0, 0, 0, max_ldiv, len, len, "a"});
    ids.aspect_a.push_back(idbuf);
  }

  // High-(b) extremes: a long staircase zigzag; #e grows with the kink count
  // and lseg grows with the diagonal, so b can be raised past any base value.
  for (int j = 0; j < k; ++j) {
    int kinks = std::max(12, 2 * max_e + 4 * j);
    for (int attempt = 0; attempt < 24; ++attempt) {
      Drawing d;
      char idbuf[16];
      std::snprintf(idbuf, sizeof idbuf, "xb%02d", j + 1);
      d.id = idbuf;
      d.annotations.ldiv = med_ldiv;
      d.annotations.content = Content::setup;
      std::vector<Point> pts;
      double x = 0.0, y = 0.0, heading = rad(20.0);
      const double arm = 4.0;
      pts.push_back(Point{x, y});
      double sign = 1.0;
      for (int m = 0; m < kinks; ++m) {
        x += arm * std::cos(heading);
        y += arm * std::sin(heading);
        pts.push_back(Point{x, y});
        heading += sign * rad(88.0 + (m % 5));
        sign = -sign;
      }
      x += arm * std::cos(heading);
      y += arm * std::sin(heading);
      pts.push_back(Point{x, y});
      d.polylines.push_back(Polyline{pts});
      validate_drawing(d);
      const ElementaryAspects ea = elementary_aspects(d, cfg);
      const AspectValues av = aspects_from_elementary(ea, d.annotations.ldiv);
      if (av.b > 1.5 * max_b && ea.n_ends_bends > max_e && av.a <= max_a) {
        corpus.drawings.push_back(std::move(d));
        corpus.truth.push_back(
            DrawingTruth{idbuf, 1, kinks, 0, 0, med_ldiv, 0.0, 0.0, "b"});
        ids.aspect_b.push_back(idbuf);
        break;
      }
      if (attempt == 23)
        throw GeometryError("cannot inject aspect-b extreme beyond the base corpus");
      kinks = kinks * 3 / 2;
    }
  }
  return ids;
}

std::string manifest_csv(const Corpus& corpus) {
  std::ostringstream out;
  out << "id,polylines,corners,softs,intersections,ldiv,canvas_w,canvas_h,injected\n";
  for (const auto& t : corpus.truth) {
    out << t.id << ',' << t.polylines << ',' << t.corners << ',' << t.softs << ','
        << t.crossings << ',' << format_real(t.ldiv, 9) << ',' << format_real(t.canvas_w, 9)
        << ',' << format_real(t.canvas_h, 9) << ',' << t.injected << "\n";
  }
  return out.str();
}

void write_corpus(const Corpus& corpus, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& d : corpus.drawings)
    save_drawing_file(d, (std::filesystem::path(dir) / (d.id + ".drw")).string());
  std::ofstream out(std::filesystem::path(dir) / "manifest.csv", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write manifest in " + dir);
  out << manifest_csv(corpus);
}

}  // namespace expresso
