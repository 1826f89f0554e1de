#include "expresso/expressiveness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace expresso {

const char* aspect_name(AspectId id) {
  switch (id) {
    case AspectId::a: return "a";
    case AspectId::b: return "b";
    case AspectId::c: return "c";
  }
  return "a";
}

AspectId aspect_from_name(const std::string& name) {
  if (name == "a") return AspectId::a;
  if (name == "b") return AspectId::b;
  if (name == "c") return AspectId::c;
  throw std::invalid_argument("unknown aspect '" + name + "' (expected a, b or c)");
}

double aspect_value(const AspectValues& av, AspectId id) {
  switch (id) {
    case AspectId::a: return av.a;
    case AspectId::b: return av.b;
    case AspectId::c: return av.c;
  }
  return av.a;
}

double aspect_a(double ldiv, double lseg) {
  if (!(lseg > 0.0)) throw std::domain_error("aspect a: lseg must be > 0");
  if (!(ldiv > 0.0)) throw std::domain_error("aspect a: ldiv must be > 0");
  return ldiv / lseg;
}

double aspect_b(double n_ends_bends, double pct_soft, double pct_corner, double lseg) {
  if (!(lseg > 0.0)) throw std::domain_error("aspect b: lseg must be > 0");
  return n_ends_bends *
         (pct_soft * std::pow(lseg, 2.0 / 3.0) + pct_corner * std::pow(lseg, 2.0 / 5.0));
}

double aspect_c(double main_form, double ldiv, double smallest) {
  if (!(smallest > 0.0)) throw std::domain_error("aspect c: smallest distance must be > 0");
  return main_form * ldiv / smallest;
}

AspectValues aspects_from_elementary(const ElementaryAspects& ea, double ldiv) {
  AspectValues av;
  av.a = aspect_a(ldiv, ea.lseg);
  av.b = aspect_b(ea.n_ends_bends, ea.pct_soft, ea.pct_corner, ea.lseg);
  av.c = aspect_c(ea.main_form, ldiv, ea.smallest);
  return av;
}

AspectValues aspects_from_outputs(const InputVector& in, const TargetVector& out) {
  const double n_points = in[8];
  const double largest = in[9];
  const double smallest = in[10] / 10.0;  // back from 0.1 mm units
  const double ldiv = in[11];
  const double lseg = std::sqrt(smallest * largest);
  const double n_ends_bends = out[0] * n_points;
  const double main_form = out[4] * largest;
  AspectValues av;
  av.a = aspect_a(ldiv, lseg);
  av.b = aspect_b(n_ends_bends, out[1], out[2], lseg);
  av.c = aspect_c(main_form, ldiv, smallest);
  return av;
}

std::vector<ExtremeFlag> flag_extremes(const std::vector<double>& values,
                                       double low_pct, double high_pct) {
  const std::size_t n = values.size();
  if (n < 3) throw std::invalid_argument("flag_extremes needs at least 3 values");
  if (!(0.0 < low_pct && low_pct < high_pct && high_pct < 100.0))
    throw std::invalid_argument("need 0 < low_pct < high_pct < 100");

  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  const auto nd = static_cast<double>(n);
  const std::size_t rank_lo =
      static_cast<std::size_t>(std::ceil(low_pct * nd / 100.0 - 1e-9));
  const std::size_t rank_hi_from_top =
      static_cast<std::size_t>(std::ceil((100.0 - high_pct) * nd / 100.0 - 1e-9));
  const double lo_threshold = sorted[std::max<std::size_t>(rank_lo, 1) - 1];
  const double hi_threshold = sorted[n - std::max<std::size_t>(rank_hi_from_top, 1)];

  std::vector<ExtremeFlag> flags(n, ExtremeFlag::normal);
  if (!(lo_threshold < hi_threshold)) return flags;  // no spread
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] <= lo_threshold) flags[i] = ExtremeFlag::low;
    else if (values[i] >= hi_threshold) flags[i] = ExtremeFlag::high;
  }
  return flags;
}

namespace {

// Average ranks (1-based) with ties sharing the mean rank.
std::vector<double> average_ranks(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

std::optional<double> spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) return std::nullopt;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double nd = static_cast<double>(n);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= nd;
  my /= nd;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = rx[i] - mx, dy = ry[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return std::nullopt;  // constant series
  return sxy / std::sqrt(sxx * syy);
}

TrendReport correlation_trends(const std::vector<TrendSample>& samples) {
  if (samples.size() < 5)
    throw std::invalid_argument("correlation trends need at least 5 drawings");
  std::vector<double> ps, pc, ne, s, l, inv_s, a, b, c;
  for (const auto& t : samples) {
    ps.push_back(t.pct_soft);
    pc.push_back(t.pct_corner);
    ne.push_back(t.n_ends_bends);
    s.push_back(t.smallest);
    l.push_back(t.largest);
    inv_s.push_back(1.0 / t.smallest);
    a.push_back(t.a);
    b.push_back(t.b);
    c.push_back(t.c);
  }
  const int n = static_cast<int>(samples.size());
  TrendReport report;
  auto add = [&](const std::string& name, const std::vector<double>& x,
                 const std::vector<double>& y) {
    report.entries.push_back(TrendEntry{name, spearman(x, y), n});
  };
  add("pct_soft_vs_ends_bends", ps, ne);
  add("pct_corner_vs_ends_bends", pc, ne);
  add("smallest_vs_ends_bends", s, ne);
  add("largest_vs_ends_bends", l, ne);
  add("a_vs_inv_smallest", a, inv_s);
  add("c_vs_inv_smallest", c, inv_s);
  add("b_vs_largest", b, l);
  add("inv_smallest_vs_largest", inv_s, l);
  add("a_vs_b", a, b);
  return report;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("linear fit needs matched series of >= 2 points");
  const double nd = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= nd;
  my /= nd;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  LinearFit fit;
  fit.n = static_cast<int>(x.size());
  if (sxx <= 0.0) {
    fit.slope = 0.0;
    fit.intercept = my;
    fit.r2 = syy <= 0.0 ? 1.0 : 0.0;
    return fit;
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  if (syy <= 0.0) {
    fit.r2 = 1.0;
  } else {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double e = y[i] - (fit.slope * x[i] + fit.intercept);
      ss_res += e * e;
    }
    fit.r2 = 1.0 - ss_res / syy;
  }
  return fit;
}

}  // namespace expresso
