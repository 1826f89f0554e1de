#ifndef EXPRESSO_EXPRESSIVENESS_HPP
#define EXPRESSO_EXPRESSIVENESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "expresso/features.hpp"

namespace expresso {

// The three expressiveness values: (a) diffusion looking time, small scale;
// (b) kinematic looking time, large scale; (c) nearness, out of plane.
struct AspectValues {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

enum class AspectId { a, b, c };

const char* aspect_name(AspectId id);
AspectId aspect_from_name(const std::string& name);
double aspect_value(const AspectValues& av, AspectId id);

// value(a) = ldiv / lseg
double aspect_a(double ldiv, double lseg);

// value(b) = #e * (%s * lseg^(2/3) + %c * lseg^(2/5)).
// n_ends_bends is real-valued so reconstructed (fractional) counts work too.
double aspect_b(double n_ends_bends, double pct_soft, double pct_corner, double lseg);

// value(c) = M * ldiv / S
double aspect_c(double main_form, double ldiv, double smallest);

AspectValues aspects_from_elementary(const ElementaryAspects& ea, double ldiv);

// P(a), P(b), P(c): the aspects reconstructed from an output vector plus the
// input vector. S comes back from 0.1 mm units; #e = t1 * #p; M = t5 * L.
AspectValues aspects_from_outputs(const InputVector& in, const TargetVector& out);

enum class ExtremeFlag { low, normal, high };

// Rank-based extreme flags. Thresholds are nearest-rank percentiles taken
// from each end of the sorted values: with n values, ranks
// ceil(low*n/100) from the bottom and ceil((100-high)*n/100) from the top.
// Values at or beyond a threshold are flagged; if the two thresholds meet
// (no spread) everything is normal.
std::vector<ExtremeFlag> flag_extremes(const std::vector<double>& values,
                                       double low_pct = 10.0, double high_pct = 90.0);

// Spearman rank correlation with average ranks for ties; nullopt when either
// series is constant.
std::optional<double> spearman(const std::vector<double>& x, const std::vector<double>& y);

struct TrendEntry {
  std::string pair;
  std::optional<double> rho;
  int n = 0;
};

struct TrendReport {
  std::vector<TrendEntry> entries;
};

// Per-drawing values needed for the trend table.
struct TrendSample {
  double pct_soft, pct_corner, n_ends_bends, smallest, largest;
  double a, b, c;
};

// Spearman trends over the fixed pair list: (%s,#e), (%c,#e), (S,#e),
// (L,#e), (a,1/S), (c,1/S), (b,L), (1/S,L), (a,b).
TrendReport correlation_trends(const std::vector<TrendSample>& samples);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 1.0;
  int n = 0;
};

// Least-squares y = slope*x + intercept with the coefficient of
// determination; used for the hand-vs-predicted scatter summaries.
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace expresso

#endif
