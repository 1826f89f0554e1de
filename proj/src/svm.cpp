#include "expresso/svm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "expresso/numfmt.hpp"

namespace expresso {

namespace {

double dot12(const InputVector& a, const InputVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 12; ++i) s += a[i] * b[i];
  return s;
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::vector<int> label_by_median(const std::vector<double>& aspect_values) {
  if (aspect_values.size() < 2)
    throw std::invalid_argument("median labelling needs at least 2 values");
  const double lo = *std::min_element(aspect_values.begin(), aspect_values.end());
  const double hi = *std::max_element(aspect_values.begin(), aspect_values.end());
  if (lo == hi) throw std::invalid_argument("median labelling: all aspect values equal");
  const double med = median_of(aspect_values);
  std::vector<int> labels(aspect_values.size());
  for (std::size_t i = 0; i < aspect_values.size(); ++i)
    labels[i] = aspect_values[i] > med ? 1 : -1;
  return labels;
}

SvmTrainResult train_svm(const SvmTrainSet& set, double C, AspectId aspect,
                         double kkt_tol, int max_passes) {
  const auto& s = set.samples;
  const int n = static_cast<int>(s.size());
  if (n < 2) throw std::invalid_argument("svm training needs at least 2 samples");
  if (!(C > 0.0)) throw std::invalid_argument("svm box constraint C must be > 0");
  bool pos = false, neg = false;
  for (const auto& sm : s) {
    if (sm.y == 1) pos = true;
    else if (sm.y == -1) neg = true;
    else throw std::invalid_argument("svm labels must be +1 or -1");
  }
  if (!pos || !neg) throw std::invalid_argument("svm training needs both labels");

  std::vector<std::vector<double>> K(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      K[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          K[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
              dot12(s[static_cast<std::size_t>(i)].x, s[static_cast<std::size_t>(j)].x);

  std::vector<double> alpha(static_cast<std::size_t>(n), 0.0);
  double b = 0.0;

  auto f_at = [&](int i) {
    double v = 0.0;
    for (int j = 0; j < n; ++j)
      v += alpha[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(j)].y *
           K[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return v - b;
  };

  // Platt-style pair update; returns true when alpha actually moved.
  auto update_pair = [&](int i, int j, double ei, double ej) {
    if (i == j) return false;
    const double yi = s[static_cast<std::size_t>(i)].y;
    const double yj = s[static_cast<std::size_t>(j)].y;
    const double ai = alpha[static_cast<std::size_t>(i)];
    const double aj = alpha[static_cast<std::size_t>(j)];
    double lo, hi;
    if (yi != yj) {
      lo = std::max(0.0, aj - ai);
      hi = std::min(C, C + aj - ai);
    } else {
      lo = std::max(0.0, ai + aj - C);
      hi = std::min(C, ai + aj);
    }
    if (lo >= hi) return false;
    const double kii = K[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    const double kjj = K[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
    const double kij = K[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    const double eta = kii + kjj - 2.0 * kij;
    if (!(eta > 0.0)) return false;
    double aj_new = aj + yj * (ei - ej) / eta;
    aj_new = std::clamp(aj_new, lo, hi);
    if (std::abs(aj_new - aj) < 1e-14 * (aj_new + aj + 1e-14)) return false;
    const double ai_new = ai + yi * yj * (aj - aj_new);
    alpha[static_cast<std::size_t>(i)] = ai_new;
    alpha[static_cast<std::size_t>(j)] = aj_new;
    const double di = (ai_new - ai) * yi;
    const double dj = (aj_new - aj) * yj;
    const double b1 = b + ei + di * kii + dj * kij;
    const double b2 = b + ej + di * kij + dj * kjj;
    const bool i_free = ai_new > 0.0 && ai_new < C;
    const bool j_free = aj_new > 0.0 && aj_new < C;
    if (i_free) b = b1;
    else if (j_free) b = b2;
    else b = 0.5 * (b1 + b2);
    return true;
  };

  const double examine_tol = 0.1 * kkt_tol;
  int pass = 0;
  for (; pass < max_passes; ++pass) {
    int changed = 0;
    for (int i = 0; i < n; ++i) {
      const double ei = f_at(i) - s[static_cast<std::size_t>(i)].y;
      const double ri = ei * s[static_cast<std::size_t>(i)].y;
      const double ai = alpha[static_cast<std::size_t>(i)];
      const bool violates = (ri < -examine_tol && ai < C) || (ri > examine_tol && ai > 0.0);
      if (!violates) continue;
      int best_j = -1;
      double best_gap = -1.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        const double gap = std::abs(ei - (f_at(j) - s[static_cast<std::size_t>(j)].y));
        if (gap > best_gap) {
          best_gap = gap;
          best_j = j;
        }
      }
      if (best_j >= 0 && update_pair(i, best_j, ei, f_at(best_j) - s[static_cast<std::size_t>(best_j)].y)) {
        ++changed;
        continue;
      }
      for (int j = 0; j < n && !changed; ++j) {
        if (j == i || j == best_j) continue;
        if (update_pair(i, j, f_at(i) - s[static_cast<std::size_t>(i)].y,
                        f_at(j) - s[static_cast<std::size_t>(j)].y))
          ++changed;
      }
    }
    if (changed == 0) break;
  }

  SvmTrainResult result;
  result.passes = pass;
  result.alpha = alpha;
  result.model.aspect = aspect;
  result.model.C = C;
  for (std::size_t d = 0; d < 12; ++d) {
    double wd = 0.0;
    for (int i = 0; i < n; ++i)
      wd += alpha[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i)].y *
            s[static_cast<std::size_t>(i)].x[d];
    result.model.w[d] = wd;
  }

  // b averaged over free support vectors; with none free, the midpoint of
  // the interval the bound constraints leave feasible.
  const double bound_eps = 1e-8 * C;
  double b_sum = 0.0;
  int b_count = 0;
  for (int i = 0; i < n; ++i) {
    const double ai = alpha[static_cast<std::size_t>(i)];
    if (ai > bound_eps && ai < C - bound_eps) {
      double wx = 0.0;
      for (std::size_t d = 0; d < 12; ++d)
        wx += result.model.w[d] * s[static_cast<std::size_t>(i)].x[d];
      b_sum += wx - s[static_cast<std::size_t>(i)].y;
      ++b_count;
    }
  }
  if (b_count > 0) {
    result.model.b = b_sum / b_count;
  } else {
    double b_lo = -std::numeric_limits<double>::infinity();
    double b_hi = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double ai = alpha[static_cast<std::size_t>(i)];
      const int yi = s[static_cast<std::size_t>(i)].y;
      double wx = 0.0;
      for (std::size_t d = 0; d < 12; ++d)
        wx += result.model.w[d] * s[static_cast<std::size_t>(i)].x[d];
      // y*(wx - b) >= 1 at alpha = 0, <= 1 at alpha = C
      const bool at_zero = ai <= bound_eps;
      if ((at_zero && yi == 1) || (!at_zero && yi == -1)) b_hi = std::min(b_hi, wx - yi);
      else b_lo = std::max(b_lo, wx - yi);
    }
    if (std::isfinite(b_lo) && std::isfinite(b_hi)) result.model.b = 0.5 * (b_lo + b_hi);
    else result.model.b = b;
  }

  double obj = 0.0;
  for (int i = 0; i < n; ++i) obj += alpha[static_cast<std::size_t>(i)];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      obj -= 0.5 * alpha[static_cast<std::size_t>(i)] * alpha[static_cast<std::size_t>(j)] *
             s[static_cast<std::size_t>(i)].y * s[static_cast<std::size_t>(j)].y *
             K[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  result.dual_objective = obj;

  double max_viol = 0.0;
  for (int i = 0; i < n; ++i) {
    const double ai = alpha[static_cast<std::size_t>(i)];
    const double margin = s[static_cast<std::size_t>(i)].y *
                          decision(result.model, s[static_cast<std::size_t>(i)].x);
    if (ai < C - bound_eps) max_viol = std::max(max_viol, 1.0 - margin);
    if (ai > bound_eps) max_viol = std::max(max_viol, margin - 1.0);
  }
  result.max_kkt_violation = std::max(0.0, max_viol);
  if (result.max_kkt_violation > kkt_tol) {
    std::ostringstream msg;
    msg << "svm did not converge after " << pass << " passes; max KKT violation "
        << result.max_kkt_violation;
    throw std::runtime_error(msg.str());
  }
  return result;
}

double decision(const SvmModel& m, const InputVector& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < 12; ++i) s += m.w[i] * x[i];
  return s - m.b;
}

std::string serialize_svm(const SvmModel& m) {
  std::ostringstream out;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", m.C);
  out << "svm " << aspect_name(m.aspect) << ' ' << buf << "\n";
  for (std::size_t i = 0; i < 12; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", m.w[i]);
    out << (i ? " " : "") << buf;
  }
  out << "\n";
  std::snprintf(buf, sizeof buf, "%.17g", m.b);
  out << buf << "\n";
  return out.str();
}

SvmModel parse_svm(const std::string& text) {
  std::istringstream in(text);
  std::string tag, aspect;
  SvmModel m;
  if (!(in >> tag >> aspect >> m.C) || tag != "svm")
    throw std::runtime_error("not an svm model file");
  m.aspect = aspect_from_name(aspect);
  for (auto& w : m.w)
    if (!(in >> w)) throw std::runtime_error("truncated svm model file");
  if (!(in >> m.b)) throw std::runtime_error("truncated svm model file");
  return m;
}

void save_svm_file(const SvmModel& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << serialize_svm(m);
  if (!out) throw std::runtime_error("write failed: " + path);
}

SvmModel load_svm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_svm(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace expresso
