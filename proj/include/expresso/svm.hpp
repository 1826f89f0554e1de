#ifndef EXPRESSO_SVM_HPP
#define EXPRESSO_SVM_HPP

#include <array>
#include <string>
#include <vector>

#include "expresso/expressiveness.hpp"
#include "expresso/features.hpp"

namespace expresso {

// Linear 1-norm soft-margin classifier realizing K(w,x) = <w,x> - b.
struct SvmModel {
  std::array<double, 12> w{};
  double b = 0.0;
  AspectId aspect = AspectId::a;
  double C = 1.0;
};

struct SvmSample {
  InputVector x;
  int y = 1;  // +1 or -1
};

struct SvmTrainSet {
  std::vector<SvmSample> samples;
};

struct SvmTrainResult {
  SvmModel model;
  std::vector<double> alpha;
  double dual_objective = 0.0;
  double max_kkt_violation = 0.0;
  int passes = 0;
};

// Median split of hand-computed aspect values: above the median is +1, the
// median itself and below is -1 (even counts interpolate). Throws when all
// values are equal.
std::vector<int> label_by_median(const std::vector<double>& aspect_values);

// Solves the soft-margin dual with SMO-style pair updates until every KKT
// violation is at most kkt_tol; b is recovered as the average over free
// support vectors. Throws on non-convergence within max_passes, reporting
// the residual violation.
SvmTrainResult train_svm(const SvmTrainSet& set, double C, AspectId aspect = AspectId::a,
                         double kkt_tol = 1e-6, int max_passes = 100000);

double decision(const SvmModel& m, const InputVector& x);

// Model file: "svm <aspect> <C>", 12 weights, then b.
std::string serialize_svm(const SvmModel& m);
SvmModel parse_svm(const std::string& text);
void save_svm_file(const SvmModel& m, const std::string& path);
SvmModel load_svm_file(const std::string& path);

}  // namespace expresso

#endif
