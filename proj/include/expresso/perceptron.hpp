#ifndef EXPRESSO_PERCEPTRON_HPP
#define EXPRESSO_PERCEPTRON_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "expresso/features.hpp"

namespace expresso {

// Three-layer perceptron: 12 inputs, 5 hidden cells, 5 output cells, Fermi
// reception function, no bias terms.
struct PerceptronModel {
  static constexpr int inputs = 12;
  static constexpr int hidden = 5;
  static constexpr int outputs = 5;

  std::array<std::array<double, inputs>, hidden> w_in_hidden{};
  std::array<std::array<double, hidden>, outputs> w_hidden_out{};
};

struct PerceptronGradient {
  std::array<std::array<double, PerceptronModel::inputs>, PerceptronModel::hidden> w_in_hidden{};
  std::array<std::array<double, PerceptronModel::hidden>, PerceptronModel::outputs> w_hidden_out{};
};

enum class InitScheme { paper, random };

struct TrainConfig {
  int epochs = 5000;
  double learning_rate = 0.5;
  InitScheme init = InitScheme::paper;
  std::uint64_t seed = 1;  // used by random init
};

struct TrainSample {
  InputVector input;
  TargetVector target;
};

struct TrainReport {
  std::vector<double> epoch_deviation;  // mean |output - target| after each epoch
  PerceptronModel model;
};

double fermi(double x);

// The published starting weights: 0.050 for inputs 1-8, 0.001 for #p and L,
// 0.010 for S and l-div on every hidden cell; hidden-to-output is the
// +/- 0.001 sign pattern.
PerceptronModel init_paper_start();

// The published weights after 5000 iterations.
PerceptronModel load_paper_final();

PerceptronModel init_random(std::uint64_t seed);

struct ForwardTrace {
  std::array<double, PerceptronModel::hidden> hidden{};
  std::array<double, PerceptronModel::outputs> output{};
};

ForwardTrace forward_trace(const PerceptronModel& m, const InputVector& x);
TargetVector forward(const PerceptronModel& m, const InputVector& x);

// Exact gradients of E = 1/2 sum_k (out_k - t_k)^2 via backpropagation.
PerceptronGradient gradient(const PerceptronModel& m, const InputVector& x,
                            const TargetVector& target);

// Per-sample gradient descent in the given sample order; one epoch is one
// full pass. Deterministic for a fixed config and sample list.
TrainReport train(const std::vector<TrainSample>& set, const TrainConfig& cfg);

// Mean over samples and output cells of |out_k - t_k|.
double evaluate(const PerceptronModel& m, const std::vector<TrainSample>& set);

// Plain-text model file: "perceptron 12 5 5", 5 rows of 12 weights, then
// 5 rows of 5 weights, 17 significant digits.
std::string serialize_perceptron(const PerceptronModel& m);
PerceptronModel parse_perceptron(const std::string& text);
void save_perceptron_file(const PerceptronModel& m, const std::string& path);
PerceptronModel load_perceptron_file(const std::string& path);

}  // namespace expresso

#endif
