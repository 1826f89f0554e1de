#include "expresso/perceptron.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "expresso/rng.hpp"

namespace expresso {

namespace {

// Published weight tables, in thousandths; dividing by 1000 reproduces the
// diagrams exactly.
constexpr int kStartInHidden[12] = {50, 50, 50, 50, 50, 50, 50, 50, 1, 1, 10, 10};

constexpr int kStartHiddenOut[5][5] = {
    {1, 1, 1, 1, -1},
    {1, 1, 1, -1, 1},
    {1, 1, 1, -1, -1},
    {1, 1, -1, -1, -1},
    {1, -1, 1, -1, -1},
};

constexpr int kFinalInHidden[5][12] = {
    {83, 327, 47, -36, 185, 158, 38, 34, 12, -21, -158, -2},
    {47, 43, 55, 46, 52, 50, 51, 50, 10, -53, -3, 21},
    {86, 81, 291, -63, -22, 9, 10, 27, -53, -13, -37, 158},
    {19, 69, 92, 96, -7, 36, 57, 58, 54, -10, -114, 64},
    {72, -16, 48, 139, 36, 32, 56, 65, -12, -16, 2, 226},
};

constexpr int kFinalHiddenOut[5][5] = {
    {1737, 728, 912, 3656, -808},
    {867, 836, -3168, -665, 1831},
    {557, 1062, 1093, -1139, -2168},
    {3720, 1136, -1904, -535, 4},
    {1816, -1198, 5837, 228, -2136},
};

}  // namespace

double fermi(double x) { return 1.0 / (1.0 + std::exp(-x)); }

PerceptronModel init_paper_start() {
  PerceptronModel m;
  for (int j = 0; j < PerceptronModel::hidden; ++j)
    for (int i = 0; i < PerceptronModel::inputs; ++i)
      m.w_in_hidden[j][i] = kStartInHidden[i] / 1000.0;
  for (int k = 0; k < PerceptronModel::outputs; ++k)
    for (int j = 0; j < PerceptronModel::hidden; ++j)
      m.w_hidden_out[k][j] = kStartHiddenOut[k][j] / 1000.0;
  return m;
}

PerceptronModel load_paper_final() {
  PerceptronModel m;
  for (int j = 0; j < PerceptronModel::hidden; ++j)
    for (int i = 0; i < PerceptronModel::inputs; ++i)
      m.w_in_hidden[j][i] = kFinalInHidden[j][i] / 1000.0;
  for (int k = 0; k < PerceptronModel::outputs; ++k)
    for (int j = 0; j < PerceptronModel::hidden; ++j)
      m.w_hidden_out[k][j] = kFinalHiddenOut[k][j] / 1000.0;
  return m;
}

PerceptronModel init_random(std::uint64_t seed) {
  Rng rng(seed);
  PerceptronModel m;
  for (auto& row : m.w_in_hidden)
    for (auto& w : row) w = rng.uniform(-0.05, 0.05);
  for (auto& row : m.w_hidden_out)
    for (auto& w : row) w = rng.uniform(-0.05, 0.05);
  return m;
}

ForwardTrace forward_trace(const PerceptronModel& m, const InputVector& x) {
  ForwardTrace tr;
  for (int j = 0; j < PerceptronModel::hidden; ++j) {
    double z = 0.0;
    for (int i = 0; i < PerceptronModel::inputs; ++i)
      z += m.w_in_hidden[j][i] * x[static_cast<std::size_t>(i)];
    tr.hidden[j] = fermi(z);
  }
  for (int k = 0; k < PerceptronModel::outputs; ++k) {
    double z = 0.0;
    for (int j = 0; j < PerceptronModel::hidden; ++j)
      z += m.w_hidden_out[k][j] * tr.hidden[j];
    tr.output[k] = fermi(z);
  }
  return tr;
}

TargetVector forward(const PerceptronModel& m, const InputVector& x) {
  const ForwardTrace tr = forward_trace(m, x);
  TargetVector out;
  for (int k = 0; k < PerceptronModel::outputs; ++k) out[static_cast<std::size_t>(k)] = tr.output[k];
  return out;
}

PerceptronGradient gradient(const PerceptronModel& m, const InputVector& x,
                            const TargetVector& target) {
  const ForwardTrace tr = forward_trace(m, x);
  PerceptronGradient g;

  std::array<double, PerceptronModel::outputs> delta_out;
  for (int k = 0; k < PerceptronModel::outputs; ++k) {
    const double o = tr.output[k];
    delta_out[k] = (o - target[static_cast<std::size_t>(k)]) * o * (1.0 - o);
  }
  for (int k = 0; k < PerceptronModel::outputs; ++k)
    for (int j = 0; j < PerceptronModel::hidden; ++j)
      g.w_hidden_out[k][j] = delta_out[k] * tr.hidden[j];

  for (int j = 0; j < PerceptronModel::hidden; ++j) {
    double back = 0.0;
    for (int k = 0; k < PerceptronModel::outputs; ++k)
      back += delta_out[k] * m.w_hidden_out[k][j];
    const double delta_hidden = back * tr.hidden[j] * (1.0 - tr.hidden[j]);
    for (int i = 0; i < PerceptronModel::inputs; ++i)
      g.w_in_hidden[j][i] = delta_hidden * x[static_cast<std::size_t>(i)];
  }
  return g;
}

double evaluate(const PerceptronModel& m, const std::vector<TrainSample>& set) {
  if (set.empty()) throw std::invalid_argument("evaluate: empty sample set");
  double sum = 0.0;
  for (const auto& s : set) {
    const TargetVector out = forward(m, s.input);
    for (std::size_t k = 0; k < 5; ++k) sum += std::abs(out[k] - s.target[k]);
  }
  return sum / (5.0 * static_cast<double>(set.size()));
}

TrainReport train(const std::vector<TrainSample>& set, const TrainConfig& cfg) {
  if (set.empty()) throw std::invalid_argument("train: empty sample set");
  if (cfg.epochs < 1) throw std::invalid_argument("train: epochs must be >= 1");
  if (!(cfg.learning_rate > 0.0)) throw std::invalid_argument("train: learning rate must be > 0");

  TrainReport report;
  report.model = cfg.init == InitScheme::paper ? init_paper_start() : init_random(cfg.seed);
  report.epoch_deviation.reserve(static_cast<std::size_t>(cfg.epochs));

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    for (const auto& s : set) {
      const PerceptronGradient g = gradient(report.model, s.input, s.target);
      for (int j = 0; j < PerceptronModel::hidden; ++j)
        for (int i = 0; i < PerceptronModel::inputs; ++i)
          report.model.w_in_hidden[j][i] -= cfg.learning_rate * g.w_in_hidden[j][i];
      for (int k = 0; k < PerceptronModel::outputs; ++k)
        for (int j = 0; j < PerceptronModel::hidden; ++j)
          report.model.w_hidden_out[k][j] -= cfg.learning_rate * g.w_hidden_out[k][j];
    }
    report.epoch_deviation.push_back(evaluate(report.model, set));
  }
  return report;
}

std::string serialize_perceptron(const PerceptronModel& m) {
  std::ostringstream out;
  out << "perceptron 12 5 5\n";
  char buf[40];
  for (const auto& row : m.w_in_hidden) {
    for (int i = 0; i < PerceptronModel::inputs; ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      out << (i ? " " : "") << buf;
    }
    out << "\n";
  }
  for (const auto& row : m.w_hidden_out) {
    for (int j = 0; j < PerceptronModel::hidden; ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", row[j]);
      out << (j ? " " : "") << buf;
    }
    out << "\n";
  }
  return out.str();
}

PerceptronModel parse_perceptron(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  int ni = 0, nh = 0, no = 0;
  in >> tag >> ni >> nh >> no;
  if (tag != "perceptron" || ni != 12 || nh != 5 || no != 5)
    throw std::runtime_error("not a perceptron 12 5 5 model file");
  PerceptronModel m;
  for (auto& row : m.w_in_hidden)
    for (auto& w : row)
      if (!(in >> w)) throw std::runtime_error("truncated perceptron model file");
  for (auto& row : m.w_hidden_out)
    for (auto& w : row)
      if (!(in >> w)) throw std::runtime_error("truncated perceptron model file");
  return m;
}

void save_perceptron_file(const PerceptronModel& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << serialize_perceptron(m);
  if (!out) throw std::runtime_error("write failed: " + path);
}

PerceptronModel load_perceptron_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_perceptron(buf.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace expresso
