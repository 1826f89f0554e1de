#include "expresso/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "expresso/numfmt.hpp"
#include "expresso/perceptron.hpp"
#include "expresso/svm.hpp"
#include "expresso/synth.hpp"

namespace expresso {

namespace fs = std::filesystem;
using nlohmann::json;

AnalysisRecord analyze_drawing(const Drawing& d, const GeometryConfig& cfg) {
  AnalysisRecord rec;
  rec.id = d.id;
  rec.ea = elementary_aspects(d, cfg);
  const auto fps = feature_points(d, cfg);
  rec.input = assemble_input(d, rec.ea, composition_reduction(fps));
  rec.target = assemble_target(rec.ea, d);
  rec.aspects = aspects_from_elementary(rec.ea, d.annotations.ldiv);
  return rec;
}

std::vector<Drawing> load_corpus_dir(const std::string& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
  std::vector<std::string> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".drw")
      paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) throw std::runtime_error("no .drw files in " + dir);

  std::vector<Drawing> drawings;
  std::set<std::string> seen;
  for (const auto& p : paths) {
    Drawing d = load_drawing_file(p);
    if (!seen.insert(d.id).second)
      throw std::runtime_error("duplicate drawing id '" + d.id + "' in " + dir);
    drawings.push_back(std::move(d));
  }
  std::sort(drawings.begin(), drawings.end(),
            [](const Drawing& a, const Drawing& b) { return a.id < b.id; });
  return drawings;
}

std::vector<AnalysisRecord> analyze_corpus(const std::vector<Drawing>& drawings,
                                           const GeometryConfig& cfg) {
  std::vector<AnalysisRecord> records(drawings.size());
  if (drawings.size() >= 16) {
    std::vector<std::future<AnalysisRecord>> futures;
    futures.reserve(drawings.size());
    for (const auto& d : drawings)
      futures.push_back(std::async(std::launch::async,
                                   [&d, &cfg] { return analyze_drawing(d, cfg); }));
    for (std::size_t i = 0; i < futures.size(); ++i) records[i] = futures[i].get();
  } else {
    for (std::size_t i = 0; i < drawings.size(); ++i)
      records[i] = analyze_drawing(drawings[i], cfg);
  }
  std::sort(records.begin(), records.end(),
            [](const AnalysisRecord& a, const AnalysisRecord& b) { return a.id < b.id; });
  return records;
}

namespace cli {

namespace {

// Input files that cannot be read or parsed exit with code 2.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string real9(double v) { return format_real(v, 9); }

Drawing load_drawing_checked(const std::string& path) {
  try {
    return load_drawing_file(path);
  } catch (const std::runtime_error& e) {
    throw FileError(e.what());
  }
}

std::vector<Drawing> load_corpus_checked(const std::string& dir) {
  try {
    return load_corpus_dir(dir);
  } catch (const std::runtime_error& e) {
    throw FileError(e.what());
  }
}

json record_json(const AnalysisRecord& r) {
  json j;
  j["id"] = r.id;
  j["elementary"] = {{"n_points", r.ea.n_points}, {"n_ends_bends", r.ea.n_ends_bends},
                     {"pct_soft", r.ea.pct_soft}, {"pct_corner", r.ea.pct_corner},
                     {"largest", r.ea.largest},   {"smallest", r.ea.smallest},
                     {"main_form", r.ea.main_form}, {"lseg", r.ea.lseg}};
  j["input"] = r.input.v;
  j["target"] = r.target.t;
  j["aspects"] = {{"a", r.aspects.a}, {"b", r.aspects.b}, {"c", r.aspects.c}};
  return j;
}

void print_analysis_csv_header(std::ostream& out) {
  out << "id,n_points,n_ends_bends,pct_soft,pct_corner,largest,smallest,main_form,lseg";
  for (int i = 1; i <= 12; ++i) out << ",v" << i;
  for (int i = 1; i <= 5; ++i) out << ",t" << i;
  out << ",a,b,c\n";
}

void print_analysis_csv_row(std::ostream& out, const AnalysisRecord& r) {
  out << r.id << ',' << r.ea.n_points << ',' << r.ea.n_ends_bends << ','
      << real9(r.ea.pct_soft) << ',' << real9(r.ea.pct_corner) << ',' << real9(r.ea.largest)
      << ',' << real9(r.ea.smallest) << ',' << real9(r.ea.main_form) << ','
      << real9(r.ea.lseg);
  for (std::size_t i = 0; i < 12; ++i) out << ',' << real9(r.input[i]);
  for (std::size_t i = 0; i < 5; ++i) out << ',' << real9(r.target[i]);
  out << ',' << real9(r.aspects.a) << ',' << real9(r.aspects.b) << ','
      << real9(r.aspects.c) << "\n";
}

void print_analysis_table(std::ostream& out, const AnalysisRecord& r) {
  out << "drawing " << r.id << "\n";
  out << "  #p " << r.ea.n_points << "  #e " << r.ea.n_ends_bends << "  %s "
      << real9(r.ea.pct_soft) << "  %c " << real9(r.ea.pct_corner) << "\n";
  out << "  L " << real9(r.ea.largest) << " mm  S " << real9(r.ea.smallest) << " mm  M "
      << real9(r.ea.main_form) << " mm  l-segm " << real9(r.ea.lseg) << " mm\n";
  out << "  input ";
  for (std::size_t i = 0; i < 12; ++i) out << (i ? " " : "") << real9(r.input[i]);
  out << "\n  target ";
  for (std::size_t i = 0; i < 5; ++i) out << (i ? " " : "") << real9(r.target[i]);
  out << "\n  aspects a " << real9(r.aspects.a) << "  b " << real9(r.aspects.b) << "  c "
      << real9(r.aspects.c) << "\n";
}

struct GlobalOpts {
  GeometryConfig geometry;
  OutputFormat format = OutputFormat::table;
};

std::vector<AnalysisRecord> analyze_path(const std::string& path, const GeometryConfig& cfg) {
  if (fs::is_directory(path)) return analyze_corpus(load_corpus_checked(path), cfg);
  const Drawing d = load_drawing_checked(path);
  return {analyze_drawing(d, cfg)};
}

std::vector<TrainSample> training_samples(const std::vector<AnalysisRecord>& records) {
  std::vector<TrainSample> set;
  set.reserve(records.size());
  for (const auto& r : records) set.push_back(TrainSample{r.input, r.target});
  return set;
}

void cmd_analyze(const std::string& path, const GlobalOpts& g, std::ostream& out) {
  const auto records = analyze_path(path, g.geometry);
  switch (g.format) {
    case OutputFormat::csv:
      print_analysis_csv_header(out);
      for (const auto& r : records) print_analysis_csv_row(out, r);
      break;
    case OutputFormat::json_lines:
      for (const auto& r : records) out << record_json(r).dump() << "\n";
      break;
    case OutputFormat::table:
      for (const auto& r : records) print_analysis_table(out, r);
      break;
  }
}

void cmd_gen_corpus(const GenSpec& spec, int inject_k, const std::string& out_dir,
                    const GlobalOpts& g, std::ostream& err) {
  Corpus corpus = generate(spec);
  if (inject_k > 0) extreme_injection(corpus, inject_k, g.geometry);
  write_corpus(corpus, out_dir);
  err << "wrote " << corpus.drawings.size() << " drawings to " << out_dir << "\n";
}

InitScheme parse_init(const std::string& text, std::uint64_t& seed, std::uint64_t env_seed,
                      bool have_env) {
  if (text == "paper") return InitScheme::paper;
  if (text == "random") {
    seed = have_env ? env_seed : 1;
    return InitScheme::random;
  }
  if (text.rfind("random:", 0) == 0) {
    seed = std::stoull(text.substr(7));
    return InitScheme::random;
  }
  throw CLI::ValidationError("--init", "expected paper, random or random:SEED");
}

void cmd_train_perceptron(const std::string& dir, const TrainConfig& cfg,
                          const std::string& out_file, const GlobalOpts& g,
                          std::ostream& out, std::ostream& err) {
  const auto records = analyze_corpus(load_corpus_checked(dir), g.geometry);
  const auto set = training_samples(records);
  const TrainReport report = train(set, cfg);
  save_perceptron_file(report.model, out_file);
  switch (g.format) {
    case OutputFormat::csv: {
      out << "epoch,mad\n";
      for (std::size_t e = 0; e < report.epoch_deviation.size(); ++e)
        out << e + 1 << ',' << real9(report.epoch_deviation[e]) << "\n";
      break;
    }
    case OutputFormat::json_lines: {
      json j;
      j["epochs"] = cfg.epochs;
      j["first_epoch_mad"] = report.epoch_deviation.front();
      j["final_mad"] = report.epoch_deviation.back();
      j["samples"] = set.size();
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::table: {
      const std::size_t stride =
          std::max<std::size_t>(1, report.epoch_deviation.size() / 10);
      for (std::size_t e = 0; e < report.epoch_deviation.size(); ++e)
        if (e % stride == 0 || e + 1 == report.epoch_deviation.size())
          out << "epoch " << e + 1 << "  mad " << real9(report.epoch_deviation[e]) << "\n";
      break;
    }
  }
  err << "model written to " << out_file << "\n";
}

void cmd_predict(const std::string& model_path, const std::string& drawing_path,
                 const GlobalOpts& g, std::ostream& out) {
  const PerceptronModel model = load_perceptron_file(model_path);
  const Drawing d = load_drawing_checked(drawing_path);
  const AnalysisRecord rec = analyze_drawing(d, g.geometry);
  const TargetVector predicted = forward(model, rec.input);
  const AspectValues pv = aspects_from_outputs(rec.input, predicted);
  switch (g.format) {
    case OutputFormat::csv: {
      out << "id,t1,t2,t3,t4,t5,pa,pb,pc\n" << rec.id;
      for (std::size_t i = 0; i < 5; ++i) out << ',' << real9(predicted[i]);
      out << ',' << real9(pv.a) << ',' << real9(pv.b) << ',' << real9(pv.c) << "\n";
      break;
    }
    case OutputFormat::json_lines: {
      json j;
      j["id"] = rec.id;
      j["output"] = predicted.t;
      j["aspects"] = {{"a", pv.a}, {"b", pv.b}, {"c", pv.c}};
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::table: {
      out << "drawing " << rec.id << "\n  output ";
      for (std::size_t i = 0; i < 5; ++i) out << (i ? " " : "") << real9(predicted[i]);
      out << "\n  P(a) " << real9(pv.a) << "  P(b) " << real9(pv.b) << "  P(c) "
          << real9(pv.c) << "\n";
      break;
    }
  }
}

void cmd_train_svm(const std::string& dir, AspectId aspect, double C,
                   const std::string& out_file, const GlobalOpts& g, std::ostream& out,
                   std::ostream& err) {
  const auto records = analyze_corpus(load_corpus_checked(dir), g.geometry);
  std::vector<double> values;
  values.reserve(records.size());
  for (const auto& r : records) values.push_back(aspect_value(r.aspects, aspect));
  const auto labels = label_by_median(values);
  SvmTrainSet set;
  for (std::size_t i = 0; i < records.size(); ++i)
    set.samples.push_back(SvmSample{records[i].input, labels[i]});
  const SvmTrainResult result = train_svm(set, C, aspect);
  save_svm_file(result.model, out_file);
  switch (g.format) {
    case OutputFormat::csv: {
      out << "aspect,C,passes,max_kkt,b";
      for (int i = 1; i <= 12; ++i) out << ",w" << i;
      out << "\n" << aspect_name(aspect) << ',' << real9(C) << ',' << result.passes << ','
          << real9(result.max_kkt_violation) << ',' << real9(result.model.b);
      for (const double w : result.model.w) out << ',' << real9(w);
      out << "\n";
      break;
    }
    case OutputFormat::json_lines: {
      json j;
      j["aspect"] = aspect_name(aspect);
      j["C"] = C;
      j["passes"] = result.passes;
      j["max_kkt"] = result.max_kkt_violation;
      j["w"] = result.model.w;
      j["b"] = result.model.b;
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::table: {
      out << "svm aspect " << aspect_name(aspect) << "  C " << real9(C) << "  passes "
          << result.passes << "  max KKT " << real9(result.max_kkt_violation) << "\n  w ";
      for (std::size_t i = 0; i < 12; ++i) out << (i ? " " : "") << real9(result.model.w[i]);
      out << "\n  b " << real9(result.model.b) << "\n";
      break;
    }
  }
  err << "model written to " << out_file << "\n";
}

void cmd_svm_score(const std::string& model_path, const std::string& drawing_path,
                   const GlobalOpts& g, std::ostream& out) {
  const SvmModel model = load_svm_file(model_path);
  const Drawing d = load_drawing_checked(drawing_path);
  const AnalysisRecord rec = analyze_drawing(d, g.geometry);
  const double score = decision(model, rec.input);
  const char* cls = score > 0.0 ? "large" : "small";
  switch (g.format) {
    case OutputFormat::csv:
      out << "id,aspect,decision,class\n"
          << rec.id << ',' << aspect_name(model.aspect) << ',' << real9(score) << ',' << cls
          << "\n";
      break;
    case OutputFormat::json_lines: {
      json j;
      j["id"] = rec.id;
      j["aspect"] = aspect_name(model.aspect);
      j["decision"] = score;
      j["class"] = cls;
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::table:
      out << "drawing " << rec.id << "  aspect " << aspect_name(model.aspect) << "  decision "
          << real9(score) << "  class " << cls << "\n";
      break;
  }
}

void cmd_correlate(const std::string& dir, const GlobalOpts& g, std::ostream& out) {
  const auto records = analyze_corpus(load_corpus_checked(dir), g.geometry);
  std::vector<TrendSample> samples;
  samples.reserve(records.size());
  for (const auto& r : records)
    samples.push_back(TrendSample{r.ea.pct_soft, r.ea.pct_corner,
                                  static_cast<double>(r.ea.n_ends_bends), r.ea.smallest,
                                  r.ea.largest, r.aspects.a, r.aspects.b, r.aspects.c});
  const TrendReport report = correlation_trends(samples);
  switch (g.format) {
    case OutputFormat::csv:
      out << "pair,rho,n\n";
      for (const auto& e : report.entries)
        out << e.pair << ',' << (e.rho ? real9(*e.rho) : "nan") << ',' << e.n << "\n";
      break;
    case OutputFormat::json_lines:
      for (const auto& e : report.entries) {
        json j;
        j["pair"] = e.pair;
        if (e.rho) j["rho"] = *e.rho;
        else j["rho"] = nullptr;
        j["n"] = e.n;
        out << j.dump() << "\n";
      }
      break;
    case OutputFormat::table:
      for (const auto& e : report.entries)
        out << e.pair << "  rho " << (e.rho ? real9(*e.rho) : "undefined") << "  n " << e.n
            << "\n";
      break;
  }
}

void cmd_plot_data(const std::string& model_path, AspectId aspect, const std::string& dir,
                   const GlobalOpts& g, std::ostream& out) {
  const auto records = analyze_corpus(load_corpus_checked(dir), g.geometry);

  std::ifstream probe(model_path);
  if (!probe) throw FileError("cannot read file: " + model_path);
  std::string kind;
  probe >> kind;
  probe.close();

  std::vector<double> hand, predicted;
  if (kind == "perceptron") {
    const PerceptronModel model = load_perceptron_file(model_path);
    for (const auto& r : records) {
      const AspectValues pv = aspects_from_outputs(r.input, forward(model, r.input));
      hand.push_back(aspect_value(r.aspects, aspect));
      predicted.push_back(aspect_value(pv, aspect));
    }
  } else if (kind == "svm") {
    const SvmModel model = load_svm_file(model_path);
    if (model.aspect != aspect)
      throw std::runtime_error(std::string("model/aspect mismatch: model is for aspect ") +
                               aspect_name(model.aspect));
    for (const auto& r : records) {
      hand.push_back(aspect_value(r.aspects, aspect));
      predicted.push_back(decision(model, r.input));
    }
  } else {
    throw FileError("unrecognized model file: " + model_path);
  }

  const LinearFit fit = linear_fit(hand, predicted);
  switch (g.format) {
    case OutputFormat::json_lines: {
      for (std::size_t i = 0; i < records.size(); ++i) {
        json j;
        j["id"] = records[i].id;
        j["hand"] = hand[i];
        j["predicted"] = predicted[i];
        out << j.dump() << "\n";
      }
      json j;
      j["fit"] = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"r2", fit.r2},
                  {"n", fit.n}};
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
    case OutputFormat::table:
      out << "id,hand,predicted\n";
      for (std::size_t i = 0; i < records.size(); ++i)
        out << records[i].id << ',' << real9(hand[i]) << ',' << real9(predicted[i]) << "\n";
      out << "# slope=" << real9(fit.slope) << " intercept=" << real9(fit.intercept)
          << " r2=" << real9(fit.r2) << " n=" << fit.n << "\n";
      break;
  }
}

std::pair<double, double> parse_range_pair(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("range", "expected LO:HI in '" + text + "'");
  return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"expressiveness measures for black-and-white line drawings"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--resample-step", g.geometry.resample_step_mm,
                 "uniform resampling step in mm")
      ->check(CLI::PositiveNumber);
  app.add_option("--theta-soft", g.geometry.theta_soft_deg,
                 "accumulated turning (degrees) that makes a soft bend");
  app.add_option("--theta-corner", g.geometry.theta_corner_deg,
                 "per-vertex turning (degrees) that makes a corner bend");
  const std::map<std::string, OutputFormat> fmt_map{
      {"table", OutputFormat::table},
      {"csv", OutputFormat::csv},
      {"json-lines", OutputFormat::json_lines}};
  app.add_option("--format", g.format, "output format")
      ->transform(CLI::CheckedTransformer(fmt_map, CLI::ignore_case));

  std::uint64_t env_seed = 0;
  bool have_env_seed = false;
  if (const char* env = std::getenv("EXPRESSO_SEED")) {
    try {
      env_seed = std::stoull(env);
      have_env_seed = true;
    } catch (const std::exception&) {
      err << "warning: ignoring unparsable EXPRESSO_SEED\n";
    }
  }

  // analyze
  std::string analyze_path_arg;
  auto* analyze = app.add_subcommand("analyze", "measure elementary aspects and vectors");
  analyze->add_option("path", analyze_path_arg, "drawing file or corpus directory")
      ->required();

  // gen-corpus
  GenSpec spec;
  if (have_env_seed) spec.seed = env_seed;
  int inject_k = 0;
  std::string gen_out;
  std::string opt_polylines, opt_seglen, opt_corner_mix, opt_soft_mix, opt_aspect_ratio,
      opt_ldiv, opt_xdensity;
  auto* gen = app.add_subcommand("gen-corpus", "generate a synthetic corpus");
  gen->add_option("--seed", spec.seed, "generator seed");
  gen->add_option("--count", spec.count, "number of drawings")->check(CLI::PositiveNumber);
  gen->add_flag("--trend-mode", spec.trend_mode,
                "couple larger L with smaller S across the corpus");
  gen->add_option("--inject-extremes", inject_k, "append k extreme-(a) and k extreme-(b) drawings");
  gen->add_option("--out", gen_out, "output directory")->required();
  gen->add_option("--polylines", opt_polylines, "polyline budget LO:HI");
  gen->add_option("--segment-length", opt_seglen, "segment length range LO:HI (mm)");
  gen->add_option("--corner-mix", opt_corner_mix, "zigzag fraction range LO:HI");
  gen->add_option("--soft-mix", opt_soft_mix, "arc fraction range LO:HI");
  gen->add_option("--canvas-aspect", opt_aspect_ratio, "canvas aspect range LO:HI");
  gen->add_option("--ldiv", opt_ldiv, "line diversity range LO:HI");
  gen->add_option("--xdensity", opt_xdensity, "crossing pairs per drawing LO:HI");

  // train-perceptron
  std::string tp_dir, tp_out, tp_init = "paper";
  TrainConfig tp_cfg;
  auto* trainp = app.add_subcommand("train-perceptron", "train the 12-5-5 perceptron");
  trainp->add_option("--learning-set", tp_dir, "corpus directory")->required();
  trainp->add_option("--epochs", tp_cfg.epochs, "training epochs")->check(CLI::PositiveNumber);
  trainp->add_option("--lr", tp_cfg.learning_rate, "learning rate")->check(CLI::PositiveNumber);
  trainp->add_option("--init", tp_init, "paper | random | random:SEED");
  trainp->add_option("--out", tp_out, "model output file")->required();

  // predict
  std::string pr_model, pr_drawing;
  auto* predict = app.add_subcommand("predict", "run a perceptron model on a drawing");
  predict->add_option("--model", pr_model, "perceptron model file")->required();
  predict->add_option("drawing", pr_drawing, "drawing file")->required();

  // train-svm
  std::string ts_dir, ts_out, ts_aspect = "a";
  double ts_C = 1.0;
  auto* trains = app.add_subcommand("train-svm", "train a 1-norm soft margin SVM");
  trains->add_option("--learning-set", ts_dir, "corpus directory")->required();
  trains->add_option("--aspect", ts_aspect, "aspect a|b|c")
      ->check(CLI::IsMember({"a", "b", "c"}));
  trains->add_option("--C", ts_C, "box constraint")->check(CLI::PositiveNumber);
  trains->add_option("--out", ts_out, "model output file")->required();

  // svm-score
  std::string ss_model, ss_drawing;
  auto* score = app.add_subcommand("svm-score", "score a drawing with an SVM model");
  score->add_option("--model", ss_model, "svm model file")->required();
  score->add_option("drawing", ss_drawing, "drawing file")->required();

  // correlate
  std::string corr_dir;
  auto* correlate = app.add_subcommand("correlate", "Spearman trend table for a corpus");
  correlate->add_option("dir", corr_dir, "corpus directory")->required();

  // plot-data
  std::string pd_model, pd_dir, pd_aspect = "a";
  auto* plot = app.add_subcommand("plot-data", "hand vs predicted data for one aspect");
  plot->add_option("--model", pd_model, "perceptron or svm model file")->required();
  plot->add_option("--aspect", pd_aspect, "aspect a|b|c")
      ->check(CLI::IsMember({"a", "b", "c"}));
  plot->add_option("dir", pd_dir, "corpus directory")->required();

  std::vector<const char*> argv;
  argv.push_back("expresso");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, msg, msg);
    (code == 0 ? out : err) << msg.str();
    return code;
  }

  try {
    g.geometry.validate();
    if (*analyze) {
      cmd_analyze(analyze_path_arg, g, out);
    } else if (*gen) {
      if (!opt_polylines.empty()) {
        const auto [lo, hi] = parse_range_pair(opt_polylines);
        spec.polyline_count = IntRange{static_cast<int>(lo), static_cast<int>(hi)};
      }
      auto set_range = [](const std::string& text, Range& range) {
        if (text.empty()) return;
        const auto [lo, hi] = parse_range_pair(text);
        range = Range{lo, hi};
      };
      set_range(opt_seglen, spec.segment_length_mm);
      set_range(opt_corner_mix, spec.corner_mix);
      set_range(opt_soft_mix, spec.soft_mix);
      set_range(opt_aspect_ratio, spec.canvas_aspect);
      set_range(opt_ldiv, spec.ldiv_range);
      set_range(opt_xdensity, spec.intersection_density);
      cmd_gen_corpus(spec, inject_k, gen_out, g, err);
    } else if (*trainp) {
      tp_cfg.init = parse_init(tp_init, tp_cfg.seed, env_seed, have_env_seed);
      cmd_train_perceptron(tp_dir, tp_cfg, tp_out, g, out, err);
    } else if (*predict) {
      cmd_predict(pr_model, pr_drawing, g, out);
    } else if (*trains) {
      cmd_train_svm(ts_dir, aspect_from_name(ts_aspect), ts_C, ts_out, g, out, err);
    } else if (*score) {
      cmd_svm_score(ss_model, ss_drawing, g, out);
    } else if (*correlate) {
      cmd_correlate(corr_dir, g, out);
    } else if (*plot) {
      cmd_plot_data(pd_model, aspect_from_name(pd_aspect), pd_dir, g, out);
    }
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cli

}  // namespace expresso
