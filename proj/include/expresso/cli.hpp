#ifndef EXPRESSO_CLI_HPP
#define EXPRESSO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "expresso/expressiveness.hpp"
#include "expresso/geometry.hpp"

namespace expresso {

enum class OutputFormat { table, csv, json_lines };

// Everything the workflow derives from one drawing.
struct AnalysisRecord {
  std::string id;
  ElementaryAspects ea;
  InputVector input;
  TargetVector target;
  AspectValues aspects;  // hand values, from the measured elementary aspects
};

AnalysisRecord analyze_drawing(const Drawing& d, const GeometryConfig& cfg);

// All *.drw files of a directory, sorted by drawing id; duplicate ids are an
// error.
std::vector<Drawing> load_corpus_dir(const std::string& dir);

// Per-drawing analysis, parallelized across files, output sorted by id.
std::vector<AnalysisRecord> analyze_corpus(const std::vector<Drawing>& drawings,
                                           const GeometryConfig& cfg);

namespace cli {

// Runs one CLI invocation; returns the process exit code (0 success, 2 for
// unreadable or malformed input files, 1 for other failures).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli

}  // namespace expresso

#endif
