#ifndef EXPRESSO_SYNTH_HPP
#define EXPRESSO_SYNTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "expresso/drawing.hpp"
#include "expresso/geometry.hpp"

namespace expresso {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// Seeded generator settings. Primitive mixes are fractions of the polyline
// budget drawn as zigzags (corner bends) resp. arcs/circles (soft bends);
// the remainder are straight strokes. trend_mode couples larger drawings
// (larger L) with finer detail (smaller S).
struct GenSpec {
  std::uint64_t seed = 42;
  int count = 30;
  IntRange polyline_count{4, 9};
  Range segment_length_mm{6.0, 24.0};
  Range corner_mix{0.2, 0.45};
  Range soft_mix{0.2, 0.45};
  Range canvas_aspect{0.6, 1.8};
  Range ldiv_range{1.0, 10.0};
  Range intersection_density{0.5, 2.5};  // deliberate crossing pairs per drawing
  bool trend_mode = false;

  void validate() const;
};

// Ground-truth metadata emitted alongside each generated drawing.
struct DrawingTruth {
  std::string id;
  int polylines = 0;
  int corners = 0;    // intended corner bends
  int softs = 0;      // intended soft bends (one per arc or circle)
  int crossings = 0;  // intended transversal intersections
  double ldiv = 0.0;
  double canvas_w = 0.0;
  double canvas_h = 0.0;
  std::string injected;  // empty, "a" or "b"
};

struct Corpus {
  std::vector<Drawing> drawings;
  std::vector<DrawingTruth> truth;
};

// Deterministic for a fixed spec; every drawing satisfies the drawing-model
// invariants and carries exact intended corner/soft counts.
Corpus generate(const GenSpec& spec);

struct InjectionIds {
  std::vector<std::string> aspect_a;
  std::vector<std::string> aspect_b;
};

// Appends k drawings whose hand-computed aspect (a) lies above every base
// value and k likewise for aspect (b); measured against the base corpus with
// the given geometry config. Requires a base corpus of at least 10 drawings.
InjectionIds extreme_injection(Corpus& corpus, int k, const GeometryConfig& cfg = {});

// Writes <id>.drw files plus manifest.csv into dir (created if needed).
void write_corpus(const Corpus& corpus, const std::string& dir);

std::string manifest_csv(const Corpus& corpus);

}  // namespace expresso

#endif
