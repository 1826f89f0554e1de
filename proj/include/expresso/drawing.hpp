#ifndef EXPRESSO_DRAWING_HPP
#define EXPRESSO_DRAWING_HPP

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace expresso {

struct Point {
  double x = 0.0;  // mm
  double y = 0.0;  // mm
};

inline double distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// An ordered chain of vertices in mm. At least two vertices, consecutive
// vertices more than 1e-9 mm apart. A polyline whose first and last vertex
// coincide within 1e-6 mm is treated as closed.
struct Polyline {
  std::vector<Point> vertices;

  double arc_length() const;
  bool closed() const;
};

enum class Content { theory, setup, both };

// The five interpretation-dependent outputs: ends-bends ratio, soft bend
// percentage, corner bend percentage, composition type, main-form ratio.
struct TargetVector {
  std::array<double, 5> t{};

  double& operator[](std::size_t i) { return t[i]; }
  double operator[](std::size_t i) const { return t[i]; }
};

struct Annotations {
  double ldiv = 1.0;  // line-diversity score, > 0, dimensionless
  Content content = Content::both;
  std::optional<TargetVector> hand_targets;  // hand-measured outputs, if any
};

struct Drawing {
  std::string id;
  std::vector<Polyline> polylines;
  Annotations annotations;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Reads one drawing from the plain-text .drw format:
//
//   drawing <id>
//   ldiv <positive decimal>
//   content <theory|setup|both>
//   [targets <t1> <t2> <t3> <t4> <t5>]
//   polyline
//   <x> <y>
//   ...
//   end
//
// '#' starts a comment, blank lines are ignored. Throws ParseError with the
// offending line number on any malformed or invariant-violating input.
Drawing parse_drawing(const std::string& text);

// Emits the canonical text form; parse_drawing(serialize_drawing(d)) yields a
// drawing equal to d. Numbers carry 15 significant digits.
std::string serialize_drawing(const Drawing& d);

// Validates all Drawing invariants, throwing std::invalid_argument on the
// first violation. parse_drawing always returns validated drawings.
void validate_drawing(const Drawing& d);

Drawing load_drawing_file(const std::string& path);
void save_drawing_file(const Drawing& d, const std::string& path);

const char* content_name(Content c);

}  // namespace expresso

#endif
