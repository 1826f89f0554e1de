#include "expresso/drawing.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "expresso/numfmt.hpp"

namespace expresso {

namespace {

constexpr double kMinVertexGap = 1e-9;  // mm
constexpr double kClosureTol = 1e-6;    // mm

bool parse_real(const std::string& tok, double& out) {
  const char* s = tok.c_str();
  char* end = nullptr;
  out = std::strtod(s, &end);
  return end != s && *end == '\0' && std::isfinite(out);
}

// Strips comments and surrounding whitespace; empty result means skip.
std::string clean_line(const std::string& raw) {
  std::string s = raw;
  const auto hash = s.find('#');
  if (hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> toks;
  std::istringstream in(s);
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

}  // namespace

double Polyline::arc_length() const {
  double len = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i)
    len += distance(vertices[i - 1], vertices[i]);
  return len;
}

bool Polyline::closed() const {
  return vertices.size() >= 3 &&
         distance(vertices.front(), vertices.back()) <= kClosureTol;
}

const char* content_name(Content c) {
  switch (c) {
    case Content::theory: return "theory";
    case Content::setup: return "setup";
    case Content::both: return "both";
  }
  return "both";
}

void validate_drawing(const Drawing& d) {
  if (d.id.empty()) throw std::invalid_argument("drawing id is empty");
  if (!(d.annotations.ldiv > 0.0) || !std::isfinite(d.annotations.ldiv))
    throw std::invalid_argument("ldiv must be a positive finite real");
  if (d.polylines.empty()) throw std::invalid_argument("no polylines");
  if (d.annotations.hand_targets) {
    const auto& t = *d.annotations.hand_targets;
    for (int i = 0; i < 5; ++i)
      if (!(t[i] >= 0.0 && t[i] <= 1.0))
        throw std::invalid_argument("hand targets must lie in [0,1]");
    if (t[1] + t[2] > 1.0 + 1e-12)
      throw std::invalid_argument("soft and corner percentages exceed 1");
  }
  for (const auto& p : d.polylines) {
    if (p.vertices.size() < 2)
      throw std::invalid_argument("polyline with < 2 vertices");
    for (const auto& v : p.vertices)
      if (!std::isfinite(v.x) || !std::isfinite(v.y))
        throw std::invalid_argument("non-finite vertex coordinate");
    for (std::size_t i = 1; i < p.vertices.size(); ++i)
      if (distance(p.vertices[i - 1], p.vertices[i]) <= kMinVertexGap)
        throw std::invalid_argument("duplicate consecutive vertices");
  }
}

Drawing parse_drawing(const std::string& text) {
  Drawing d;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  enum class State { expect_drawing, expect_ldiv, expect_content, header_done, in_polyline };
  State state = State::expect_drawing;
  Polyline current;
  bool saw_targets = false;

  auto fail = [&](const std::string& why) -> ParseError { return ParseError(lineno, why); };

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = clean_line(raw);
    if (line.empty()) continue;
    const auto toks = split_tokens(line);
    const std::string& key = toks[0];

    if (state == State::in_polyline) {
      if (key == "end") {
        if (current.vertices.size() < 2) throw fail("polyline with < 2 vertices");
        d.polylines.push_back(std::move(current));
        current = Polyline{};
        state = State::header_done;
        continue;
      }
      double x, y;
      if (toks.size() != 2 || !parse_real(toks[0], x) || !parse_real(toks[1], y))
        throw fail("expected vertex '<x> <y>' or 'end'");
      if (!current.vertices.empty() &&
          distance(current.vertices.back(), Point{x, y}) <= kMinVertexGap)
        throw fail("duplicate consecutive vertices");
      current.vertices.push_back(Point{x, y});
      continue;
    }

    if (state == State::expect_drawing) {
      if (key != "drawing" || toks.size() != 2) throw fail("expected 'drawing <id>'");
      d.id = toks[1];
      state = State::expect_ldiv;
      continue;
    }
    if (state == State::expect_ldiv) {
      double v;
      if (key != "ldiv" || toks.size() != 2 || !parse_real(toks[1], v))
        throw fail("expected 'ldiv <decimal>'");
      if (!(v > 0.0)) throw fail("ldiv must be > 0");
      d.annotations.ldiv = v;
      state = State::expect_content;
      continue;
    }
    if (state == State::expect_content) {
      if (key != "content" || toks.size() != 2)
        throw fail("expected 'content <theory|setup|both>'");
      if (toks[1] == "theory") d.annotations.content = Content::theory;
      else if (toks[1] == "setup") d.annotations.content = Content::setup;
      else if (toks[1] == "both") d.annotations.content = Content::both;
      else throw fail("unknown content kind '" + toks[1] + "'");
      state = State::header_done;
      continue;
    }

    // header_done: optional targets, then polyline blocks
    if (key == "targets") {
      if (saw_targets) throw fail("duplicate targets line");
      if (!d.polylines.empty()) throw fail("targets must precede polylines");
      if (toks.size() != 6) throw fail("expected 'targets <t1> <t2> <t3> <t4> <t5>'");
      TargetVector t;
      for (int i = 0; i < 5; ++i) {
        if (!parse_real(toks[i + 1], t[i])) throw fail("bad target value");
        if (!(t[i] >= 0.0 && t[i] <= 1.0)) throw fail("target outside [0,1]");
      }
      d.annotations.hand_targets = t;
      saw_targets = true;
      continue;
    }
    if (key == "polyline") {
      if (toks.size() != 1) throw fail("unexpected tokens after 'polyline'");
      state = State::in_polyline;
      continue;
    }
    throw fail("unexpected line '" + line + "'");
  }

  ++lineno;
  if (state == State::in_polyline) throw fail("unterminated polyline (missing 'end')");
  if (state != State::header_done) throw fail("incomplete drawing header");
  if (d.polylines.empty()) throw fail("no polylines");
  validate_drawing(d);
  return d;
}

std::string serialize_drawing(const Drawing& d) {
  std::ostringstream out;
  out << "drawing " << d.id << "\n";
  out << "ldiv " << format_real(d.annotations.ldiv) << "\n";
  out << "content " << content_name(d.annotations.content) << "\n";
  if (d.annotations.hand_targets) {
    out << "targets";
    for (int i = 0; i < 5; ++i) out << ' ' << format_real((*d.annotations.hand_targets)[i]);
    out << "\n";
  }
  for (const auto& p : d.polylines) {
    out << "polyline\n";
    for (const auto& v : p.vertices)
      out << format_real(v.x) << ' ' << format_real(v.y) << "\n";
    out << "end\n";
  }
  return out.str();
}

Drawing load_drawing_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_drawing(buf.str());
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void save_drawing_file(const Drawing& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << serialize_drawing(d);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace expresso
