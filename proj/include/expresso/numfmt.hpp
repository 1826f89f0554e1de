#ifndef EXPRESSO_NUMFMT_HPP
#define EXPRESSO_NUMFMT_HPP

#include <cstdio>
#include <string>

namespace expresso {

// Formats a double with the given number of significant digits and a
// guaranteed decimal point ("3" becomes "3.0"), so emitted files are
// unambiguous about being reals.
inline std::string format_real(double v, int significant_digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant_digits, v);
  std::string s(buf);
  if (s.find_first_of(".eEnN") == std::string::npos) s += ".0";
  return s;
}

}  // namespace expresso

#endif
