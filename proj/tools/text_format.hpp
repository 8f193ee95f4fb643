#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace curvop_cli {

/// 17 significant digits: doubles round-trip exactly and output is
/// byte-stable across runs. Negative zero and NaN are canonicalized.
inline std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string join17(const std::vector<double>& values, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += fmt17(values[i]);
  }
  return out;
}

inline const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace curvop_cli
