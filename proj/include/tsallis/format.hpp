#pragma once

#include <cstdio>
#include <string>

namespace tsallis {

// Every number in user-facing output is printed with 15 significant digits.
inline std::string format_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace tsallis
