#include "imac/numeric.hpp"

#include <cstdio>
#include <cstdlib>

namespace imac {

std::string format_sig9(double x) {
  char buf[40];
  for (int prec = 1; prec <= 9; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) return buf;
  }
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

}  // namespace imac
