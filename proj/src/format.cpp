#include "clifford/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace clifford {

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

}  // namespace clifford

namespace clifford {

double round_to_15(double x) { return std::strtod(format_real(x).c_str(), nullptr); }

}  // namespace clifford
