#pragma once

#include <cstdio>
#include <string>

namespace qrb::detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace qrb::detail
