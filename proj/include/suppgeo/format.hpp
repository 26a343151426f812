#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace suppgeo {

// Shortest decimal form that parses back to the same double; keeps emitted
// CSV/JSON byte-stable and round-trip exact.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace suppgeo
