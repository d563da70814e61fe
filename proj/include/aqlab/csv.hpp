#pragma once

// Number formatting shared by every CSV writer. Doubles use the shortest
// representation that parses back to the identical bit pattern, so values
// recomputed from emitted files match the in-memory originals exactly.

#include <charconv>
#include <stdexcept>
#include <string>

namespace aqlab::csv {

inline std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& field) {
  std::size_t used = 0;
  const double v = std::stod(field, &used);
  if (used != field.size()) throw std::invalid_argument("bad numeric field: " + field);
  return v;
}

inline long parse_long(const std::string& field) {
  std::size_t used = 0;
  const long v = std::stol(field, &used);
  if (used != field.size()) throw std::invalid_argument("bad integer field: " + field);
  return v;
}

}  // namespace aqlab::csv
