#pragma once

#include <stdexcept>
#include <string>

#include "geometry.hpp"

namespace fekete {

// Malformed point-set text: bad field count, unparsable number, or a
// norm deviating from 1 by more than 1e-6.
class PointSetParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File could not be opened or written.
class PointSetIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Point-set text format: one point per line, "x y z" separated by single
// spaces, '#' starts a comment, blank lines ignored. Points are
// renormalized on load and rejected when |norm - 1| > 1e-6.
Configuration parse_pointset(const std::string& text);
std::string format_pointset(const Configuration& cfg);

Configuration load_pointset(const std::string& path);
void save_pointset(const Configuration& cfg, const std::string& path);

}  // namespace fekete
