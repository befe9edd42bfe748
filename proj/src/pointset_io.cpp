#include "pointset_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fekete {

Configuration parse_pointset(const std::string& text) {
  std::vector<UnitVector> pts;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;

    std::istringstream fields(line.substr(start));
    double x, y, z;
    std::string extra;
    if (!(fields >> x >> y >> z)) {
      throw PointSetParseError("point-set line " + std::to_string(line_no) +
                               ": expected three numeric fields");
    }
    if (fields >> extra) {
      throw PointSetParseError("point-set line " + std::to_string(line_no) +
                               ": trailing content after three fields");
    }
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!std::isfinite(n) || std::fabs(n - 1.0) > 1e-6) {
      throw PointSetParseError("point-set line " + std::to_string(line_no) +
                               ": norm deviates from 1 by more than 1e-6");
    }
    pts.emplace_back(x, y, z);
  }
  if (pts.empty()) {
    throw PointSetParseError("point-set: no points found");
  }
  return Configuration(std::move(pts));
}

std::string format_pointset(const Configuration& cfg) {
  std::string out;
  char buf[96];
  for (const auto& p : cfg.points()) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", p.x(), p.y(), p.z());
    out += buf;
  }
  return out;
}

Configuration load_pointset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PointSetIoError("cannot open point-set file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pointset(buf.str());
}

void save_pointset(const Configuration& cfg, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw PointSetIoError("cannot open point-set file for writing: " + path);
  }
  out << format_pointset(cfg);
  if (!out) {
    throw PointSetIoError("failed writing point-set file: " + path);
  }
}

}  // namespace fekete
