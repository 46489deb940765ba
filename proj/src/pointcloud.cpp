#include "octg2/pointcloud.hpp"

#include <cstdio>

namespace octg2 {

namespace {

// %.9g everywhere: 9 significant digits, byte-stable across runs.
void put_num(std::ostream& os, double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  os << buf;
}

void put_json_string(std::ostream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
}

}  // namespace

void write_csv(std::ostream& os, const PointCloud& cloud) {
  if (cloud.dim == 2)
    os << "x,y\n";
  else if (cloud.dim == 3)
    os << "x,y,z\n";
  else {
    for (int k = 0; k < cloud.dim; ++k) os << (k ? ",x" : "x") << (k + 1);
    os << '\n';
  }
  for (std::size_t p = 0; p < cloud.count(); ++p) {
    for (int k = 0; k < cloud.dim; ++k) {
      if (k) os << ',';
      put_num(os, cloud.at(p, k));
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const PointCloud& cloud) {
  os << "{\"meta\": {\"generator\": ";
  put_json_string(os, cloud.meta.generator);
  os << ", \"seed\": " << cloud.meta.seed << ", \"slots\": [";
  for (std::size_t i = 0; i < cloud.meta.slots.size(); ++i)
    os << (i ? ", " : "") << cloud.meta.slots[i];
  os << "], \"grid\": ";
  put_json_string(os, cloud.meta.grid);
  os << "}, \"points\": [";
  for (std::size_t p = 0; p < cloud.count(); ++p) {
    os << (p ? ", [" : "[");
    for (int k = 0; k < cloud.dim; ++k) {
      if (k) os << ", ";
      put_num(os, cloud.at(p, k));
    }
    os << ']';
  }
  os << "]}\n";
}

}  // namespace octg2
