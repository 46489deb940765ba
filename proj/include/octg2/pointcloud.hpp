#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace octg2 {

// Provenance carried with every exported cloud; enough to regenerate the
// file deterministically.
struct CloudMeta {
  std::string generator;        // e.g. "torus C5 C11 AB", "sample", "powers"
  std::uint64_t seed = 0;
  std::vector<int> slots;       // 1-based indices into the 7 imaginary coords
  std::string grid;             // grid / path description, free text
};

struct PointCloud {
  int dim = 3;                  // 2, 3 or 7 coordinates per point
  std::vector<double> data;     // row-major, size = dim * count
  CloudMeta meta;

  std::size_t count() const { return dim ? data.size() / dim : 0; }
  double at(std::size_t p, int k) const { return data[p * dim + k]; }
};

// CSV: header row ("x,y" / "x,y,z" / "x1..x7"), one point per row, 9
// significant digits.  Byte-deterministic; the determinism acceptance
// criterion compares raw files.
void write_csv(std::ostream& os, const PointCloud& cloud);

// JSON: {"meta": {...}, "points": [[...], ...]} with the same 9-digit
// number formatting.
void write_json(std::ostream& os, const PointCloud& cloud);

}  // namespace octg2
