#include "octg2/oct_bch.hpp"

#include <stdexcept>

namespace octg2 {

Oct oct_bch(const Oct& x, const Oct& y, const std::vector<BchSeries>& series) {
  Oct z;
  for (const BchSeries& s : series) {
    for (const LieWord& w : s.words) {
      Oct p = (w.letters[0] == 'A') ? x : y;
      for (size_t i = 1; i < w.letters.size(); ++i)
        p = oct_mult(p, w.letters[i] == 'A' ? x : y);  // left fold
      z = z + w.coeff.get_d() * p;
    }
  }
  return z;
}

Oct oct_bch(const Oct& x, const Oct& y, int order) {
  if (order < 1) throw std::invalid_argument("oct_bch: order must be positive");
  std::vector<BchSeries> series;
  for (int k = 2; k <= order; ++k) series.push_back(bch_terms(k));
  return oct_bch(x, y, series);
}

}  // namespace octg2
