#include "octg2/matrix.hpp"

#include <cmath>

namespace octg2 {

double det(Mat a) {
  const int n = a.dim();
  double d = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return d;
}

double max_abs(const Mat& a) {
  double m = 0.0;
  for (int i = 0; i < a.dim() * a.dim(); ++i) m = std::max(m, std::fabs(a.data()[i]));
  return m;
}

}  // namespace octg2
