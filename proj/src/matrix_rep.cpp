#include "octg2/matrix_rep.hpp"

namespace octg2 {

Mat left_oct_matrix(const Oct& a) {
  // Column j is a * e_j; with the table that is entry-wise
  // L[i][j] = sign(k, j) a_k where index(k, j) = i.
  Mat m(8);
  for (int j = 0; j < 8; ++j) {
    const Oct col = oct_mult(a, Oct::unit(j));
    for (int i = 0; i < 8; ++i) m(i, j) = col.c[i];
  }
  return m;
}

Mat right_oct_matrix(const Oct& b) {
  Mat m(8);
  for (int j = 0; j < 8; ++j) {
    const Oct col = oct_mult(Oct::unit(j), b);
    for (int i = 0; i < 8; ++i) m(i, j) = col.c[i];
  }
  return m;
}

QuaternionRep quaternion_rep_matrices() {
  // Same construction restricted to the quaternion block: Lq_i left-multiplies
  // by e_{i-1}, Rq_i right-multiplies.  Lq1 = Rq1 = I by the unit law.
  QuaternionRep rep;
  for (int i = 0; i < 4; ++i) {
    Mat l(4), r(4);
    for (int j = 0; j < 4; ++j) {
      const Oct lcol = oct_mult(Oct::unit(i), Oct::unit(j));
      const Oct rcol = oct_mult(Oct::unit(j), Oct::unit(i));
      for (int row = 0; row < 4; ++row) {
        l(row, j) = lcol.c[row];
        r(row, j) = rcol.c[row];
      }
    }
    rep.left[i] = l;
    rep.right[i] = r;
  }
  return rep;
}

}  // namespace octg2
