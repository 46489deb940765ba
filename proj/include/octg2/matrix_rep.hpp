#pragma once

#include <array>

#include "octg2/matrix.hpp"
#include "octg2/octonion.hpp"

namespace octg2 {

// Left multiplication as an 8x8 matrix on coefficient columns:
// left_oct_matrix(a) . b == oct_mult(a, b).
Mat left_oct_matrix(const Oct& a);

// Right multiplication: right_oct_matrix(b) . a == oct_mult(a, b).
Mat right_oct_matrix(const Oct& b);

struct QuaternionRep {
  std::array<Mat, 4> left;   // Lq1..Lq4, Lq1 = I
  std::array<Mat, 4> right;  // Rq1..Rq4, Rq1 = I
};

// The 4x4 representation matrices of quaternion multiplication.
// sum_i a_i Lq_i applied to (b1..b4) gives the product from the left,
// sum_i b_i Rq_i applied to (a1..a4) gives it from the right.
QuaternionRep quaternion_rep_matrices();

}  // namespace octg2
