#include <doctest.h>

#include <cmath>
#include <random>

#include "octg2/g2.hpp"
#include "octg2/lie.hpp"

using namespace octg2;

namespace {

constexpr double kPi = 3.14159265358979323846;

Mat random_mat(std::mt19937_64& rng, int n, double scale) {
  Mat m(n);
  for (int i = 0; i < n * n; ++i)
    m.data()[i] = scale * (2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0);
  return m;
}

Mat antisymmetrize(const Mat& m) {
  Mat a = m;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) a(i, j) = 0.5 * (m(i, j) - m(j, i));
  return a;
}

// Taylor sum with pre-scaling; the independent accuracy oracle for mat_exp.
Mat exp_taylor(const Mat& m, int terms = 60) {
  int s = 0;
  double nrm = 0.0;
  for (int i = 0; i < m.dim() * m.dim(); ++i) nrm = std::max(nrm, std::fabs(m.data()[i]));
  while (nrm > 0.25) {
    nrm /= 2;
    ++s;
  }
  Mat a = std::ldexp(1.0, -s) * m;
  Mat acc = Mat::identity(m.dim());
  Mat term = Mat::identity(m.dim());
  for (int k = 1; k <= terms; ++k) {
    term = (1.0 / k) * (term * a);
    acc = acc + term;
  }
  for (int i = 0; i < s; ++i) acc = acc * acc;
  return acc;
}

}  // namespace

TEST_CASE("mat_exp basics and accuracy contract") {
  CHECK(mat_exp(Mat(5)) == Mat::identity(5));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 25; ++t) {
    const Mat m = random_mat(rng, 7, 3.0);
    const Mat a = mat_exp(m);
    const Mat b = exp_taylor(m);
    double scale = mat_norm(b);
    CHECK(mat_norm(a - b) / scale < 1e-12);
  }
  // antisymmetric inputs exponentiate to rotations
  for (int t = 0; t < 25; ++t) {
    const Mat m = antisymmetrize(random_mat(rng, 7, 2.0));
    const Mat g = mat_exp(m);
    CHECK(max_abs(g * transpose(g) - Mat::identity(7)) < 1e-10);
    CHECK(std::fabs(det(g) - 1.0) < 1e-10);
  }
}

TEST_CASE("printed one-generator exponentials") {
  const double z = 0.7;
  const double c = std::cos(z), s = std::sin(z);
  const double c2 = std::cos(2 * z / std::sqrt(3.0)), s2 = std::sin(2 * z / std::sqrt(3.0));
  const double c1 = std::cos(z / std::sqrt(3.0)), s1 = std::sin(z / std::sqrt(3.0));

  SUBCASE("exp(z C5): plain-angle rotation in slots {2,3,6,7}") {
    Mat want = Mat::identity(7);
    want(1, 1) = c;
    want(1, 5) = -s;
    want(2, 2) = c;
    want(2, 6) = s;
    want(5, 1) = s;
    want(5, 5) = c;
    want(6, 2) = -s;
    want(6, 6) = c;
    CHECK(max_abs(mat_exp(z * cacciatori(5)) - want) < 1e-13);
  }

  SUBCASE("exp(z C11)") {
    Mat want(7);
    want(0, 0) = c2;
    want(0, 3) = -s2;
    want(3, 0) = s2;
    want(3, 3) = c2;
    want(1, 1) = c1;
    want(1, 6) = -s1;
    want(6, 1) = s1;
    want(6, 6) = c1;
    want(2, 2) = c1;
    want(2, 5) = s1;
    want(5, 2) = -s1;
    want(5, 5) = c1;
    want(4, 4) = 1.0;
    CHECK(max_abs(mat_exp(z * cacciatori(11)) - want) < 1e-13);
  }

  SUBCASE("exp(z C13)") {
    Mat want(7);
    want(0, 0) = c2;
    want(0, 5) = -s2;
    want(5, 0) = s2;
    want(5, 5) = c2;
    want(1, 1) = c1;
    want(1, 4) = -s1;
    want(4, 1) = s1;
    want(4, 4) = c1;
    want(2, 2) = c1;
    want(2, 3) = -s1;
    want(3, 2) = s1;
    want(3, 3) = c1;
    want(6, 6) = 1.0;
    CHECK(max_abs(mat_exp(z * cacciatori(13)) - want) < 1e-13);
  }

  SUBCASE("exp(z C9): the sampled symbolic matrix") {
    Mat want(7);
    want(0, 0) = c2;
    want(0, 1) = -s2;
    want(1, 0) = s2;
    want(1, 1) = c2;
    want(2, 2) = 1.0;
    want(3, 3) = c1;
    want(3, 6) = s1;
    want(6, 3) = -s1;
    want(6, 6) = c1;
    want(4, 4) = c1;
    want(4, 5) = -s1;
    want(5, 4) = s1;
    want(5, 5) = c1;
    CHECK(max_abs(mat_exp(z * cacciatori(9)) - want) < 1e-13);
  }

  SUBCASE("exp(z C14)") {
    Mat want(7);
    want(0, 0) = c2;
    want(0, 6) = -s2;
    want(6, 0) = s2;
    want(6, 6) = c2;
    want(1, 1) = c1;
    want(1, 3) = s1;
    want(3, 1) = -s1;
    want(3, 3) = c1;
    want(2, 2) = c1;
    want(2, 4) = -s1;
    want(4, 2) = s1;
    want(4, 4) = c1;
    want(5, 5) = 1.0;
    CHECK(max_abs(mat_exp(z * cacciatori(14)) - want) < 1e-13);
  }
}

TEST_CASE("so(4) combined generator matches the printed block rotation") {
  const auto so4 = so_basis(4);
  REQUIRE(so4.size() == 6);
  // printed first generator: theta at (1,2) and (3,4) above the diagonal
  const double theta = kPi / 7.0;
  const Mat gen = (-1.0) * (so4[0] + so4[5]);  // our generators carry +1 below the diagonal
  const Mat g = mat_exp(theta * gen);
  Mat want(4);
  const double c = std::cos(theta), s = std::sin(theta);
  want(0, 0) = c;
  want(0, 1) = s;
  want(1, 0) = -s;
  want(1, 1) = c;
  want(2, 2) = c;
  want(2, 3) = s;
  want(3, 2) = -s;
  want(3, 3) = c;
  CHECK(max_abs(g - want) < 1e-13);
}

TEST_CASE("so_basis shape") {
  CHECK(so_basis(2).size() == 1);
  const auto so7 = so_basis(7);
  CHECK(so7.size() == 21);
  for (const Mat& m : so7) CHECK(max_abs(m + transpose(m)) == 0.0);
  // every scaled generator exponentiates to a rotation
  for (const Mat& m : so7) {
    const Mat g = mat_exp((kPi / 5.0) * m);
    CHECK(max_abs(g * transpose(g) - Mat::identity(7)) < 1e-12);
    CHECK(det(g) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(so_basis(1), std::invalid_argument);
}

TEST_CASE("matrix norm") {
  CHECK(mat_norm(Mat::identity(5)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::fabs(mat_norm(cacciatori(14)) - 2.0 / std::sqrt(3.0)) < 1e-9);
  CHECK(std::fabs(mat_norm(0.01 * cacciatori(14)) - 0.011547) < 1e-6);
  // submultiplicative / subadditive
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    const Mat a = random_mat(rng, 6, 2.0), b = random_mat(rng, 6, 2.0);
    CHECK(mat_norm(a * b) <= mat_norm(a) * mat_norm(b) + 1e-10);
    CHECK(mat_norm(a + b) <= mat_norm(a) + mat_norm(b) + 1e-10);
  }
}

TEST_CASE("one-parameter subgroup") {
  const Mat x = cacciatori(14);
  const auto curve = one_param_curve(x, {0.0, 0.5, 1.0});
  CHECK(curve[0] == Mat::identity(7));
  for (double t : {0.3, 1.0, 2.7}) CHECK(std::fabs(mat_norm(mat_exp(t * x)) - 1.0) < 1e-12);
  CHECK(std::fabs(mat_norm(mat_exp(1e-4 * x) - Mat::identity(7)) - 0.00011547) < 1e-8);
  CHECK(std::fabs(mat_norm(mat_exp(1.0 * x) - Mat::identity(7)) - 1.09161) < 1e-5);
  // group law and inverses
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const double s = 3.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double u = 3.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    CHECK(max_abs(mat_exp(s * x) * mat_exp(u * x) - mat_exp((s + u) * x)) < 1e-10);
    CHECK(max_abs(mat_exp(s * x) * mat_exp(-s * x) - Mat::identity(7)) < 1e-10);
  }
}

TEST_CASE("derivative of the exponential at zero") {
  CHECK(std::fabs(exp_derivative_gap(cacciatori(14), 0.01) - 0.00666664) < 1e-6);
  CHECK(std::fabs(exp_derivative_gap(cacciatori(14), 0.0001) - 0.0000666667) < 1e-8);
  CHECK(exp_derivative_gap(Mat(7), 0.5) == 0.0);
  CHECK_THROWS_AS(exp_derivative_gap(Mat(7), 0.0), std::invalid_argument);
}

TEST_CASE("commutators of the basis") {
  CHECK_THROWS_AS(mat_commutator(Mat(3), Mat(4)), std::invalid_argument);
  const Mat zero7(7);
  CHECK(max_abs(mat_commutator(cacciatori(5), cacciatori(11)) - zero7) == 0.0);
  const Mat c = mat_commutator(cacciatori(1), cacciatori(14));
  CHECK(std::fabs(c(0, 3) - 1.1547) < 1e-4);
  CHECK(std::fabs(c(3, 0) + 1.1547) < 1e-4);
  // [C1, C14] = -C11, a closure identity of the algebra
  CHECK(max_abs(c + cacciatori(11)) < 1e-15);
  const Mat c313 = mat_commutator(cacciatori(3), cacciatori(13));
  CHECK(std::fabs(c313(0, 6) + 2.0 / std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("bch_eval") {
  const Mat a = cacciatori(1), b = cacciatori(14);
  const Mat bch2 = bch_eval(a, b, 2);
  CHECK(max_abs(bch2 - 0.5 * mat_commutator(a, b)) < 1e-15);
  CHECK(std::fabs(bch2(0, 3) - 1.0 / std::sqrt(3.0)) < 1e-12);
  CHECK(max_abs(bch_eval(a, a, 6)) < 1e-13);
  CHECK(max_abs(bch_eval(cacciatori(5), cacciatori(11), 8)) <= 1e-14);
}

TEST_CASE("bch convergence gaps descend") {
  const Mat a = cacciatori(1), b = cacciatori(14);
  const double g0 = bch_convergence_gap(a, b, 0);
  const double g2 = bch_convergence_gap(a, b, 2);
  const double g4 = bch_convergence_gap(a, b, 4);
  const double g8 = bch_convergence_gap(a, b, 8);
  CHECK(std::fabs(g0 - 0.52272) < 1e-4);
  CHECK(std::fabs(g2 - 0.176082) < 1e-4);
  CHECK(std::fabs(g4 - 0.014675051) < 1e-6);  // derived: the order-4 step of the descent
  CHECK(std::fabs(g8 - 0.000159433) < 1e-6);
  CHECK(g0 > g2);
  CHECK(g2 > g4);
  CHECK(g4 > g8);
}
