#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "octg2/matrix.hpp"
#include "octg2/octonion.hpp"
#include "octg2/pointcloud.hpp"
#include "octg2/rational.hpp"

namespace octg2 {

// ----- g2 bases -----

// A basis generator with exact entries: matrix = m / sqrt(3) if
// scaled_by_sqrt3, else m.  Integer entries make the exact-arithmetic
// derivation checks possible (scaling does not affect derivation-ness).
struct GenSpec {
  bool scaled_by_sqrt3 = false;
  std::array<std::array<int, 7>, 7> m{};
  Mat to_mat() const;
};

struct G2AlgebraBasis {
  std::string name;          // "cacciatori" | "arenas"
  std::vector<Mat> matrices; // 14 antisymmetric 7x7 derivations
};

const std::array<GenSpec, 14>& cacciatori_specs();   // C1..C14
const std::array<GenSpec, 14>& arenas_specs();       // X1..X7 then Y1..Y7

G2AlgebraBasis basis_cacciatori();
G2AlgebraBasis basis_arenas();

// C_i / X_i / Y_i by 1-based index, for tests and the CLI generator names.
Mat cacciatori(int i);
Mat arenas_x(int i);
Mat arenas_y(int i);

// ----- derivation oracle -----

// True iff M(x cross y) = Mx cross y + x cross My on all 21 standard-basis
// pairs, to `tol` in floating point.
bool is_derivation(const Mat& m, double tol = 1e-10);

// Exact-arithmetic variant over rational matrices (row-major 49 entries).
bool is_derivation_exact(const std::array<Rat, 49>& m);

// Solves the derivation identity as a linear system over the 49 matrix
// entries in exact rational arithmetic and returns a basis of the solution
// space.  Throws if the dimension is not 14.
std::vector<Mat> derivation_nullspace();

// Least-squares residual of projecting `m` onto span(basis_mats); the span
// membership oracle for both published bases.
double span_residual(const Mat& m, const std::vector<Mat>& basis_mats);

// ----- the action and its preservation -----

// g acts on the imaginary part only; the real component is copied bitwise.
Oct action(const Mat& g, const Oct& x);

struct PreservationReport {
  double mult_gap;   // || g(xy) - g(x)g(y) ||
  double norm_gap;   // | ||g(xy)|| - ||g(x)|| ||g(y)|| |
  double cross_gap;  // || g(x cross y) - g(x) cross g(y) ||
};

PreservationReport verify_preservation(const Mat& g, const Oct& x, const Oct& y);

// ----- cross-product closure by dimension -----

struct CrossClosureReport {
  bool closed = false;
  std::vector<int> leaked_slots;  // 1-based imaginary slots > d that fired
  std::vector<int> zero_slots;    // slots <= d identically zero on all probes
};

// Places deterministic random rational coefficients in imaginary slots 1..d,
// evaluates the cross product exactly, and reports which output slots beyond
// d ever fire.  closed is true exactly for d in {0, 1, 3, 7}.
CrossClosureReport cross_closure(int d, int probes = 24);

// ----- torus orbits -----

struct TorusGrid {
  int nu = 80;
  int nv = 80;
  double u_max;        // default 2 pi
  double v_max;        // default 2 pi sqrt(3)/2, the ranges of the paper's plot
  TorusGrid();
};

enum class MulOrder { kAB, kBA };

// Point cloud of selected imaginary slots of action(e^{uA} e^{vB}, w) over an
// inclusive endpoint grid, u outer and v inner (row-major).
PointCloud torus_orbit(const Mat& a, const Mat& b, const Oct& w, const TorusGrid& grid,
                       MulOrder order, const std::vector<int>& slots);
PointCloud torus_orbit_serial(const Mat& a, const Mat& b, const Oct& w, const TorusGrid& grid,
                              MulOrder order, const std::vector<int>& slots);

// ----- the 14-angle parametrization -----

using G2Params = std::array<double, 14>;
using G2Ranges = std::array<std::pair<double, double>, 14>;

// The sampling hypercube of the shape experiments:
// [0,pi], [0,pi/2], [0,pi/2], [0,2pi], [0,pi/4], [0,pi], [0,pi/6],
// [0,pi/2], [0,2pi], [0,pi/2], [0,pi], [0,pi], [0,pi/2], [0,pi].
G2Ranges cover_g2();

Mat s_map(double x, double y, double z);
Mat sigma_map(double xp, double yp, double zp);
Mat u_map(double x, double y, double z, double xp, double yp, double zp);
Mat g_param(const G2Params& p);

// ----- sampling and orbits -----

// Uniform over each range, mt19937_64 seeded as given, 14 draws per sample in
// parameter order (that layout is part of the reproducibility contract).
std::vector<G2Params> sample_g2(int count, const G2Ranges& ranges, std::uint64_t seed);

// Cloud of selected slots of g_param(p) . w for each sample (no accumulation).
PointCloud sample_cloud(const std::vector<G2Params>& samples, const std::array<double, 7>& w,
                        const std::vector<int>& slots);
PointCloud sample_cloud_serial(const std::vector<G2Params>& samples, const std::array<double, 7>& w,
                               const std::vector<int>& slots);

// Iterates v <- g_param(p_i) . v / |v| along the path and emits the running
// prefix sums of the v sequence, sliced to the selected slots.
PointCloud accumulate_action(const std::vector<G2Params>& path, const std::array<double, 7>& w,
                             bool normalize, const std::vector<int>& slots);

// Selected slots of g^i . w for i = 1..n; every point keeps |w|.
PointCloud power_orbit(const Mat& g, const std::array<double, 7>& w, int n,
                       const std::vector<int>& slots);
PointCloud power_orbit_serial(const Mat& g, const std::array<double, 7>& w, int n,
                              const std::vector<int>& slots);

// The fixed probe vector of the shape experiments (printed in the sampling
// section); handy as a CLI default.
std::array<double, 7> shape_probe_w();

}  // namespace octg2
