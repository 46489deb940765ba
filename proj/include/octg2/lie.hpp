#pragma once

#include <vector>

#include "octg2/bch.hpp"
#include "octg2/matrix.hpp"

namespace octg2 {

// e^M by Pade-13 with scaling and squaring (Higham 2005).  Relative accuracy
// around 1e-12 on these small well-scaled inputs; for antisymmetric M the
// result is orthogonal with determinant 1 to 1e-10.
Mat mat_exp(const Mat& m);

// AB - BA.
Mat mat_commutator(const Mat& a, const Mat& b);

// Spectral norm (largest singular value), computed by a cyclic Jacobi
// eigensolve of A^T A.  This is the norm behind every printed gap figure.
double mat_norm(const Mat& m);

// Evaluates the BCH correction sum_{k=2..n} sum_w coeff(w) * prod(letters),
// words as left-to-right matrix products; the degree-1 part A+B is excluded.
Mat bch_eval(const Mat& a, const Mat& b, int order);
Mat bch_eval(const Mat& a, const Mat& b, const std::vector<BchSeries>& series);

// || e^A e^B - e^{A+B+BCH_n(A,B)} ||  with n = 0 meaning no correction.
double bch_convergence_gap(const Mat& a, const Mat& b, int order);

// [ e^{t x} for t in t_values ].
std::vector<Mat> one_param_curve(const Mat& x, const std::vector<double>& t_values);

// || x - (e^{dt x} - I)/dt ||, the finite-difference defect of d/dt e^{tx} at 0.
double exp_derivative_gap(const Mat& x, double dt);

// Antisymmetric generator basis of so(n), n(n-1)/2 matrices.  Order: pairs
// (i,j), i < j, enumerated by increasing j then i — (1,2), (1,3), (2,3),
// (1,4), ... — with +1 at entry (j,i) and -1 at (i,j).  This matches the
// index arithmetic of the preservation counterexamples (generator 1 plus
// generator 15 is a derivation, 1 plus 16 is not).
std::vector<Mat> so_basis(int n);

}  // namespace octg2
