#include "octg2/lie.hpp"

#include <cmath>
#include <stdexcept>

namespace octg2 {

namespace {

double norm_1(const Mat& a) {
  double best = 0.0;
  for (int j = 0; j < a.dim(); ++j) {
    double col = 0.0;
    for (int i = 0; i < a.dim(); ++i) col += std::fabs(a(i, j));
    best = std::max(best, col);
  }
  return best;
}

// Solve A X = B in place (Gaussian elimination, partial pivoting).
Mat solve(Mat a, Mat b) {
  const int n = a.dim();
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) throw std::runtime_error("mat_exp: singular Pade denominator");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(b(piv, j), b(col, j));
      }
    const double inv = 1.0 / a(col, col);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a(r, col) * inv;
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      for (int j = 0; j < n; ++j) b(r, j) -= f * b(col, j);
    }
  }
  for (int r = 0; r < n; ++r) {
    const double inv = 1.0 / a(r, r);
    for (int j = 0; j < n; ++j) b(r, j) *= inv;
  }
  return b;
}

}  // namespace

Mat mat_exp(const Mat& m) {
  // Pade-13 coefficients (Higham, "The scaling and squaring method revisited").
  static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                             1187353796428800.0,  129060195264000.0,   10559470521600.0,
                             670442572800.0,      33522128640.0,       1323241920.0,
                             40840800.0,          960960.0,            16380.0,
                             182.0,               1.0};
  const double theta13 = 5.371920351148152;
  const int n = m.dim();

  int squarings = 0;
  double nrm = norm_1(m);
  if (nrm > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
    nrm = std::ldexp(nrm, -squarings);
  }
  Mat a = std::ldexp(1.0, -squarings) * m;

  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a2 * a4;
  const Mat id = Mat::identity(n);

  Mat u_inner = b[13] * a6 + b[11] * a4 + b[9] * a2;
  Mat u = a * (a6 * u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  Mat v_inner = b[12] * a6 + b[10] * a4 + b[8] * a2;
  Mat v = a6 * v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  Mat r = solve(v - u, v + u);
  for (int s = 0; s < squarings; ++s) r = r * r;
  return r;
}

Mat mat_commutator(const Mat& a, const Mat& b) {
  check_same_dim(a, b, "mat_commutator");
  return a * b - b * a;
}

double mat_norm(const Mat& m) {
  // Cyclic Jacobi on the symmetric B = M^T M; spectral norm = sqrt(max eig).
  const int n = m.dim();
  Mat b = transpose(m) * m;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += b(p, q) * b(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (b(p, q) == 0.0) continue;
        const double tau = (b(q, q) - b(p, p)) / (2.0 * b(p, q));
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double bkp = b(k, p), bkq = b(k, q);
          b(k, p) = c * bkp - s * bkq;
          b(k, q) = s * bkp + c * bkq;
        }
        for (int k = 0; k < n; ++k) {
          const double bpk = b(p, k), bqk = b(q, k);
          b(p, k) = c * bpk - s * bqk;
          b(q, k) = s * bpk + c * bqk;
        }
      }
  }
  double mx = 0.0;
  for (int i = 0; i < n; ++i) mx = std::max(mx, b(i, i));
  return std::sqrt(std::max(mx, 0.0));
}

Mat bch_eval(const Mat& a, const Mat& b, const std::vector<BchSeries>& series) {
  check_same_dim(a, b, "bch_eval");
  Mat z(a.dim());
  for (const BchSeries& s : series) {
    for (const LieWord& w : s.words) {
      Mat p = (w.letters[0] == 'A') ? a : b;
      for (size_t i = 1; i < w.letters.size(); ++i) p = p * (w.letters[i] == 'A' ? a : b);
      z = z + w.coeff.get_d() * p;
    }
  }
  return z;
}

Mat bch_eval(const Mat& a, const Mat& b, int order) {
  if (order < 1) throw std::invalid_argument("bch_eval: order must be positive");
  std::vector<BchSeries> series;
  for (int k = 2; k <= order; ++k) series.push_back(bch_terms(k));
  return bch_eval(a, b, series);
}

double bch_convergence_gap(const Mat& a, const Mat& b, int order) {
  check_same_dim(a, b, "bch_convergence_gap");
  const Mat target = mat_exp(a) * mat_exp(b);
  Mat expo = a + b;
  if (order >= 2) expo = expo + bch_eval(a, b, order);
  return mat_norm(target - mat_exp(expo));
}

std::vector<Mat> one_param_curve(const Mat& x, const std::vector<double>& t_values) {
  std::vector<Mat> out;
  out.reserve(t_values.size());
  for (double t : t_values) out.push_back(mat_exp(t * x));
  return out;
}

double exp_derivative_gap(const Mat& x, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("exp_derivative_gap: dt must be positive");
  const Mat diff = (1.0 / dt) * (mat_exp(dt * x) - Mat::identity(x.dim()));
  return mat_norm(x - diff);
}

std::vector<Mat> so_basis(int n) {
  if (n < 2) throw std::invalid_argument("so_basis: n must be at least 2");
  std::vector<Mat> out;
  out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      Mat m(n);
      m(j, i) = 1.0;
      m(i, j) = -1.0;
      out.push_back(m);
    }
  return out;
}

}  // namespace octg2
