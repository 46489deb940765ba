#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace octg2 {

// Dense square matrix of doubles, row-major.  Everything in this project is
// tiny (dim <= 8), so value semantics and plain loops are the right tool.
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int dim() const { return n_; }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

inline void check_same_dim(const Mat& a, const Mat& b, const char* who) {
  if (a.dim() != b.dim()) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

inline Mat operator+(const Mat& a, const Mat& b) {
  check_same_dim(a, b, "Mat::operator+");
  Mat r(a.dim());
  for (int i = 0; i < a.dim() * a.dim(); ++i) r.data()[i] = a.data()[i] + b.data()[i];
  return r;
}

inline Mat operator-(const Mat& a, const Mat& b) {
  check_same_dim(a, b, "Mat::operator-");
  Mat r(a.dim());
  for (int i = 0; i < a.dim() * a.dim(); ++i) r.data()[i] = a.data()[i] - b.data()[i];
  return r;
}

inline Mat operator*(double s, const Mat& a) {
  Mat r(a.dim());
  for (int i = 0; i < a.dim() * a.dim(); ++i) r.data()[i] = s * a.data()[i];
  return r;
}

inline Mat operator*(const Mat& a, const Mat& b) {
  check_same_dim(a, b, "Mat::operator*");
  const int n = a.dim();
  Mat r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

inline std::vector<double> mat_vec(const Mat& a, const std::vector<double>& x) {
  const int n = a.dim();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<double> y(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
  return y;
}

inline Mat transpose(const Mat& a) {
  Mat r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r(j, i) = a(i, j);
  return r;
}

// Determinant by LU with partial pivoting.
double det(Mat a);

// Largest entry magnitude; handy for exact-pattern assertions.
double max_abs(const Mat& a);

}  // namespace octg2
