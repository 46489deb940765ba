#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace octg2 {

// Signed multiplication table of the octonion basis e0..e7: e_i * e_j =
// kBasisSign[i][j] * e_{kBasisIndex[i][j]}.  e0 is the unit, e1..e7 are the
// imaginary units.  These constants are the ground truth; a test regenerates
// the table from the Cayley-Dickson construction and asserts equality.
inline constexpr int kBasisSign[8][8] = {
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
};

inline constexpr int kBasisIndex[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 3, 2, 5, 4, 7, 6},
    {2, 3, 0, 1, 6, 7, 4, 5},
    {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3},
    {5, 4, 7, 6, 1, 0, 3, 2},
    {6, 7, 4, 5, 2, 3, 0, 1},
    {7, 6, 5, 4, 3, 2, 1, 0},
};

// Octonion over a scalar ring S.  S = double for numerics, S = Rat for the
// exact algebraic identity checks.  c[0] is the real part, c[1..7] the
// coefficients of e1..e7.  Real numbers occupy c[0], complex numbers c[0..1],
// quaternions c[0..3].
template <class S>
struct Octonion {
  std::array<S, 8> c{};

  static Octonion unit(int i) {
    Octonion r;
    r.c[i] = S(1);
    return r;
  }
  static Octonion one() { return unit(0); }

  S& operator[](int i) { return c[i]; }
  const S& operator[](int i) const { return c[i]; }

  friend Octonion operator+(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend Octonion operator-(const Octonion& a, const Octonion& b) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend Octonion operator-(const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = -a.c[i];
    return r;
  }
  friend Octonion operator*(const S& s, const Octonion& a) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = s * a.c[i];
    return r;
  }
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
};

using Oct = Octonion<double>;

template <class S>
Octonion<S> oct_mult(const Octonion<S>& a, const Octonion<S>& b) {
  Octonion<S> r;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i] == S(0)) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.c[j] == S(0)) continue;
      const S term = a.c[i] * b.c[j];
      if (kBasisSign[i][j] > 0)
        r.c[kBasisIndex[i][j]] += term;
      else
        r.c[kBasisIndex[i][j]] -= term;
    }
  }
  return r;
}

template <class S>
Octonion<S> oct_conjugate(const Octonion<S>& a) {
  Octonion<S> r = a;
  for (int i = 1; i < 8; ++i) r.c[i] = -r.c[i];
  return r;
}

template <class S>
S oct_norm_sq(const Octonion<S>& a) {
  S s(0);
  for (int i = 0; i < 8; ++i) s += a.c[i] * a.c[i];
  return s;
}

inline double oct_norm(const Oct& a) { return std::sqrt(oct_norm_sq(a)); }

template <class S>
Octonion<S> oct_commutator(const Octonion<S>& a, const Octonion<S>& b) {
  return oct_mult(a, b) - oct_mult(b, a);
}

template <class S>
Octonion<S> oct_associator(const Octonion<S>& a, const Octonion<S>& b, const Octonion<S>& c) {
  return oct_mult(oct_mult(a, b), c) - oct_mult(a, oct_mult(b, c));
}

// x cross y = [x, y] / 2.  The real component is identically zero.
template <class S>
Octonion<S> cross7(const Octonion<S>& a, const Octonion<S>& b) {
  Octonion<S> r = oct_commutator(a, b);
  for (int i = 0; i < 8; ++i) r.c[i] = r.c[i] / S(2);
  return r;
}

template <class S>
Octonion<S> oct_power(const Octonion<S>& a, int n) {
  if (n < 0) throw std::invalid_argument("oct_power: negative exponent");
  Octonion<S> r = Octonion<S>::one();
  for (int k = 0; k < n; ++k) r = oct_mult(r, a);
  return r;
}

// Closed form e^x = e^Re(x) (cos|Im x| + Im(x)/|Im x| sin|Im x|); the
// |Im x| -> 0 direction is the removable sin(u)/u -> 1 limit.
inline Oct oct_exp(const Oct& x) {
  double u2 = 0.0;
  for (int i = 1; i < 8; ++i) u2 += x.c[i] * x.c[i];
  const double u = std::sqrt(u2);
  const double f = std::exp(x.c[0]);
  Oct r;
  if (u < 1e-12) {
    r.c[0] = f * std::cos(u);
    for (int i = 1; i < 8; ++i) r.c[i] = f * x.c[i];  // sin(u)/u -> 1
    return r;
  }
  const double s = f * std::sin(u) / u;
  r.c[0] = f * std::cos(u);
  for (int i = 1; i < 8; ++i) r.c[i] = s * x.c[i];
  return r;
}

// Partial Taylor sum sum_{k=0..n} x^k / k!, evaluated with oct_mult.
inline Oct oct_exp_series(const Oct& x, int n) {
  if (n < 0) throw std::invalid_argument("oct_exp_series: negative order");
  Oct acc;
  Oct term = Oct::one();
  acc = term;
  for (int k = 1; k <= n; ++k) {
    term = oct_mult(term, x);
    for (int i = 0; i < 8; ++i) term.c[i] /= k;
    acc = acc + term;
  }
  return acc;
}

struct OctLogError : std::domain_error {
  using std::domain_error::domain_error;
};

// Branch k of the logarithm:
//   x = ln|y| + Im(y/|y|) (arccos Re(y/|y|) + 2 pi k) / sin(arccos Re(y/|y|)).
// Near-real input sits on the branch singularity (the sin factor vanishes);
// there we return the real logarithm for k = 0 with positive real part and
// refuse everything else.
inline Oct oct_log(const Oct& y, int k) {
  const double ny = oct_norm(y);
  if (ny == 0.0) throw OctLogError("oct_log: zero octonion has no logarithm");
  double u2 = 0.0;
  for (int i = 1; i < 8; ++i) u2 += (y.c[i] / ny) * (y.c[i] / ny);
  const double im_norm = std::sqrt(u2);
  if (im_norm < 1e-8) {
    if (y.c[0] > 0.0 && k == 0) {
      Oct r;
      r.c[0] = std::log(ny);
      return r;
    }
    throw OctLogError("oct_log: input too close to the real axis for branch k != 0");
  }
  double re = y.c[0] / ny;
  if (re > 1.0) re = 1.0;
  if (re < -1.0) re = -1.0;
  const double theta = std::acos(re);
  const double ux = theta + 2.0 * M_PI * static_cast<double>(k);
  const double scale = ux / std::sin(theta);
  Oct r;
  r.c[0] = std::log(ny);
  for (int i = 1; i < 8; ++i) r.c[i] = (y.c[i] / ny) * scale;
  return r;
}

// Forgetful map into the complex plane: Im(x)/|Im x| collapses to i.
inline std::complex<double> oct_forget(const Oct& x) {
  double u2 = 0.0;
  for (int i = 1; i < 8; ++i) u2 += x.c[i] * x.c[i];
  const double u = std::sqrt(u2);
  return std::exp(x.c[0]) * std::complex<double>(std::cos(u), std::sin(u));
}

// ----- Cayley-Dickson construction -----

enum class CdLevel { kReal = 1, kComplex = 2, kQuaternion = 4, kOctonion = 8 };

namespace detail {

template <class S>
void cd_conj(S* x, int len) {
  for (int i = 1; i < len; ++i) x[i] = -x[i];
}

// One doubling step applied recursively: (A,B)(C,D) = (AC - D*B, DA + BC*).
template <class S>
void cd_mult_rec(const S* a, const S* b, S* out, int len) {
  if (len == 1) {
    out[0] = a[0] * b[0];
    return;
  }
  const int h = len / 2;
  const S* A = a;
  const S* B = a + h;
  const S* C = b;
  const S* D = b + h;
  std::array<S, 8> t1{}, t2{}, conj_buf{};
  // AC - D*B
  cd_mult_rec(A, C, out, h);
  for (int i = 0; i < h; ++i) conj_buf[i] = D[i];
  cd_conj(conj_buf.data(), h);
  cd_mult_rec(conj_buf.data(), B, t1.data(), h);
  for (int i = 0; i < h; ++i) out[i] -= t1[i];
  // DA + BC*
  cd_mult_rec(D, A, out + h, h);
  for (int i = 0; i < h; ++i) conj_buf[i] = C[i];
  cd_conj(conj_buf.data(), h);
  cd_mult_rec(B, conj_buf.data(), t2.data(), h);
  for (int i = 0; i < h; ++i) out[h + i] += t2[i];
}

}  // namespace detail

// Product computed purely by the doubling rule from the reals up.  Inputs
// must be zero-padded to the stated level; equals oct_mult on valid inputs.
template <class S>
Octonion<S> cd_mult(CdLevel level, const Octonion<S>& a, const Octonion<S>& b) {
  const int len = static_cast<int>(level);
  for (int i = len; i < 8; ++i)
    if (!(a.c[i] == S(0)) || !(b.c[i] == S(0)))
      throw std::invalid_argument("cd_mult: nonzero coefficient beyond the stated level");
  Octonion<S> r;
  detail::cd_mult_rec(a.c.data(), b.c.data(), r.c.data(), len);
  return r;
}

// Table entry as (sign, index); generated from cd_mult so the hard-coded
// kBasisSign/kBasisIndex constants can be cross-checked against it.
struct BasisTableEntry {
  int sign;
  int index;
};

inline std::array<std::array<BasisTableEntry, 8>, 8> basis_table_from_cd() {
  std::array<std::array<BasisTableEntry, 8>, 8> t{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const Oct p = cd_mult(CdLevel::kOctonion, Oct::unit(i), Oct::unit(j));
      t[i][j] = {0, -1};
      for (int k = 0; k < 8; ++k) {
        if (p.c[k] == 1.0) t[i][j] = {+1, k};
        if (p.c[k] == -1.0) t[i][j] = {-1, k};
      }
    }
  return t;
}

}  // namespace octg2
