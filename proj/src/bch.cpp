#include "octg2/bch.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace octg2 {

namespace {

// Polynomial in the commuting s[0..n-1], each variable with exponent 0 or 1
// inside the pipeline (the final *prod s[k]^2 shifts exponents to {2,3}).
// A monomial is the bitmask of present variables; matrix-product windows are
// disjoint, so multiplication never collides exponents.
using Poly = std::map<std::uint32_t, Rat>;
using PolyMat = std::vector<std::vector<Poly>>;

void add_into(Poly& dst, const Poly& src, const Rat& scale) {
  for (const auto& [mask, c] : src) {
    Rat& slot = dst[mask];
    slot += c * scale;
    if (slot == 0) dst.erase(mask);
  }
}

Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Rat& slot = r[ma | mb];
      slot += ca * cb;
      if (slot == 0) r.erase(ma | mb);
    }
  return r;
}

PolyMat mat_mul(const PolyMat& a, const PolyMat& b, bool parallel) {
  const int n = static_cast<int>(a.size());
  PolyMat r(n, std::vector<Poly>(n));
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
#endif
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly acc;
      for (int k = i; k <= j; ++k) {
        if (a[i][k].empty() || b[k][j].empty()) continue;
        add_into(acc, mul(a[i][k], b[k][j]), Rat(1));
      }
      r[i][j] = std::move(acc);
    }
  (void)parallel;
  return r;
}

BchSeries bch_terms_impl(int order, bool parallel) {
  if (order < 1) throw std::invalid_argument("bch_terms: order must be positive");
  if (order > kMaxBchOrder) throw std::invalid_argument("bch_terms: order exceeds the configured cap");

  const int n = order;
  const int dim = n + 1;

  std::vector<Rat> inv_fact(dim);
  Rat f(1);
  inv_fact[0] = Rat(1);
  for (int k = 1; k < dim; ++k) {
    f *= k;
    inv_fact[k] = Rat(1) / f;
  }

  PolyMat fmat(dim, std::vector<Poly>(dim));
  PolyMat gmat(dim, std::vector<Poly>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      fmat[i][j][0] = inv_fact[j - i];
      std::uint32_t mask = 0;
      for (int k = i; k < j; ++k) mask |= (1u << k);
      gmat[i][j][mask] = inv_fact[j - i];
    }

  PolyMat fg = mat_mul(fmat, gmat, parallel);
  for (int i = 0; i < dim; ++i) {
    Rat& diag = fg[i][i][0];
    diag -= 1;
    if (diag == 0) fg[i][i].erase(0);
  }

  // log(FG) = sum_{q>=1} (-1)^{q+1}/q (FG - I)^q; nilpotent, so q stops at n.
  Poly corner;
  PolyMat power = fg;
  add_into(corner, power[0][dim - 1], Rat(1));
  for (int q = 2; q <= n; ++q) {
    power = mat_mul(power, fg, parallel);
    add_into(corner, power[0][dim - 1], Rat((q % 2 == 0) ? -1 : 1, q));
  }

  BchSeries out;
  out.order = order;
  out.words.reserve(corner.size());
  for (const auto& [mask, c] : corner) {
    if (c == 0) continue;
    std::string letters(n, 'A');
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) letters[k] = 'B';
    out.words.push_back(LieWord{std::move(letters), c});
  }
  std::sort(out.words.begin(), out.words.end(),
            [](const LieWord& a, const LieWord& b) { return a.letters < b.letters; });
  return out;
}

}  // namespace

BchSeries bch_terms(int order) { return bch_terms_impl(order, true); }

BchSeries bch_terms_serial(int order) { return bch_terms_impl(order, false); }

std::string format_terms(const BchSeries& series) {
  std::ostringstream os;
  for (const LieWord& w : series.words) {
    os << rat_to_signed_string(w.coeff) << ' ';
    for (size_t i = 0; i < w.letters.size(); ++i) {
      if (i) os << '.';
      os << w.letters[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace octg2
