#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace octg2 {

// Exact rational scalar. mpq_class keeps values in canonical form
// (reduced, positive denominator), so operator== is exact equality.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// "1/2", "-1/6", "3" (denominator 1 printed without the slash).
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Always-signed form used by the BCH term listing: "+1/2", "-1/6".
inline std::string rat_to_signed_string(const Rat& q) {
  std::string s = q.get_str();
  if (!s.empty() && s[0] != '-') s.insert(s.begin(), '+');
  if (s.find('/') == std::string::npos) s += "/1";
  return s;
}

// Deterministic small-integer generator for exact-arithmetic probe sets.
// Plain 64-bit LCG (Numerical Recipes constants); not for statistics, just
// reproducible streams of small rationals in tests and closure checks.
class RatProbe {
 public:
  explicit RatProbe(std::uint64_t seed) : state_(seed) {}

  // integer in [-9, 9]
  long small_int() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state_ >> 33) % 19) - 9;
  }

  // rational num/den with num in [-9,9], den in [1,9]
  Rat small_rat() {
    long num = small_int();
    long den = 0;
    while (den == 0) den = (small_int() + 9) % 9 + 1;
    return make_rat(num, den);
  }

 private:
  std::uint64_t state_;
};

}  // namespace octg2
