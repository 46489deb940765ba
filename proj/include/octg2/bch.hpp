#pragma once

#include <string>
#include <vector>

#include "octg2/rational.hpp"

namespace octg2 {

// One Baker-Campbell-Hausdorff word: a sequence over {A, B} with its exact
// rational coefficient.  Stored words always have coeff != 0.
struct LieWord {
  std::string letters;  // 'A' / 'B', length = order of the series
  Rat coeff;
};

// All degree-n words of the BCH expansion of log(e^A e^B), sorted
// lexicographically with A < B.  Coefficients sum to zero for n >= 2.
struct BchSeries {
  int order = 0;
  std::vector<LieWord> words;
};

// Term-count growth is exponential in the order; the cap bounds runaway input.
inline constexpr int kMaxBchOrder = 12;

// Reinsch's generator: over the ring of polynomials in commuting s[1..n],
// build the (n+1)x(n+1) upper-triangular F with F[i][j] = 1/(j-i)! and G with
// G[i][j] = (1/(j-i)!) prod_{k=i..j-1} s[k]; take the (1, n+1) entry of the
// logarithm series -sum_{q=1..n} ((-1)^q / q)(FG - I)^q, multiply by
// prod s[k]^2, and decode each monomial's exponent vector (2 -> A, 3 -> B)
// into a word.  Exact rational arithmetic throughout.
BchSeries bch_terms(int order);

// Same computation with the polynomial matrix products kept on one thread;
// the parallel path must produce identical output.
BchSeries bch_terms_serial(int order);

// Text form, one word per line: "<sign><num>/<den> <letters '.'-separated>",
// e.g. "+1/2 A.B".  Golden-file tested; do not change casually.
std::string format_terms(const BchSeries& series);

}  // namespace octg2
