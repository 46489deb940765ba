#pragma once

#include "octg2/bch.hpp"
#include "octg2/octonion.hpp"

namespace octg2 {

// Octonionic BCH correction: the bracket-form word set of bch_terms with A.B
// words evaluated as octonion products.  Words are folded left-to-right;
// bracketing is actually immaterial here because the subalgebra generated by
// two octonions is associative (Artin), and a test pins that down.
//
// Default order 5 reproduces the numeric agreement of the source experiment
// at its printed precision (order 4 does not; see the order test).
// Normalizing the inputs first is recommended, accuracy drops otherwise.
inline constexpr int kDefaultOctBchOrder = 5;

Oct oct_bch(const Oct& x, const Oct& y, int order = kDefaultOctBchOrder);

// Same with a precomputed series stack (orders 2..n).
Oct oct_bch(const Oct& x, const Oct& y, const std::vector<BchSeries>& series);

}  // namespace octg2
