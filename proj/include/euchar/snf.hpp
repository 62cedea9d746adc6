#pragma once

// Smith normal form over Z and its p-local valuation profile.  The full SNF
// (divisibility chain) backs abelianization and mixed-exponent homs; the
// valuation profile is the fast path for kernel/image orders of maps between
// finite abelian p-groups.

#include <cstdint>
#include <vector>

#include "euchar/types.hpp"

namespace euchar {

// Diagonal of the Smith normal form of a (nonnegative, d1 | d2 | ...),
// length min(rows, cols); zeros sit at the end.
std::vector<Int> smith_diagonal(IntMat a);

// Valuations v_p of the SNF diagonal entries, each truncated at cap:
// entries whose true valuation is >= cap (including zero entries) report
// cap.  Exact for every entry with valuation < cap.  Sorted ascending.
std::vector<std::int64_t> valuation_profile(const IntMat& a, std::int64_t p,
                                            std::int64_t cap);

}  // namespace euchar
