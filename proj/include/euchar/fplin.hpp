#pragma once

// Dense linear algebra over F_p (p < 2^31), int64 entries.  This is the
// second, SNF-independent engine for elementary abelian coefficients.

#include <cstdint>

#include "euchar/types.hpp"

namespace euchar {

// Reduce entries into [0, p).
I64Mat fp_normalize(I64Mat m, std::int64_t p);

std::int64_t fp_rank(I64Mat m, std::int64_t p);

I64Mat fp_mul(const I64Mat& a, const I64Mat& b, std::int64_t p);

}  // namespace euchar
