#pragma once

// Exact univariate polynomial arithmetic over Z and Q.  Coefficients are
// stored constant term first; the zero polynomial is the empty vector.

#include <utility>
#include <vector>

#include "euchar/types.hpp"

namespace euchar {

using IntPoly = std::vector<Int>;
using RatPoly = std::vector<Rat>;

namespace poly {

int degree(const IntPoly& f);
int degree(const RatPoly& f);

bool is_monic(const IntPoly& f);

IntPoly derivative(const IntPoly& f);

Int eval(const IntPoly& f, const Int& x);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);

RatPoly to_rat(const IntPoly& f);
// Remainder of a by b (b != 0), exact rational division.
RatPoly rem(const RatPoly& a, const RatPoly& b);

// True when gcd(f, f') is constant, i.e. f has no repeated complex root.
bool squarefree_over_q(const IntPoly& f);

// Number of real roots of a squarefree f, by Sturm's theorem with exact
// rational arithmetic.
int count_real_roots(const IntPoly& f);

// Determinant by fraction-free Bareiss elimination (exact over Z).
Int bareiss_det(IntMat m);

// disc(f) for monic f of degree >= 1, via the Sylvester matrix of (f, f').
Int discriminant(const IntPoly& f);

}  // namespace poly
}  // namespace euchar
