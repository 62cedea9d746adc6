#pragma once

// Polynomial arithmetic and factorization over prime fields F_p, p < 2^31.
// Used for splitting rational primes in a monogenic order and for Dedekind's
// index criterion.

#include <cstdint>
#include <vector>

#include "euchar/poly.hpp"
#include "euchar/types.hpp"

namespace euchar {
namespace modpoly {

// Coefficients in [0, p), constant term first; empty vector is 0.
using FpPoly = std::vector<std::int64_t>;

FpPoly reduce(const IntPoly& f, std::int64_t p);
int degree(const FpPoly& f);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::int64_t p);
FpPoly rem(FpPoly a, const FpPoly& b, std::int64_t p);
FpPoly quot(FpPoly a, const FpPoly& b, std::int64_t p);
FpPoly gcd(FpPoly a, FpPoly b, std::int64_t p);  // monic or zero
FpPoly make_monic(FpPoly f, std::int64_t p);

struct FactorPower {
  FpPoly factor;  // monic irreducible
  int multiplicity;
};

// Complete factorization of monic f mod p: distinct monic irreducible
// factors with multiplicities, in a deterministic order (degree, then
// lexicographic coefficients).  Equal-degree splitting uses a fixed-seed
// generator, so results are reproducible run to run.
std::vector<FactorPower> factor(const IntPoly& f, std::int64_t p);

// Dedekind's index criterion: true when p divides [O_K : Z[x]/(f)], i.e.
// the (e, f) data read off the factorization may differ from the field's.
bool dedekind_index_divisor(const IntPoly& f, std::int64_t p);

}  // namespace modpoly
}  // namespace euchar
