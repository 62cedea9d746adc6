#pragma once

// Group cohomology of a finite group with coefficients in a finite abelian
// p-group, degrees 0..2, via the inhomogeneous bar complex.  Two engines:
// integer Smith-normal-form valuations (any module) and mod-p ranks
// (elementary abelian modules only); they share no elimination code.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "euchar/abelian.hpp"
#include "euchar/galmod.hpp"
#include "euchar/types.hpp"

namespace euchar {

enum class Engine { snf, fp_linear };

const char* engine_name(Engine e);

struct CohomologyReport {
  std::array<FormalCardinality, 3> h;  // |H^0|, |H^1|, |H^2|
  // F_p-dimensions when the module is elementary abelian.
  std::optional<std::array<std::int64_t, 3>> dims;
  FormalCardinality tate_h0;  // |M^Gamma| / |N_Gamma M|
  Engine engine = Engine::snf;
};

// Cochain differential C^i -> C^{i+1} (i in 0..2) of the bar complex; the
// row count |Gamma|^{i+1} * components is capped at 10^6.
FinAbHom bar_differential(const GaloisModule& m, int degree);

// SNF engine.  Asserts d^{i+1} after d^i vanishes.
CohomologyReport cohomology(const GaloisModule& m);

// Independent mod-p rank engine; requires an elementary abelian module.
CohomologyReport cocycle_oracle(const GaloisModule& m);

// |Hhat^0| / |Hhat^1| for cyclic Gamma (1 for every finite module).
FormalCardinality herbrand_quotient(const GaloisModule& m);

// |H^0| * |H^2| / |H^1|.
FormalCardinality chi2_finite(const GaloisModule& m);

// |M^Gamma| / |N_Gamma M| over the full group.
FormalCardinality tate_h0_full(const GaloisModule& m);

}  // namespace euchar
