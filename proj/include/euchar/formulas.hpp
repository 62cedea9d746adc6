#pragma once

// Global Euler-characteristic formulas over a number field: the
// degree/archimedean product, its correction factors for missed places above
// p, the etale cardinality table with case-dependent exactness, presentation
// rank ledgers, and the archimedean dimension defect of an adjoint
// representation.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "euchar/cohom.hpp"
#include "euchar/galmod.hpp"
#include "euchar/numfield.hpp"
#include "euchar/types.hpp"

namespace euchar {

// A module over a designated finite quotient of the Galois group of the
// maximal extension unramified outside S, plus the scenario assertion flags.
class EulerContext {
 public:
  // The archimedean assignment must match the field signature: r1 + r2
  // entries with exactly r2 complex markers.
  EulerContext(PlaceSet s, GaloisModule m, bool quotient_is_full,
               bool faithful_quotient);

  const PlaceSet& S() const { return s_; }
  const GaloisModule& module() const { return module_; }
  const NumberField& field() const { return s_.field(); }
  bool quotient_is_full() const { return quotient_is_full_; }
  bool faithful_quotient() const { return faithful_quotient_; }

 private:
  PlaceSet s_;
  GaloisModule module_;
  bool quotient_is_full_;
  bool faithful_quotient_;
};

// [M]^{-[K:Q]} * prod over archimedean v of |H^0(G_v, M)| (full [M] at
// complex places, involution fixed points at real places).
FormalCardinality tate_rhs(const EulerContext& ctx);

// 1 when S contains a finite place; otherwise the fixed points of the whole
// quotient on the Cartier dual (the character must be present).
FormalCardinality epsilon_of(const EulerContext& ctx);

// tate_rhs * prod_{v | p, v not in S} 1/|[M]|_v * epsilon_of.
FormalCardinality chi2_upper_bound(const EulerContext& ctx);

struct Chi2Exact {
  FormalCardinality lhs;        // |H^0| |H^2| / |H^1| of the quotient
  FormalCardinality rhs_bound;  // chi2_upper_bound
  bool tight = false;           // lhs == rhs_bound
  CohomologyReport report;
};

// Requires quotient_is_full.
Chi2Exact chi2_exact_finite(const EulerContext& ctx);

// Euler characteristic of the compactly-supported etale model:
// prod_{v | p, v not in S} 1/|[M]|_v times, per archimedean place,
// |H^0(K_v,M)| / (|Hhat^0(K_v,M)| * |[M]|_v) with |[M]|_v = [M] real and
// [M]^2 complex.
FormalCardinality etale_chi(const EulerContext& ctx);

struct EtaleCards {
  ValueOrBound h0, h1, h2, h3;
};

// h0, h1 exact from the quotient's cohomology; h3 is exact (product of real
// Tate H^0) when S has a finite place, an upper bound (dual fixed points)
// when S is archimedean-only and p is odd or the field totally imaginary,
// and an interval otherwise; h2 inherits its kind from h3.  Requires
// quotient_is_full.
EtaleCards etale_cards(const EulerContext& ctx);

// ceil((dim_h2 - dim_h1)/dim_m) + d - xi with xi = 0 iff the module is
// trivial; the ceiling is toward +infinity (ceil(-3/2) = -1).
std::int64_t lubotzky_r(std::int64_t d, std::int64_t dim_h1,
                        std::int64_t dim_h2, std::int64_t dim_m,
                        bool trivial_module);

// Classification of a simple module for the per-case rank bounds.
enum class ModuleClass {
  mu_p_nontrivial,
  nontrivial_not_mu_p,
  trivial_S_finite_empty,
  trivial_S_finite_nonempty,
};

// Throws UnknownClassification on anything else.
ModuleClass module_class_from_string(const std::string& s);
const char* module_class_name(ModuleClass c);

// Bound on r - d for one module class, from the field signature alone; the
// trivial/archimedean-only case needs dim mu_p(K) supplied.
std::int64_t case_bound(const NumberField& k, ModuleClass cls,
                        std::optional<int> mu_p_dim = std::nullopt);

struct LedgerRowInput {
  std::string module_id;
  std::int64_t dim_m = 1;
  bool trivial = true;
  std::int64_t dim_h1 = 0;
  std::int64_t dim_h2 = 0;
  std::optional<ModuleClass> classification;
  std::optional<int> mu_p_dim;
  // Externally claimed dim H^2, reported side by side with the computed one.
  std::optional<std::int64_t> claimed_dim_h2;
};

struct LedgerRow {
  std::string module_id;
  std::int64_t dim_m = 1;
  int xi = 0;
  std::int64_t dim_h1 = 0;
  std::int64_t dim_h2 = 0;
  std::int64_t r = 0;
  std::optional<std::int64_t> case_bound;  // bound on r - d when classified
  std::optional<std::int64_t> claimed_dim_h2;
  std::optional<std::int64_t> r_claimed;
};

struct PresentationLedger {
  std::vector<LedgerRow> rows;
  int d = 0;                   // minimal generators of the quotient
  std::int64_t sup_r = 0;      // supremum of r over the rows
  int gamma = 0;               // 0 iff S has no finite place
  std::int64_t rhs_bound = 0;  // (r1 + r2) - gamma, bound on sup_r - d
  std::int64_t relations = 0;  // (r1 + r2) + d - gamma
  bool violation = false;      // sup_r - d > rhs_bound
};

// Throws EmptyLedger on an empty row list.
PresentationLedger presentation_bounds(const EulerContext& ctx,
                                       const std::vector<LedgerRowInput>& rows);

// h^0(ad) - sum over archimedean places of dim H^0(G_v, ad), where h^0(ad)
// is 1 under an asserted absolutely-irreducible image and the centralizer
// dimension of the image otherwise; complex places contribute n^2, real
// places the centralizer dimension at the designated involution.
std::int64_t dimension_defect(const NumberField& k, const AdjointModule& rho,
                              const std::vector<ArchPlace>& arch_places,
                              bool absolutely_irreducible);

struct WhatIf {
  std::vector<std::int64_t> added_primes;
  FormalCardinality tate;
  FormalCardinality epsilon;
  FormalCardinality bound;
  std::optional<Chi2Exact> exact;  // only with a supplied enlarged quotient
};

// Re-evaluates the upper bound over S enlarged by the listed finite places
// (prime with factor selectors, empty selector = all places above).  The
// original quotient is not assumed full for the enlarged set; exact values
// are recomputed only from a user-supplied enlarged quotient module.
WhatIf whatif_enlarge(
    const EulerContext& ctx,
    const std::vector<std::pair<std::int64_t, std::vector<int>>>& add_finite,
    const std::optional<GaloisModule>& enlarged_quotient);

}  // namespace euchar
