#pragma once

// Number fields presented by a monic squarefree integer polynomial, their
// archimedean signatures, and the splitting data of rational primes in the
// monogenic order Z[x]/(min_poly).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "euchar/poly.hpp"
#include "euchar/types.hpp"

namespace euchar {

struct NumberField {
  IntPoly min_poly;  // monic, squarefree, degree >= 1
  int degree = 0;
  int r1 = 0;  // real embeddings
  int r2 = 0;  // conjugate pairs of complex embeddings

  // Validates monic + squarefree, counts real roots by Sturm's theorem.
  static NumberField from_poly(IntPoly f);
  // "Q", or "Q(sqrt,d)" for a quadratic; d is reduced to its squarefree core.
  static NumberField from_builtin(const std::string& name);

  bool totally_imaginary() const { return r1 == 0; }
};

struct SplitFactor {
  int e = 0;  // ramification index
  int f = 0;  // residue degree
};

struct PrimeSplitting {
  std::int64_t p = 0;
  std::vector<SplitFactor> factors;  // deterministic order
  bool index_warning = false;        // p divides [O_K : Z[x]/(min_poly)]
};

// Factor p in Z[x]/(min_poly); sum of e*f equals the degree.
PrimeSplitting split_prime(const NumberField& k, std::int64_t p);

// |m|_v for m = p^a under the place v given by one factor of p: q^{-ord_v(m)}
// with q = p^f and ord_v(p^a) = e*a.  Rejects m not a power of p.
FormalCardinality normalized_abs_value(const SplitFactor& v, std::int64_t p,
                                       const Int& m);

// Product over all places (with archimedean normalizations |.| and |.|^2)
// of |x|_v; returns true when the product is exactly 1.
bool product_formula_check(const NumberField& k, const Rat& x);

// A set of places: always all archimedean places, plus selected finite
// places lying above listed rational primes.
class PlaceSet {
 public:
  // S = S_inf only.
  explicit PlaceSet(NumberField k);

  // Replace computed splitting data for one prime (scenario override).
  void override_splitting(std::int64_t p, std::vector<SplitFactor> factors,
                          bool index_warning);

  // Add finite places above p; empty selector means every place above p.
  void add_finite(std::int64_t p, const std::vector<int>& factor_indices);

  const NumberField& field() const { return field_; }
  const PrimeSplitting& splitting(std::int64_t p) const;

  // Rational primes with at least one selected place, ascending.
  std::vector<std::int64_t> finite_primes() const;
  const std::set<int>& selected(std::int64_t p) const;

  bool s_finite_nonempty() const;
  int gamma() const { return s_finite_nonempty() ? 1 : 0; }

  // True when every place above p is in S.
  bool contains_all_above(std::int64_t p) const;

 private:
  NumberField field_;
  mutable std::map<std::int64_t, PrimeSplitting> table_;
  std::map<std::int64_t, std::set<int>> selected_;
};

// prod over places v of K above p with v not in S of 1/|p^a|_v, as a formal
// cardinality {p : a * sum of e*f over missed places}.
FormalCardinality bound_exponent_S_p(const PlaceSet& s, std::int64_t p,
                                     std::int64_t a);

}  // namespace euchar
