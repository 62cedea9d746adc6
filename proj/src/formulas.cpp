#include "euchar/formulas.hpp"

#include <algorithm>

namespace euchar {

namespace {

std::vector<int> all_elements(const FiniteGroup& g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

FormalCardinality dual_fixed_points(const GaloisModule& m) {
  GaloisModule dual = cartier_dual(m);
  return fixed_points(dual, all_elements(dual.group()));
}

FormalCardinality real_tate_product(const GaloisModule& m) {
  FormalCardinality out;
  for (const ArchPlace& v : m.arch_places()) {
    if (!v.complex_place) out *= tate_h0_real_place(m, v.involution);
  }
  return out;
}

}  // namespace

EulerContext::EulerContext(PlaceSet s, GaloisModule m, bool quotient_is_full,
                           bool faithful_quotient)
    : s_(std::move(s)),
      module_(std::move(m)),
      quotient_is_full_(quotient_is_full),
      faithful_quotient_(faithful_quotient) {
  const NumberField& k = s_.field();
  const auto& arch = module_.arch_places();
  int complex_count = 0;
  for (const ArchPlace& v : arch) complex_count += v.complex_place ? 1 : 0;
  if (static_cast<int>(arch.size()) != k.r1 + k.r2 || complex_count != k.r2) {
    throw EngineError("ArchPlaceMismatch",
                      "archimedean assignment has " +
                          std::to_string(arch.size()) + " entries (" +
                          std::to_string(complex_count) +
                          " complex) for signature (" + std::to_string(k.r1) +
                          ", " + std::to_string(k.r2) + ")");
  }
}

FormalCardinality tate_rhs(const EulerContext& ctx) {
  const GaloisModule& m = ctx.module();
  FormalCardinality out = m.module().order().pow(-ctx.field().degree);
  for (const ArchPlace& v : m.arch_places()) {
    if (v.complex_place) {
      out *= m.module().order();
    } else {
      out *= fixed_points(m, {v.involution});
    }
  }
  return out;
}

FormalCardinality epsilon_of(const EulerContext& ctx) {
  if (ctx.S().s_finite_nonempty()) return FormalCardinality::one();
  return dual_fixed_points(ctx.module());
}

FormalCardinality chi2_upper_bound(const EulerContext& ctx) {
  const FiniteAbelianPGroup& m = ctx.module().module();
  FormalCardinality out = tate_rhs(ctx);
  out *= bound_exponent_S_p(ctx.S(), m.p(), m.order_exponent());
  out *= epsilon_of(ctx);
  return out;
}

Chi2Exact chi2_exact_finite(const EulerContext& ctx) {
  if (!ctx.quotient_is_full()) {
    throw EngineError("QuotientNotFull",
                      "exact evaluation needs the quotient_is_full assertion");
  }
  Chi2Exact out{FormalCardinality::one(), chi2_upper_bound(ctx), false,
                cohomology(ctx.module())};
  out.lhs = out.report.h[0] * out.report.h[2] * out.report.h[1].inverse();
  out.tight = out.lhs == out.rhs_bound;
  return out;
}

FormalCardinality etale_chi(const EulerContext& ctx) {
  const GaloisModule& m = ctx.module();
  const FiniteAbelianPGroup& mod = m.module();
  FormalCardinality out =
      bound_exponent_S_p(ctx.S(), mod.p(), mod.order_exponent());
  const FormalCardinality card = mod.order();
  for (const ArchPlace& v : m.arch_places()) {
    if (v.complex_place) {
      // |M| / (1 * |M|^2)
      out *= card.inverse();
    } else {
      out *= fixed_points(m, {v.involution});
      out *= tate_h0_real_place(m, v.involution).inverse();
      out *= card.inverse();
    }
  }
  return out;
}

EtaleCards etale_cards(const EulerContext& ctx) {
  if (!ctx.quotient_is_full()) {
    throw EngineError("QuotientNotFull",
                      "etale cardinalities need the quotient_is_full "
                      "assertion for degrees 0 and 1");
  }
  const GaloisModule& m = ctx.module();
  CohomologyReport rep = cohomology(m);

  ValueOrBound theta = ValueOrBound::exact(FormalCardinality::one());
  if (ctx.S().s_finite_nonempty()) {
    theta = ValueOrBound::exact(real_tate_product(m));
  } else {
    FormalCardinality dual_fix = dual_fixed_points(m);
    if (m.module().p() != 2 || ctx.field().totally_imaginary()) {
      theta = ValueOrBound::upper_bound(dual_fix);
    } else {
      theta = ValueOrBound::interval(FormalCardinality::one(),
                                     dual_fix * real_tate_product(m));
    }
  }

  FormalCardinality scale = etale_chi(ctx) * rep.h[1] * rep.h[0].inverse();
  return EtaleCards{ValueOrBound::exact(rep.h[0]),
                    ValueOrBound::exact(rep.h[1]), theta.scaled(scale), theta};
}

std::int64_t lubotzky_r(std::int64_t d, std::int64_t dim_h1,
                        std::int64_t dim_h2, std::int64_t dim_m,
                        bool trivial_module) {
  if (dim_m < 1) {
    throw EngineError("InternalInvariant", "module dimension must be >= 1");
  }
  const std::int64_t num = dim_h2 - dim_h1;
  const std::int64_t ceil_q =
      num >= 0 ? (num + dim_m - 1) / dim_m : -((-num) / dim_m);
  return ceil_q + d - (trivial_module ? 0 : 1);
}

ModuleClass module_class_from_string(const std::string& s) {
  if (s == "mu_p_nontrivial") return ModuleClass::mu_p_nontrivial;
  if (s == "nontrivial_not_mu_p") return ModuleClass::nontrivial_not_mu_p;
  if (s == "trivial_S_finite_empty") return ModuleClass::trivial_S_finite_empty;
  if (s == "trivial_S_finite_nonempty") {
    return ModuleClass::trivial_S_finite_nonempty;
  }
  throw EngineError("UnknownClassification", s);
}

const char* module_class_name(ModuleClass c) {
  switch (c) {
    case ModuleClass::mu_p_nontrivial:
      return "mu_p_nontrivial";
    case ModuleClass::nontrivial_not_mu_p:
      return "nontrivial_not_mu_p";
    case ModuleClass::trivial_S_finite_empty:
      return "trivial_S_finite_empty";
    case ModuleClass::trivial_S_finite_nonempty:
      return "trivial_S_finite_nonempty";
  }
  throw EngineError("UnknownClassification", "invalid enum value");
}

std::int64_t case_bound(const NumberField& k, ModuleClass cls,
                        std::optional<int> mu_p_dim) {
  const std::int64_t arch = k.r1 + k.r2;
  switch (cls) {
    case ModuleClass::mu_p_nontrivial:
      return -static_cast<std::int64_t>(k.r2) - 1;
    case ModuleClass::nontrivial_not_mu_p:
      return arch - 1;
    case ModuleClass::trivial_S_finite_empty:
      if (!mu_p_dim) {
        throw EngineError("UnknownClassification",
                          "trivial_S_finite_empty needs dim mu_p(K)");
      }
      return arch + *mu_p_dim - 1;
    case ModuleClass::trivial_S_finite_nonempty:
      return arch - 1;
  }
  throw EngineError("UnknownClassification", "invalid enum value");
}

PresentationLedger presentation_bounds(
    const EulerContext& ctx, const std::vector<LedgerRowInput>& rows) {
  if (rows.empty()) {
    throw EngineError("EmptyLedger", "presentation ledger needs rows");
  }
  PresentationLedger led;
  led.d = ctx.module().group().minimal_generators();
  led.gamma = ctx.S().gamma();
  const std::int64_t arch = ctx.field().r1 + ctx.field().r2;
  led.rhs_bound = arch - led.gamma;
  led.relations = arch + led.d - led.gamma;
  bool first = true;
  for (const LedgerRowInput& in : rows) {
    LedgerRow row;
    row.module_id = in.module_id;
    row.dim_m = in.dim_m;
    row.xi = in.trivial ? 0 : 1;
    row.dim_h1 = in.dim_h1;
    row.dim_h2 = in.dim_h2;
    row.r = lubotzky_r(led.d, in.dim_h1, in.dim_h2, in.dim_m, in.trivial);
    if (in.classification) {
      row.case_bound = case_bound(ctx.field(), *in.classification, in.mu_p_dim);
    }
    if (in.claimed_dim_h2) {
      row.claimed_dim_h2 = *in.claimed_dim_h2;
      row.r_claimed =
          lubotzky_r(led.d, in.dim_h1, *in.claimed_dim_h2, in.dim_m, in.trivial);
    }
    led.sup_r = first ? row.r : std::max(led.sup_r, row.r);
    first = false;
    led.rows.push_back(std::move(row));
  }
  led.violation = led.sup_r - led.d > led.rhs_bound;
  return led;
}

std::int64_t dimension_defect(const NumberField& k, const AdjointModule& rho,
                              const std::vector<ArchPlace>& arch_places,
                              bool absolutely_irreducible) {
  int complex_count = 0;
  for (const ArchPlace& v : arch_places) {
    complex_count += v.complex_place ? 1 : 0;
  }
  if (static_cast<int>(arch_places.size()) != k.r1 + k.r2 ||
      complex_count != k.r2) {
    throw EngineError("ArchPlaceMismatch",
                      "archimedean assignment does not match the signature");
  }
  const std::int64_t n = rho.n();
  std::int64_t h0 =
      absolutely_irreducible ? 1 : centralizer_dim_of_image(rho);
  std::int64_t local = 0;
  for (const ArchPlace& v : arch_places) {
    if (v.complex_place) {
      local += n * n;
    } else {
      local += centralizer_dim(rho, v.involution);
    }
  }
  return h0 - local;
}

WhatIf whatif_enlarge(
    const EulerContext& ctx,
    const std::vector<std::pair<std::int64_t, std::vector<int>>>& add_finite,
    const std::optional<GaloisModule>& enlarged_quotient) {
  PlaceSet enlarged = ctx.S();
  WhatIf out;
  for (const auto& [p, selectors] : add_finite) {
    enlarged.add_finite(p, selectors);
    out.added_primes.push_back(p);
  }
  const GaloisModule& m =
      enlarged_quotient ? *enlarged_quotient : ctx.module();
  EulerContext next(std::move(enlarged), m, enlarged_quotient.has_value(),
                    ctx.faithful_quotient());
  out.tate = tate_rhs(next);
  out.epsilon = epsilon_of(next);
  out.bound = chi2_upper_bound(next);
  if (enlarged_quotient) out.exact = chi2_exact_finite(next);
  return out;
}

}  // namespace euchar
