#include "euchar/cohom.hpp"

#include <numeric>

#include "euchar/fplin.hpp"

namespace euchar {

const char* engine_name(Engine e) {
  return e == Engine::snf ? "snf" : "fp-linear";
}

namespace {

constexpr std::int64_t kRowCap = 1000000;

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Block index of the tuple (g_1, ..., g_i) in C^i = Maps(Gamma^i, M).
std::int64_t tuple_index(const std::vector<int>& t, std::int64_t n) {
  std::int64_t idx = 0;
  for (int g : t) idx = idx * n + g;
  return idx;
}

// The inhomogeneous bar differentials in degrees 0..2:
//   (d^0 m)(g)      = g m - m
//   (d^1 f)(g,h)    = g f(h) - f(gh) + f(g)
//   (d^2 f)(g,h,l)  = g f(h,l) - f(gh,l) + f(g,hl) - f(g,h)
// Terms with coinciding target blocks accumulate.
template <typename AddBlock>
void emit_differential(const FiniteGroup& gamma, int degree, AddBlock&& add) {
  const int n = gamma.order();
  if (degree == 0) {
    for (int g = 0; g < n; ++g) {
      add(g, 0, g, +1);   // g . m
      add(g, 0, -1, -1);  // -m   (action slot -1 = identity)
    }
    return;
  }
  if (degree == 1) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        std::int64_t row = tuple_index({g, h}, n);
        add(row, h, g, +1);
        add(row, gamma.mul(g, h), -1, -1);
        add(row, g, -1, +1);
      }
    return;
  }
  if (degree == 2) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        for (int l = 0; l < n; ++l) {
          std::int64_t row = tuple_index({g, h, l}, n);
          add(row, tuple_index({h, l}, n), g, +1);
          add(row, tuple_index({gamma.mul(g, h), l}, n), -1, -1);
          add(row, tuple_index({g, gamma.mul(h, l)}, n), -1, +1);
          add(row, tuple_index({g, h}, n), -1, -1);
        }
    return;
  }
  throw EngineError("InternalInvariant", "bar differential degree must be 0..2");
}

void check_size(const GaloisModule& m, int degree) {
  const std::int64_t n = m.group().order();
  const std::int64_t k = m.module().components();
  if (ipow(n, degree + 1) * std::max<std::int64_t>(k, 1) > kRowCap)
    throw EngineError("SizeCapExceeded",
                      "bar complex rows exceed 10^6 at degree " +
                          std::to_string(degree));
}

}  // namespace

FinAbHom bar_differential(const GaloisModule& m, int degree) {
  check_size(m, degree);
  const std::int64_t n = m.group().order();
  const int k = m.module().components();
  const std::int64_t dom_blocks = ipow(n, degree);
  const std::int64_t cod_blocks = ipow(n, degree + 1);
  IntMat mat = IntMat::Zero(cod_blocks * k, dom_blocks * k);
  IntMat id = IntMat::Identity(k, k);
  emit_differential(m.group(), degree,
                    [&](std::int64_t row, std::int64_t col, int action_of,
                        int sign) {
                      const IntMat& blk = action_of >= 0 ? m.action(action_of) : id;
                      if (sign > 0)
                        mat.block(row * k, col * k, k, k) += blk;
                      else
                        mat.block(row * k, col * k, k, k) -= blk;
                    });
  return FinAbHom(m.module().power(static_cast<int>(dom_blocks)),
                  m.module().power(static_cast<int>(cod_blocks)),
                  std::move(mat));
}

CohomologyReport cohomology(const GaloisModule& m) {
  FinAbHom d0 = bar_differential(m, 0);
  FinAbHom d1 = bar_differential(m, 1);
  FinAbHom d2 = bar_differential(m, 2);
  if (!d1.compose_after(d0).is_zero() || !d2.compose_after(d1).is_zero())
    throw EngineError("InternalInvariant", "d . d != 0 in the bar complex");

  const std::int64_t p = m.module().p();
  std::int64_t h0 = d0.kernel_order_exponent();
  std::int64_t h1 = d1.kernel_order_exponent() - d0.image_order_exponent();
  std::int64_t h2 = d2.kernel_order_exponent() - d1.image_order_exponent();
  if (h1 < 0 || h2 < 0)
    throw EngineError("InternalInvariant", "negative cohomology order");

  CohomologyReport rep;
  rep.h = {FormalCardinality::prime_power(p, h0),
           FormalCardinality::prime_power(p, h1),
           FormalCardinality::prime_power(p, h2)};
  if (m.module().elementary()) rep.dims = {{h0, h1, h2}};
  rep.tate_h0 = tate_h0_full(m);
  rep.engine = Engine::snf;
  return rep;
}

CohomologyReport cocycle_oracle(const GaloisModule& m) {
  if (!m.module().elementary())
    throw EngineError("NotElementaryAbelian",
                      "mod-p oracle needs an elementary abelian module");
  for (int d = 0; d < 3; ++d) check_size(m, d);
  const std::int64_t p = m.module().p();
  const std::int64_t n = m.group().order();
  const int k = m.module().components();

  // Rebuild the differentials directly over F_p; no code shared with the
  // integer engine beyond the group table.
  std::vector<I64Mat> act(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    I64Mat a(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        Int r;
        Int pz(static_cast<long>(p));
        mpz_fdiv_r(r.get_mpz_t(), m.action(g)(i, j).get_mpz_t(),
                   pz.get_mpz_t());
        a(i, j) = r.get_si();
      }
    act[static_cast<std::size_t>(g)] = std::move(a);
  }
  I64Mat id = I64Mat::Identity(k, k);

  auto build = [&](int degree) {
    const std::int64_t dom_blocks = ipow(n, degree);
    const std::int64_t cod_blocks = ipow(n, degree + 1);
    I64Mat mat = I64Mat::Zero(cod_blocks * k, dom_blocks * k);
    emit_differential(m.group(), degree,
                      [&](std::int64_t row, std::int64_t col, int action_of,
                          int sign) {
                        const I64Mat& blk =
                            action_of >= 0
                                ? act[static_cast<std::size_t>(action_of)]
                                : id;
                        if (sign > 0)
                          mat.block(row * k, col * k, k, k) += blk;
                        else
                          mat.block(row * k, col * k, k, k) -= blk;
                      });
    return fp_normalize(std::move(mat), p);
  };

  I64Mat d0 = build(0), d1 = build(1), d2 = build(2);
  std::int64_t r0 = fp_rank(d0, p), r1 = fp_rank(d1, p), r2 = fp_rank(d2, p);
  std::int64_t c0 = k, c1 = n * k, c2 = n * n * k;
  std::int64_t h0 = c0 - r0;
  std::int64_t h1 = (c1 - r1) - r0;
  std::int64_t h2 = (c2 - r2) - r1;
  if (h1 < 0 || h2 < 0)
    throw EngineError("InternalInvariant", "negative cohomology dimension");

  // Tate H^0 over F_p: fixed vectors modulo norms.
  I64Mat fix(static_cast<Eigen::Index>(n) * k, k);
  I64Mat norm = I64Mat::Zero(k, k);
  for (int g = 0; g < n; ++g) {
    fix.block(static_cast<Eigen::Index>(g) * k, 0, k, k) =
        act[static_cast<std::size_t>(g)] - id;
    norm += act[static_cast<std::size_t>(g)];
  }
  std::int64_t fix_dim = k - fp_rank(fp_normalize(std::move(fix), p), p);
  std::int64_t norm_rank = fp_rank(fp_normalize(std::move(norm), p), p);

  CohomologyReport rep;
  rep.h = {FormalCardinality::prime_power(p, h0),
           FormalCardinality::prime_power(p, h1),
           FormalCardinality::prime_power(p, h2)};
  rep.dims = {{h0, h1, h2}};
  rep.tate_h0 = FormalCardinality::prime_power(p, fix_dim - norm_rank);
  rep.engine = Engine::fp_linear;
  return rep;
}

FormalCardinality tate_h0_full(const GaloisModule& m) {
  if (m.module().components() == 0) return FormalCardinality::one();
  const int n = m.group().order();
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  FinAbHom norm = m.norm_hom(all);
  std::int64_t fix = bar_differential(m, 0).kernel_order_exponent();
  return FormalCardinality::prime_power(m.module().p(),
                                        fix - norm.image_order_exponent());
}

FormalCardinality herbrand_quotient(const GaloisModule& m) {
  auto gen = m.group().cyclic_generator();
  if (!gen)
    throw EngineError("NotCyclic", "Herbrand quotient needs a cyclic group");
  const int n = m.group().order();
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  FinAbHom norm = m.norm_hom(all);
  FinAbHom shift = m.action_minus_identity(*gen);

  std::int64_t th0 =
      bar_differential(m, 0).kernel_order_exponent() - norm.image_order_exponent();
  std::int64_t th1 =
      norm.kernel_order_exponent() - shift.image_order_exponent();
  return FormalCardinality::prime_power(m.module().p(), th0 - th1);
}

FormalCardinality chi2_finite(const GaloisModule& m) {
  CohomologyReport rep = cohomology(m);
  return rep.h[0] * rep.h[2] * rep.h[1].inverse();
}

}  // namespace euchar
