#include "euchar/abelian.hpp"

#include <algorithm>

#include "euchar/snf.hpp"

namespace euchar {

namespace {

Int p_power(std::int64_t p, std::int64_t e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  return r;
}

}  // namespace

FiniteAbelianPGroup::FiniteAbelianPGroup(std::int64_t p,
                                         std::vector<std::int64_t> exponents)
    : p_(p), exps_(std::move(exponents)) {
  if (!is_prime(p_))
    throw EngineError("NotPrime",
                      "module base " + std::to_string(p_) + " not prime");
  for (auto e : exps_)
    if (e < 1)
      throw EngineError("InternalInvariant", "component exponent must be >= 1");
}

std::int64_t FiniteAbelianPGroup::order_exponent() const {
  std::int64_t s = 0;
  for (auto e : exps_) s += e;
  return s;
}

FormalCardinality FiniteAbelianPGroup::order() const {
  return FormalCardinality::prime_power(p_, order_exponent());
}

bool FiniteAbelianPGroup::elementary() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](std::int64_t e) { return e == 1; });
}

bool FiniteAbelianPGroup::uniform() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [&](std::int64_t e) { return e == exps_.front(); });
}

std::int64_t FiniteAbelianPGroup::max_exponent() const {
  std::int64_t m = 0;
  for (auto e : exps_) m = std::max(m, e);
  return m;
}

FiniteAbelianPGroup FiniteAbelianPGroup::power(int n) const {
  std::vector<std::int64_t> exps;
  exps.reserve(exps_.size() * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    exps.insert(exps.end(), exps_.begin(), exps_.end());
  return FiniteAbelianPGroup(p_, std::move(exps));
}

FinAbHom::FinAbHom(FiniteAbelianPGroup domain, FiniteAbelianPGroup codomain,
                   IntMat matrix)
    : dom_(std::move(domain)), cod_(std::move(codomain)), mat_(std::move(matrix)) {
  if (dom_.p() != cod_.p())
    throw EngineError("InternalInvariant", "hom between different primes");
  if (mat_.rows() != cod_.components() || mat_.cols() != dom_.components())
    throw EngineError("InternalInvariant", "hom matrix shape mismatch");
  const std::int64_t p = dom_.p();
  for (int i = 0; i < cod_.components(); ++i) {
    Int mod = p_power(p, cod_.exponents()[static_cast<std::size_t>(i)]);
    for (int j = 0; j < dom_.components(); ++j) {
      Int& c = mat_(i, j);
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
      std::int64_t need = cod_.exponents()[static_cast<std::size_t>(i)] -
                          dom_.exponents()[static_cast<std::size_t>(j)];
      if (need > 0 && c != 0 && valuation(c, p) < need)
        throw EngineError("InternalInvariant",
                          "matrix does not define a homomorphism");
    }
  }
}

namespace {

// v_p of the image order of the subgroup (M Z^k + R_cod Z^l)/R_cod, where
// R_cod = diag(p^{f_i}).  Uniform codomain short-circuits the stacked SNF:
// the stacked invariant factors are {p^{min(w_j, e)}} plus p^e repeated.
std::int64_t image_exp(const IntMat& m, const FiniteAbelianPGroup& dom,
                       const FiniteAbelianPGroup& cod) {
  const int k = dom.components(), l = cod.components();
  if (k == 0 || l == 0) return 0;
  const std::int64_t p = dom.p();
  if (cod.uniform()) {
    const std::int64_t e = cod.exponents().front();
    std::vector<std::int64_t> prof = valuation_profile(m, p, e);
    std::int64_t s = 0;
    for (auto w : prof) s += e - w;
    return s;
  }
  // Stacked [M | diag(p^{f_i})]; all invariant factors divide p^{max f}.
  const std::int64_t fmax = cod.max_exponent();
  IntMat w(l, k + l);
  w.setZero();
  w.block(0, 0, l, k) = m;
  for (int i = 0; i < l; ++i)
    w(i, k + i) = p_power(p, cod.exponents()[static_cast<std::size_t>(i)]);
  std::vector<std::int64_t> prof = valuation_profile(w, p, fmax + 1);
  std::int64_t s = cod.order_exponent();
  for (auto v : prof) s -= v;
  return s;
}

// Pontryagin-dual matrix: (M*)_{ji} = M_{ij} * p^{e_j - f_i} (exact by
// well-definedness), a hom from the dual of the codomain to the dual of the
// domain.
IntMat dual_matrix(const IntMat& m, const FiniteAbelianPGroup& dom,
                   const FiniteAbelianPGroup& cod) {
  const std::int64_t p = dom.p();
  IntMat d(dom.components(), cod.components());
  for (int j = 0; j < dom.components(); ++j)
    for (int i = 0; i < cod.components(); ++i) {
      Int v = m(i, j);
      std::int64_t shift = dom.exponents()[static_cast<std::size_t>(j)] -
                           cod.exponents()[static_cast<std::size_t>(i)];
      if (shift >= 0) {
        v *= p_power(p, shift);
      } else if (v != 0) {
        Int q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(),
                     p_power(p, -shift).get_mpz_t());
        v = q;
      }
      d(j, i) = v;
    }
  return d;
}

}  // namespace

std::int64_t FinAbHom::image_order_exponent() const {
  std::int64_t im = image_exp(mat_, dom_, cod_);
  std::int64_t ker =
      dom_.order_exponent() - image_exp(dual_matrix(mat_, dom_, cod_), cod_, dom_);
  if (ker + im != dom_.order_exponent())
    throw EngineError("InternalInvariant",
                      "|kernel| * |image| != |domain| (dual eliminations differ)");
  return im;
}

std::int64_t FinAbHom::kernel_order_exponent() const {
  return dom_.order_exponent() - image_order_exponent();
}

bool FinAbHom::is_zero() const {
  for (int i = 0; i < mat_.rows(); ++i)
    for (int j = 0; j < mat_.cols(); ++j)
      if (mat_(i, j) != 0) return false;
  return true;
}

FinAbHom FinAbHom::compose_after(const FinAbHom& inner) const {
  if (!(inner.cod_ == dom_))
    throw EngineError("InternalInvariant", "composition domain mismatch");
  IntMat prod = mat_ * inner.mat_;
  return FinAbHom(inner.dom_, cod_, std::move(prod));
}

}  // namespace euchar
