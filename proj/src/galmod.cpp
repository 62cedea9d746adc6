#include "euchar/galmod.hpp"

#include <algorithm>

#include "euchar/fplin.hpp"

namespace euchar {

namespace {

Int p_power(std::int64_t p, std::int64_t e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  return r;
}

// Canonical form of an endomorphism matrix: entry (i,j) mod p^{e_i}.
IntMat normalize_endo(IntMat m, const FiniteAbelianPGroup& mod) {
  for (int i = 0; i < mod.components(); ++i) {
    Int pe = p_power(mod.p(), mod.exponents()[static_cast<std::size_t>(i)]);
    for (int j = 0; j < mod.components(); ++j)
      mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), pe.get_mpz_t());
  }
  return m;
}

bool endo_equal(const IntMat& a, const IntMat& b,
                const FiniteAbelianPGroup& mod) {
  IntMat d = normalize_endo(a - b, mod);
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j)
      if (d(i, j) != 0) return false;
  return true;
}

// Invertibility of an endomorphism: its mod-p reduction must be invertible
// (surjective implies bijective on a finite module).
bool endo_invertible(const IntMat& m, const FiniteAbelianPGroup& mod) {
  const int k = mod.components();
  I64Mat r(k, k);
  Int pz(static_cast<long>(mod.p()));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Int t;
      mpz_fdiv_r(t.get_mpz_t(), m(i, j).get_mpz_t(), pz.get_mpz_t());
      r(i, j) = t.get_si();
    }
  return fp_rank(r, mod.p()) == k;
}

}  // namespace

GaloisModule::GaloisModule(std::shared_ptr<const FiniteGroup> group,
                           FiniteAbelianPGroup module,
                           std::vector<IntMat> action,
                           std::optional<std::vector<Int>> cyclo_char,
                           std::vector<ArchPlace> arch_places)
    : group_(std::move(group)),
      module_(std::move(module)),
      action_(std::move(action)),
      cyclo_(std::move(cyclo_char)),
      arch_(std::move(arch_places)) {
  if (!group_) throw EngineError("InternalInvariant", "null group");
  const int n = group_->order();
  const int k = module_.components();
  if (static_cast<int>(action_.size()) != n)
    throw EngineError("InternalInvariant",
                      "need one action matrix per group element");
  for (auto& a : action_) {
    if (a.rows() != k || a.cols() != k)
      throw EngineError("InternalInvariant", "action matrix shape mismatch");
    // Well-definedness: route through FinAbHom's divisibility check.
    (void)FinAbHom(module_, module_, a);
    a = normalize_endo(std::move(a), module_);
    if (!endo_invertible(a, module_))
      throw EngineError("InternalInvariant",
                        "action matrix is not invertible");
  }
  if (!endo_equal(action_[0], IntMat::Identity(k, k), module_))
    throw EngineError("InternalInvariant", "identity must act trivially");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      IntMat prod = action_[static_cast<std::size_t>(g)] *
                    action_[static_cast<std::size_t>(h)];
      if (!endo_equal(prod,
                      action_[static_cast<std::size_t>(group_->mul(g, h))],
                      module_))
        throw EngineError("InternalInvariant",
                          "action is not a homomorphism");
    }
  if (cyclo_) {
    if (static_cast<int>(cyclo_->size()) != n)
      throw EngineError("MissingCyclotomicCharacter",
                        "character needs one unit per group element");
    const std::int64_t p = module_.p();
    Int pe = p_power(p, std::max<std::int64_t>(module_.max_exponent(), 1));
    for (auto& c : *cyclo_) {
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pe.get_mpz_t());
      Int g;
      mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), pe.get_mpz_t());
      if (g != 1)
        throw EngineError("MissingCyclotomicCharacter",
                          "character value is not a unit");
    }
    if ((*cyclo_)[0] != 1)
      throw EngineError("MissingCyclotomicCharacter",
                        "character must send identity to 1");
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        Int prod = (*cyclo_)[static_cast<std::size_t>(g)] *
                   (*cyclo_)[static_cast<std::size_t>(h)];
        Int expect = (*cyclo_)[static_cast<std::size_t>(group_->mul(g, h))];
        Int diff = prod - expect;
        mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), pe.get_mpz_t());
        if (diff != 0)
          throw EngineError("MissingCyclotomicCharacter",
                            "character is not a homomorphism");
      }
  }
  for (const auto& v : arch_) {
    if (v.complex_place) continue;
    if (v.involution < 0 || v.involution >= n)
      throw EngineError("InternalInvariant", "involution index out of range");
    if (group_->mul(v.involution, v.involution) != group_->identity())
      throw EngineError("InternalInvariant",
                        "designated element is not an involution");
  }
}

bool GaloisModule::trivial_action() const {
  const int k = module_.components();
  IntMat id = IntMat::Identity(k, k);
  for (const auto& a : action_)
    if (!endo_equal(a, id, module_)) return false;
  return true;
}

const Int& GaloisModule::cyclo(int g) const {
  if (!cyclo_)
    throw EngineError("MissingCyclotomicCharacter",
                      "cyclotomic character required but absent");
  return (*cyclo_)[static_cast<std::size_t>(g)];
}

GaloisModule GaloisModule::with_arch_places(std::vector<ArchPlace> arch) const {
  return GaloisModule(group_, module_, action_, cyclo_, std::move(arch));
}

FinAbHom GaloisModule::action_minus_identity(int g) const {
  const int k = module_.components();
  IntMat m = action(g) - IntMat::Identity(k, k);
  return FinAbHom(module_, module_, std::move(m));
}

FinAbHom GaloisModule::norm_hom(const std::vector<int>& elements) const {
  const int k = module_.components();
  IntMat m = IntMat::Zero(k, k);
  for (int g : elements) m += action(g);
  return FinAbHom(module_, module_, std::move(m));
}

std::vector<IntMat> complete_action(const FiniteGroup& g,
                                    const std::map<int, IntMat>& seeds,
                                    int k) {
  const int n = g.order();
  std::vector<std::optional<IntMat>> val(static_cast<std::size_t>(n));
  val[0] = IntMat::Identity(k, k);
  std::vector<int> seed_ids;
  for (const auto& [e, m] : seeds) {
    if (e < 0 || e >= n) {
      throw SchemaError("action seed references element " + std::to_string(e));
    }
    if (m.rows() != k || m.cols() != k) {
      throw SchemaError("action seed matrix must be " + std::to_string(k) +
                        "x" + std::to_string(k));
    }
    if (e == 0) continue;  // identity is implied
    val[static_cast<std::size_t>(e)] = m;
    seed_ids.push_back(e);
  }
  // Right-multiplying known values by seeds reaches every word in the seeds.
  std::vector<int> queue{0};
  for (int s : seed_ids) queue.push_back(s);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int a = queue[qi];
    for (int s : seed_ids) {
      const int c = g.mul(a, s);
      auto& slot = val[static_cast<std::size_t>(c)];
      if (!slot) {
        slot = IntMat(*val[static_cast<std::size_t>(a)] *
                      *val[static_cast<std::size_t>(s)]);
        queue.push_back(c);
      }
    }
  }
  std::vector<IntMat> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    auto& slot = val[static_cast<std::size_t>(e)];
    if (!slot) {
      throw SchemaError("action is underdetermined: element \"" +
                        g.labels()[static_cast<std::size_t>(e)] +
                        "\" is not a product of the seeded elements");
    }
    out.push_back(std::move(*slot));
  }
  return out;
}

std::vector<Int> complete_character(const FiniteGroup& g,
                                    const std::map<int, Int>& seeds) {
  std::map<int, IntMat> mat_seeds;
  for (const auto& [e, v] : seeds) {
    IntMat m(1, 1);
    m(0, 0) = v;
    mat_seeds.emplace(e, std::move(m));
  }
  std::vector<IntMat> done = complete_action(g, mat_seeds, 1);
  std::vector<Int> out;
  out.reserve(done.size());
  for (const IntMat& m : done) out.push_back(m(0, 0));
  return out;
}

FormalCardinality fixed_points(const GaloisModule& m,
                               const std::vector<int>& elements) {
  const int k = m.module().components();
  if (k == 0) return FormalCardinality::one();
  // Fixed by the generators iff fixed by the generated subgroup.
  std::vector<int> gens;
  for (int g : elements)
    if (g != m.group().identity()) gens.push_back(g);
  if (gens.empty()) return m.module().order();
  IntMat stack(static_cast<Eigen::Index>(gens.size()) * k, k);
  for (std::size_t i = 0; i < gens.size(); ++i)
    stack.block(static_cast<Eigen::Index>(i) * k, 0, k, k) =
        m.action(gens[i]) - IntMat::Identity(k, k);
  FinAbHom h(m.module(), m.module().power(static_cast<int>(gens.size())),
             std::move(stack));
  return FormalCardinality::prime_power(m.module().p(),
                                        h.kernel_order_exponent());
}

GaloisModule cartier_dual(const GaloisModule& m) {
  if (!m.has_cyclo())
    throw EngineError("MissingCyclotomicCharacter",
                      "Cartier dual needs the cyclotomic character");
  const FiniteAbelianPGroup& mod = m.module();
  const int k = mod.components();
  const int n = m.group().order();
  const std::int64_t p = mod.p();
  std::vector<IntMat> dual_action;
  std::vector<Int> cyclo;
  dual_action.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    const IntMat& a = m.action(m.group().inv(g));
    IntMat d(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        // star(A)_{ji} = A_{ij} * p^{e_j - e_i}, exact by well-definedness.
        std::int64_t shift = mod.exponents()[static_cast<std::size_t>(j)] -
                             mod.exponents()[static_cast<std::size_t>(i)];
        Int v = a(i, j);
        if (shift >= 0) {
          v *= p_power(p, shift);
        } else if (v != 0) {
          Int q;
          mpz_divexact(q.get_mpz_t(), v.get_mpz_t(),
                       p_power(p, -shift).get_mpz_t());
          v = q;
        }
        d(j, i) = v * m.cyclo(g);
      }
    dual_action.push_back(std::move(d));
    cyclo.push_back(m.cyclo(g));
  }
  return GaloisModule(m.group_ptr(), mod, std::move(dual_action),
                      std::move(cyclo), m.arch_places());
}

FormalCardinality tate_h0_real_place(const GaloisModule& m, int involution) {
  if (m.group().mul(involution, involution) != m.group().identity())
    throw EngineError("InternalInvariant",
                      "real place needs an involution");
  const int k = m.module().components();
  if (k == 0) return FormalCardinality::one();
  IntMat minus = m.action(involution) - IntMat::Identity(k, k);
  IntMat plus = m.action(involution) + IntMat::Identity(k, k);
  FinAbHom hminus(m.module(), m.module(), std::move(minus));
  FinAbHom hplus(m.module(), m.module(), std::move(plus));
  std::int64_t e =
      hminus.kernel_order_exponent() - hplus.image_order_exponent();
  return FormalCardinality::prime_power(m.module().p(), e);
}

AdjointModule::AdjointModule(std::shared_ptr<const FiniteGroup> group,
                             std::int64_t p, std::vector<I64Mat> rep)
    : group_(std::move(group)), p_(p) {
  if (!group_) throw EngineError("InternalInvariant", "null group");
  if (!is_prime(p_))
    throw EngineError("NotPrime", std::to_string(p_) + " is not prime");
  const int order = group_->order();
  if (static_cast<int>(rep.size()) != order)
    throw EngineError("MissingRepresentation",
                      "need one matrix per group element");
  if (rep.empty() || rep[0].rows() < 1)
    throw EngineError("MissingRepresentation", "empty representation");
  n_ = static_cast<int>(rep[0].rows());
  for (auto& r : rep) {
    if (r.rows() != n_ || r.cols() != n_)
      throw EngineError("MissingRepresentation", "matrix shape mismatch");
    r = fp_normalize(std::move(r), p_);
  }
  rep_ = std::move(rep);
  I64Mat id = I64Mat::Identity(n_, n_);
  if (rep_[0] != id)
    throw EngineError("MissingRepresentation", "identity must map to I");
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      if (fp_mul(rep_[static_cast<std::size_t>(g)],
                 rep_[static_cast<std::size_t>(h)],
                 p_) != rep_[static_cast<std::size_t>(group_->mul(g, h))])
        throw EngineError("MissingRepresentation",
                          "representation is not a homomorphism");
}

GaloisModule adjoint_of(const AdjointModule& rho,
                        std::vector<ArchPlace> arch_places) {
  const int n = rho.n();
  const int order = rho.group().order();
  const std::int64_t p = rho.p();
  FiniteAbelianPGroup mod(p, std::vector<std::int64_t>(
                                 static_cast<std::size_t>(n) * n, 1));
  std::vector<IntMat> action;
  action.reserve(static_cast<std::size_t>(order));
  for (int g = 0; g < order; ++g) {
    const I64Mat& a = rho.rep(g);
    const I64Mat& ainv = rho.rep(rho.group().inv(g));
    IntMat b = IntMat::Zero(n * n, n * n);
    // Coefficient of X_{ab} in (rho(g) X rho(g)^{-1})_{rc}.
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        for (int ai = 0; ai < n; ++ai)
          for (int bi = 0; bi < n; ++bi)
            b(r * n + c, ai * n + bi) =
                Int(static_cast<long>(a(r, ai) * ainv(bi, c) % p));
    action.push_back(std::move(b));
  }
  return GaloisModule(rho.group_ptr(), std::move(mod), std::move(action),
                      std::nullopt, std::move(arch_places));
}

namespace {

// Matrix of X -> X rho(g) - rho(g) X on M_n(F_p), row-major flattening.
I64Mat commutator_map(const AdjointModule& rho, int g) {
  const int n = rho.n();
  const std::int64_t p = rho.p();
  const I64Mat& a = rho.rep(g);
  I64Mat m = I64Mat::Zero(n * n, n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (int ai = 0; ai < n; ++ai)
        for (int bi = 0; bi < n; ++bi) {
          std::int64_t v = 0;
          if (r == ai) v += a(bi, c);
          if (c == bi) v -= a(r, ai);
          m(r * n + c, ai * n + bi) = ((v % p) + p) % p;
        }
  return m;
}

}  // namespace

std::int64_t centralizer_dim(const AdjointModule& rho, int g) {
  const int n2 = rho.n() * rho.n();
  return n2 - fp_rank(commutator_map(rho, g), rho.p());
}

std::int64_t centralizer_dim_of_image(const AdjointModule& rho) {
  const int order = rho.group().order();
  const int n2 = rho.n() * rho.n();
  I64Mat stack(static_cast<Eigen::Index>(order) * n2, n2);
  for (int g = 0; g < order; ++g)
    stack.block(static_cast<Eigen::Index>(g) * n2, 0, n2, n2) =
        commutator_map(rho, g);
  return n2 - fp_rank(std::move(stack), rho.p());
}

}  // namespace euchar
