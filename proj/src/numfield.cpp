#include "euchar/numfield.hpp"

#include <algorithm>

#include "euchar/modpoly.hpp"

namespace euchar {

NumberField NumberField::from_poly(IntPoly f) {
  int d = poly::degree(f);
  if (d < 1)
    throw EngineError("NonMonic", "defining polynomial needs degree >= 1");
  if (!poly::is_monic(f))
    throw EngineError("NonMonic", "defining polynomial must be monic");
  if (!poly::squarefree_over_q(f))
    throw EngineError("NotSquarefree", "defining polynomial must be squarefree");
  f.resize(static_cast<std::size_t>(d) + 1);
  NumberField k;
  k.degree = d;
  k.r1 = poly::count_real_roots(f);
  if ((d - k.r1) % 2 != 0)
    throw EngineError("InternalInvariant", "complex roots must pair up");
  k.r2 = (d - k.r1) / 2;
  k.min_poly = std::move(f);
  return k;
}

NumberField NumberField::from_builtin(const std::string& name) {
  if (name == "Q") return from_poly({Int(-1), Int(1)});  // x - 1
  const std::string prefix = "Q(sqrt,";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
    std::string num = name.substr(prefix.size(),
                                  name.size() - prefix.size() - 1);
    long d = std::stol(num);
    if (d == 0 || d == 1)
      throw SchemaError("Q(sqrt,d) needs d not a square");
    // Reduce d to its squarefree core so x^2 - d is squarefree and minimal.
    long core = d < 0 ? -1 : 1;
    long m = std::labs(d);
    for (long q = 2; q * q <= m; ++q) {
      int cnt = 0;
      while (m % q == 0) {
        m /= q;
        ++cnt;
      }
      if (cnt % 2 == 1) core *= q;
    }
    core *= m;
    if (core == 1) throw SchemaError("Q(sqrt,d) needs d not a square");
    return from_poly({Int(-core), Int(0), Int(1)});
  }
  throw SchemaError("unknown builtin field: " + name);
}

PrimeSplitting split_prime(const NumberField& k, std::int64_t p) {
  if (!is_prime(p))
    throw EngineError("NotPrime", std::to_string(p) + " is not prime");
  auto factors = modpoly::factor(k.min_poly, p);
  PrimeSplitting s;
  s.p = p;
  for (const auto& fp : factors)
    s.factors.push_back(
        {fp.multiplicity, modpoly::degree(fp.factor)});
  std::sort(s.factors.begin(), s.factors.end(),
            [](const SplitFactor& a, const SplitFactor& b) {
              return a.f != b.f ? a.f < b.f : a.e < b.e;
            });
  int sum = 0;
  for (const auto& v : s.factors) sum += v.e * v.f;
  if (sum != k.degree)
    throw EngineError("InternalInvariant", "sum of e*f misses the degree");
  s.index_warning = modpoly::dedekind_index_divisor(k.min_poly, p);
  return s;
}

FormalCardinality normalized_abs_value(const SplitFactor& v, std::int64_t p,
                                       const Int& m) {
  if (!is_prime(p))
    throw EngineError("NotPrime", std::to_string(p) + " is not prime");
  if (m <= 0) throw EngineError("NotAPowerOfP", "m must be positive");
  Int rest = m;
  std::int64_t a = 0;
  Int pz(static_cast<long>(p));
  while (rest > 1) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(),
                pz.get_mpz_t());
    if (r != 0)
      throw EngineError("NotAPowerOfP",
                        "m is not a power of " + std::to_string(p));
    rest = q;
    ++a;
  }
  // |p^a|_v = q^{-e a} with q = p^f.
  return FormalCardinality::prime_power(
      p, -static_cast<std::int64_t>(v.f) * v.e * a);
}

namespace {

// Trial-division factorization of a positive integer; the corpus keeps
// values tiny, the cap guards against misuse.
std::map<std::int64_t, std::int64_t> factor_integer(Int n) {
  std::map<std::int64_t, std::int64_t> out;
  for (std::int64_t q = 2; Int(q) * q <= n; q == 2 ? q = 3 : q += 2) {
    if (q > 1000000)
      throw EngineError("SizeCapExceeded", "rational too large to factor");
    while (n % q == 0) {
      ++out[q];
      n /= q;
    }
  }
  if (n > 1) {
    if (!n.fits_slong_p())
      throw EngineError("SizeCapExceeded", "rational too large to factor");
    ++out[n.get_si()];
  }
  return out;
}

}  // namespace

bool product_formula_check(const NumberField& k, const Rat& x) {
  if (x == 0) throw EngineError("InternalInvariant", "x must be nonzero");
  Rat ax = abs(x);
  std::map<std::int64_t, std::int64_t> val = factor_integer(ax.get_num());
  for (const auto& [q, e] : factor_integer(ax.get_den())) val[q] -= e;

  FormalCardinality total;
  for (const auto& [q, n] : val) {
    if (n == 0) continue;
    PrimeSplitting s = split_prime(k, q);
    for (const auto& v : s.factors) {
      // ord_v(x) = e * n, |x|_v = (q^f)^{-e n}.
      total *= FormalCardinality::prime_power(
          q, -static_cast<std::int64_t>(v.f) * v.e * n);
    }
  }
  // Archimedean places: |x| at each real embedding, |x|^2 at each complex
  // pair; |x| is a fixed rational here, so the product is |x|^{r1 + 2 r2}.
  FormalCardinality arch;
  for (const auto& [q, n] : val)
    if (n != 0) arch *= FormalCardinality::prime_power(q, n);
  total *= arch.pow(k.r1 + 2 * static_cast<std::int64_t>(k.r2));
  return total.is_one();
}

PlaceSet::PlaceSet(NumberField k) : field_(std::move(k)) {}

void PlaceSet::override_splitting(std::int64_t p,
                                  std::vector<SplitFactor> factors,
                                  bool index_warning) {
  int sum = 0;
  for (const auto& v : factors) {
    if (v.e < 1 || v.f < 1)
      throw SchemaError("splitting override needs e, f >= 1");
    sum += v.e * v.f;
  }
  if (sum != field_.degree)
    throw SchemaError("splitting override must satisfy sum e*f = degree");
  PrimeSplitting s;
  s.p = p;
  s.factors = std::move(factors);
  s.index_warning = index_warning;
  table_[p] = std::move(s);
}

void PlaceSet::add_finite(std::int64_t p,
                          const std::vector<int>& factor_indices) {
  const PrimeSplitting& s = splitting(p);
  auto& sel = selected_[p];
  if (factor_indices.empty()) {
    for (int i = 0; i < static_cast<int>(s.factors.size()); ++i) sel.insert(i);
    return;
  }
  for (int i : factor_indices) {
    if (i < 0 || i >= static_cast<int>(s.factors.size()))
      throw SchemaError("factor index " + std::to_string(i) +
                        " out of range for p = " + std::to_string(p));
    sel.insert(i);
  }
}

const PrimeSplitting& PlaceSet::splitting(std::int64_t p) const {
  auto it = table_.find(p);
  if (it == table_.end()) it = table_.emplace(p, split_prime(field_, p)).first;
  return it->second;
}

std::vector<std::int64_t> PlaceSet::finite_primes() const {
  std::vector<std::int64_t> out;
  for (const auto& [p, sel] : selected_)
    if (!sel.empty()) out.push_back(p);
  return out;
}

const std::set<int>& PlaceSet::selected(std::int64_t p) const {
  static const std::set<int> empty;
  auto it = selected_.find(p);
  return it == selected_.end() ? empty : it->second;
}

bool PlaceSet::s_finite_nonempty() const {
  for (const auto& [p, sel] : selected_) {
    (void)p;
    if (!sel.empty()) return true;
  }
  return false;
}

bool PlaceSet::contains_all_above(std::int64_t p) const {
  return selected(p).size() == splitting(p).factors.size();
}

FormalCardinality bound_exponent_S_p(const PlaceSet& s, std::int64_t p,
                                     std::int64_t a) {
  const PrimeSplitting& sp = s.splitting(p);
  const std::set<int>& sel = s.selected(p);
  std::int64_t sum = 0;
  for (int i = 0; i < static_cast<int>(sp.factors.size()); ++i)
    if (!sel.count(i))
      sum += static_cast<std::int64_t>(sp.factors[static_cast<std::size_t>(i)].e) *
             sp.factors[static_cast<std::size_t>(i)].f;
  return FormalCardinality::prime_power(p, a * sum);
}

}  // namespace euchar
