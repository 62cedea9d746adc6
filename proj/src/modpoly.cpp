#include "euchar/modpoly.hpp"

#include <algorithm>
#include <random>

namespace euchar {
namespace modpoly {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t powmod(std::int64_t a, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  return powmod(((a % p) + p) % p, p - 2, p);
}

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
  trim(r);
  return r;
}

FpPoly add(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

FpPoly derivative(const FpPoly& f, std::int64_t p) {
  FpPoly d;
  for (std::size_t i = 1; i < f.size(); ++i)
    d.push_back(mulmod(f[i], static_cast<std::int64_t>(i % p), p));
  trim(d);
  return d;
}

// a^e mod m, e given as a GMP integer (p^d - 1 exceeds int64 routinely).
FpPoly powrem(const FpPoly& a, Int e, const FpPoly& m, std::int64_t p) {
  FpPoly base = rem(a, m, p);
  FpPoly acc{1};
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = rem(mul(acc, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1;
  }
  return acc;
}

bool poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Squarefree decomposition in characteristic p (Yun's algorithm with the
// p-th power tail).  Returns (monic squarefree part, multiplicity) pairs.
void squarefree_decompose(FpPoly f, std::int64_t p, int mult_scale,
                          std::vector<std::pair<FpPoly, int>>& out) {
  f = make_monic(std::move(f), p);
  FpPoly d = derivative(f, p);
  if (degree(d) < 0 && degree(f) > 0) {
    // f = g(x^p); its p-th root has coefficients a_{p*i}.
    FpPoly root;
    for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(p))
      root.push_back(f[i]);
    squarefree_decompose(std::move(root), p, mult_scale * static_cast<int>(p),
                         out);
    return;
  }
  FpPoly c = gcd(f, d, p);
  FpPoly w = quot(f, c, p);
  int i = 1;
  while (degree(w) > 0) {
    FpPoly y = gcd(w, c, p);
    FpPoly z = quot(w, y, p);
    if (degree(z) > 0) out.emplace_back(make_monic(z, p), i * mult_scale);
    w = std::move(y);
    c = quot(c, w, p);
    ++i;
  }
  if (degree(c) > 0) squarefree_decompose(std::move(c), p, mult_scale, out);
}

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product
// of irreducibles all of degree d.
void equal_degree_split(const FpPoly& f, int d, std::int64_t p,
                        std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  Int half;
  if (p > 2) {
    Int pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(d));
    half = (pd - 1) / 2;
  }
  while (true) {
    FpPoly a(static_cast<std::size_t>(degree(f)), 0);
    for (auto& c : a)
      c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
    trim(a);
    if (degree(a) < 1) continue;
    FpPoly b;
    if (p > 2) {
      b = powrem(a, half, f, p);
      if (!b.empty())
        b[0] = (b[0] - 1 + p) % p;
      trim(b);
      if (b.empty()) {
        b = FpPoly{p - 1};
      }
    } else {
      // Trace map sum_{i<d} a^{2^i} splits over F_2.
      FpPoly t = rem(a, f, p);
      FpPoly acc = t;
      for (int i = 1; i < d; ++i) {
        t = rem(mul(t, t, p), f, p);
        acc = add(acc, t, p);
      }
      b = acc;
    }
    FpPoly g = gcd(b, f, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(quot(f, g, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

FpPoly reduce(const IntPoly& f, std::int64_t p) {
  FpPoly r;
  r.reserve(f.size());
  Int pz(static_cast<long>(p));
  for (const auto& c : f) {
    Int m;
    mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
    r.push_back(m.get_si());
  }
  trim(r);
  return r;
}

int degree(const FpPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::int64_t p) {
  if (degree(a) < 0 || degree(b) < 0) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

FpPoly rem(FpPoly a, const FpPoly& b, std::int64_t p) {
  int db = degree(b);
  if (db < 0) throw EngineError("InternalInvariant", "mod-p remainder by zero");
  std::int64_t lbinv = invmod(b[static_cast<std::size_t>(db)], p);
  trim(a);
  while (degree(a) >= db) {
    int da = degree(a);
    std::int64_t q = mulmod(a[static_cast<std::size_t>(da)], lbinv, p);
    for (int i = 0; i <= db; ++i) {
      auto& c = a[static_cast<std::size_t>(da - db + i)];
      c = (c - mulmod(q, b[static_cast<std::size_t>(i)], p) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

FpPoly quot(FpPoly a, const FpPoly& b, std::int64_t p) {
  int db = degree(b);
  if (db < 0) throw EngineError("InternalInvariant", "mod-p division by zero");
  std::int64_t lbinv = invmod(b[static_cast<std::size_t>(db)], p);
  trim(a);
  int da = degree(a);
  if (da < db) return {};
  FpPoly q(static_cast<std::size_t>(da - db + 1), 0);
  while (degree(a) >= db) {
    da = degree(a);
    std::int64_t c = mulmod(a[static_cast<std::size_t>(da)], lbinv, p);
    q[static_cast<std::size_t>(da - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& t = a[static_cast<std::size_t>(da - db + i)];
      t = (t - mulmod(c, b[static_cast<std::size_t>(i)], p) % p + p) % p;
    }
    trim(a);
  }
  return q;
}

FpPoly gcd(FpPoly a, FpPoly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (degree(b) >= 0) {
    FpPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

FpPoly make_monic(FpPoly f, std::int64_t p) {
  trim(f);
  int d = degree(f);
  if (d < 0) return f;
  std::int64_t inv = invmod(f[static_cast<std::size_t>(d)], p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

std::vector<FactorPower> factor(const IntPoly& f, std::int64_t p) {
  if (!is_prime(p))
    throw EngineError("NotPrime", std::to_string(p) + " is not prime");
  if (!poly::is_monic(f)) throw EngineError("NonMonic", "factor needs monic input");
  FpPoly fb = reduce(f, p);
  if (degree(fb) != poly::degree(f))
    throw EngineError("InternalInvariant", "monic poly degenerated mod p");

  std::vector<std::pair<FpPoly, int>> parts;
  squarefree_decompose(fb, p, 1, parts);

  std::mt19937_64 rng(0x45554348u);  // fixed seed: deterministic splitting
  std::vector<FactorPower> result;
  for (auto& [part, mult] : parts) {
    // Distinct-degree filtration of the squarefree part.
    FpPoly rest = part;
    FpPoly x{0, 1};
    FpPoly frob = rem(x, rest, p);
    for (int d = 1; 2 * d <= degree(rest); ++d) {
      frob = powrem(frob, Int(static_cast<long>(p)), rest, p);
      FpPoly g = gcd(sub(frob, x, p), rest, p);
      if (degree(g) > 0) {
        std::vector<FpPoly> irred;
        equal_degree_split(g, d, p, rng, irred);
        for (auto& h : irred) result.push_back({std::move(h), mult});
        rest = quot(rest, g, p);
        frob = rem(frob, rest, p);
      }
    }
    if (degree(rest) > 0) result.push_back({rest, mult});
  }
  std::sort(result.begin(), result.end(),
            [](const FactorPower& a, const FactorPower& b) {
              return poly_less(a.factor, b.factor);
            });

  // Re-multiplied factors must reproduce f mod p.
  FpPoly check{1};
  for (const auto& fp : result)
    for (int i = 0; i < fp.multiplicity; ++i) check = mul(check, fp.factor, p);
  if (check != fb)
    throw EngineError("InternalInvariant", "factor product mismatch mod p");
  return result;
}

bool dedekind_index_divisor(const IntPoly& f, std::int64_t p) {
  auto factors = factor(f, p);
  if (std::all_of(factors.begin(), factors.end(),
                  [](const FactorPower& fp) { return fp.multiplicity == 1; }))
    return false;
  // Lift g = prod of distinct factors and h = fbar / g, then test
  // gcd(gbar, hbar, (g*h - f)/p mod p) over F_p.
  FpPoly gbar{1};
  for (const auto& fp : factors) gbar = mul(gbar, fp.factor, p);
  FpPoly hbar = quot(reduce(f, p), gbar, p);
  IntPoly glift(gbar.begin(), gbar.end());
  IntPoly hlift(hbar.begin(), hbar.end());
  IntPoly prod = poly::mul(glift, hlift);
  IntPoly diff = poly::sub(prod, f);
  IntPoly fquo;
  fquo.reserve(diff.size());
  Int pz(static_cast<long>(p));
  for (const auto& c : diff) {
    Int q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), pz.get_mpz_t());
    fquo.push_back(q);
  }
  FpPoly fbar = reduce(fquo, p);
  FpPoly g1 = gcd(gbar, hbar, p);
  FpPoly g2 = gcd(g1, fbar, p);
  return degree(g2) > 0;
}

}  // namespace modpoly
}  // namespace euchar
