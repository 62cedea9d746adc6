#include "euchar/poly.hpp"

#include <algorithm>

namespace euchar {
namespace poly {

namespace {

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(RatPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int sign_of(const Rat& x) { return sgn(x); }

}  // namespace

int degree(const IntPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

int degree(const RatPoly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

bool is_monic(const IntPoly& f) {
  int d = degree(f);
  return d >= 0 && f[static_cast<std::size_t>(d)] == 1;
}

IntPoly derivative(const IntPoly& f) {
  IntPoly d;
  for (std::size_t i = 1; i < f.size(); ++i)
    d.push_back(f[i] * Int(static_cast<long>(i)));
  trim(d);
  return d;
}

Int eval(const IntPoly& f, const Int& x) {
  Int acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (degree(a) < 0 || degree(b) < 0) return {};
  IntPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

RatPoly to_rat(const IntPoly& f) {
  RatPoly r;
  r.reserve(f.size());
  for (const auto& c : f) r.emplace_back(c);
  return r;
}

RatPoly rem(const RatPoly& a, const RatPoly& b) {
  int db = degree(b);
  if (db < 0) throw EngineError("InternalInvariant", "remainder by zero poly");
  RatPoly r = a;
  trim(r);
  while (degree(r) >= db) {
    int dr = degree(r);
    Rat q = r[static_cast<std::size_t>(dr)] / b[static_cast<std::size_t>(db)];
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(dr - db + i)] -=
          q * b[static_cast<std::size_t>(i)];
    r[static_cast<std::size_t>(dr)] = 0;
    trim(r);
  }
  return r;
}

bool squarefree_over_q(const IntPoly& f) {
  if (degree(f) <= 0) return degree(f) == 0;
  RatPoly a = to_rat(f);
  RatPoly b = to_rat(derivative(f));
  // Euclidean gcd; f squarefree over Q iff gcd(f, f') has degree 0.
  while (degree(b) >= 0) {
    RatPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return degree(a) == 0;
}

namespace {

// Sign variations in the sequence of leading coefficients of the Sturm chain
// evaluated at +inf or -inf.
int variations_at_infinity(const std::vector<RatPoly>& chain, bool plus) {
  int count = 0;
  int prev = 0;
  for (const auto& g : chain) {
    int d = degree(g);
    if (d < 0) continue;
    int s = sign_of(g[static_cast<std::size_t>(d)]);
    if (!plus && (d % 2 == 1)) s = -s;
    if (prev != 0 && s != 0 && s != prev) ++count;
    if (s != 0) prev = s;
  }
  return count;
}

}  // namespace

int count_real_roots(const IntPoly& f) {
  if (degree(f) < 1)
    throw EngineError("InternalInvariant", "root count needs degree >= 1");
  std::vector<RatPoly> chain;
  chain.push_back(to_rat(f));
  chain.push_back(to_rat(derivative(f)));
  while (degree(chain.back()) > 0) {
    RatPoly r = rem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (degree(r) < 0) break;
    chain.push_back(std::move(r));
  }
  return variations_at_infinity(chain, /*plus=*/false) -
         variations_at_infinity(chain, /*plus=*/true);
}

Int bareiss_det(IntMat m) {
  const auto n = m.rows();
  if (n != m.cols())
    throw EngineError("InternalInvariant", "determinant of non-square matrix");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

Int discriminant(const IntPoly& f) {
  int n = degree(f);
  if (n < 1) throw EngineError("InternalInvariant", "discriminant needs degree >= 1");
  if (!is_monic(f)) throw EngineError("NonMonic", "discriminant needs monic input");
  if (n == 1) return 1;
  IntPoly fp = derivative(f);
  int m = degree(fp);
  // Sylvester matrix of f (degree n) and f' (degree m), size n + m.
  IntMat s = IntMat::Zero(n + m, n + m);
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j)
      s(row, row + (n - j)) = f[static_cast<std::size_t>(j)];
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j)
      s(m + row, row + (m - j)) = fp[static_cast<std::size_t>(j)];
  Int res = bareiss_det(std::move(s));
  // disc = (-1)^{n(n-1)/2} * Res(f, f') for monic f.
  return (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? res : Int(-res);
}

}  // namespace poly
}  // namespace euchar
