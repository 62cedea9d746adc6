#include "euchar/snf.hpp"

#include <algorithm>

namespace euchar {

namespace {

// Position of an entry with minimal nonzero absolute value in a(t.., t..).
bool find_pivot(const IntMat& a, Eigen::Index t, Eigen::Index& pi,
                Eigen::Index& pj) {
  bool found = false;
  Int best;
  for (Eigen::Index i = t; i < a.rows(); ++i)
    for (Eigen::Index j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

std::vector<Int> smith_diagonal(IntMat a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  const Eigen::Index n = std::min(rows, cols);
  std::vector<Int> diag(static_cast<std::size_t>(n), Int(0));

  Eigen::Index t = 0;
  while (t < n) {
    Eigen::Index pi = 0, pj = 0;
    if (!find_pivot(a, t, pi, pj)) break;
    a.row(t).swap(a.row(pi));
    a.col(t).swap(a.col(pj));

    // Reduce until the pivot divides everything in its row and column.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) a.row(i) -= (a.row(t) * q).eval();
        if (a(i, t) != 0) {
          a.row(t).swap(a.row(i));
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        if (q != 0) a.col(j) -= (a.col(t) * q).eval();
        if (a(t, j) != 0) {
          a.col(t).swap(a.col(j));
          clean = false;
        }
      }
    }
    ++t;
  }

  for (Eigen::Index i = 0; i < n; ++i)
    diag[static_cast<std::size_t>(i)] = abs(a(i, i));

  // Enforce the divisibility chain d1 | d2 | ... via gcd/lcm swaps; this
  // preserves the multiset of elementary divisors.
  for (std::size_t i = 0; i + 1 < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] == 0) continue;
      if (diag[i] == 0) {
        std::swap(diag[i], diag[j]);
        continue;
      }
      Int g;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      if (g == diag[i]) continue;
      Int l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

std::vector<std::int64_t> valuation_profile(const IntMat& a, std::int64_t p,
                                            std::int64_t cap) {
  if (cap < 1) throw EngineError("InternalInvariant", "profile cap must be >= 1");
  Int modz;
  mpz_ui_pow_ui(modz.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(cap));
  if (!modz.fits_slong_p() || modz > Int(static_cast<long>(1) << 62))
    throw EngineError("SizeCapExceeded", "p^cap exceeds the int64 lane");
  const std::int64_t mod = modz.get_si();
  const Eigen::Index rows = a.rows(), cols = a.cols();

  // Work over Z/p^cap: unit-times-p^v pivoting is exact for all elementary
  // divisors with valuation < cap.
  std::vector<std::vector<std::int64_t>> m(
      static_cast<std::size_t>(rows),
      std::vector<std::int64_t>(static_cast<std::size_t>(cols), 0));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      Int r;
      mpz_fdiv_r(r.get_mpz_t(), a(i, j).get_mpz_t(), modz.get_mpz_t());
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r.get_si();
    }

  auto val_of = [&](std::int64_t x) {
    if (x == 0) return cap;
    std::int64_t v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  auto mulmod = [&](std::int64_t x, std::int64_t y) {
    return static_cast<std::int64_t>(static_cast<__int128>(x) * y % mod);
  };
  // Inverse of a unit mod p^cap by Newton lifting from mod p.
  auto inv_unit = [&](std::int64_t u) {
    std::int64_t x = 1, up = u % p;
    // Inverse mod p by Fermat.
    std::int64_t e = p - 2, b = up % p, r = 1;
    while (e > 0) {
      if (e & 1) r = static_cast<std::int64_t>(static_cast<__int128>(r) * b % p);
      b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
      e >>= 1;
    }
    x = r;
    // x -> x(2 - ux) doubles the precision each step.
    while (true) {
      std::int64_t t = mulmod(u, x);
      if (t == 1) break;
      x = mulmod(x, ((2 - t) % mod + mod) % mod);
    }
    return x;
  };

  std::vector<std::int64_t> profile;
  const std::size_t urows = static_cast<std::size_t>(rows);
  const std::size_t ucols = static_cast<std::size_t>(cols);
  std::size_t t = 0;
  const std::size_t steps = std::min(urows, ucols);
  std::vector<bool> row_done(urows, false), col_done(ucols, false);

  while (t < steps) {
    // Minimal-valuation pivot over the live submatrix.
    std::int64_t best = cap;
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t i = 0; i < urows; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < ucols; ++j) {
        if (col_done[j] || m[i][j] == 0) continue;
        std::int64_t v = val_of(m[i][j]);
        if (!found || v < best) {
          best = v;
          pi = i;
          pj = j;
          found = true;
          if (best == 0) break;
        }
      }
      if (found && best == 0) break;
    }
    if (!found) break;

    const std::int64_t piv = m[pi][pj];
    const std::int64_t v = best;
    std::int64_t pv = 1;
    for (std::int64_t i = 0; i < v; ++i) pv *= p;
    const std::int64_t unit = piv / pv;
    const std::int64_t uinv = inv_unit(((unit % mod) + mod) % mod);

    // Clear the pivot column: entries have valuation >= v, so the quotient
    // (entry / p^v) * unit^{-1} is integral mod p^{cap - v}.
    for (std::size_t i = 0; i < urows; ++i) {
      if (row_done[i] || i == pi || m[i][pj] == 0) continue;
      std::int64_t q = mulmod(m[i][pj] / pv, uinv);
      for (std::size_t j = 0; j < ucols; ++j) {
        if (col_done[j] || m[pi][j] == 0) continue;
        m[i][j] = ((m[i][j] - mulmod(q, m[pi][j])) % mod + mod) % mod;
      }
    }
    // Clear the pivot row.
    for (std::size_t j = 0; j < ucols; ++j) {
      if (col_done[j] || j == pj || m[pi][j] == 0) continue;
      std::int64_t q = mulmod(m[pi][j] / pv, uinv);
      for (std::size_t i = 0; i < urows; ++i) {
        if (row_done[i] || m[i][pj] == 0) continue;
        m[i][j] = ((m[i][j] - mulmod(q, m[i][pj])) % mod + mod) % mod;
      }
    }
    row_done[pi] = true;
    col_done[pj] = true;
    profile.push_back(v);
    ++t;
  }
  while (profile.size() < steps) profile.push_back(cap);
  std::sort(profile.begin(), profile.end());
  return profile;
}

}  // namespace euchar
