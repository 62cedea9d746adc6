#include "euchar/fplin.hpp"

namespace euchar {

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

}  // namespace

I64Mat fp_normalize(I64Mat m, std::int64_t p) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = ((m(i, j) % p) + p) % p;
  return m;
}

std::int64_t fp_rank(I64Mat m, std::int64_t p) {
  m = fp_normalize(std::move(m), p);
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::int64_t rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < rows; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.row(row).swap(m.row(piv));
    std::int64_t inv = powmod(m(row, col), p - 2, p);
    for (Eigen::Index j = col; j < cols; ++j) m(row, j) = mulmod(m(row, j), inv, p);
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      std::int64_t c = m(i, col);
      for (Eigen::Index j = col; j < cols; ++j)
        m(i, j) = ((m(i, j) - mulmod(c, m(row, j), p)) % p + p) % p;
    }
    ++row;
    ++rank;
  }
  return rank;
}

I64Mat fp_mul(const I64Mat& a, const I64Mat& b, std::int64_t p) {
  if (a.cols() != b.rows())
    throw EngineError("InternalInvariant", "fp_mul shape mismatch");
  I64Mat r = I64Mat::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        r(i, j) = (r(i, j) + mulmod(a(i, k), b(k, j), p)) % p;
    }
  return fp_normalize(std::move(r), p);
}

}  // namespace euchar
