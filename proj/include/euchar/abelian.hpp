#pragma once

// Finite abelian p-groups A = (+) Z/p^{e_i} and homomorphisms between them,
// presented by integer matrices.  Kernel and image orders come from p-local
// Smith normal form valuations; the kernel is computed through the
// Pontryagin-dual matrix, so the |ker|*|im| = |domain| assertion checks two
// independent eliminations against each other.

#include <cstdint>
#include <vector>

#include "euchar/types.hpp"

namespace euchar {

class FiniteAbelianPGroup {
 public:
  // Exponents may repeat in any order (cochain groups repeat the module
  // pattern); each must be >= 1.
  FiniteAbelianPGroup(std::int64_t p, std::vector<std::int64_t> exponents);

  std::int64_t p() const { return p_; }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  int components() const { return static_cast<int>(exps_.size()); }
  std::int64_t order_exponent() const;
  FormalCardinality order() const;
  bool elementary() const;  // every exponent is 1
  bool uniform() const;     // all exponents equal (vacuously true if empty)
  std::int64_t max_exponent() const;
  // Direct sum of n copies (component pattern repeated).
  FiniteAbelianPGroup power(int n) const;

  friend bool operator==(const FiniteAbelianPGroup& a,
                         const FiniteAbelianPGroup& b) {
    return a.p_ == b.p_ && a.exps_ == b.exps_;
  }

 private:
  std::int64_t p_;
  std::vector<std::int64_t> exps_;
};

class FinAbHom {
 public:
  // matrix: codomain.components() rows x domain.components() cols.
  // Well-definedness (entry (i,j) divisible by p^{max(0, f_i - e_j)}) is
  // checked; entries are normalized into [0, p^{f_i}).
  FinAbHom(FiniteAbelianPGroup domain, FiniteAbelianPGroup codomain,
           IntMat matrix);

  const FiniteAbelianPGroup& domain() const { return dom_; }
  const FiniteAbelianPGroup& codomain() const { return cod_; }
  const IntMat& matrix() const { return mat_; }

  // v_p of |image| and |kernel|; each call asserts
  // kernel_exp + image_exp == domain order exp.
  std::int64_t image_order_exponent() const;
  std::int64_t kernel_order_exponent() const;

  bool is_zero() const;

  // this after inner (matrix product, renormalized).
  FinAbHom compose_after(const FinAbHom& inner) const;

 private:
  FiniteAbelianPGroup dom_, cod_;
  IntMat mat_;
};

}  // namespace euchar
