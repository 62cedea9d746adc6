#pragma once

// Finite Galois modules: a finite abelian p-group with an action of a finite
// group through integer matrices, an optional mod-p^e cyclotomic character,
// and the designated archimedean data (one involution or complex marker per
// archimedean place of the ambient field).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "euchar/abelian.hpp"
#include "euchar/fingroup.hpp"
#include "euchar/types.hpp"

namespace euchar {

struct ArchPlace {
  bool complex_place = false;
  int involution = 0;  // Gamma element with square = identity (real places)
};

class GaloisModule {
 public:
  // Validates: one k x k matrix per element, each a well-defined invertible
  // endomorphism; the action is a homomorphism (checked exhaustively); the
  // character, when present, is a homomorphism into units mod p^{max e}; the
  // involutions square to the identity.
  GaloisModule(std::shared_ptr<const FiniteGroup> group,
               FiniteAbelianPGroup module, std::vector<IntMat> action,
               std::optional<std::vector<Int>> cyclo_char,
               std::vector<ArchPlace> arch_places);

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const {
    return group_;
  }
  const FiniteAbelianPGroup& module() const { return module_; }
  const IntMat& action(int g) const {
    return action_[static_cast<std::size_t>(g)];
  }
  bool trivial_action() const;
  bool has_cyclo() const { return cyclo_.has_value(); }
  const Int& cyclo(int g) const;
  const std::vector<ArchPlace>& arch_places() const { return arch_; }

  // The same module with a different archimedean assignment.
  GaloisModule with_arch_places(std::vector<ArchPlace> arch) const;

  // g acting minus the identity, as a hom M -> M.
  FinAbHom action_minus_identity(int g) const;
  // Sum of the actions of the listed elements (with multiplicity).
  FinAbHom norm_hom(const std::vector<int>& elements) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  FiniteAbelianPGroup module_;
  std::vector<IntMat> action_;
  std::optional<std::vector<Int>> cyclo_;
  std::vector<ArchPlace> arch_;
};

// Extend values given on a generating subset to the whole group by closing
// under products (identity implied).  Throws SchemaError when the seeded
// elements do not generate.
std::vector<IntMat> complete_action(const FiniteGroup& g,
                                    const std::map<int, IntMat>& seeds, int k);
std::vector<Int> complete_character(const FiniteGroup& g,
                                    const std::map<int, Int>& seeds);

// |M^H| for the subgroup generated by the listed elements.
FormalCardinality fixed_points(const GaloisModule& m,
                               const std::vector<int>& elements);

// Cartier dual M' = Hom(M, mu_{p^infty}): same exponents, action
// chi(g) * adjoint-transpose of action(g^{-1}).  Needs the character.
GaloisModule cartier_dual(const GaloisModule& m);

// Tate H^0 of the local group at a real place: the abstract order-2 group
// acts through the designated involution (possibly trivially), so this is
// |ker(A(c) - 1)| / |im(A(c) + 1)|.
FormalCardinality tate_h0_real_place(const GaloisModule& m, int involution);

// A representation rho: Gamma -> GL_n(F_p) (entries in [0, p)).
class AdjointModule {
 public:
  AdjointModule(std::shared_ptr<const FiniteGroup> group, std::int64_t p,
                std::vector<I64Mat> rep);

  const FiniteGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const {
    return group_;
  }
  std::int64_t p() const { return p_; }
  int n() const { return n_; }
  const I64Mat& rep(int g) const { return rep_[static_cast<std::size_t>(g)]; }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::int64_t p_;
  int n_;
  std::vector<I64Mat> rep_;
};

// ad rho = M_n(F_p) with g . X = rho(g) X rho(g)^{-1}, as a GaloisModule on
// (Z/p)^{n^2} (row-major flattening).
GaloisModule adjoint_of(const AdjointModule& rho,
                        std::vector<ArchPlace> arch_places);

// dim over F_p of {X : X rho(g) = rho(g) X}.
std::int64_t centralizer_dim(const AdjointModule& rho, int g);

// dim of the centralizer of the whole image.
std::int64_t centralizer_dim_of_image(const AdjointModule& rho);

}  // namespace euchar
