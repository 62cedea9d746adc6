#pragma once

// Finite groups presented by full multiplication tables, built from
// permutation generators or from named tables.  Indices are element ids;
// index 0 is the identity for every constructor here.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "euchar/types.hpp"

namespace euchar {

// perm[i] = image of point i (0-based); size is the ground-set size.
using Permutation = std::vector<int>;

// One-line cycle notation with 1-based points: "(1 2 3)(4 5)"; "e" or "()"
// is the identity.  ground_size extends with fixed points when positive.
Permutation parse_cycles(const std::string& s, int ground_size = 0);
std::string cycle_string(const Permutation& p);

class FiniteGroup {
 public:
  // Validates closure bounds, identity and inverses exhaustively, and
  // associativity (exhaustively up to order 64, then on 10^4 seeded random
  // triples).
  static FiniteGroup from_table(Eigen::MatrixXi table,
                                std::vector<std::string> labels);
  static FiniteGroup from_permutations(std::vector<Permutation> generators,
                                       int order_cap = 5000);
  // "trivial", "C<n>", "Klein4", "Q8", "S3".
  static FiniteGroup from_builtin(const std::string& name);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup klein4();
  static FiniteGroup quaternion8();
  static FiniteGroup symmetric3();

  int order() const { return static_cast<int>(table_.rows()); }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_(a, b); }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const;
  bool is_cyclic() const;
  // Smallest-index generator when cyclic.
  std::optional<int> cyclic_generator() const;

  // Elements of order dividing 2 (identity included), ascending.
  std::vector<int> involutions() const;

  // Subgroup generated by the given elements, as a sorted element list.
  std::vector<int> subgroup_closure(const std::vector<int>& elems) const;

  // d(G): size of a smallest generating set (0 for the trivial group).
  // Brute force; rejects orders above the cap.
  int minimal_generators(int order_cap = 512) const;

  // Invariant factors of G/[G,G] (each > 1, divisibility chain ascending).
  std::vector<std::int64_t> abelianization() const;

  std::vector<int> commutator_subgroup() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> element_by_label(const std::string& label) const;

 private:
  FiniteGroup() = default;
  void validate() const;

  Eigen::MatrixXi table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

}  // namespace euchar
