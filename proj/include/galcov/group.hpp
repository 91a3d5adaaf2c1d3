#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "galcov/error.hpp"

namespace galcov {

/// Desk-scale limits; the CLI may override them from the environment.
struct Caps {
  std::size_t max_group_order = 48;
  std::size_t max_degree = 32;
};
Caps &caps();

/// Sorted set of element indices of some parent group, closed under the
/// group law.
struct Subgroup {
  std::vector<std::size_t> elements;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(std::size_t g) const;
  friend bool operator==(const Subgroup &, const Subgroup &) = default;
  friend auto operator<=>(const Subgroup &a, const Subgroup &b) { return a.elements <=> b.elements; }
};

struct CosetData {
  std::vector<std::size_t> reps;     // minimal element of each right coset H r, increasing
  std::vector<std::size_t> coset_of; // element -> position in reps
};

class FiniteGroup {
public:
  FiniteGroup() = default;

  /// Validates the table (Latin square, identity, associativity).
  static FiniteGroup from_table(std::vector<std::vector<std::size_t>> mul,
                                std::vector<std::string> labels = {}, std::string name = {});
  static FiniteGroup trivial() { return cyclic(1); }
  static FiniteGroup cyclic(std::size_t n);
  /// Dihedral group of order 2n; element r^i s^j has index j*n + i.
  static FiniteGroup dihedral(std::size_t n);
  /// Permutations of {0..n-1} in lexicographic one-line order, (st)(i) = s(t(i)).
  static FiniteGroup symmetric(std::size_t n);
  /// Even permutations of {0..n-1}, lexicographic order.
  static FiniteGroup alternating(std::size_t n);
  /// i^a j^b has index 4b + a.
  static FiniteGroup quaternion();
  /// (g, h) has index g*|H| + h.
  static FiniteGroup direct_product(const FiniteGroup &g, const FiniteGroup &h);
  /// N x| K with action[k] an automorphism of N (as a permutation of indices).
  /// (n, k) has index k*|N| + n; (n1,k1)(n2,k2) = (n1 phi_k1(n2), k1 k2).
  static FiniteGroup semidirect(const FiniteGroup &n, const FiniteGroup &k,
                                const std::vector<std::vector<std::size_t>> &action);
  /// C_n x| C_m with the generator acting by x -> x^r.
  static FiniteGroup metacyclic(std::size_t n, std::size_t m, std::size_t r);
  /// SL(2,3) realised as Q8 x| C3.
  static FiniteGroup sl23();
  /// "C4", "D4", "S3", "S4", "A4", "Q8", "SL23", "CnxCm:n,m", "SD:n,m,r".
  static FiniteGroup parse(std::string_view spec);

  std::size_t order() const noexcept { return mul_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a][b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t identity() const noexcept { return id_; }
  std::size_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }
  std::size_t pow(std::size_t a, long k) const;
  std::size_t element_order(std::size_t a) const;
  std::size_t exponent() const;
  const std::vector<std::vector<std::size_t>> &table() const noexcept { return mul_; }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  const std::string &name() const noexcept { return name_; }
  std::string label(std::size_t g) const;

  bool is_abelian() const;
  bool is_solvable() const;
  Subgroup whole() const;
  Subgroup trivial_subgroup() const;
  /// Validates closure; throws NotSubgroup.
  Subgroup subgroup(std::vector<std::size_t> elements) const;
  Subgroup generated(const std::vector<std::size_t> &gens) const;
  /// Deterministic generating set (greedy, large element orders first).
  std::vector<std::size_t> generators() const;
  std::vector<std::size_t> generators_of(const Subgroup &h) const;
  bool is_subgroup(const std::vector<std::size_t> &sorted) const;
  bool is_normal(const Subgroup &h) const;
  bool is_abelian(const Subgroup &h) const;

  /// Conjugacy classes ordered by smallest element; each class sorted.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;
  Subgroup center() const;
  Subgroup commutator_subgroup() const;
  Subgroup commutator_subgroup(const Subgroup &h) const;
  /// Every subgroup, ordered by order then element set. Throws CapExceeded.
  const std::vector<Subgroup> &subgroups() const;
  std::vector<Subgroup> normal_subgroups() const;

  CosetData right_cosets(const Subgroup &h) const;
  /// G/H with cosets in the order of right_cosets(h).reps. Throws NotNormal.
  FiniteGroup quotient(const Subgroup &h) const;
  /// H as a group in its own right; element i is h.elements[i].
  FiniteGroup subgroup_as_group(const Subgroup &h) const;

  std::string describe() const;

private:
  void finish();

  std::vector<std::vector<std::size_t>> mul_;
  std::vector<std::size_t> inv_;
  std::size_t id_ = 0;
  std::vector<std::string> labels_;
  std::string name_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

struct Descent {
  Subgroup g_prime;  // nonabelian subgroup of G
  Subgroup h;        // abelian normal subgroup of g_prime of prime index
  std::size_t p = 0; // [g_prime : h]
  std::vector<Subgroup> chain; // G = chain[0] >= ... >= g_prime
};

/// Descent to an abelian normal subgroup of prime index. Non-solvable groups
/// are first replaced by a minimal nonabelian subgroup; then kernels of
/// surjections onto Z/p are taken until the kernel is abelian. Ties are broken
/// by the lexicographically smallest element set. Throws AbelianInput.
Descent find_abelian_normal_prime_index(const FiniteGroup &g);

} // namespace galcov
