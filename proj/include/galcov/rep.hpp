#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "galcov/group.hpp"
#include "galcov/linalg.hpp"

namespace galcov {

/// Matrix representation: mats[g] is the matrix of the element with index g.
struct Representation {
  Field field;
  std::size_t dim = 0;
  std::vector<SMatrix> mats;

  Scalar character(std::size_t g) const { return trace(mats[g]); }
  std::vector<Scalar> character() const;
  friend bool operator==(const Representation &, const Representation &) = default;
};

/// Checks rho(e) = I and rho(g)rho(h) = rho(gh) for all pairs; throws InvalidAction.
void check_representation(const FiniteGroup &g, const Representation &v);
Representation make_representation(const FiniteGroup &g, const Field &f, std::vector<SMatrix> mats);
/// One-dimensional representation from its values.
Representation character_representation(const FiniteGroup &g, const std::vector<Scalar> &values);

Representation trivial_representation(const FiniteGroup &g, const Field &f);
/// Functions on G with (g.f)(x) = f(xg): g sends delta_y to delta_{y g^-1}.
Representation regular_representation(const FiniteGroup &g, const Field &f);
/// rho(g^-1)^T
Representation dual(const FiniteGroup &g, const Representation &v);
Representation tensor(const Representation &v, const Representation &w);
Representation direct_sum(const Representation &v, const Representation &w);
/// p^-1 rho(g) p
Representation change_basis(const Representation &v, const SMatrix &p);
/// Representation of subgroup_as_group(h).
Representation restrict(const Representation &v, const Subgroup &h);
/// Coset model: coordinates f(r) for the right coset reps r of h, with
/// (g.f)(r) = rho(h(r,g)) f(r') where r g = h(r,g) r'.
Representation induce(const FiniteGroup &g, const Subgroup &h, const Representation &v);

/// Throws NonInvertibleOrder when char k divides |G|.
void require_invertible_order(const FiniteGroup &g, const Field &f);
/// (1/|G|) sum rho(g)
SMatrix reynolds_projector(const FiniteGroup &g, const Representation &v);
/// RREF basis (rows) of the fixed vectors; equal to the row basis of the
/// Reynolds image. Throws NonInvertibleOrder.
SMatrix invariant_subspace(const FiniteGroup &g, const Representation &v);
/// Same space without the characteristic check (plain common kernel).
SMatrix fixed_vectors(const FiniteGroup &g, const Representation &v);
/// Canonical basis of Hom^G(x, y); each matrix is dim y by dim x. The basis is
/// the RREF basis of the row-major vectorized Hom space.
std::vector<SMatrix> intertwiners(const FiniteGroup &g, const Representation &x, const Representation &y);
SMatrix vectorize(const SMatrix &m);
SMatrix unvectorize(const SVector &v, std::size_t rows, std::size_t cols);

struct GoodReport {
  bool good = true;
  std::vector<std::string> failures;
  std::size_t sum_dim_squares = 0;
};
GoodReport validate_good_set(const FiniteGroup &g, const std::vector<Representation> &reps);

/// A validated good collection of irreducibles, trivial first.
class IrrepSet {
public:
  IrrepSet() = default;
  /// Validates; throws NotGoodSet on failure.
  IrrepSet(FiniteGroup g, Field f, std::vector<Representation> reps);

  const FiniteGroup &group() const noexcept { return group_; }
  const Field &field() const noexcept { return field_; }
  std::size_t size() const noexcept { return reps_.size(); }
  const Representation &operator[](std::size_t i) const { return reps_[i]; }
  const std::vector<Representation> &reps() const noexcept { return reps_; }
  std::size_t dim(std::size_t i) const { return reps_[i].dim; }
  const std::vector<Scalar> &character(std::size_t i) const { return chars_[i]; }
  std::vector<std::size_t> dims() const;

  /// Multiplicity of each irrep in v, from character inner products.
  std::vector<std::size_t> multiplicities(const Representation &v) const;
  /// Index of the irrep isomorphic to the dual of irrep i.
  std::size_t dual_index(std::size_t i) const;
  /// Canonical basis of Hom^G(U_u, U_v (x) U_w), cached.
  const std::vector<SMatrix> &tensor_basis(std::size_t v, std::size_t w, std::size_t u) const;

private:
  FiniteGroup group_;
  Field field_;
  std::vector<Representation> reps_;
  std::vector<std::vector<Scalar>> chars_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Absolutely irreducible representations over Q(zeta_N), N = exponent(G)
/// unless a multiple is given. Ordered by dimension, then character values.
IrrepSet irreps(const FiniteGroup &g, std::uint32_t level = 0);

struct TensorDecomposition {
  std::vector<std::size_t> multiplicities;         // per irrep
  std::vector<std::vector<SMatrix>> intertwiners;  // basis of Hom^G(U, V (x) W) per irrep
};
/// Throws NotGoodSet when `irr` is not good for g.
TensorDecomposition tensor_decompose(const Representation &v, const Representation &w, const IrrepSet &irr);

} // namespace galcov
