#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "galcov/algebra.hpp"
#include "galcov/rep.hpp"

namespace galcov {

/// Commutative algebra with G acting by automorphisms; action[g] has column j
/// equal to g . e_j.
struct EquivariantAlgebra {
  FiniteGroup group;
  CommutativeAlgebra alg;
  std::vector<SMatrix> action;

  std::size_t dim() const noexcept { return alg.dim(); }
  const Field &field() const noexcept { return alg.field(); }
  Representation representation() const { return {field(), dim(), action}; }
};

struct AlgebraCheck {
  bool ok = true;
  ErrorKind kind = ErrorKind::Internal;
  std::string detail;
};
/// Commutativity, associativity, unit, automorphisms, group action.
AlgebraCheck check_algebra(const EquivariantAlgebra &a);
/// Throws the failing ErrorKind.
void validate(const EquivariantAlgebra &a);

/// Builds and validates.
EquivariantAlgebra make_algebra(FiniteGroup g, const Field &f, std::vector<SMatrix> left, SVector unit,
                                std::vector<SMatrix> action);
/// Structure constants as (i, j, k, c) with e_i e_j = sum c e_k; the symmetric
/// entry is implied.
EquivariantAlgebra algebra_from_constants(FiniteGroup g, const Field &f, std::size_t dim,
                                          const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> &c,
                                          SVector unit, std::vector<SMatrix> action);

/// k with trivial action.
EquivariantAlgebra point_algebra(const FiniteGroup &g, const Field &f);
/// Functions on G, basis delta_x, (g.f)(x) = f(xg): the trivial torsor.
EquivariantAlgebra functions_on_group(const FiniteGroup &g, const Field &f);
/// Functions on the right cosets H\G with the translation action.
EquivariantAlgebra functions_on_cosets(const FiniteGroup &g, const Subgroup &h, const Field &f);
/// k + M with M^2 = 0.
EquivariantAlgebra square_zero_extension(const FiniteGroup &g, const Representation &m);
EquivariantAlgebra product(const EquivariantAlgebra &a, const EquivariantAlgebra &b);
EquivariantAlgebra tensor(const EquivariantAlgebra &a, const EquivariantAlgebra &b);
/// New basis e'_j = sum_i p(i, j) e_i.
EquivariantAlgebra change_basis(const EquivariantAlgebra &a, const SMatrix &p);
/// Same algebra with the action restricted to subgroup_as_group(h).
EquivariantAlgebra restrict(const EquivariantAlgebra &a, const Subgroup &h);
/// Invariant subalgebra A^G as rows.
SMatrix invariants(const EquivariantAlgebra &a);

/// Tannakian data: ranks, unit and multiplication blocks relative to the
/// cached intertwiner bases of the irrep set.
struct FunctorData {
  IrrepSet irreps;
  std::vector<std::size_t> ranks;
  SVector unit; // coordinates in Gamma_triv
  /// blocks[v][w][u][s] is r_u by (r_v r_w), input index j * r_w + l, for the
  /// s-th basis element of Hom^G(U, V (x) W).
  std::vector<std::vector<std::vector<std::vector<SMatrix>>>> blocks;

  const SMatrix &block(std::size_t v, std::size_t w, std::size_t u, std::size_t s) const { return blocks[v][w][u][s]; }
  std::size_t algebra_dim() const;
  bool same_values(const FunctorData &o) const;
};

/// Data with the given ranks, every block zero. The unit blocks are not set.
FunctorData zero_data(const IrrepSet &irr, std::vector<std::size_t> ranks);
/// r_triv = 1, unit 1, unit blocks identity and everything else zero: the
/// algebra k + F with F^2 = 0.
FunctorData square_zero_data(const IrrepSet &irr, std::vector<std::size_t> ranks);
/// Gamma_V basis change: new basis = columns of p[V] in the old coordinates.
FunctorData change_basis(const FunctorData &d, const std::vector<SMatrix> &p);

struct Omega {
  FunctorData data;
  /// gamma[v] rows: RREF basis of (A (x) V)^G, coordinate a * dim V + i.
  std::vector<SMatrix> gamma;
};
/// Throws NonInvertibleOrder.
Omega omega_full(const EquivariantAlgebra &a, const IrrepSet &irr);
FunctorData omega(const EquivariantAlgebra &a, const IrrepSet &irr);

/// F = sum V^dual (x) Gamma_V, basis index offset(V) + i * r_V + j. Throws
/// NotAssociative, NotCommutative, NoUnit or InvalidAction.
EquivariantAlgebra f_gamma(const FunctorData &d);
std::vector<std::size_t> f_gamma_offsets(const FunctorData &d);

/// beta: F_{Omega(A)} -> A, (V, i, j) maps to column i of gamma_j.
SMatrix canonical_beta(const EquivariantAlgebra &a, const Omega &om);

struct IsoCheck {
  bool invertible = false, equivariant = false, multiplicative = false, unital = false;
  bool ok() const { return invertible && equivariant && multiplicative && unital; }
  std::string describe() const;
};
/// m: dst.dim x src.dim, checked as an equivariant algebra isomorphism src -> dst.
IsoCheck check_isomorphism(const EquivariantAlgebra &src, const EquivariantAlgebra &dst, const SMatrix &m);

/// F(Omega(A)) -> A through beta.
IsoCheck roundtrip_algebra(const EquivariantAlgebra &a, const IrrepSet &irr);
/// Omega(F(d)) has the same ranks, unit and blocks (the canonical map is the
/// identity in the fixed bases).
bool roundtrip_data(const FunctorData &d);

struct RankFunction {
  std::vector<std::size_t> values; // on the irrep set
  /// f_U = sum_V mult(V, U) f_V
  std::size_t extend(const IrrepSet &irr, const Representation &u) const;
};

/// r_V = dim (A (x) V)^G without the blocks. Throws NonInvertibleOrder.
std::vector<std::size_t> omega_ranks(const EquivariantAlgebra &a, const IrrepSet &irr);
/// Throws NonInvertibleOrder.
bool is_g_cover(const EquivariantAlgebra &a, const IrrepSet &irr);
/// Validates the collection first; throws NotGoodSet when it is not good.
bool is_g_cover(const EquivariantAlgebra &a, const std::vector<Representation> &irr);
bool is_etale(const EquivariantAlgebra &a);
bool is_torsor(const EquivariantAlgebra &a);

struct ComponentDecomposition {
  std::vector<SVector> idempotents;
  std::vector<SMatrix> components;                // RREF basis rows of e_i A
  std::vector<std::vector<std::size_t>> permutation; // [g][i]: g . e_i = e_{permutation[g][i]}
  std::vector<Subgroup> stabilizers;
  std::vector<std::vector<std::size_t>> orbits;
};
/// Throws NonSplitAlgebra.
ComponentDecomposition component_decompose(const EquivariantAlgebra &a);

/// e A for an idempotent e, as an algebra for the subgroup h stabilizing e.
/// basis receives the RREF rows used as the basis of e A.
EquivariantAlgebra corner(const EquivariantAlgebra &a, const SVector &e, const Subgroup &h, SMatrix *basis = nullptr);

/// k[x]/(x^n) with g . x = chi(g) x for a one-dimensional irreducible chi.
EquivariantAlgebra graded_truncated(const FiniteGroup &g, const Representation &chi, std::size_t n);
/// Seeded random valid algebra: products (and occasional tensor products) of
/// coset algebras, square-zero extensions and graded truncated pieces, after
/// a random basis change.
EquivariantAlgebra random_algebra(const IrrepSet &irr, std::mt19937_64 &rng, std::size_t max_dim);
/// omega of a random algebra followed by random Gamma basis changes.
FunctorData random_functor_data(const IrrepSet &irr, std::mt19937_64 &rng, std::size_t max_dim);
/// Small-integer matrix with det = +-1.
SMatrix random_unimodular(std::size_t n, const Field &f, std::mt19937_64 &rng);
SMatrix random_invertible(std::size_t n, const Field &f, std::mt19937_64 &rng);

} // namespace galcov
