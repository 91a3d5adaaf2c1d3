#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galcov/linalg.hpp"

namespace galcov {

/// Finite-dimensional commutative algebra over a field, by structure
/// constants: left[i] is the matrix of multiplication by e_i, so
/// e_i e_j = sum_k left[i](k, j) e_k.
class CommutativeAlgebra {
public:
  using Sparse = std::vector<std::pair<std::size_t, Scalar>>;

  CommutativeAlgebra() = default;
  CommutativeAlgebra(Field f, std::vector<SMatrix> left, SVector unit);

  const Field &field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return unit_.size(); }
  const SVector &unit() const noexcept { return unit_; }
  const std::vector<SMatrix> &left() const noexcept { return left_; }
  /// c_{ij}^k
  const Scalar &structure(std::size_t i, std::size_t j, std::size_t k) const { return left_[i](k, j); }
  /// e_i e_j as a sparse vector.
  const Sparse &product(std::size_t i, std::size_t j) const { return prod_[i * dim() + j]; }

  SVector basis_vector(std::size_t i) const;
  SVector zero_vector() const;
  SVector mul(const SVector &a, const SVector &b) const;
  /// Matrix of multiplication by a.
  SMatrix left_matrix(const SVector &a) const;
  /// p(a), constants mapped to multiples of `one` (a unit of a sub-algebra).
  SVector evaluate(const Poly &p, const SVector &a, const SVector &one) const;
  /// Monic minimal polynomial of a inside the algebra with unit `one`.
  Poly minimal_polynomial(const SVector &a, const SVector &one) const;
  /// tr(L_a)
  Scalar trace(const SVector &a) const;
  SMatrix trace_gram() const;

private:
  Field field_;
  std::vector<SMatrix> left_;
  SVector unit_;
  std::vector<Sparse> prod_;
};

SVector add(const SVector &a, const SVector &b);
SVector sub(const SVector &a, const SVector &b);
SVector scale(const SVector &a, const Scalar &c);
bool is_zero(const SVector &a);
int compare_vectors(const SVector &a, const SVector &b);

struct IdempotentSplit {
  std::vector<SVector> idempotents; // complete, orthogonal, primitive; canonical order
};

/// Primitive idempotents by CRT splitting on minimal polynomials of basis
/// elements. Throws NonSplitAlgebra when a minimal polynomial has an
/// irreducible factor of degree > 1 over the base field.
IdempotentSplit split_idempotents(const CommutativeAlgebra &a);

} // namespace galcov
