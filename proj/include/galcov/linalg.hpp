#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "galcov/matrix.hpp"
#include "galcov/poly.hpp"
#include "galcov/scalar.hpp"

namespace galcov {

using SMatrix = Matrix<Scalar>;
using PMatrix = Matrix<Poly>;
using SVector = std::vector<Scalar>;

SMatrix zeros(std::size_t rows, std::size_t cols, const Field &f);
SMatrix identity(std::size_t n, const Field &f);
SMatrix column(const SVector &v);
Field field_of(const SMatrix &m);

// ---------------------------------------------------------------------------
// linear algebra over a field

struct Echelon {
  SMatrix rref;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots; // pivot column of each row
};

/// Reduced row echelon form. Zero rows are removed, so rref.rows() = rank.
Echelon rref(SMatrix m);
std::size_t rank(const SMatrix &m);
/// Canonical (RREF) basis, as rows, of the kernel {x : m x = 0}.
SMatrix nullspace(const SMatrix &m);
/// Canonical (RREF) basis, as rows, of the row space.
SMatrix row_basis(const SMatrix &m);
/// Canonical basis of the intersection of two row spaces.
SMatrix intersect_rows(const SMatrix &a, const SMatrix &b);
std::optional<SMatrix> try_inverse(const SMatrix &m);
SMatrix inverse(const SMatrix &m);
Scalar det(const SMatrix &m);
Scalar trace(const SMatrix &m);
/// Some x with a x = b, if one exists.
std::optional<SMatrix> solve(const SMatrix &a, const SMatrix &b);
/// Coordinates of v in an RREF basis (rows) given its pivots; nullopt if v
/// does not lie in the row space.
std::optional<SVector> rref_coordinates(const Echelon &basis, const SVector &v);
/// Eigenspace ker(m - lambda) as rows.
SMatrix eigenspace(const SMatrix &m, const Scalar &lambda);

// ---------------------------------------------------------------------------
// linear algebra over k[t]

PMatrix poly_zeros(std::size_t rows, std::size_t cols, const Field &f);
PMatrix poly_identity(std::size_t n, const Field &f);
PMatrix to_poly_matrix(const SMatrix &m);

/// Fraction-free determinant (Bareiss); exact over k[t].
Poly det_bareiss(PMatrix m);

/// Row echelon form over k[t] by unimodular row operations; the nonzero rows
/// are a basis of the row module. Pivots are monic.
PMatrix pid_row_echelon(PMatrix m);

struct SmithForm {
  std::vector<Poly> divisors; // min(rows, cols) entries, monic or zero, d_i | d_{i+1}
  PMatrix P, Q, D;            // P * M * Q = D, P and Q unimodular
};
SmithForm smith_normal_form(const PMatrix &m);

} // namespace galcov
