#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "galcov/eqalg.hpp"

namespace galcov {

/// Finite free k[t]-algebra with G-action, read locally at t = 0.
/// left[i](k, j) = c_ij^k in k[t]; action[g] column j = g . e_j.
struct CoverOverDVR {
  FiniteGroup group;
  Field field;
  std::vector<PMatrix> left;
  std::vector<Poly> unit;
  std::vector<PMatrix> action;

  std::size_t dim() const noexcept { return unit.size(); }
  /// A / (t - c) as a k-algebra.
  EquivariantAlgebra fiber(const Scalar &c) const;
  EquivariantAlgebra special_fiber() const { return fiber(Scalar::zero(field)); }
};

/// Polynomial identities for commutativity, associativity, unit, and an action
/// by automorphisms with det of valuation 0. Throws the failing ErrorKind.
void validate(const CoverOverDVR &a);
/// A field algebra viewed over k[t] (constant coefficients).
CoverOverDVR constant_cover(const EquivariantAlgebra &a);
/// Same cover with coefficients viewed in a larger cyclotomic field.
CoverOverDVR lift_to(const CoverOverDVR &a, const Field &f);
/// New basis = columns of p; p_inv its inverse over k[t].
CoverOverDVR change_basis(const CoverOverDVR &a, const PMatrix &p, const PMatrix &p_inv);
/// A (x) B for the group G x H (element (g, h) at g * |H| + h).
CoverOverDVR tensor(const CoverOverDVR &a, const CoverOverDVR &b);
/// Coset model ind_H^G over k[t].
CoverOverDVR induce(const FiniteGroup &g, const Subgroup &h, const CoverOverDVR &b);

/// k[t][x]/(x^n - t^m), Z/n acting by x -> zeta_n x, basis 1, x, ..., x^(n-1).
/// Throws MissingRootOfUnity.
CoverOverDVR kummer_builder(std::size_t n, std::size_t m, const Field &f);
/// k[t][x]/(x^2 + b x + c) with Z/2 swapping the roots, x -> -b - x.
CoverOverDVR quadratic_cover(const Poly &b, const Poly &c);

/// Resultant of two polynomials in x with k[t] coefficients (lowest degree
/// first), by the Sylvester determinant.
Poly resultant(const std::vector<Poly> &f, const std::vector<Poly> &g);
/// Res(f, f') of a monic polynomial in x, coefficients lowest first.
Poly discriminant_oracle(const std::vector<Poly> &f);

struct IrrepSection {
  std::size_t rank = 0, dual_rank = 0;
  PMatrix xi;               // Omega_V (x) Omega_{V^dual} -> k[t] via trace and evaluation
  Poly s;                   // det xi
  std::size_t valuation = 0;
  std::vector<std::size_t> divisor_valuations;
  std::size_t quotient_rank = 0; // dim V - dim V^G
};

struct TracePackage {
  std::vector<Poly> trace;   // tr(e_i)
  PMatrix gram;              // tr(e_i e_j)
  Poly s_f;                  // det gram, defined up to a unit
  std::size_t v_s_f = 0;
  std::vector<std::size_t> gram_divisor_valuations;
  bool equivariant = false;  // per-irrep sections computed
  std::string equivariant_note;
  std::vector<IrrepSection> sections; // aligned with the irrep set
  std::string unit_note = "sections are determined up to units of k[t]_(t); only valuations are reported";
};

/// Irreducibles over the cover's field, lifting the cover when the cyclotomic
/// level must grow. Throws NonInvertibleOrder or HypothesisUnmet.
IrrepSet cover_irreps(CoverOverDVR &a);
/// irr may be null; the per-irrep part is skipped (with a note) when it is
/// null or the group order is not invertible. Throws NotSquare when some
/// Omega_V and Omega_{V^dual} differ in rank.
TracePackage trace_package(const CoverOverDVR &a, const IrrepSet *irr);

struct TameVerdict {
  bool cond2 = false;
  std::optional<bool> cond4, cond5;
  std::string unmet; // why cond4/cond5 are undefined
  bool consistent = true;
  TracePackage package;
};
/// Conditions on v(s_f), v(s_{f,V}) and the cokernel of the trace pairing.
TameVerdict tame_check(const CoverOverDVR &a, const IrrepSet *irr);

struct TraceDecomposition {
  bool kernel_matches = false;   // Ker tr = sum of nontrivial isotypic parts
  std::size_t v_s_f = 0;
  std::size_t weighted_sum = 0;  // sum dim V v(s_{f,V})
  bool valuation_matches = false;
  bool ok() const { return kernel_matches && valuation_matches; }
};
/// Throws HypothesisUnmet unless rk A = |G|, A^G = k[t] and |G| is invertible.
TraceDecomposition trace_decomposition_check(const CoverOverDVR &a, const IrrepSet &irr);

enum class Tameness { Tame, Wild, Undetermined };
struct FiberPoint {
  SVector idempotent;          // in A / tA
  std::size_t length = 0;      // dim e (A / tA)
  std::size_t cotangent_dim = 0; // dim m / m^2
  bool regular = false;
  Tameness tameness = Tameness::Undetermined;
};
/// Points over t = 0. Throws NonSplitFiber when A / tA does not split over k.
std::vector<FiberPoint> fiber_regularity(const CoverOverDVR &a);
std::string tameness_name(Tameness t);

/// Unimodular matrix over k[t] with its inverse, from seeded elementary moves.
std::pair<PMatrix, PMatrix> random_poly_unimodular(std::size_t n, const Field &f, std::mt19937_64 &rng);

} // namespace galcov
