#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "galcov/ramify.hpp"

namespace galcov {

/// Spec strings of the small catalog: C2, C3, C4, C2xC2, S3, D4, Q8, A4.
const std::vector<std::string> &catalog_groups();
/// Nonabelian groups used for witnesses (includes the larger S4, SL23 and two
/// metacyclic groups).
const std::vector<std::string> &nonabelian_catalog();

/// Z/3 acting on k[x,y]/(x,y)^2 with x, y of the same nontrivial degree.
/// Needs zeta_3 in k.
EquivariantAlgebra degree_one_example(const Field &k);
/// k[x]/(x^3 - 1) with x -> zeta_3 x. flip_sign negates one structure
/// constant, which breaks associativity (the negative control).
EquivariantAlgebra cubic_example(const Field &k, bool flip_sign = false);
/// The rational 2-dimensional representation of Z/3 (rotation by a third).
Representation rational_plane(const FiniteGroup &c3);
/// Connected H-algebra with invariants k: k itself for H = 1, else the
/// square-zero extension by the first nontrivial irreducible.
EquivariantAlgebra connected_slice(const FiniteGroup &h, const Field &k);

struct BatteryEntry {
  std::string name;
  CoverOverDVR cover;
  /// monic polynomial in x (coefficients lowest first) when the basis is
  /// 1, x, ..., x^(n-1), for the resultant oracle
  std::optional<std::vector<Poly>> monic;
  std::optional<std::size_t> golden_v; // hand-derived v(s_f)
  bool trace_identity = false;            // rk A = |G| with A^G = k[t] and |G| invertible
};
/// x^n - t for n <= 6, x^2 - t^2, x^2 - t^3, block products with torsors and
/// the two Artin-Schreier covers over F_2.
std::vector<BatteryEntry> ramify_battery();

} // namespace galcov
