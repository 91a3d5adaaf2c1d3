#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "galcov/induce.hpp"

namespace galcov {

/// A G'-cover induced from a square-zero H-algebra whose ranks are not the
/// regular ones. "Outside the torsor closure" is witnessed by this slice rank
/// violation only.
struct WitnessReport {
  Descent descent;         // subgroups of the input group
  FiniteGroup g_prime;     // descent.g_prime as a group
  Subgroup h;              // H inside g_prime
  FiniteGroup h_group;
  std::size_t p = 0;
  std::size_t sigma = 0;   // element of G' outside H, generating G'/H
  IrrepSet irr_g_prime, irr_h;
  /// sigma . chi = chi(sigma^-1 - sigma) on the characters of H
  std::vector<std::size_t> character_action;
  std::vector<std::vector<std::size_t>> orbits; // each sorted, representative first
  RankFunction f;
  std::size_t delta = 0; // f_delta != dim delta
  EquivariantAlgebra b;
  InducedModel a;
  bool a_is_cover = false;
  bool b_regular_ranked = true;
  bool b_square_zero = false;
};

/// Throws AbelianInput or NonInvertibleOrder.
WitnessReport build_witness(const FiniteGroup &g);

struct RestrictionLine {
  std::size_t irrep = 0;
  std::size_t dim = 0;
  std::vector<std::size_t> multiplicities; // of R_H V over irr_h
  std::size_t value = 0;                   // f_{R_H V}
  bool ok = false;
};
struct RestrictionLaw {
  bool ok = false;
  std::vector<RestrictionLine> lines;
};
/// Recomputes every R_H V and checks f_{R_H V} = dim V.
RestrictionLaw verify_restriction_law(const WitnessReport &r, const IrrepSet &irr_g_prime);

/// Products of the non-unit basis vectors of f_gamma(square_zero_data) vanish.
bool square_zero_check(const EquivariantAlgebra &b);

} // namespace galcov
