#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "galcov/eqalg.hpp"

namespace galcov {

/// B^R for the right cosets H r of h, block a holding f(r_a). The action is
/// (g.f)(r) = h(r,g) . f(r') with r g = h(r,g) r'.
struct InducedModel {
  Subgroup h;
  CosetData cosets;
  EquivariantAlgebra base; // algebra for subgroup_as_group(h)
  EquivariantAlgebra algebra;
  /// cocycle[a][g] = (index of h(r_a, g) in h.elements, position of r').
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cocycle;
  std::size_t identity_block = 0;

  /// H-equivariant projection A -> B onto the identity coset.
  SMatrix projection() const;
};

/// Throws NotSubgroup.
InducedModel ind_algebra(const FiniteGroup &g, const Subgroup &h, const EquivariantAlgebra &b);
/// G-action axiom h(r, xy) = h(r, x) h(r', y) and h(r,g) in H.
bool check_cocycle(const FiniteGroup &g, const InducedModel &m);

struct OmegaInducedReport {
  std::vector<std::size_t> induced_ranks;   // r_V of ind B, V in I_G
  std::vector<std::size_t> restricted_ranks; // f^{Omega B} extended to R_H V
  bool holds = false;
};
OmegaInducedReport omega_of_induced_check(const FiniteGroup &g, const Subgroup &h, const EquivariantAlgebra &b,
                                          const IrrepSet &irr_g, const IrrepSet &irr_h);

struct IndCriterion {
  bool holds = false;
  std::string reason;
  SVector idempotent;      // e_Z
  EquivariantAlgebra slice; // A_Z as an H-algebra
  SMatrix map;             // A -> ind_H^G A_Z when holds
  IsoCheck iso;
};
/// z: indices into component_decompose(a).idempotents. Throws NonSplitAlgebra.
IndCriterion check_ind_criterion(const EquivariantAlgebra &a, const std::vector<std::size_t> &z, const Subgroup &h);

struct SplitResult {
  bool indecomposable = false;
  Subgroup h;
  EquivariantAlgebra slice;
  SMatrix map; // A -> ind_H^G slice
  IsoCheck iso;
};
/// Throws NotTransitive (A^G != k) or NonSplitAlgebra.
SplitResult split_as_induced(const EquivariantAlgebra &a);

struct TorsorTransfer {
  bool base_torsor = false, induced_torsor = false;
  bool consistent() const { return base_torsor == induced_torsor; }
};
TorsorTransfer torsor_transfer_check(const FiniteGroup &g, const Subgroup &h, const EquivariantAlgebra &b);

/// ind_H^G (ind_T^H C) -> ind_T^G C. t is a subgroup of subgroup_as_group(h);
/// c an algebra for subgroup_as_group(t) (inside that group).
struct Transitivity {
  InducedModel outer; // ind_H^G (ind_T^H C)
  InducedModel direct; // ind_T^G C
  SMatrix map;
  IsoCheck iso;
};
Transitivity induction_transitivity(const FiniteGroup &g, const Subgroup &h, const Subgroup &t,
                                    const EquivariantAlgebra &c);

/// t as a subgroup of g, given as a subgroup of subgroup_as_group(h).
Subgroup lift_subgroup(const FiniteGroup &g, const Subgroup &h, const Subgroup &t);
/// h (a subgroup of g contained in k) as a subgroup of subgroup_as_group(k).
Subgroup relative_subgroup(const Subgroup &k, const Subgroup &h);

} // namespace galcov
