#pragma once

#include <string>

#include "json.hpp"

#include "galcov/induce.hpp"
#include "galcov/ramify.hpp"
#include "galcov/witness.hpp"

namespace galcov {

using json = nlohmann::json;

// Scalars: rationals "p/q"; cyclotomic {"zeta": N, "coeffs": [...]};
// prime field {"mod": p, "val": r}. Polynomials are arrays, lowest degree
// first. Malformed input throws SchemaError.
json to_json(const Scalar &s);
/// field: used to place rational strings; Q when it is not cyclotomic.
Scalar scalar_from_json(const json &j, const Field &field);
json to_json(const Poly &p);
Poly poly_from_json(const json &j, const Field &field);
json to_json(const SMatrix &m);
SMatrix matrix_from_json(const json &j, const Field &field);
json to_json(const PMatrix &m);
PMatrix poly_matrix_from_json(const json &j, const Field &field);

/// {"order", "mul", "labels", "name"}
json to_json(const FiniteGroup &g);
/// Accepts the table format or a constructor string such as "S3".
FiniteGroup group_from_json(const json &j);

/// {"group", "field", "dim", "matrices": {index: matrix}}
json to_json(const FiniteGroup &g, const Representation &v);
Representation representation_from_json(const json &j, const FiniteGroup &g, const Field &f);
json to_json(const IrrepSet &irr);
/// Validates on load (NotGoodSet when the set is not good).
IrrepSet irreps_from_json(const json &j);

/// {"group", "field", "dim", "unit", "structure": [[i, j, k, c]] with i <= j,
/// "action": {index: matrix}}
json to_json(const EquivariantAlgebra &a);
/// group: overrides the group in the file (whose order must match).
EquivariantAlgebra algebra_from_json(const json &j, const FiniteGroup *group = nullptr);

/// Same layout with "over": "k[t]" and polynomial entries.
json to_json(const CoverOverDVR &a);
CoverOverDVR cover_from_json(const json &j);

/// {"group", "field", "level", "ranks", "unit", "blocks": [{"v", "w", "u",
/// "s", "matrix"}]}; s indexes the canonical basis of Hom^G(U, V (x) W).
json to_json(const FunctorData &d);
/// Irreducibles are recomputed at the recorded level unless irr is given.
FunctorData functor_data_from_json(const json &j, const IrrepSet *irr = nullptr);

json to_json(const Subgroup &h);
Subgroup subgroup_from_json(const json &j, const FiniteGroup &g);

// reports
json report(const OmegaInducedReport &r);
json report(const IsoCheck &c);
json report(const InducedModel &m);
json report(const SplitResult &s);
json report(const WitnessReport &r, const RestrictionLaw &law);
json report(const TracePackage &p);
json report(const TameVerdict &v);
json report(const TraceDecomposition &d);
json report(const std::vector<FiberPoint> &pts);

/// One "key: value" line per top-level entry, for --format text.
std::string render_text(const json &j);

} // namespace galcov
