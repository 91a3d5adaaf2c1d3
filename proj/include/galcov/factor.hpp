#pragma once

#include <cstddef>
#include <vector>

#include "galcov/poly.hpp"

namespace galcov {

/// degree_bound 0 means caps().max_degree (32 unless overridden).
/// Monic irreducible factors of a squarefree polynomial over its field
/// (Q, Q(zeta_N) or F_p), sorted by degree then coefficients. The product of
/// the factors times lead(f) is f.
std::vector<Poly> factor_squarefree(const Poly &f, std::size_t degree_bound = 0);

/// Distinct monic irreducible factors of an arbitrary nonzero polynomial.
std::vector<Poly> distinct_factors(const Poly &f, std::size_t degree_bound = 0);

/// Distinct roots in the coefficient field, sorted.
std::vector<Scalar> roots(const Poly &f, std::size_t degree_bound = 0);

/// f / gcd(f, f') made monic; in characteristic p also strips p-th powers.
Poly squarefree_part(const Poly &f);

} // namespace galcov
