#include "galcov/witness.hpp"

#include <algorithm>

namespace galcov {

bool square_zero_check(const EquivariantAlgebra &b) {
  for (std::size_t i = 1; i < b.dim(); ++i)
    for (std::size_t j = i; j < b.dim(); ++j)
      if (!is_zero(b.alg.mul(b.alg.basis_vector(i), b.alg.basis_vector(j))))
        return false;
  return true;
}

WitnessReport build_witness(const FiniteGroup &g) {
  WitnessReport r;
  r.descent = find_abelian_normal_prime_index(g);
  r.g_prime = g.subgroup_as_group(r.descent.g_prime);
  r.h = relative_subgroup(r.descent.g_prime, r.descent.h);
  r.h_group = r.g_prime.subgroup_as_group(r.h);
  r.p = r.descent.p;
  for (std::size_t x = 0; x < r.g_prime.order(); ++x)
    if (!r.h.contains(x)) {
      r.sigma = x;
      break;
    }
  r.irr_g_prime = irreps(r.g_prime);
  r.irr_h = irreps(r.h_group, r.irr_g_prime.field().level());
  const IrrepSet &ih = r.irr_h;
  const std::size_t n = ih.size();
  require(n == r.h_group.order(), ErrorKind::Internal, "H is abelian but not every irreducible is a character");

  // position in h.elements of sigma^-1 x sigma
  std::vector<std::size_t> conj(r.h.order());
  for (std::size_t i = 0; i < r.h.order(); ++i) {
    const std::size_t y = r.g_prime.conj(r.g_prime.inv(r.sigma), r.h.elements[i]);
    conj[i] = static_cast<std::size_t>(std::lower_bound(r.h.elements.begin(), r.h.elements.end(), y) -
                                       r.h.elements.begin());
  }
  r.character_action.assign(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Scalar> moved(r.h.order());
    for (std::size_t i = 0; i < r.h.order(); ++i)
      moved[i] = ih.character(c)[conj[i]];
    for (std::size_t d = 0; d < n; ++d)
      if (ih.character(d) == moved)
        r.character_action[c] = d;
    require(r.character_action[c] < n, ErrorKind::Internal, "conjugate character not found");
  }

  std::vector<bool> seen(n, false);
  std::vector<std::size_t> f(n, 0);
  bool full = false;
  for (std::size_t c = 0; c < n; ++c) {
    if (seen[c])
      continue;
    std::vector<std::size_t> orbit;
    for (std::size_t d = c; !seen[d]; d = r.character_action[d]) {
      seen[d] = true;
      orbit.push_back(d);
    }
    std::sort(orbit.begin(), orbit.end());
    require(orbit.size() == 1 || orbit.size() == r.p, ErrorKind::Internal, "orbit size is neither 1 nor p");
    full = full || orbit.size() == r.p;
    f[orbit.front()] = orbit.size();
    r.orbits.push_back(std::move(orbit));
  }
  require(full, ErrorKind::Internal, "no character with a full orbit");
  r.f.values = f;
  r.delta = n;
  for (std::size_t c = 0; c < n; ++c)
    if (f[c] != ih.dim(c)) {
      r.delta = c;
      break;
    }
  require(r.delta < n, ErrorKind::Internal, "rank function is the regular one");

  r.b = f_gamma(square_zero_data(ih, f));
  r.b_square_zero = square_zero_check(r.b);
  r.a = ind_algebra(r.g_prime, r.h, r.b);
  r.a_is_cover = is_g_cover(r.a.algebra, r.irr_g_prime);
  r.b_regular_ranked = omega_ranks(r.b, ih) == ih.dims();
  return r;
}

RestrictionLaw verify_restriction_law(const WitnessReport &r, const IrrepSet &irr_g_prime) {
  RestrictionLaw law{true, {}};
  for (std::size_t v = 0; v < irr_g_prime.size(); ++v) {
    RestrictionLine line;
    line.irrep = v;
    line.dim = irr_g_prime.dim(v);
    line.multiplicities = r.irr_h.multiplicities(restrict(irr_g_prime[v], r.h));
    for (std::size_t u = 0; u < line.multiplicities.size(); ++u)
      line.value += line.multiplicities[u] * r.f.values[u];
    line.ok = line.value == line.dim;
    law.ok = law.ok && line.ok;
    law.lines.push_back(std::move(line));
  }
  return law;
}

} // namespace galcov
