#include "doctest.h"

#include "galcov/witness.hpp"

using namespace galcov;

using Sizes = std::vector<std::size_t>;
using Orbits = std::vector<std::vector<std::size_t>>;

TEST_CASE("S3 witness") {
  WitnessReport r = build_witness(FiniteGroup::symmetric(3));
  CHECK(r.g_prime.order() == 6);
  CHECK(r.h.order() == 3);
  CHECK(r.p == 2);
  CHECK(r.orbits == Orbits{{0}, {1, 2}});
  CHECK(r.f.values == Sizes{1, 2, 0});
  CHECK(r.delta == 1);
  CHECK(r.b.dim() == 3);
  CHECK(r.a.algebra.dim() == 6);
  CHECK(r.a_is_cover);
  CHECK_FALSE(r.b_regular_ranked);
  CHECK(r.b_square_zero);

  RestrictionLaw law = verify_restriction_law(r, r.irr_g_prime);
  CHECK(law.ok);
  REQUIRE(law.lines.size() == 3);
  CHECK(law.lines[0].value == 1);                    // trivial
  CHECK(law.lines[1].multiplicities == Sizes{1, 0, 0}); // sign
  CHECK(law.lines[2].multiplicities == Sizes{0, 1, 1}); // standard
  CHECK(law.lines[2].value == 2);
}

TEST_CASE("Q8 witness") {
  WitnessReport r = build_witness(FiniteGroup::quaternion());
  CHECK(r.h.order() == 4);
  CHECK(r.p == 2);
  CHECK(r.orbits == Orbits{{0}, {1, 3}, {2}});
  CHECK(r.f.values == Sizes{1, 2, 1, 0});
  CHECK(r.delta == 1);
  CHECK(r.b.dim() == 4);
  CHECK(r.a.algebra.dim() == 8);
  CHECK(r.a_is_cover);
  CHECK(verify_restriction_law(r, r.irr_g_prime).ok);
}

TEST_CASE("A4 witness") {
  WitnessReport r = build_witness(FiniteGroup::alternating(4));
  CHECK(r.h.order() == 4);
  CHECK(r.p == 3);
  CHECK(r.orbits == Orbits{{0}, {1, 2, 3}});
  CHECK(r.f.values == Sizes{1, 3, 0, 0});
  CHECK(r.b.dim() == 4);
  CHECK(r.a.algebra.dim() == 12);
  CHECK(r.a_is_cover);
  CHECK_FALSE(r.b_regular_ranked);
  CHECK(verify_restriction_law(r, r.irr_g_prime).ok);
}

TEST_CASE("every nonabelian catalog group has a witness") {
  for (const char *name : {"S3", "D4", "Q8", "A4", "S4", "SL23", "SD:7,3,2", "SD:3,4,2"}) {
    CAPTURE(name);
    FiniteGroup g = FiniteGroup::parse(name);
    WitnessReport r = build_witness(g);
    CHECK(r.a_is_cover);
    CHECK_FALSE(r.b_regular_ranked);
    CHECK(r.b_square_zero);
    CHECK(r.f.values[r.delta] != r.irr_h.dim(r.delta));
    std::size_t sum = 0;
    for (auto x : r.f.values)
      sum += x;
    CHECK(r.b.dim() == sum);
    CHECK(r.a.algebra.dim() == r.p * r.b.dim());
    CHECK(verify_restriction_law(r, r.irr_g_prime).ok);
  }
}

TEST_CASE("abelian input is refused") {
  try {
    build_witness(FiniteGroup::parse("CnxCm:2,4"));
    FAIL("expected AbelianInput");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::AbelianInput);
  }
}
