#include "doctest.h"

#include <algorithm>
#include <set>

#include "galcov/group.hpp"

using namespace galcov;

namespace {

void check_tiling(const FiniteGroup &g, const Subgroup &h) {
  CosetData d = g.right_cosets(h);
  CHECK(d.reps.size() * h.order() == g.order());
  std::set<std::size_t> image;
  for (auto r : d.reps)
    for (auto x : h.elements)
      image.insert(g.mul(x, r));
  CHECK(image.size() == g.order());
}

std::vector<FiniteGroup> catalog() {
  return {FiniteGroup::cyclic(1), FiniteGroup::cyclic(4),  FiniteGroup::parse("CnxCm:2,2"),
          FiniteGroup::symmetric(3), FiniteGroup::dihedral(4), FiniteGroup::quaternion(),
          FiniteGroup::alternating(4), FiniteGroup::symmetric(4), FiniteGroup::sl23(),
          FiniteGroup::parse("SD:3,4,2"), FiniteGroup::parse("SD:7,3,2")};
}

} // namespace

TEST_CASE("constructors") {
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  CHECK(c4.order() == 4);
  CHECK(c4.is_abelian());
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.center().order() == 1);
  FiniteGroup q8 = FiniteGroup::quaternion();
  // unique minimal subgroup {1, -1}
  std::vector<Subgroup> minimal;
  for (const auto &s : q8.subgroups())
    if (s.order() == 2)
      minimal.push_back(s);
  REQUIRE(minimal.size() == 1);
  CHECK(minimal[0].elements == std::vector<std::size_t>{0, 2});
  // i^2 = j^2 = k^2 = ijk = -1
  CHECK(q8.mul(1, 1) == 2);
  CHECK(q8.mul(4, 4) == 2);
  CHECK(q8.mul(5, 5) == 2);
  CHECK(q8.mul(q8.mul(1, 4), 5) == 2);
  CHECK(FiniteGroup::sl23().order() == 24);
  CHECK(FiniteGroup::sl23().center().order() == 2);
  CHECK(FiniteGroup::parse("SD:7,3,2").order() == 21);
}

TEST_CASE("invalid tables") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), Error);
  // Latin square that is not associative (order 5 loop)
  std::vector<std::vector<std::size_t>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    (void)FiniteGroup::from_table(loop);
    CHECK(false);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::InvalidTable);
  }
  CHECK_THROWS_AS(FiniteGroup::metacyclic(7, 3, 3), Error);
}

TEST_CASE("structure queries") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.conjugacy_classes().size() == 3);
  CHECK(s3.commutator_subgroup().elements == std::vector<std::size_t>{0, 3, 4});
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  CHECK(c4.subgroups().size() == 3);
  CHECK(c4.normal_subgroups().size() == 3);
  std::vector<std::size_t> orders;
  for (const auto &s : c4.subgroups())
    orders.push_back(s.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 4});
  FiniteGroup q8 = FiniteGroup::quaternion();
  CHECK(q8.conjugacy_classes().size() == 5);
  CHECK(q8.center().order() == 2);
  // subgroup counts against known values
  CHECK(FiniteGroup::symmetric(4).subgroups().size() == 30);
  CHECK(FiniteGroup::alternating(4).subgroups().size() == 10);
  CHECK(FiniteGroup::dihedral(4).subgroups().size() == 10);
  CHECK(q8.subgroups().size() == 6);
  CHECK(FiniteGroup::symmetric(4).conjugacy_classes().size() == 5);
  CHECK(FiniteGroup::sl23().conjugacy_classes().size() == 7);
}

TEST_CASE("conjugacy classes partition") {
  for (const auto &g : catalog()) {
    std::size_t total = 0;
    std::set<std::size_t> seen;
    for (const auto &c : g.conjugacy_classes()) {
      total += c.size();
      seen.insert(c.begin(), c.end());
    }
    CHECK(total == g.order());
    CHECK(seen.size() == g.order());
  }
}

TEST_CASE("descent") {
  auto d = find_abelian_normal_prime_index(FiniteGroup::symmetric(3));
  CHECK(d.g_prime.order() == 6);
  CHECK(d.h.elements == std::vector<std::size_t>{0, 3, 4});
  CHECK(d.p == 2);
  d = find_abelian_normal_prime_index(FiniteGroup::quaternion());
  CHECK(d.g_prime.order() == 8);
  CHECK(d.h.elements == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(d.p == 2);
  FiniteGroup a4 = FiniteGroup::alternating(4);
  d = find_abelian_normal_prime_index(a4);
  CHECK(d.g_prime.order() == 12);
  CHECK(d.h.order() == 4);
  CHECK(d.p == 3);
  CHECK(!a4.generated({d.h.elements[1]}).elements.empty());
  d = find_abelian_normal_prime_index(FiniteGroup::symmetric(4));
  CHECK(d.g_prime.order() == 12);
  CHECK(d.h.order() == 4);
  CHECK(d.p == 3);
  try {
    (void)find_abelian_normal_prime_index(FiniteGroup::cyclic(6));
    CHECK(false);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::AbelianInput);
  }
}

TEST_CASE("descent output verifies on the catalog") {
  for (const auto &g : catalog()) {
    if (g.is_abelian())
      continue;
    auto d = find_abelian_normal_prime_index(g);
    CHECK(g.is_abelian(d.h));
    CHECK(!g.is_abelian(d.g_prime));
    FiniteGroup gp = g.subgroup_as_group(d.g_prime);
    std::vector<std::size_t> local;
    for (auto x : d.h.elements)
      local.push_back(static_cast<std::size_t>(
          std::lower_bound(d.g_prime.elements.begin(), d.g_prime.elements.end(), x) - d.g_prime.elements.begin()));
    CHECK(gp.is_normal(gp.subgroup(local)));
    CHECK(d.p * d.h.order() == d.g_prime.order());
    CHECK((d.p == 2 || d.p == 3 || d.p == 5 || d.p == 7));
  }
}

TEST_CASE("cosets and quotients") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  Subgroup a3 = s3.subgroup({0, 3, 4});
  CosetData d = s3.right_cosets(a3);
  REQUIRE(d.reps.size() == 2);
  CHECK(d.reps[0] == 0);
  CHECK(s3.element_order(d.reps[1]) == 2);
  FiniteGroup q = s3.quotient(a3);
  CHECK(q.order() == 2);
  CHECK(s3.right_cosets(s3.whole()).reps == std::vector<std::size_t>{0});
  CHECK(s3.quotient(s3.whole()).order() == 1);
  FiniteGroup q8 = FiniteGroup::quaternion();
  d = q8.right_cosets(q8.subgroup({0, 1, 2, 3}));
  CHECK(d.reps == std::vector<std::size_t>{0, 4});
  CHECK(q8.label(4) == "j");
  try {
    (void)s3.quotient(s3.subgroup({0, 1}));
    CHECK(false);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotNormal);
  }
  for (const auto &g : catalog())
    for (const auto &h : g.subgroups())
      check_tiling(g, h);
}

TEST_CASE("cap") {
  Caps saved = caps();
  caps().max_group_order = 10;
  try {
    (void)FiniteGroup::symmetric(4);
    CHECK(false);
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  caps() = saved;
}

TEST_CASE("exponent and generators") {
  CHECK(FiniteGroup::symmetric(3).exponent() == 6);
  CHECK(FiniteGroup::quaternion().exponent() == 4);
  CHECK(FiniteGroup::alternating(4).exponent() == 6);
  CHECK(FiniteGroup::symmetric(4).exponent() == 12);
  for (const auto &g : catalog())
    CHECK(g.generated(g.generators()).order() == g.order());
}
