#include "galcov/catalog.hpp"

namespace galcov {

namespace {

Poly t_pow(const Field &f, std::size_t e, long c = 1) { return Poly::monomial(Scalar::integer(f, c), e); }

std::vector<Poly> monic_poly(const Field &f, std::size_t n, const Poly &c0) {
  std::vector<Poly> p(n + 1, Poly(f));
  p[0] = c0;
  p[n] = Poly::constant(f, 1);
  return p;
}

Subgroup first_of_order(const FiniteGroup &g, std::size_t n) {
  for (const auto &h : g.subgroups())
    if (h.order() == n)
      return h;
  fail(ErrorKind::Internal, "no subgroup of order " + std::to_string(n));
}

} // namespace

const std::vector<std::string> &catalog_groups() {
  static const std::vector<std::string> specs{"C2", "C3", "C4", "CnxCm:2,2", "S3", "D4", "Q8", "A4"};
  return specs;
}

const std::vector<std::string> &nonabelian_catalog() {
  static const std::vector<std::string> specs{"S3", "D4", "Q8", "A4", "S4", "SL23", "SD:7,3,2", "SD:3,4,2"};
  return specs;
}

EquivariantAlgebra degree_one_example(const Field &k) {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  const Scalar one = Scalar::one(k), zero = Scalar::zero(k);
  std::vector<SMatrix> act;
  for (long g = 0; g < 3; ++g) {
    const Scalar z = Scalar::root_of_unity(k, 3, -g);
    SMatrix m = zeros(3, 3, k);
    m(0, 0) = one;
    m(1, 1) = z;
    m(2, 2) = z;
    act.push_back(m);
  }
  return algebra_from_constants(c3, k, 3, {{0, 0, 0, one}, {0, 1, 1, one}, {0, 2, 2, one}}, {one, zero, zero}, act);
}

EquivariantAlgebra cubic_example(const Field &k, bool flip_sign) {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  const Scalar one = Scalar::one(k), zero = Scalar::zero(k);
  std::vector<SMatrix> act;
  for (long g = 0; g < 3; ++g) {
    SMatrix m = zeros(3, 3, k);
    m(0, 0) = one;
    m(1, 1) = Scalar::root_of_unity(k, 3, g);
    m(2, 2) = Scalar::root_of_unity(k, 3, 2 * g);
    act.push_back(m);
  }
  return algebra_from_constants(
      c3, k, 3,
      {{0, 0, 0, one}, {0, 1, 1, one}, {0, 2, 2, one}, {1, 1, 2, one}, {1, 2, 0, one}, {2, 2, 1, flip_sign ? -one : one}},
      {one, zero, zero}, act);
}

Representation rational_plane(const FiniteGroup &c3) {
  require(c3.order() == 3, ErrorKind::InvalidArgument, "rational_plane needs a group of order 3");
  const Field q = Field::rational();
  SMatrix r = zeros(2, 2, q);
  r(0, 1) = Scalar::integer(q, -1);
  r(1, 0) = Scalar::integer(q, 1);
  r(1, 1) = Scalar::integer(q, -1);
  const std::size_t gen = c3.generators().front();
  std::vector<SMatrix> mats(3, identity(2, q));
  for (long e = 1; e < 3; ++e)
    mats[c3.pow(gen, e)] = e == 1 ? r : r * r;
  return make_representation(c3, q, mats);
}

EquivariantAlgebra connected_slice(const FiniteGroup &h, const Field &k) {
  if (h.order() == 1)
    return point_algebra(h, k);
  IrrepSet irr = irreps(h, k.level());
  return square_zero_extension(h, irr[1]);
}

std::vector<BatteryEntry> ramify_battery() {
  std::vector<BatteryEntry> out;
  for (std::size_t n = 1; n <= 6; ++n) {
    const Field f = Field::cyclotomic(static_cast<std::uint32_t>(n));
    out.push_back({"x^" + std::to_string(n) + " - t", kummer_builder(n, 1, f), monic_poly(f, n, t_pow(f, 1, -1)), n - 1,
                   true});
  }
  const Field q = Field::rational();
  const CoverOverDVR x2t = quadratic_cover(Poly(q), t_pow(q, 1, -1));
  out.push_back({"x^2 - t^2", quadratic_cover(Poly(q), t_pow(q, 2, -1)), monic_poly(q, 2, t_pow(q, 2, -1)), 2, true});
  out.push_back({"x^2 - t^3", quadratic_cover(Poly(q), t_pow(q, 3, -1)), monic_poly(q, 2, t_pow(q, 3, -1)), 3, true});

  // block products: induction to S3 and products with trivial torsors
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  out.push_back({"ind_C2^S3 (x^2 - t)", induce(s3, first_of_order(s3, 2), x2t), std::nullopt, 3, true});
  const Field k6 = Field::cyclotomic(6);
  const CoverOverDVR tor3 = constant_cover(functions_on_group(FiniteGroup::cyclic(3), k6));
  out.push_back({"(x^2 - t) x C3-torsor", tensor(lift_to(x2t, k6), tor3), std::nullopt, 3, true});
  out.push_back({"(x^2 - t^2) x C3-torsor", tensor(lift_to(quadratic_cover(Poly(q), t_pow(q, 2, -1)), k6), tor3),
                 std::nullopt, 6, true});

  const Field f2 = Field::prime(2);
  out.push_back({"F2: x^2 + x + t", quadratic_cover(Poly::constant(f2, 1), t_pow(f2, 1)),
                 std::vector<Poly>{t_pow(f2, 1), Poly::constant(f2, 1), Poly::constant(f2, 1)}, 0, false});
  out.push_back({"F2: x^2 + t x + t", quadratic_cover(t_pow(f2, 1), t_pow(f2, 1)),
                 std::vector<Poly>{t_pow(f2, 1), t_pow(f2, 1), Poly::constant(f2, 1)}, 2, false});
  for (auto &e : out)
    validate(e.cover);
  return out;
}

} // namespace galcov
