#include "galcov/io.hpp"

#include <algorithm>
#include <sstream>

namespace galcov {

namespace {

[[noreturn]] void schema(const std::string &msg) { fail(ErrorKind::SchemaError, msg); }

const json &at(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    schema(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t index_of(const json &j, const char *what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    schema(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

mpq_class rational_from(const json &j) {
  std::string s;
  if (j.is_string())
    s = j.get<std::string>();
  else if (j.is_number_integer())
    s = std::to_string(j.get<long long>());
  else
    schema("rational must be a string \"p/q\" or an integer");
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    schema("bad rational '" + s + "'");
  if (q.get_den() == 0)
    schema("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Field field_from(const json &j) {
  if (!j.is_string())
    schema("field must be a spec string");
  return Field::parse(j.get<std::string>());
}

json action_json(const std::vector<SMatrix> &mats) {
  json o = json::object();
  for (std::size_t g = 0; g < mats.size(); ++g)
    o[std::to_string(g)] = to_json(mats[g]);
  return o;
}

std::vector<SMatrix> action_from(const json &j, std::size_t order, std::size_t dim, const Field &f) {
  if (!j.is_object() && !j.is_array())
    schema("action must map element indices to matrices");
  std::vector<SMatrix> mats(order);
  std::vector<bool> seen(order, false);
  auto take = [&](std::size_t g, const json &m) {
    if (g >= order)
      schema("action index " + std::to_string(g) + " out of range");
    mats[g] = matrix_from_json(m, f);
    if (mats[g].rows() != dim || mats[g].cols() != dim)
      schema("action matrix " + std::to_string(g) + " has the wrong shape");
    seen[g] = true;
  };
  if (j.is_array()) {
    for (std::size_t g = 0; g < j.size(); ++g)
      take(g, j[g]);
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::size_t g = 0;
      try {
        std::size_t used = 0;
        g = std::stoul(it.key(), &used);
        if (used != it.key().size())
          throw std::invalid_argument("trailing");
      } catch (const std::exception &) {
        schema("action key '" + it.key() + "' is not an element index");
      }
      take(g, it.value());
    }
  }
  for (std::size_t g = 0; g < order; ++g)
    if (!seen[g])
      schema("action matrix missing for element " + std::to_string(g));
  return mats;
}

FiniteGroup group_of(const json &j, const FiniteGroup *override_group) {
  if (override_group) {
    if (j.contains("group")) {
      FiniteGroup g = group_from_json(j.at("group"));
      if (g.table() != override_group->table())
        schema("group in the file differs from the requested one");
    }
    return *override_group;
  }
  return group_from_json(at(j, "group"));
}

} // namespace

json to_json(const Scalar &s) {
  const Field &f = s.field();
  switch (f.kind()) {
  case FieldKind::Rational: return s.coeffs()[0].get_str();
  case FieldKind::Cyclotomic: {
    json c = json::array();
    for (const auto &q : s.coeffs())
      c.push_back(q.get_str());
    return json{{"zeta", f.level()}, {"coeffs", c}};
  }
  case FieldKind::PrimeField: return json{{"mod", f.modulus()}, {"val", s.residue_value()}};
  }
  return nullptr;
}

Scalar scalar_from_json(const json &j, const Field &field) {
  if (j.is_object()) {
    if (j.contains("zeta")) {
      const std::size_t n = index_of(j.at("zeta"), "zeta");
      const json &c = at(j, "coeffs");
      if (!c.is_array() || n == 0)
        schema("cyclotomic scalar needs a positive level and a coefficient array");
      std::vector<mpq_class> q;
      for (const auto &x : c)
        q.push_back(rational_from(x));
      Scalar s = Scalar::cyclotomic(static_cast<std::uint32_t>(n), std::move(q));
      if (field.kind() == FieldKind::Cyclotomic && field.level() != n)
        s = s.lift_to(field);
      return s;
    }
    if (j.contains("mod")) {
      const std::size_t p = index_of(j.at("mod"), "mod");
      const std::size_t v = index_of(at(j, "val"), "val");
      if (!is_prime(p) || v >= p)
        schema("prime-field scalar needs a prime modulus and a residue below it");
      return Scalar::residue(static_cast<std::uint32_t>(p), v);
    }
    schema("unknown scalar object");
  }
  const mpq_class q = rational_from(j);
  if (field.kind() == FieldKind::Rational)
    return Scalar::rational(q);
  return Scalar::from_rational(field, q);
}

json to_json(const Poly &p) {
  json a = json::array();
  for (const auto &c : p.coeffs())
    a.push_back(to_json(c));
  return a;
}

Poly poly_from_json(const json &j, const Field &field) {
  if (!j.is_array())
    schema("polynomial must be a coefficient array");
  std::vector<Scalar> c;
  for (const auto &x : j)
    c.push_back(scalar_from_json(x, field));
  return Poly(field, std::move(c));
}

json to_json(const SMatrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      r.push_back(to_json(m(i, k)));
    rows.push_back(std::move(r));
  }
  return rows;
}

SMatrix matrix_from_json(const json &j, const Field &field) {
  if (!j.is_array())
    schema("matrix must be an array of rows");
  const std::size_t n = j.size(), m = n ? (j[0].is_array() ? j[0].size() : 0) : 0;
  SMatrix a = zeros(n, m, field);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != m)
      schema("ragged matrix");
    for (std::size_t k = 0; k < m; ++k)
      a(i, k) = scalar_from_json(j[i][k], field);
  }
  return a;
}

json to_json(const PMatrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      r.push_back(to_json(m(i, k)));
    rows.push_back(std::move(r));
  }
  return rows;
}

PMatrix poly_matrix_from_json(const json &j, const Field &field) {
  if (!j.is_array())
    schema("matrix must be an array of rows");
  const std::size_t n = j.size(), m = n ? (j[0].is_array() ? j[0].size() : 0) : 0;
  PMatrix a = poly_zeros(n, m, field);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != m)
      schema("ragged matrix");
    for (std::size_t k = 0; k < m; ++k)
      a(i, k) = poly_from_json(j[i][k], field);
  }
  return a;
}

json to_json(const FiniteGroup &g) {
  return json{{"order", g.order()}, {"mul", g.table()}, {"labels", g.labels()}, {"name", g.name()}};
}

FiniteGroup group_from_json(const json &j) {
  if (j.is_string())
    return FiniteGroup::parse(j.get<std::string>());
  const json &mul = at(j, "mul");
  if (!mul.is_array())
    schema("mul must be a square table");
  std::vector<std::vector<std::size_t>> t;
  for (const auto &row : mul) {
    if (!row.is_array())
      schema("mul must be a square table");
    std::vector<std::size_t> r;
    for (const auto &x : row)
      r.push_back(index_of(x, "table entry"));
    t.push_back(std::move(r));
  }
  if (j.contains("order") && index_of(j.at("order"), "order") != t.size())
    schema("order does not match the table");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array())
      schema("labels must be an array of strings");
    for (const auto &l : j.at("labels")) {
      if (!l.is_string())
        schema("labels must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
  if (t.size() > caps().max_group_order)
    fail(ErrorKind::CapExceeded, "|G| = " + std::to_string(t.size()) + " exceeds the cap");
  return FiniteGroup::from_table(std::move(t), std::move(labels), std::move(name));
}

json to_json(const FiniteGroup &g, const Representation &v) {
  return json{{"group", to_json(g)}, {"field", v.field.to_string()}, {"dim", v.dim}, {"matrices", action_json(v.mats)}};
}

Representation representation_from_json(const json &j, const FiniteGroup &g, const Field &f) {
  const std::size_t dim = index_of(at(j, "dim"), "dim");
  Field field = j.contains("field") ? field_from(j.at("field")) : f;
  return make_representation(g, field, action_from(at(j, "matrices"), g.order(), dim, field));
}

json to_json(const IrrepSet &irr) {
  json reps = json::array();
  for (const auto &v : irr.reps())
    reps.push_back(json{{"dim", v.dim}, {"matrices", action_json(v.mats)}});
  return json{{"group", to_json(irr.group())}, {"field", irr.field().to_string()}, {"irreps", reps}};
}

IrrepSet irreps_from_json(const json &j) {
  FiniteGroup g = group_from_json(at(j, "group"));
  const Field f = field_from(at(j, "field"));
  const json &list = at(j, "irreps");
  if (!list.is_array())
    schema("irreps must be an array");
  std::vector<Representation> reps;
  for (const auto &r : list)
    reps.push_back(representation_from_json(r, g, f));
  return IrrepSet(g, f, std::move(reps));
}

json to_json(const EquivariantAlgebra &a) {
  json st = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = i; k < a.dim(); ++k)
      for (const auto &[idx, c] : a.alg.product(i, k))
        st.push_back(json::array({i, k, idx, to_json(c)}));
  json unit = json::array();
  for (const auto &u : a.alg.unit())
    unit.push_back(to_json(u));
  return json{{"group", to_json(a.group)}, {"field", a.field().to_string()}, {"dim", a.dim()},
              {"unit", unit},           {"structure", st},                 {"action", action_json(a.action)}};
}

EquivariantAlgebra algebra_from_json(const json &j, const FiniteGroup *group) {
  FiniteGroup g = group_of(j, group);
  const Field f = field_from(at(j, "field"));
  const std::size_t d = index_of(at(j, "dim"), "dim");
  const json &u = at(j, "unit");
  if (!u.is_array() || u.size() != d)
    schema("unit must have dim entries");
  SVector unit;
  for (const auto &x : u)
    unit.push_back(scalar_from_json(x, f));
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> c;
  const json &st = at(j, "structure");
  if (!st.is_array())
    schema("structure must be an array of [i, j, k, c]");
  for (const auto &e : st) {
    if (!e.is_array() || e.size() != 4)
      schema("structure entries are [i, j, k, c]");
    const std::size_t i = index_of(e[0], "i"), k = index_of(e[1], "j"), l = index_of(e[2], "k");
    if (i >= d || k >= d || l >= d)
      schema("structure index out of range");
    c.emplace_back(std::min(i, k), std::max(i, k), l, scalar_from_json(e[3], f));
  }
  return algebra_from_constants(g, f, d, c, std::move(unit), action_from(at(j, "action"), g.order(), d, f));
}

json to_json(const CoverOverDVR &a) {
  json st = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = i; k < a.dim(); ++k)
      for (std::size_t l = 0; l < a.dim(); ++l)
        if (!a.left[i](l, k).is_zero())
          st.push_back(json::array({i, k, l, to_json(a.left[i](l, k))}));
  json unit = json::array(), act = json::object();
  for (const auto &u : a.unit)
    unit.push_back(to_json(u));
  for (std::size_t g = 0; g < a.action.size(); ++g)
    act[std::to_string(g)] = to_json(a.action[g]);
  return json{{"group", to_json(a.group)}, {"field", a.field.to_string()}, {"over", "k[t]"}, {"dim", a.dim()},
              {"unit", unit},           {"structure", st},                {"action", act}};
}

CoverOverDVR cover_from_json(const json &j) {
  FiniteGroup g = group_from_json(at(j, "group"));
  const Field f = field_from(at(j, "field"));
  if (j.contains("over") && j.at("over") != "k[t]")
    schema("covers live over k[t]");
  const std::size_t d = index_of(at(j, "dim"), "dim");
  CoverOverDVR c{g, f, std::vector<PMatrix>(d, poly_zeros(d, d, f)), {}, {}};
  const json &u = at(j, "unit");
  if (!u.is_array() || u.size() != d)
    schema("unit must have dim entries");
  for (const auto &x : u)
    c.unit.push_back(x.is_array() ? poly_from_json(x, f) : Poly::constant(scalar_from_json(x, f)));
  const json &st = at(j, "structure");
  if (!st.is_array())
    schema("structure must be an array of [i, j, k, c]");
  for (const auto &e : st) {
    if (!e.is_array() || e.size() != 4)
      schema("structure entries are [i, j, k, c]");
    const std::size_t i = index_of(e[0], "i"), k = index_of(e[1], "j"), l = index_of(e[2], "k");
    if (i >= d || k >= d || l >= d)
      schema("structure index out of range");
    const Poly p = e[3].is_array() ? poly_from_json(e[3], f) : Poly::constant(scalar_from_json(e[3], f));
    c.left[i](l, k) = p;
    c.left[k](l, i) = p;
  }
  const json &act = at(j, "action");
  if (!act.is_object())
    schema("action must map element indices to matrices");
  c.action.assign(g.order(), PMatrix());
  std::vector<bool> seen(g.order(), false);
  for (auto it = act.begin(); it != act.end(); ++it) {
    std::size_t x = 0;
    try {
      x = std::stoul(it.key());
    } catch (const std::exception &) {
      schema("action key '" + it.key() + "' is not an element index");
    }
    if (x >= g.order())
      schema("action index out of range");
    c.action[x] = poly_matrix_from_json(it.value(), f);
    seen[x] = true;
  }
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!seen[x])
      schema("action matrix missing for element " + std::to_string(x));
  validate(c);
  return c;
}

json to_json(const FunctorData &d) {
  const IrrepSet &irr = d.irreps;
  json blocks = json::array();
  for (std::size_t v = 0; v < irr.size(); ++v)
    for (std::size_t w = 0; w < irr.size(); ++w)
      for (std::size_t u = 0; u < irr.size(); ++u)
        for (std::size_t s = 0; s < d.blocks[v][w][u].size(); ++s) {
          const SMatrix &m = d.blocks[v][w][u][s];
          if (!m.is_zero())
            blocks.push_back(json{{"v", v}, {"w", w}, {"u", u}, {"s", s}, {"matrix", to_json(m)}});
        }
  json unit = json::array();
  for (const auto &x : d.unit)
    unit.push_back(to_json(x));
  return json{{"irreps", to_json(irr)}, {"field", irr.field().to_string()}, {"ranks", d.ranks},
              {"unit", unit},          {"blocks", blocks}};
}

FunctorData functor_data_from_json(const json &j, const IrrepSet *irr) {
  IrrepSet set;
  if (irr)
    set = *irr;
  else if (j.contains("irreps"))
    set = irreps_from_json(j.at("irreps"));
  else
    set = irreps(group_from_json(at(j, "group")),
                 j.contains("level") ? static_cast<std::uint32_t>(index_of(j.at("level"), "level")) : 0);
  const json &r = at(j, "ranks");
  if (!r.is_array() || r.size() != set.size())
    schema("one rank per irreducible expected");
  std::vector<std::size_t> ranks;
  for (const auto &x : r)
    ranks.push_back(index_of(x, "rank"));
  FunctorData d = zero_data(set, ranks);
  const Field &f = set.field();
  const json &u = at(j, "unit");
  if (!u.is_array() || u.size() != ranks[0])
    schema("unit must have r_triv entries");
  for (std::size_t i = 0; i < u.size(); ++i)
    d.unit[i] = scalar_from_json(u[i], f);
  const json &bl = at(j, "blocks");
  if (!bl.is_array())
    schema("blocks must be an array");
  for (const auto &b : bl) {
    const std::size_t v = index_of(at(b, "v"), "v"), w = index_of(at(b, "w"), "w"), uu = index_of(at(b, "u"), "u"),
                      s = index_of(at(b, "s"), "s");
    if (v >= set.size() || w >= set.size() || uu >= set.size() || s >= d.blocks[v][w][uu].size())
      schema("block index out of range");
    SMatrix m = matrix_from_json(at(b, "matrix"), f);
    if (m.rows() != ranks[uu] || m.cols() != ranks[v] * ranks[w])
      schema("block has the wrong shape");
    d.blocks[v][w][uu][s] = std::move(m);
  }
  return d;
}

json to_json(const Subgroup &h) { return h.elements; }

Subgroup subgroup_from_json(const json &j, const FiniteGroup &g) {
  if (!j.is_array())
    schema("subgroup must be an array of element indices");
  std::vector<std::size_t> el;
  for (const auto &x : j) {
    el.push_back(index_of(x, "element"));
    if (el.back() >= g.order())
      schema("subgroup element out of range");
  }
  std::sort(el.begin(), el.end());
  el.erase(std::unique(el.begin(), el.end()), el.end());
  return g.subgroup(std::move(el));
}

json report(const OmegaInducedReport &r) {
  return json{{"induced_ranks", r.induced_ranks}, {"restricted_ranks", r.restricted_ranks}, {"holds", r.holds}};
}

json report(const IsoCheck &c) {
  return json{{"invertible", c.invertible}, {"equivariant", c.equivariant}, {"multiplicative", c.multiplicative},
              {"unital", c.unital},         {"ok", c.ok()}};
}

json report(const InducedModel &m) {
  json coc = json::array();
  for (const auto &row : m.cocycle) {
    json r = json::array();
    for (const auto &[h, b] : row)
      r.push_back(json::array({m.h.elements[h], b}));
    coc.push_back(std::move(r));
  }
  return json{{"subgroup", to_json(m.h)},       {"coset_representatives", m.cosets.reps},
              {"identity_block", m.identity_block}, {"cocycle", coc},
              {"base_dim", m.base.dim()},           {"algebra", to_json(m.algebra)}};
}

json report(const SplitResult &s) {
  return json{{"indecomposable", s.indecomposable}, {"subgroup", to_json(s.h)}, {"slice", to_json(s.slice)},
              {"map", to_json(s.map)},              {"iso", report(s.iso)}};
}

json report(const WitnessReport &r, const RestrictionLaw &law) {
  json chain = json::array();
  for (const auto &s : r.descent.chain)
    chain.push_back(to_json(s));
  json lines = json::array();
  for (const auto &l : law.lines)
    lines.push_back(json{{"irrep", l.irrep}, {"dim", l.dim}, {"restriction", l.multiplicities},
                         {"value", l.value}, {"ok", l.ok}});
  return json{{"descent_chain", chain},
              {"g_prime", to_json(r.descent.g_prime)},
              {"h", to_json(r.descent.h)},
              {"p", r.p},
              {"sigma", r.descent.g_prime.elements[r.sigma]},
              {"field", r.irr_h.field().to_string()},
              {"character_action", r.character_action},
              {"orbits", r.orbits},
              {"f", r.f.values},
              {"delta", r.delta},
              {"dim_b", r.b.dim()},
              {"dim_a", r.a.algebra.dim()},
              {"a_is_cover", r.a_is_cover},
              {"b_regular_ranked", r.b_regular_ranked},
              {"b_square_zero", r.b_square_zero},
              {"restriction_law", json{{"ok", law.ok}, {"lines", lines}}},
              {"proxy", "outside the torsor closure is witnessed by the slice rank violation f_delta != dim delta"},
              {"irreps_h", to_json(r.irr_h)},
              {"b", to_json(r.b)},
              {"a", to_json(r.a.algebra)}};
}

json report(const TracePackage &p) {
  auto vals = [](const std::vector<std::size_t> &v) {
    json a = json::array();
    for (auto x : v)
      a.push_back(x == kInfiniteValuation ? json("inf") : json(x));
    return a;
  };
  json tr = json::array();
  for (const auto &x : p.trace)
    tr.push_back(to_json(x));
  json sections = json::array();
  for (const auto &s : p.sections)
    sections.push_back(json{{"rank", s.rank},
                            {"xi", to_json(s.xi)},
                            {"valuation", s.valuation == kInfiniteValuation ? json("inf") : json(s.valuation)},
                            {"divisor_valuations", vals(s.divisor_valuations)},
                            {"quotient_rank", s.quotient_rank}});
  return json{{"trace", tr},
              {"gram", to_json(p.gram)},
              {"s_f", to_json(p.s_f)},
              {"v_s_f", p.v_s_f == kInfiniteValuation ? json("inf") : json(p.v_s_f)},
              {"gram_divisor_valuations", vals(p.gram_divisor_valuations)},
              {"equivariant", p.equivariant},
              {"equivariant_note", p.equivariant_note},
              {"sections", sections},
              {"unit_note", p.unit_note}};
}

json report(const TameVerdict &v) {
  auto opt = [](const std::optional<bool> &b) { return b ? json(*b) : json("HypothesisUnmet"); };
  return json{{"cond2", v.cond2},         {"cond4", opt(v.cond4)},
              {"cond5", opt(v.cond5)},    {"unmet", v.unmet},
              {"consistent", v.consistent}, {"trace_package", report(v.package)}};
}

json report(const TraceDecomposition &d) {
  return json{{"kernel_matches", d.kernel_matches},
              {"v_s_f", d.v_s_f},
              {"weighted_sum", d.weighted_sum},
              {"valuation_matches", d.valuation_matches},
              {"ok", d.ok()}};
}

json report(const std::vector<FiberPoint> &pts) {
  json a = json::array();
  for (const auto &p : pts) {
    json e = json::array();
    for (const auto &x : p.idempotent)
      e.push_back(to_json(x));
    a.push_back(json{{"idempotent", e},
                     {"length", p.length},
                     {"cotangent_dim", p.cotangent_dim},
                     {"regular", p.regular},
                     {"tameness", tameness_name(p.tameness)}});
  }
  return a;
}

std::string render_text(const json &j) {
  std::ostringstream os;
  if (!j.is_object()) {
    os << j.dump() << '\n';
    return os.str();
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json &v = it.value();
    os << it.key() << ": ";
    if (v.is_string())
      os << v.get<std::string>();
    else
      os << v.dump();
    os << '\n';
  }
  return os.str();
}

} // namespace galcov
