// galcov: command line front end. Exit codes: 0 ok, 2 schema or usage error,
// 3 mathematical precondition failed, 4 cap exceeded.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "galcov/acceptance.hpp"
#include "galcov/catalog.hpp"
#include "galcov/io.hpp"
#include "galcov/parallel.hpp"

using namespace galcov;

namespace {

struct Common {
  std::size_t threads = 1;
  std::string format = "json";
  std::string out;
};

json load_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorKind::SchemaError, "cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    fail(ErrorKind::SchemaError, path + ": " + e.what());
  }
}

// a constructor string, or a JSON file holding a table
FiniteGroup load_group(const std::string &spec) {
  if (std::filesystem::exists(spec))
    return group_from_json(load_file(spec));
  return FiniteGroup::parse(spec);
}

std::size_t parse_size(const std::string &s, const char *what) {
  std::size_t used = 0;
  std::size_t v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    fail(ErrorKind::SchemaError, std::string("bad ") + what + " '" + s + "'");
  return v;
}

std::vector<std::size_t> parse_list(const std::string &s, const char *what) {
  std::vector<std::size_t> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    out.push_back(parse_size(item, what));
  return out;
}

void emit(const json &j, const Common &c) {
  const std::string text = c.format == "text" ? render_text(j) : j.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f)
    fail(ErrorKind::SchemaError, "cannot write '" + c.out + "'");
  f << text;
}

void apply_env_caps() {
  if (const char *s = std::getenv("GALCOV_MAX_ORDER"))
    caps().max_group_order = parse_size(s, "GALCOV_MAX_ORDER");
  if (const char *s = std::getenv("GALCOV_MAX_DEGREE"))
    caps().max_degree = parse_size(s, "GALCOV_MAX_DEGREE");
  if (caps().max_group_order == 0 || caps().max_degree == 0)
    fail(ErrorKind::SchemaError, "caps must be positive");
}

int exit_code(ErrorKind k) {
  switch (k) {
  case ErrorKind::SchemaError:
  case ErrorKind::InvalidArgument: return 2;
  case ErrorKind::CapExceeded:
  case ErrorKind::DegreeBoundExceeded: return 4;
  default: return 3;
  }
}

// irreducibles from a file, or computed for the algebra's group and field
IrrepSet irreps_for(const FiniteGroup &g, const Field &f, const std::string &path) {
  if (!path.empty()) {
    IrrepSet irr = irreps_from_json(load_file(path));
    require(irr.group().table() == g.table(), ErrorKind::SchemaError, "irreps are for a different group");
    return irr;
  }
  require(f.kind() != FieldKind::PrimeField, ErrorKind::HypothesisUnmet,
          "irreducibles are only computed over Q(zeta_N); pass --irreps");
  return irreps(g, f.kind() == FieldKind::Cyclotomic ? f.level() : 0);
}

json ranks_json(const IrrepSet &irr, const std::vector<std::size_t> &ranks) {
  return json{{"ranks", ranks}, {"dims", irr.dims()}};
}

json ramify_report(CoverOverDVR a, const std::string &irreps_path) {
  std::optional<IrrepSet> irr;
  std::string irr_note;
  try {
    if (!irreps_path.empty()) {
      irr = irreps_from_json(load_file(irreps_path));
      require(irr->group().table() == a.group.table(), ErrorKind::SchemaError, "irreps are for a different group");
      if (irr->field() != a.field)
        a = lift_to(a, irr->field());
    } else {
      irr = cover_irreps(a);
    }
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::HypothesisUnmet && e.kind() != ErrorKind::NonInvertibleOrder)
      throw;
    irr_note = e.what();
  }
  const IrrepSet *ip = irr ? &*irr : nullptr;
  json out = json::object();
  out["group"] = a.group.name().empty() ? a.group.describe() : a.group.name();
  out["field"] = a.field.to_string();
  out["rank"] = a.dim();
  TameVerdict v = tame_check(a, ip);
  out["cond2"] = v.cond2;
  out["cond4"] = v.cond4 ? json(*v.cond4) : json("HypothesisUnmet");
  out["cond5"] = v.cond5 ? json(*v.cond5) : json("HypothesisUnmet");
  out["consistent"] = v.consistent;
  out["v_s_f"] = v.package.v_s_f;
  if (!irr_note.empty())
    out["irreps_note"] = irr_note;
  try {
    out["trace_decomposition"] = ip ? report(trace_decomposition_check(a, *ip)) : json("HypothesisUnmet");
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::HypothesisUnmet)
      throw;
    out["trace_decomposition"] = "HypothesisUnmet";
  }
  try {
    out["fiber"] = report(fiber_regularity(a));
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::NonSplitFiber)
      throw;
    out["fiber"] = "NonSplitFiber";
  }
  out["verdict"] = report(v);
  out["cover"] = to_json(a);
  return out;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Equivariant finite algebras, induction, reducibility witnesses and tameness over k[t]"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--threads", c.threads, "worker threads (1 = serial)")->check(CLI::PositiveNumber);
  app.add_option("--format,--report", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", c.out, "write the report to a file");
  app.fallthrough();

  std::string group, algebra, irreps_path, data, subgroup, kummer, field = "Q";
  std::uint32_t level = 0;
  std::uint64_t seed = SuiteOptions{}.seed;

  auto *irr_cmd = app.add_subcommand("irreps", "absolutely irreducible representations");
  irr_cmd->add_option("--group", group, "group spec or JSON file")->required();
  irr_cmd->add_option("--level", level, "cyclotomic level (a multiple of the exponent)");

  auto *omega_cmd = app.add_subcommand("omega", "functor data of an equivariant algebra");
  omega_cmd->add_option("--algebra", algebra)->required();
  omega_cmd->add_option("--irreps", irreps_path);

  auto *build_cmd = app.add_subcommand("build-algebra", "algebra reconstructed from functor data");
  build_cmd->add_option("--data", data)->required();

  auto *cover_cmd = app.add_subcommand("is-cover", "Omega ranks against dimensions");
  cover_cmd->add_option("--algebra", algebra)->required();
  cover_cmd->add_option("--irreps", irreps_path);

  auto *torsor_cmd = app.add_subcommand("is-torsor", "etale with invariants k and rank |G|");
  torsor_cmd->add_option("--algebra", algebra)->required();

  auto *induce_cmd = app.add_subcommand("induce", "coset model of an induced algebra");
  induce_cmd->add_option("--group", group)->required();
  induce_cmd->add_option("--subgroup", subgroup, "comma separated element indices")->required();
  induce_cmd->add_option("--algebra", algebra, "algebra for the subgroup")->required();

  auto *split_cmd = app.add_subcommand("split", "recognize an algebra as induced from a stabilizer");
  split_cmd->add_option("--algebra", algebra)->required();

  auto *witness_cmd = app.add_subcommand("witness", "cover that is not a degeneration of torsors");
  witness_cmd->add_option("--group", group)->required();

  auto *ramify_cmd = app.add_subcommand("ramify", "tameness conditions over k[t]");
  auto *alg_opt = ramify_cmd->add_option("--algebra", algebra, "cover JSON file");
  ramify_cmd->add_option("--irreps", irreps_path);
  auto *kummer_opt = ramify_cmd->add_option("--kummer", kummer, "n,m for x^n - t^m");
  ramify_cmd->add_option("--field", field, "field for --kummer");
  alg_opt->excludes(kummer_opt);

  auto *self_cmd = app.add_subcommand("selftest", "acceptance and property suites");
  self_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    apply_env_caps();
    worker_threads() = c.threads;

    if (irr_cmd->parsed()) {
      IrrepSet irr = irreps(load_group(group), level);
      json j = to_json(irr);
      j["dims"] = irr.dims();
      emit(j, c);
    } else if (omega_cmd->parsed()) {
      EquivariantAlgebra a = algebra_from_json(load_file(algebra));
      IrrepSet irr = irreps_for(a.group, a.field(), irreps_path);
      emit(to_json(omega(a, irr)), c);
    } else if (build_cmd->parsed()) {
      emit(to_json(f_gamma(functor_data_from_json(load_file(data)))), c);
    } else if (cover_cmd->parsed()) {
      EquivariantAlgebra a = algebra_from_json(load_file(algebra));
      IrrepSet irr = irreps_for(a.group, a.field(), irreps_path);
      json j = ranks_json(irr, omega_ranks(a, irr));
      j["is_cover"] = is_g_cover(a, irr);
      emit(j, c);
    } else if (torsor_cmd->parsed()) {
      EquivariantAlgebra a = algebra_from_json(load_file(algebra));
      emit(json{{"is_torsor", is_torsor(a)}, {"etale", is_etale(a)}, {"dim", a.dim()},
                {"invariants_dim", invariants(a).rows()}, {"order", a.group.order()}},
           c);
    } else if (induce_cmd->parsed()) {
      FiniteGroup g = load_group(group);
      std::vector<std::size_t> el = parse_list(subgroup, "subgroup element");
      for (auto x : el)
        require(x < g.order(), ErrorKind::SchemaError, "subgroup element out of range");
      std::sort(el.begin(), el.end());
      el.erase(std::unique(el.begin(), el.end()), el.end());
      Subgroup h = g.subgroup(el);
      const FiniteGroup hg = g.subgroup_as_group(h);
      EquivariantAlgebra b = algebra_from_json(load_file(algebra), &hg);
      InducedModel m = ind_algebra(g, h, b);
      json j = report(m);
      j["cocycle_ok"] = check_cocycle(g, m);
      TorsorTransfer tt = torsor_transfer_check(g, h, b);
      j["torsor"] = json{{"base", tt.base_torsor}, {"induced", tt.induced_torsor}};
      if (b.field().kind() != FieldKind::PrimeField) {
        const std::uint32_t lv = b.field().kind() == FieldKind::Cyclotomic ? b.field().level() : 0;
        IrrepSet ig = irreps(g, lv), ih = irreps(hg, ig.field().level());
        j["omega_check"] = report(omega_of_induced_check(g, h, b, ig, ih));
      }
      emit(j, c);
    } else if (split_cmd->parsed()) {
      emit(report(split_as_induced(algebra_from_json(load_file(algebra)))), c);
    } else if (witness_cmd->parsed()) {
      WitnessReport w = build_witness(load_group(group));
      emit(report(w, verify_restriction_law(w, w.irr_g_prime)), c);
    } else if (ramify_cmd->parsed()) {
      CoverOverDVR a;
      if (!kummer.empty()) {
        std::vector<std::size_t> nm = parse_list(kummer, "--kummer value");
        require(nm.size() == 2 && nm[0] >= 1 && nm[1] >= 1, ErrorKind::SchemaError, "--kummer needs n,m >= 1");
        a = kummer_builder(nm[0], nm[1], Field::parse(field));
      } else {
        require(!algebra.empty(), ErrorKind::SchemaError, "ramify needs --algebra or --kummer");
        a = cover_from_json(load_file(algebra));
      }
      emit(ramify_report(a, irreps_path), c);
    } else if (self_cmd->parsed()) {
      SuiteOptions opt;
      opt.seed = seed;
      std::cout << "seed " << opt.seed << "\n";
      bool ok = true;
      for (const auto &r : run_selftest(opt)) {
        std::cout << format_line(r) << "\n";
        ok = ok && r.pass;
      }
      std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const Error &e) {
    std::cerr << "galcov: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const json::exception &e) {
    std::cerr << "galcov: SchemaError: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
