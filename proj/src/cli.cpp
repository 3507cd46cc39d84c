#include "froblab/cli.hpp"

#include <sstream>

#include <CLI11.hpp>

#include "froblab/io.hpp"
#include "froblab/suites.hpp"

namespace froblab {

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

constexpr const char* kProbeLabel =
    "finite by construction at this scale — experimental data only, not evidence for the open question";

struct Output {
  std::string format = "text";
  std::string out_path;
};

void emit(const Output& o, const Json& structured, const std::string& text, std::ostream& out) {
  const std::string body = o.format == "structured" ? dump_json(structured) : text;
  if (o.out_path.empty())
    out << body;
  else
    write_file_atomic(o.out_path, body);
}

Json ideal_json(const FiniteAlgebra& a, const Ideal& i) {
  Json gens = Json::array();
  for (const auto& b : i.space.basis()) gens.push_back(a.format(b));
  return gens;
}

std::string ideal_text(const FiniteAlgebra& a, const Ideal& i) {
  std::string s = "(";
  for (std::size_t k = 0; k < i.space.basis().size(); ++k) s += (k ? ", " : "") + a.format(i.space.basis()[k]);
  return s + ")";
}

Json grann_json(const FiniteAlgebra& a, const GradedTwoSidedIdeal& g) {
  Json chain = Json::array();
  for (const auto& i : g.chain()) chain.push_back(ideal_json(a, i));
  return Json{{"chain", chain}, {"stable_from", g.stable_from()}};
}

AlgebraRef load_algebra(const std::string& arg) {
  const auto builtin = builtin_algebras();
  if (const auto it = builtin.find(arg); it != builtin.end() && !std::filesystem::exists(arg)) return it->second;
  return algebra_from_json(read_json_file(arg));
}

Vec parse_coordinates(const std::string& text, const FiniteAlgebra& a) {
  Json arr = Json::array();
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      arr.push_back(v);
    } catch (const std::exception&) {
      throw LoadError("--gen " + text + ": \"" + item + "\" is not an integer");
    }
  }
  return element_from_json(arr, a, "--gen " + text);
}

// --- analyze -----------------------------------------------------------------

int cmd_analyze(const std::string& path, const Output& o, std::ostream& out) {
  const NamedModule nm = module_from_json(read_json_file(path), {}, path);
  Json j{{"command", "analyze"}, {"module", path}};
  std::ostringstream t;
  std::visit(
      [&](const auto& m) {
        const auto& a = *m.algebra();
        const auto g = grann(m);
        j["side"] = side_name(m.side);
        j["p"] = a.p();
        j["algebra_dim"] = a.dim();
        j["dim"] = m.dim();
        t << "side: " << side_name(m.side) << "\nalgebra: p = " << a.p() << ", dim " << a.dim() << "\ndim: " << m.dim()
          << '\n';
        if constexpr (std::decay_t<decltype(m)>::side == Side::Left) {
          const auto e = hsl_exponent_left(m);
          const auto tors = x_torsion(m);
          j["hsl_exponent"] = e;
          j["x_torsion_dim"] = tors.dim();
          j["torsion_free"] = tors.dim() == 0;
          t << "hsl_exponent: " << e << "\nx_torsion_dim: " << tors.dim()
            << "\ntorsion_free: " << (tors.dim() == 0 ? "true" : "false") << '\n';
        } else {
          const auto e = xdiv_exponent_right(m);
          j["divisibility_exponent"] = e;
          j["divisible"] = e == 0;
          t << "divisibility_exponent: " << e << "\ndivisible: " << (e == 0 ? "true" : "false") << '\n';
        }
        j["grann"] = grann_json(a, g);
        t << "grann: " << g.to_string(a) << (g.is_zero() ? " (zero)" : g.is_unit() ? " (unit)" : "") << '\n';
      },
      nm.module);
  emit(o, j, t.str(), out);
  return kPass;
}

// --- dualize -----------------------------------------------------------------

int cmd_dualize(const std::string& path, const std::string& module_out, const Output& o, std::ostream& out) {
  const Json input = read_json_file(path);
  const NamedModule nm = module_from_json(input, {}, path);
  bool verified = false;
  Json written;
  std::string in_side, out_side;
  std::size_t dim = 0;
  std::visit(
      [&](const auto& m) {
        const auto ctx = build_duality_context(m.algebra());
        const auto dual = dualize(m, ctx);
        const auto back = dualize(dual, ctx);
        const FpMatrix omega = evaluation_map(m, ctx);
        verified = is_homomorphism(m, back, omega) && inverse(omega).has_value() && find_isomorphism(back, m).has_value();
        written = module_to_json(dual, input["algebra"]);
        in_side = side_name(m.side);
        out_side = side_name(dual.side);
        dim = dual.dim();
      },
      nm.module);
  write_file_atomic(module_out, dump_json(written));
  Json j{{"command", "dualize"}, {"module", path}, {"written", module_out}, {"input_side", in_side},
         {"output_side", out_side}, {"dim", dim}, {"round_trip_verified", verified}};
  std::ostringstream t;
  t << "input_side: " << in_side << "\noutput_side: " << out_side << "\ndim: " << dim << "\nwritten: " << module_out
    << "\nround_trip_verified: " << (verified ? "true" : "false") << '\n';
  emit(o, j, t.str(), out);
  return verified ? kPass : kCheckFailed;
}

// --- fclosure ----------------------------------------------------------------

int cmd_fclosure(const std::string& algebra_arg, const std::vector<std::string>& gens, const Output& o,
                 std::ostream& out) {
  const AlgebraRef a = load_algebra(algebra_arg);
  std::vector<Vec> vs;
  for (const auto& g : gens) vs.push_back(parse_coordinates(g, *a));
  const Ideal ideal = ideal_from_generators(*a, vs);
  const auto fc = frobenius_closure(*a, ideal);
  Json chain = Json::array();
  for (const auto& c : fc.chain) chain.push_back(ideal_json(*a, c));
  Json j{{"command", "fclosure"}, {"ideal", ideal_json(*a, ideal)}, {"closure", ideal_json(*a, fc.closure)},
         {"Q", fc.q}, {"chain", chain}, {"preperiod", fc.preperiod}, {"period", fc.period}};
  std::ostringstream t;
  t << "ideal: " << ideal_text(*a, ideal) << "\nclosure: " << ideal_text(*a, fc.closure) << "\nQ: " << fc.q << '\n';
  for (std::size_t n = 0; n < fc.chain.size(); ++n) t << "c_" << n << ": " << ideal_text(*a, fc.chain[n]) << '\n';
  t << "preperiod: " << fc.preperiod << "\nperiod: " << fc.period << '\n';
  emit(o, j, t.str(), out);
  return kPass;
}

// --- check -------------------------------------------------------------------

int cmd_check(const std::string& path, std::uint64_t seed, std::uint64_t per_algebra, const Output& o,
              std::ostream& out) {
  const InstanceCatalog cat = catalog_from_json(read_json_file(path));
  SuiteOptions opts;
  opts.seed = seed;
  opts.random_per_algebra = per_algebra;
  opts.max_module_dim = cat.budget("max_module_dim", opts.max_module_dim);
  opts.enumeration_budget = cat.budget("enumeration", opts.enumeration_budget);
  CheckReport report = run_all_suites(cat.algebras, cat.modules, opts);
  for (const auto& i : cat.ideals) check_frobenius_closure(i.name, *i.algebra, i.ideal, report);

  Json j{{"command", "check"}, {"catalog", path}, {"seed", seed}, {"random_per_algebra", per_algebra}};
  const Json rows = report_to_json(report);
  for (const auto& [k, v] : rows.items()) j[k] = v;
  emit(o, j, report_to_text(report), out);
  return report.all_passed() ? kPass : kCheckFailed;
}

// --- probe-question ----------------------------------------------------------

int cmd_probe(const std::string& path, std::optional<std::uint64_t> budget_flag, const Output& o, std::ostream& out) {
  const InstanceCatalog cat = catalog_from_json(read_json_file(path));
  const std::uint64_t budget = budget_flag.value_or(cat.budget("enumeration", std::uint64_t{1} << 10));
  Json entries = Json::array();
  bool partial = false;
  std::ostringstream t;
  t << "label: " << kProbeLabel << '\n';
  for (const auto& nm : cat.modules) {
    const auto* m = std::get_if<RightFModule>(&nm.module);
    if (!m || !is_x_divisible(*m)) continue;
    Json e{{"module", nm.name}, {"dim", m->dim()}};
    try {
      const auto chains = quotient_grann_chains(*m, budget);
      Json cs = Json::array();
      for (const auto& c : chains) cs.push_back(c.to_string(*m->algebra()));
      e["count"] = chains.size();
      e["chains"] = cs;
      t << nm.name << ": " << chains.size() << " distinct grann chains of quotients\n";
      for (const auto& c : chains) t << "    " << c.to_string(*m->algebra()) << '\n';
    } catch (const EnumerationBoundError&) {
      partial = true;
      e["skipped"] = "over budget";
      t << nm.name << ": skipped, p^dim exceeds budget " << budget << '\n';
    }
    entries.push_back(e);
  }
  if (partial) t << "partial: true\n";
  Json j{{"command", "probe-question"}, {"catalog", path}, {"label", kProbeLabel}, {"budget", budget},
         {"partial", partial}, {"modules", entries}};
  emit(o, j, t.str(), out);
  return kPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius skew polynomial modules over finite F_p-algebras: duality and annihilator checks", "froblab"};
  app.require_subcommand(1);
  Output o;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", o.out_path, "Write the report to this file instead of stdout");
  };

  std::string file, module_out;
  std::vector<std::string> gens;
  std::uint64_t seed = 0, per_algebra = 4, probe_budget = 0;

  auto* analyze = app.add_subcommand("analyze", "Exponents, torsion and graded annihilator of a module");
  analyze->add_option("module", file, "Module file")->required();
  add_output(analyze);

  auto* dual = app.add_subcommand("dualize", "Write the dual module and verify the double dual");
  dual->add_option("module", file, "Module file")->required();
  dual->add_option("--out", module_out, "Where to write the dual module")->required();
  dual->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "structured"}));

  auto* fclosure = app.add_subcommand("fclosure", "Frobenius closure and Q of an ideal");
  fclosure->add_option("algebra", file, "Algebra file or built-in algebra name")->required();
  fclosure->add_option("--gen", gens, "Generator as comma-separated coordinates (repeatable)");
  add_output(fclosure);

  auto* check = app.add_subcommand("check", "Run every property suite over a catalog");
  check->add_option("catalog", file, "Catalog file")->required();
  check->add_option("--seed", seed, "Seed for random instances");
  check->add_option("--budget", per_algebra, "Random modules of each side per algebra");
  add_output(check);

  auto* probe = app.add_subcommand("probe-question", "Count grann chains of quotients of x-divisible modules");
  probe->add_option("catalog", file, "Catalog file")->required();
  auto* probe_budget_opt = probe->add_option("--budget", probe_budget, "Enumeration cap on p^dim");
  add_output(probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kBadInput;
  }

  try {
    if (*analyze) return cmd_analyze(file, o, out);
    if (*dual) return cmd_dualize(file, module_out, o, out);
    if (*fclosure) return cmd_fclosure(file, gens, o, out);
    if (*check) return cmd_check(file, seed, per_algebra, o, out);
    if (*probe)
      return cmd_probe(file, *probe_budget_opt ? std::optional<std::uint64_t>(probe_budget) : std::nullopt, o, out);
  } catch (const LoadError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const EnumerationBoundError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace froblab
