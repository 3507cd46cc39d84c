#include "froblab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace froblab {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw LoadError(where.empty() ? what : where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t count(const Json& j, const std::string& where) {
  const auto v = integer(j, where);
  if (v < 0) fail(where, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

Vec residues(const Json& j, Elem p, std::size_t len, const std::string& where) {
  if (!j.is_array() || j.size() != len) fail(where, "expected a list of " + std::to_string(len) + " integers");
  Vec out;
  for (std::size_t i = 0; i < len; ++i) {
    const auto v = integer(j[i], where + "[" + std::to_string(i) + "]");
    if (v < 0 || v >= static_cast<std::int64_t>(p))
      fail(where + "[" + std::to_string(i) + "]", "entry " + std::to_string(v) + " is not in [0, " + std::to_string(p) + ")");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

/// An n×n matrix given as n rows, or as one flat row-major list.
FpMatrix square_matrix(const Json& j, Elem p, std::size_t n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a matrix");
  Vec flat;
  if (j.size() == n && (n == 0 || j[0].is_array())) {
    for (std::size_t r = 0; r < n; ++r) {
      const Vec row = residues(j[r], p, n, where + "[" + std::to_string(r) + "]");
      flat.insert(flat.end(), row.begin(), row.end());
    }
  } else {
    flat = residues(j, p, n * n, where);
  }
  return FpMatrix::unflatten(p, n, n, flat);
}

Json matrix_rows(const FpMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

AlgebraRef resolve_algebra(const Json& j, const AlgebraTable& known, const std::string& where) {
  if (j.is_string()) {
    const auto it = known.find(j.get<std::string>());
    if (it != known.end()) return it->second;
    const auto builtin = builtin_algebras();
    const auto b = builtin.find(j.get<std::string>());
    if (b == builtin.end()) fail(where, "unknown algebra \"" + j.get<std::string>() + "\"");
    return b->second;
  }
  try {
    return algebra_from_json(j);
  } catch (const LoadError& e) {
    fail(where, e.what());
  }
}

Json algebra_reference(const AlgebraRef& a, const std::vector<NamedAlgebra>& named) {
  for (const auto& [name, b] : named)
    if (b == a || *b == *a) return name;
  return algebra_to_json(*a);
}

void dump_into(const Json& j, int depth, std::string& out) {
  constexpr auto replace = nlohmann::json::error_handler_t::replace;
  if (!j.is_structured() || j.empty()) {
    out += j.dump(-1, ' ', false, replace);
    return;
  }
  if (j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    out += '[';
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump(-1, ' ', false, replace);
    out += ']';
    return;
  }
  const std::string pad(2 * (depth + 1), ' ');
  out += j.is_array() ? "[\n" : "{\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    out += pad;
    if (j.is_object()) out += Json(it.key()).dump(-1, ' ', false, replace) + ": ";
    dump_into(*it, depth + 1, out);
    out += k + 1 < j.size() ? ",\n" : "\n";
  }
  out += std::string(2 * depth, ' ') + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  dump_into(j, 0, out);
  return out + "\n";
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path.string() + ": cannot write");
    out << content;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw std::runtime_error(path.string() + ": write failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error(path.string() + ": " + ec.message());
  }
}

Json algebra_to_json(const FiniteAlgebra& a, const std::string& name) {
  Json j;
  if (!name.empty()) j["name"] = name;
  j["p"] = a.p();
  j["dim"] = a.dim();
  j["labels"] = a.labels();
  j["table"] = a.table();
  j["one"] = a.one();
  return j;
}

AlgebraRef algebra_from_json(const Json& j) {
  const std::string where = j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "algebra";
  const auto p64 = integer(field(j, "p", where), where + ".p");
  if (p64 < 2 || p64 > (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p64)))
    fail(where + ".p", std::to_string(p64) + " is not a supported prime");
  const Elem p = static_cast<Elem>(p64);
  const Json& labels_j = field(j, "labels", where);
  if (!labels_j.is_array() || labels_j.empty()) fail(where + ".labels", "expected a non-empty list of strings");
  std::vector<std::string> labels;
  for (const auto& l : labels_j) {
    if (!l.is_string()) fail(where + ".labels", "expected strings");
    labels.push_back(l.get<std::string>());
  }
  const std::size_t d = labels.size();
  if (j.contains("dim") && count(j["dim"], where + ".dim") != d) fail(where + ".dim", "does not match the number of labels");
  const Json& table_j = field(j, "table", where);
  if (!table_j.is_array() || table_j.size() != d) fail(where + ".table", "expected " + std::to_string(d) + " rows");
  std::vector<std::vector<Vec>> table(d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::string wi = where + ".table[" + std::to_string(i) + "]";
    if (!table_j[i].is_array() || table_j[i].size() != d) fail(wi, "expected " + std::to_string(d) + " entries");
    for (std::size_t k = 0; k < d; ++k) table[i].push_back(residues(table_j[i][k], p, d, wi + "[" + std::to_string(k) + "]"));
  }
  const Vec one = residues(field(j, "one", where), p, d, where + ".one");
  auto a = std::make_shared<const FiniteAlgebra>(p, std::move(labels), std::move(table), one);
  if (const auto rep = validate_algebra(*a); !rep) fail(where, "not a commutative algebra: " + rep.violation);
  return a;
}

AlgebraTable builtin_algebras() {
  AlgebraTable t;
  for (const auto& [name, a] : standard_catalog()) t.emplace(name, a);
  return t;
}

template <Side S>
Json module_to_json(const FModule<S>& m, const Json& algebra_field) {
  Json j;
  j["side"] = side_name(S);
  j["dim"] = m.dim();
  j["algebra"] = algebra_field;
  Json action = Json::array();
  for (const auto& r : m.action()) action.push_back(matrix_rows(r));
  j["action"] = action;
  j["X"] = matrix_rows(m.x());
  return j;
}

Json module_to_json(const NamedModule& m, const Json& algebra_field) {
  return std::visit([&](const auto& mod) { return module_to_json(mod, algebra_field); }, m.module);
}

NamedModule module_from_json(const Json& j, const AlgebraTable& known, const std::string& name) {
  const std::string where = name.empty() ? "module" : name;
  const Json& side_j = field(j, "side", where);
  if (!side_j.is_string() || (side_j != "left" && side_j != "right")) fail(where + ".side", "expected \"left\" or \"right\"");
  const AlgebraRef a = resolve_algebra(field(j, "algebra", where), known, where + ".algebra");
  const std::size_t n = count(field(j, "dim", where), where + ".dim");
  if (n > 64) fail(where + ".dim", "modules larger than 64 are out of scope");
  const Json& action_j = field(j, "action", where);
  if (!action_j.is_array() || action_j.size() != a->dim())
    fail(where + ".action", "expected one matrix per basis element (" + std::to_string(a->dim()) + ")");
  std::vector<FpMatrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i)
    action.push_back(square_matrix(action_j[i], a->p(), n, where + ".action[" + std::to_string(i) + "]"));
  const FpMatrix x = square_matrix(field(j, "X", where), a->p(), n, where + ".X");

  auto build = [&](auto tag) -> NamedModule {
    using M = FModule<decltype(tag)::value>;
    M m(a, action, x);
    if (const auto rep = validate_module(m); !rep)
      fail(where, std::string("not a valid ") + side_name(M::side) + " module: " + rep.violation);
    return {name, std::move(m)};
  };
  if (side_j == "left") return build(std::integral_constant<Side, Side::Left>{});
  return build(std::integral_constant<Side, Side::Right>{});
}

std::uint64_t InstanceCatalog::budget(const std::string& key, std::uint64_t fallback) const {
  const auto it = budgets.find(key);
  return it == budgets.end() ? fallback : it->second;
}

Vec element_from_json(const Json& j, const FiniteAlgebra& a, const std::string& where) {
  return residues(j, a.p(), a.dim(), where);
}

InstanceCatalog catalog_from_json(const Json& j) {
  if (!j.is_object()) fail("catalog", "expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "algebras" && key != "modules" && key != "ideals" && key != "budgets")
      fail("catalog", "unknown section \"" + key + "\"");
  auto section = [&](const char* key) -> const Json* {
    const auto it = j.find(key);
    if (it == j.end()) return nullptr;
    if (!it->is_object()) fail(key, "expected an object keyed by name");
    return &*it;
  };

  InstanceCatalog c;
  AlgebraTable known;
  if (const Json* s = section("algebras"))
    for (const auto& [name, value] : s->items()) {
      AlgebraRef a;
      if (value.is_string()) {
        a = resolve_algebra(value, known, "algebras." + name);
      } else {
        Json named = value;
        if (named.is_object() && !named.contains("name")) named["name"] = "algebras." + name;
        a = algebra_from_json(named);
      }
      known[name] = a;
      c.algebras.push_back({name, a});
    }
  if (const Json* s = section("modules"))
    for (const auto& [name, value] : s->items()) c.modules.push_back(module_from_json(value, known, name));
  if (const Json* s = section("ideals"))
    for (const auto& [name, value] : s->items()) {
      const std::string where = "ideals." + name;
      const AlgebraRef a = resolve_algebra(field(value, "algebra", where), known, where + ".algebra");
      const Json& gens_j = field(value, "generators", where);
      if (!gens_j.is_array()) fail(where + ".generators", "expected a list of vectors");
      std::vector<Vec> gens;
      for (std::size_t i = 0; i < gens_j.size(); ++i)
        gens.push_back(element_from_json(gens_j[i], *a, where + ".generators[" + std::to_string(i) + "]"));
      c.ideals.push_back({name, a, ideal_from_generators(*a, gens)});
    }
  if (const Json* s = section("budgets"))
    for (const auto& [name, value] : s->items()) c.budgets[name] = count(value, "budgets." + name);
  return c;
}

Json catalog_to_json(const InstanceCatalog& c) {
  Json j;
  Json algebras = Json::object();
  for (const auto& [name, a] : c.algebras) algebras[name] = algebra_to_json(*a);
  j["algebras"] = algebras;
  Json modules = Json::object();
  for (const auto& m : c.modules)
    modules[m.name] = module_to_json(m, algebra_reference(std::visit([](const auto& x) { return x.algebra(); }, m.module),
                                                          c.algebras));
  j["modules"] = modules;
  Json ideals = Json::object();
  for (const auto& i : c.ideals)
    ideals[i.name] = Json{{"algebra", algebra_reference(i.algebra, c.algebras)}, {"generators", i.ideal.generators}};
  j["ideals"] = ideals;
  Json budgets = Json::object();
  for (const auto& [k, v] : c.budgets) budgets[k] = v;
  j["budgets"] = budgets;
  return j;
}

Json report_to_json(const CheckReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.results) {
    Json o{{"name", row.name}, {"anchor", row.anchor}, {"instance", row.instance}, {"passed", row.passed}};
    if (!row.passed) o["counterexample"] = row.counterexample;
    rows.push_back(o);
  }
  return Json{{"summary", {{"total", r.results.size()}, {"failed", r.failures()}}}, {"results", rows}};
}

std::string report_to_text(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& row : r.results) {
    os << (row.passed ? "PASS " : "FAIL ") << row.name << " [" << row.instance << "] (" << row.anchor << ")\n";
    if (!row.passed && !row.counterexample.empty()) {
      std::istringstream lines(row.counterexample);
      for (std::string line; std::getline(lines, line);) os << "    " << line << '\n';
    }
  }
  os << r.results.size() << " checks, " << r.failures() << " failed\n";
  return os.str();
}

template Json module_to_json(const LeftFModule&, const Json&);
template Json module_to_json(const RightFModule&, const Json&);

}  // namespace froblab
