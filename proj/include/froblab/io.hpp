#pragma once

// JSON file formats for algebras, modules, ideals and instance catalogs, and
// rendering of check reports.

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "froblab/duality.hpp"
#include "froblab/generators.hpp"

namespace froblab {

using Json = nlohmann::ordered_json;

/// Any problem with an input document: syntax, schema, range or a failed validator.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Indented JSON with every list of scalars kept on one line.
std::string dump_json(const Json& j);

/// {"name"?, "p", "dim"?, "labels", "table", "one"}
Json algebra_to_json(const FiniteAlgebra& a, const std::string& name = {});
/// Validates the algebra axioms; throws LoadError.
AlgebraRef algebra_from_json(const Json& j);

/// Name -> algebra lookup used to resolve "algebra": "<name>" references.
using AlgebraTable = std::map<std::string, AlgebraRef>;
/// The standard catalog keyed by name.
AlgebraTable builtin_algebras();

/// {"side", "dim", "algebra", "action": d matrices as lists of rows, "X"}
template <Side S>
Json module_to_json(const FModule<S>& m, const Json& algebra_field);
Json module_to_json(const NamedModule& m, const Json& algebra_field);
/// "algebra" may be an embedded algebra object or a name looked up in `known`.
/// Validates the module axioms; throws LoadError.
NamedModule module_from_json(const Json& j, const AlgebraTable& known, const std::string& name = {});

struct NamedIdeal {
  std::string name;
  AlgebraRef algebra;
  Ideal ideal;
};

struct InstanceCatalog {
  std::vector<NamedAlgebra> algebras;
  std::vector<NamedModule> modules;
  std::vector<NamedIdeal> ideals;
  std::map<std::string, std::uint64_t> budgets;

  std::uint64_t budget(const std::string& key, std::uint64_t fallback) const;
};

/// {"algebras": {name: algebra}, "modules": {name: module}, "ideals": {name: {"algebra", "generators"}},
///  "budgets": {name: count}}; every section is optional.
InstanceCatalog catalog_from_json(const Json& j);
Json catalog_to_json(const InstanceCatalog& c);

/// Parses a coordinate vector for `a`; throws LoadError.
Vec element_from_json(const Json& j, const FiniteAlgebra& a, const std::string& where);

Json report_to_json(const CheckReport& r);
/// One line per row, failures followed by their counterexample, then a summary line.
std::string report_to_text(const CheckReport& r);

}  // namespace froblab
