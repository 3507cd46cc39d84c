// Acceptance run: one PASS/FAIL line per criterion over seeded samples.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "froblab/suites.hpp"

using namespace froblab;

namespace {

constexpr std::uint64_t kSeed = 20260101;
constexpr std::size_t kModulesPerSide = 20;  // per catalog algebra and side
constexpr std::uint64_t kFinitenessBudget = std::uint64_t{1} << 10;

struct Criterion {
  int number;
  std::string title;
  CheckReport report;
  std::size_t volume = 0;  // instances / tuples / comparisons exercised
  std::string volume_unit;
  std::size_t required = 1;
  std::string extra_failure;
};

CheckReport select(const CheckReport& all, const std::set<std::string>& names) {
  CheckReport out;
  for (const auto& r : all.results)
    if (names.count(r.name)) out.results.push_back(r);
  return out;
}

bool print(const Criterion& c) {
  const bool enough = c.volume >= c.required;
  const bool pass = c.report.all_passed() && enough && c.extra_failure.empty();
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << c.volume << ' '
            << c.volume_unit << ", " << c.report.results.size() << " checks, " << c.report.failures() << " failed]\n";
  if (!enough) std::cout << "    volume below required " << c.required << '\n';
  if (!c.extra_failure.empty()) std::cout << "    " << c.extra_failure << '\n';
  for (const auto& r : c.report.results)
    if (!r.passed) {
      std::cout << "    first failure: " << r.name << " [" << r.instance << "]\n";
      std::istringstream lines(r.counterexample);
      for (std::string line; std::getline(lines, line);) std::cout << "      " << line << '\n';
      break;
    }
  return pass;
}

// r ∈ a^F ⟺ r^q ∈ a^{[q]} for some q = p^n, by enumeration of elements and n ≤ 8.
Subspace closure_by_enumeration(const FiniteAlgebra& a, const std::vector<Vec>& gens) {
  std::vector<Vec> members;
  const std::uint64_t total = *checked_power(a.p(), a.dim(), std::uint64_t{1} << 20);
  for (std::uint64_t i = 0; i < total; ++i) {
    const Vec r = element_from_index(a, i);
    std::uint64_t q = 1;
    for (int n = 0; n <= 8; ++n, q *= a.p()) {
      std::vector<Vec> powered;
      for (const auto& g : gens) powered.push_back(a.pow(g, q));
      if (ideal_from_generators(a, powered).contains(a.pow(r, q))) {
        members.push_back(r);
        break;
      }
    }
  }
  return Subspace::span(a.p(), a.dim(), members);
}

}  // namespace

int main() {
  const auto catalog = standard_catalog();
  std::map<const FiniteAlgebra*, DualityContext> contexts;

  // 1: contexts
  Criterion c1{1, "duality context and its invariants for every catalog algebra", {}, 0, "algebras", catalog.size()};
  for (const auto& [name, a] : catalog) {
    try {
      contexts.emplace(a.get(), build_duality_context(a));
      check_context(name, contexts.at(a.get()), c1.report);
    } catch (const std::exception& e) {
      c1.report.add("context_build", "", name, false, e.what());
    }
    ++c1.volume;
  }

  // seeded samples
  std::vector<std::pair<const NamedAlgebra*, NamedModule>> samples;
  std::mt19937_64 rng(kSeed);
  for (const auto& na : catalog) {
    if (!contexts.count(na.algebra.get())) continue;
    for (std::size_t k = 0; k < kModulesPerSide; ++k) {
      samples.push_back({&na, {na.name + "/left-" + std::to_string(k), random_module<Side::Left>(na.algebra, rng, 4)}});
      samples.push_back({&na, {na.name + "/right-" + std::to_string(k), random_module<Side::Right>(na.algebra, rng, 4)}});
    }
  }
  // extra x-divisible right modules for the finiteness correspondence
  std::size_t divisible_extra = 0;
  for (std::size_t tries = 0; divisible_extra < 60 && tries < 2000; ++tries) {
    const auto& na = catalog[tries % catalog.size()];
    if (!contexts.count(na.algebra.get())) continue;
    auto m = random_module<Side::Right>(na.algebra, rng, 4);
    if (m.dim() == 0 || !is_x_divisible(m) || !checked_power(m.p(), m.dim(), kFinitenessBudget)) continue;
    samples.push_back({&na, {na.name + "/divisible-" + std::to_string(divisible_extra++), std::move(m)}});
  }

  CheckReport per_module, identities;
  std::size_t tuples = 0, s_applicable = 0, components = 0, right_count = 0, finiteness_divisible = 0;
  std::map<const FiniteAlgebra*, std::vector<NamedModule>> by_algebra;
  std::vector<const FiniteAlgebra*> order;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& [na, nm] = samples[i];
    std::mt19937_64 local(kSeed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
    const auto& ctx = contexts.at(na->algebra.get());
    std::visit(
        [&](const auto& m) {
          if constexpr (std::decay_t<decltype(m)>::side == Side::Right) {
            ++right_count;
            check_stabilization(nm.name, m, per_module);
            s_applicable += check_s_squared(nm.name, m, per_module);
            components += check_localization(nm.name, m, per_module);
            if (is_x_divisible(m) && checked_power(m.p(), m.dim(), kFinitenessBudget)) ++finiteness_divisible;
          }
          tuples += check_evaluators(nm.name, m, ctx, local, 8, per_module);
        },
        nm.module);
    if (!by_algebra.count(na->algebra.get())) order.push_back(na->algebra.get());
    by_algebra[na->algebra.get()].push_back(nm);
  }
  for (const auto* key : order)
    identities.append(check_duality_identities(by_algebra[key], contexts.at(key), kSeed, kFinitenessBudget));

  // finiteness rows restricted to x-divisible right modules
  std::set<std::string> divisible_names;
  for (const auto& [na, nm] : samples)
    if (const auto* m = std::get_if<RightFModule>(&nm.module))
      if (is_x_divisible(*m)) divisible_names.insert(nm.name);
  CheckReport finiteness;
  std::size_t finiteness_rows = 0;
  for (const auto& r : identities.results)
    if (r.name == "finiteness_correspondence" && divisible_names.count(r.instance)) {
      finiteness.results.push_back(r);
      ++finiteness_rows;
    }

  Criterion c2{2, "omega invertible both ways and D, D' mutually inverse",
               select(identities, {"omega_iso", "double_dual_identity"}), samples.size(), "modules", 200};
  Criterion c3{3, "literal evaluators agree with the transpose model",
               select(per_module, {"eval_D_literal_matches_transpose", "eval_Dprime_literal_matches_transpose"}), tuples,
               "tuples", 1000};
  Criterion c4{4, "divisibility exponent equals HSL exponent of the dual", select(identities, {"exponent_duality"}),
               samples.size(), "modules"};
  Criterion c5{5, "reduction pipeline terminates and bounds the direct exponent",
               select(per_module, {"pipeline_terminates", "pipeline_bound_dominates", "sigma_kills_x_infinity",
                                   "gamma_kills_rx_torsion"}),
               right_count, "right modules"};
  Criterion c6{6, "graded annihilators agree under duality", select(identities, {"grann_duality"}), samples.size(),
               "modules"};
  Criterion c7{7, "kernel identities and divisible/torsion-free duality",
               select(identities, {"kernel_of_dual_inclusion", "annihilator_is_dual_of_quotient",
                                   "torsion_free_iff_dual_divisible", "divisible_iff_dual_torsion_free"}),
               samples.size(), "modules"};
  Criterion c8{8, "quotient grann chains match submodule grann chains of the dual", finiteness, finiteness_rows,
               "x-divisible right modules with p^n <= 2^10", 1};
  if (finiteness_rows != finiteness_divisible)
    c8.extra_failure = "only " + std::to_string(finiteness_rows) + " of " + std::to_string(finiteness_divisible) +
                       " applicable modules were checked";

  // 9: Frobenius closure
  Criterion c9{9, "Frobenius closure example and random ideals", {}, 0, "random ideals", 100};
  {
    const auto a = truncated_polynomial(2, 3);
    const Vec t2 = a->basis(2);
    const auto fc = frobenius_closure(*a, ideal_from_generators(*a, {t2}));
    const Subspace oracle = closure_by_enumeration(*a, {t2});
    const Subspace expected = Subspace::span(2, 3, {a->basis(1), a->basis(2)});
    std::ostringstream os;
    os << "closure dim " << fc.closure.dim() << ", Q = " << fc.q;
    c9.report.add("closure_example", "", "F2[t]/(t^3), a = (t^2)",
                  fc.closure.space == oracle && oracle == expected && fc.q == 4, os.str());
    check_frobenius_closure("F2[t]/(t^3)", *a, ideal_from_generators(*a, {t2}), c9.report);
    std::mt19937_64 irng(kSeed + 9);
    for (std::size_t k = 0; k < 120; ++k) {
      const auto& [name, alg] = catalog[k % catalog.size()];
      check_frobenius_closure(name, *alg, random_ideal(*alg, irng), c9.report);
      ++c9.volume;
    }
  }

  Criterion c10{10, "s^2 implication and localization at idempotent components",
                select(per_module, {"s_squared_in_image_powers", "localized_module_valid",
                                    "localized_structure_restricts", "localization_of_image_powers",
                                    "fraction_formula"}),
                s_applicable + components, "applicable instances"};

  Criterion c11{11, "rank-one classification over F3 and F5", {}, 0, "comparisons"};
  c11.volume += check_rank_one("F3", prime_field(3), c11.report);
  c11.volume += check_rank_one("F5", prime_field(5), c11.report);

  bool all = true;
  for (const auto* c : {&c1, &c2, &c3, &c4, &c5, &c6, &c7, &c8, &c9, &c10, &c11}) all = print(*c) && all;
  return all ? 0 : 1;
}
