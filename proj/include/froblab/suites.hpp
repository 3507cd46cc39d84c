#pragma once

// Property checks over single instances. Each check appends one
// or more IdentityResult rows to a CheckReport.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "froblab/duality.hpp"
#include "froblab/generators.hpp"

namespace froblab {

/// HSL exponent: every x-torsion element is killed by x^e and e is least
/// (exhaustive when p^n ≤ 2^12), and the kernel chain is constant from e on.
void check_hsl(const std::string& name, const LeftFModule& h, CheckReport& report);

/// grann chains are graded two-sided, annihilate the module and are stable past stable_from.
template <Side S>
void check_grann(const std::string& name, const FModule<S>& m, CheckReport& report);

/// σ/γ pipeline terminates, kills the module, and bounds the direct exponent.
void check_stabilization(const std::string& name, const RightFModule& m, CheckReport& report);

/// If ρ(s)M ⊆ MX then ρ(s²)M ⊆ MX^k for k ≤ dim M + 1. Returns how many s were applicable.
std::size_t check_s_squared(const std::string& name, const RightFModule& m, CheckReport& report);

/// Localization at each idempotent component: fraction formula and S^{-1}(Mx^k) = (S^{-1}M)x^k.
/// Returns the number of components checked.
std::size_t check_localization(const std::string& name, const RightFModule& m, CheckReport& report);

/// rank_one_iso against the "unit with a (p-1)th root" criterion, over all elements and unit pairs.
/// Returns the number of comparisons.
std::size_t check_rank_one(const std::string& name, const AlgebraRef& a, CheckReport& report);

/// Frobenius closure: containment, idempotence, Q minimality and witness, plus an
/// element-wise oracle r ∈ a^F ⟺ r^{p^n} ∈ a^{[p^n]} for some n when p^d ≤ 2^12.
void check_frobenius_closure(const std::string& name, const FiniteAlgebra& a, const Ideal& ideal, CheckReport& report);

/// The DualityContext invariants, one row each.
void check_context(const std::string& name, const DualityContext& ctx, CheckReport& report);

/// D(φ) is a homomorphism and D(φ∘ψ) = D(ψ)∘D(φ) for random homomorphisms.
template <Side S>
void check_functoriality(const std::string& name, const FModule<S>& m, const DualityContext& ctx,
                         std::mt19937_64& rng, CheckReport& report);

/// Literal evaluators against the transpose model on `count` random tuples
/// (plus the r = 1 and zero cases). Returns the number of tuples compared.
template <Side S>
std::size_t check_evaluators(const std::string& name, const FModule<S>& m, const DualityContext& ctx,
                             std::mt19937_64& rng, std::size_t count, CheckReport& report);

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t random_per_algebra = 4;
  std::size_t max_module_dim = 4;
  std::uint64_t enumeration_budget = std::uint64_t{1} << 10;
};

/// Every suite over the given modules plus seeded random modules per algebra.
CheckReport run_all_suites(const std::vector<NamedAlgebra>& algebras, const std::vector<NamedModule>& modules,
                           const SuiteOptions& options);

}  // namespace froblab
