#pragma once

// Matlis-type duality between left and right R[x,f]-modules through the
// injective cogenerator E = Hom_{F_p}(R, F_p).
//
// Elements of E are coordinate vectors z with z_k = φ(e_k). The right
// R-action is (φ·s)(a) = φ(sa), so ρ_E(s) = L(s)^T. The right x-action on E
// comes from a bimodule isomorphism Ψ: _fE → Hom_{rR}(R_f, E) through
// zx = Ψ(z)(1). The canonical Ψ(z)(r) = ξ(z·r) with ξ(φ) = φ∘f; every other
// bimodule isomorphism is Ψ∘ρ_E(u) for a unit u (the "twist").
//
// Duals are represented on the plain linear dual G* via m ↔ λ = m(-)(1),
// which turns D and D′ into transposes twisted by u.

#include <string>
#include <variant>
#include <vector>

#include "froblab/fmodule.hpp"

namespace froblab {

struct DualityContext {
  AlgebraRef algebra;
  std::vector<FpMatrix> e_action;  // ρ_E(e_i) = L(e_i)^T
  FpMatrix xi_e;                   // z ↦ zx on E
  Vec twist;                       // u with Ψ = Ψ_canonical ∘ ρ_E(u)
  Vec twist_inverse;
  Subspace hom_rf_space;               // Hom_{rR}(R_f, E) as flattened d×d matrices
  std::vector<FpMatrix> hom_rf_basis;  // unflattened basis of hom_rf_space
  FpMatrix psi;                        // column k: coordinates of Ψ(ε_k) in hom_rf_basis
  FpMatrix psi_inv;

  std::size_t dim() const { return algebra->dim(); }
  /// Ψ(z) as a d×d matrix: column j is Ψ(z)(e_j) ∈ E.
  FpMatrix psi_of(const Vec& z) const;
  /// (E, ξ_E) as a right module.
  RightFModule injective_module() const;
};

/// Canonical context; throws std::logic_error if any invariant fails.
DualityContext build_duality_context(AlgebraRef a);

/// Context for a user-supplied Ψ, given by its values Ψ(ε_k) as d×d matrices.
/// Throws std::invalid_argument if they do not form a bimodule isomorphism.
DualityContext duality_context_with_psi(AlgebraRef a, const std::vector<FpMatrix>& psi_images);

struct InvariantCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// cogenerator, xi_semilinear, psi_bimodule_iso, consistency, nondegeneracy.
std::vector<InvariantCheck> context_invariants(const DualityContext& ctx);

// --- functors ---------------------------------------------------------------

RightFModule dualize_left(const LeftFModule& h, const DualityContext& ctx);
LeftFModule dualize_right(const RightFModule& m, const DualityContext& ctx);

inline RightFModule dualize(const LeftFModule& h, const DualityContext& ctx) { return dualize_left(h, ctx); }
inline LeftFModule dualize(const RightFModule& m, const DualityContext& ctx) { return dualize_right(m, ctx); }

/// D(φ) = D′(φ) = φ^T on the linear duals.
FpMatrix dual_morphism(const FpMatrix& phi);

/// The E-valued map attached to λ ∈ G*: g ↦ (a ↦ λ(ρ(a)g)).
template <Side S>
Vec as_e_map(const FModule<S>& g, const Vec& lambda, const Vec& v);

/// (D(α)(m ⊗ r))(h) = Ψ(m(α(1⊗h)))(r), evaluated through Ψ.
Vec eval_D_general(const DualityContext& ctx, const LeftFModule& h, const Vec& m, const Vec& r, const Vec& hv);
/// The same value from the transpose model: ((m r)x)(h).
Vec eval_D_fast(const DualityContext& ctx, const LeftFModule& h, const Vec& m, const Vec& r, const Vec& hv);

/// (D′(β)(r ⊗ h))(m) = Ψ^{-1}(r′ ↦ h(β(m ⊗ r′)))·r, evaluated through Ψ^{-1}.
/// Throws std::logic_error if the inner map is not in Hom_{rR}(R_f, E).
Vec eval_Dprime_general(const DualityContext& ctx, const RightFModule& mod, const Vec& r, const Vec& h, const Vec& m);
/// The same value from the transpose model: (r(xh))(m).
Vec eval_Dprime_fast(const DualityContext& ctx, const RightFModule& mod, const Vec& r, const Vec& h, const Vec& m);

/// ω_G: G → D′(D(G)) for left G, G → D(D′(G)) for right G, assembled from
/// g ↦ (m ↦ m(g)) and checked to be an invertible intertwiner (throws otherwise).
template <Side S>
FpMatrix evaluation_map(const FModule<S>& g, const DualityContext& ctx);

// --- duality identities ------------------------------------------------------

struct IdentityResult {
  std::string name;
  std::string anchor;
  std::string instance;
  bool passed = true;
  std::string counterexample;
};

struct CheckReport {
  std::vector<IdentityResult> results;
  bool all_passed() const;
  std::size_t failures() const;
  /// The counterexample is dropped when the identity passed.
  void add(std::string name, std::string anchor, std::string instance, bool passed, std::string counterexample = {});
  void append(const CheckReport& other);
};

struct NamedModule {
  std::string name;
  std::variant<LeftFModule, RightFModule> module;
};

/// Checks, per sample:
///  (a) ω is an isomorphism both ways, and D(ω_H)∘ω_{D(H)} = id;
///  (b) grann is preserved by duality;
///  (c) ker D(ann_H B ↪ H) = D(H)B and ann_{D′(M)} B = D′(M/MB);
///  (d) divisible ⟺ dual is x-torsion-free;
///  (e) exponent of divisibility = HSL exponent of the dual;
///  (f) grann chains of quotients ↔ grann chains of submodules of the dual.
/// Graded ideals for (c): 0, R[x,f]x, R[x,f]x², R[x,f], grann of the sample,
/// and one seeded random chain. (f) is skipped above `budget`.
CheckReport check_duality_identities(const std::vector<NamedModule>& samples, const DualityContext& ctx,
                                       std::uint64_t seed, std::uint64_t budget = enumeration_bound());

/// Distinct grann chains of all quotients M/L.
template <Side S>
std::vector<GradedTwoSidedIdeal> quotient_grann_chains(const FModule<S>& m, std::uint64_t budget);
/// Distinct grann chains of all submodules.
template <Side S>
std::vector<GradedTwoSidedIdeal> submodule_grann_chains(const FModule<S>& m, std::uint64_t budget);

}  // namespace froblab
