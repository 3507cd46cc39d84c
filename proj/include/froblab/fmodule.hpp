#pragma once

// Left and right R[x,f]-modules that are finite-dimensional over F_p, given by
// the R-action matrices and a semilinear matrix X for the action of x:
//
//   left:   X ρ(r)   = ρ(r^p) X      (x·(r h) = r^p (x h))
//   right:  X ρ(r^p) = ρ(r) X        ((m r^p) x = (m x) r)

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "froblab/algebra.hpp"
#include "froblab/skew.hpp"

namespace froblab {

enum class Side { Left, Right };

constexpr const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }
constexpr Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

template <Side S>
class FModule {
 public:
  static constexpr Side side = S;

  /// No validation here; see validate_module().
  FModule(AlgebraRef algebra, std::vector<FpMatrix> action, FpMatrix x);
  static FModule zero(AlgebraRef algebra);

  const AlgebraRef& algebra() const noexcept { return algebra_; }
  Elem p() const noexcept { return algebra_->p(); }
  std::size_t dim() const noexcept { return x_.rows(); }
  const std::vector<FpMatrix>& action() const noexcept { return action_; }
  const FpMatrix& x() const noexcept { return x_; }

  /// ρ(r) = Σ r_i ρ(e_i).
  FpMatrix rho(const Vec& r) const;

  friend bool operator==(const FModule& a, const FModule& b) {
    return *a.algebra_ == *b.algebra_ && a.action_ == b.action_ && a.x_ == b.x_;
  }

 private:
  AlgebraRef algebra_;
  std::vector<FpMatrix> action_;
  FpMatrix x_;
};

using LeftFModule = FModule<Side::Left>;
using RightFModule = FModule<Side::Right>;

/// An F_p-subspace stable under every ρ(e_i) and under X.
struct FSubmodule {
  Subspace space;
  std::size_t dim() const noexcept { return space.dim(); }
  friend bool operator==(const FSubmodule&, const FSubmodule&) = default;
  friend auto operator<=>(const FSubmodule& a, const FSubmodule& b) { return a.space <=> b.space; }
};

template <Side S>
ValidationReport validate_module(const FModule<S>& m);

// --- construction ----------------------------------------------------------

/// R acting on itself by multiplication, with the given X.
template <Side S>
FModule<S> regular_module(AlgebraRef a, FpMatrix x);
/// (R, α_c): x·r = c r^p.
LeftFModule twist_c(AlgebraRef a, const Vec& c);
/// (R, α): x·r = r^p.
LeftFModule natural_module(AlgebraRef a);

struct RankOneIso {
  bool isomorphic = false;
  std::optional<Vec> witness;  // unit u with ρ(u) X_{c1} = X_{c2} ρ(u)
};
/// Exhaustive search over units; throws EnumerationBoundError past `bound`.
RankOneIso rank_one_iso(AlgebraRef a, const Vec& c1, const Vec& c2, std::uint64_t bound = enumeration_bound());

struct CartierResult {
  std::optional<RightFModule> module;
  std::string reason;  // set when module is empty
};
/// Right structure r·x = π(r)^{1/p} from an im(F)-linear projection π onto im(F).
CartierResult cartier_from_splitting(AlgebraRef a);

template <Side S>
FModule<S> direct_sum(const FModule<S>& a, const FModule<S>& b);
/// The same module written in new coordinates v' = P v.
template <Side S>
FModule<S> change_basis(const FModule<S>& m, const FpMatrix& p);

// --- x-action --------------------------------------------------------------

template <Side S>
Vec apply_x(const FModule<S>& m, const Vec& v);
template <Side S>
Vec apply_x_power(const FModule<S>& m, const Vec& v, std::size_t k);

/// Least e with ker X^e = ker X^{e+1}.
std::size_t hsl_exponent_left(const LeftFModule& h);
/// Least e with im X^e = im X^{e+1}, i.e. M x^e = M x^{e+1}.
std::size_t xdiv_exponent_right(const RightFModule& m);

/// Γ_x(H), the union of the kernels of X^k.
FSubmodule x_torsion(const LeftFModule& h);
bool is_x_torsion_free(const LeftFModule& h);
bool is_x_divisible(const RightFModule& m);

// --- graded annihilators ---------------------------------------------------

GradedTwoSidedIdeal grann_left(const LeftFModule& h);
GradedTwoSidedIdeal grann_right(const RightFModule& m);
template <Side S>
GradedTwoSidedIdeal grann(const FModule<S>& m);

/// M·B, the submodule generated by all m b x^n with b ∈ b_n.
FSubmodule module_times_graded_ideal(const RightFModule& m, const GradedTwoSidedIdeal& b);
/// ann_H B = {h : θ h = 0 for all θ ∈ B}.
FSubmodule ann_graded_ideal(const LeftFModule& h, const GradedTwoSidedIdeal& b);

// --- submodules and quotients ----------------------------------------------

template <Side S>
bool is_submodule(const FModule<S>& m, const Subspace& s);
template <Side S>
FSubmodule submodule_generated(const FModule<S>& m, const std::vector<Vec>& vectors);

template <Side S>
struct Quotient {
  FModule<S> module;
  FpMatrix projection;  // (dim M/S) × (dim M)
};
/// Throws std::invalid_argument if the subspace is not a submodule.
template <Side S>
Quotient<S> quotient_with_map(const FModule<S>& m, const FSubmodule& sub);
template <Side S>
FModule<S> quotient_module(const FModule<S>& m, const FSubmodule& sub);

template <Side S>
struct Restriction {
  FModule<S> module;
  FpMatrix inclusion;  // (dim M) × (dim S)
};
/// The submodule as a module in its own right, in the coordinates of its canonical basis.
template <Side S>
Restriction<S> restrict_to(const FModule<S>& m, const FSubmodule& sub);

/// All F[x,f]-submodules, sorted canonically; throws EnumerationBoundError when p^n > budget.
template <Side S>
std::vector<FSubmodule> enumerate_submodules(const FModule<S>& m, std::uint64_t budget = enumeration_bound());

// --- homomorphisms ---------------------------------------------------------

/// R[x,f]-linear maps M → N, as flattened (dim N × dim M) matrices.
template <Side S>
Subspace hom_space(const FModule<S>& from, const FModule<S>& to);
template <Side S>
bool is_homomorphism(const FModule<S>& from, const FModule<S>& to, const FpMatrix& phi);
/// An invertible homomorphism, searched exhaustively when the hom space is small
/// and by seeded random sampling otherwise.
template <Side S>
std::optional<FpMatrix> find_isomorphism(const FModule<S>& a, const FModule<S>& b, std::uint64_t seed = 0);

// --- reductions for the dual HSL stabilization ------------------------------

struct AnnihilatorChain {
  std::vector<Subspace> chain;  // (0 :_M R x^k) for k = 0..stable_index
  std::size_t stable_index = 0;
  const Subspace& limit() const { return chain.back(); }
};

/// (0 :_M R x^k) = {m : X^k ρ(r) m = 0 for all r}, up to stabilization.
AnnihilatorChain rx_annihilator_chain(const RightFModule& m);
/// M·x^∞ = ∩ M x^k.
FSubmodule x_infinity_image(const RightFModule& m);

/// M^γ = M / (0 :_M R x^∞).
RightFModule gamma_reduction(const RightFModule& m);
/// M^σ = M / M·x^∞.
RightFModule sigma_reduction(const RightFModule& m);

struct ReductionStep {
  char kind = 's';            // 's' for σ, 'g' for γ
  std::size_t killed_dim = 0;  // dimension of the submodule divided out
  std::size_t ell = 0;         // stabilization index of the annihilator chain (γ only)
};

struct StabilizationPipeline {
  std::vector<ReductionStep> steps;
  std::size_t final_dim = 0;
  /// Exponent k with M x^k = M x^{k+1} implied by back-propagating through the steps.
  std::size_t exponent_bound = 0;
};

/// M → M^σ → (M^σ)^γ → ... until a fixed point.
StabilizationPipeline stabilization_pipeline(const RightFModule& m);

// --- localization at an idempotent component --------------------------------

struct LocalizedModule {
  RightFModule module;  // over the component algebra
  FpMatrix inclusion;   // columns: basis of ρ(e)M inside M
  Vec idempotent;
};

/// Projection of M onto the idempotent component `component_index`.
LocalizedModule localize_right_module(const RightFModule& m, std::size_t component_index);
LocalizedModule localize_right_module(const RightFModule& m, const LocalDecomposition& dec,
                                      std::size_t component_index);

}  // namespace froblab
