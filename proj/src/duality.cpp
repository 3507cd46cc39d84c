#include "froblab/duality.hpp"

#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace froblab {

namespace {

FpMatrix stack_rows(Elem p, std::size_t cols, const std::vector<FpMatrix>& blocks) {
  std::vector<Vec> rows;
  for (const auto& b : blocks)
    for (std::size_t r = 0; r < b.rows(); ++r) rows.push_back(b.row(r));
  return FpMatrix::from_rows(p, cols, rows);
}

/// Ψ_0(z) for the canonical isomorphism: column j is F^T L(e_j)^T z.
FpMatrix canonical_psi(const FiniteAlgebra& a, const FpMatrix& ft, const Vec& z) {
  FpMatrix out(a.p(), a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) out.set_column(j, ft * (a.mult_matrix(a.basis(j)).transpose() * z));
  return out;
}

Subspace hom_rf(const FiniteAlgebra& a, const FpMatrix& f) {
  // ψ L(F e_j) = L(e_j)^T ψ for every j
  const std::size_t d = a.dim();
  const FpMatrix id = FpMatrix::identity(a.p(), d);
  std::vector<FpMatrix> blocks;
  for (std::size_t j = 0; j < d; ++j) {
    const FpMatrix lf = a.mult_matrix(f.column(j));
    const FpMatrix lt = a.mult_matrix(a.basis(j)).transpose();
    blocks.push_back(kron_operator(id, lf) - kron_operator(lt, id));
  }
  return kernel(stack_rows(a.p(), d * d, blocks));
}

DualityContext make_context(AlgebraRef a, const Vec& u) {
  const FiniteAlgebra& alg = *a;
  const std::size_t d = alg.dim();
  const Elem p = alg.p();
  if (!alg.is_unit(u)) throw std::invalid_argument("duality context: twist is not a unit");
  const FpMatrix f = frobenius_matrix(alg);
  const FpMatrix ft = f.transpose();
  const FpMatrix lut = alg.mult_matrix(u).transpose();

  DualityContext ctx;
  ctx.algebra = a;
  for (std::size_t i = 0; i < d; ++i) ctx.e_action.push_back(alg.mult_matrix(alg.basis(i)).transpose());
  ctx.xi_e = ft * lut;
  ctx.twist = u;
  ctx.twist_inverse = alg.inverse(u);
  ctx.hom_rf_space = hom_rf(alg, f);
  if (ctx.hom_rf_space.dim() != d) throw std::logic_error("duality context: Hom_{rR}(R_f, E) has the wrong dimension");
  for (const auto& v : ctx.hom_rf_space.basis()) ctx.hom_rf_basis.push_back(FpMatrix::unflatten(p, d, d, v));

  ctx.psi = FpMatrix(p, d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto coords = ctx.hom_rf_space.coordinates(canonical_psi(alg, ft, lut * unit_vector(d, k)).flatten());
    if (!coords) throw std::logic_error("duality context: Ψ leaves Hom_{rR}(R_f, E)");
    ctx.psi.set_column(k, *coords);
  }
  const auto inv = inverse(ctx.psi);
  if (!inv) throw std::logic_error("duality context: Ψ is not invertible");
  ctx.psi_inv = *inv;
  return ctx;
}

void require_same_algebra(const DualityContext& ctx, const AlgebraRef& a, const char* who) {
  if (ctx.algebra != a && !(*ctx.algebra == *a)) throw std::invalid_argument(std::string(who) + ": algebra mismatch");
}

FpMatrix e_rho(const DualityContext& ctx, const Vec& r) { return ctx.algebra->mult_matrix(r).transpose(); }

}  // namespace

FpMatrix DualityContext::psi_of(const Vec& z) const {
  const Vec coords = psi * z;
  const std::size_t d = dim();
  FpMatrix out(algebra->p(), d, d);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k]) out = out + hom_rf_basis[k].scaled(coords[k]);
  return out;
}

RightFModule DualityContext::injective_module() const { return RightFModule(algebra, e_action, xi_e); }

DualityContext build_duality_context(AlgebraRef a) {
  DualityContext ctx = make_context(a, a->one());
  for (const auto& c : context_invariants(ctx))
    if (!c.passed) throw std::logic_error("duality context invariant failed: " + c.name + " " + c.detail);
  return ctx;
}

DualityContext duality_context_with_psi(AlgebraRef a, const std::vector<FpMatrix>& psi_images) {
  const FiniteAlgebra& alg = *a;
  const std::size_t d = alg.dim();
  const Elem p = alg.p();
  if (psi_images.size() != d) throw std::invalid_argument("Ψ: expected one image per basis vector of E");
  for (const auto& m : psi_images)
    if (m.rows() != d || m.cols() != d || m.p() != p) throw std::invalid_argument("Ψ: images must be d×d over F_p");

  // Bimodule endomorphisms of E are multiplications by elements of R, so Ψ = Ψ_0 ∘ ρ_E(u).
  const FpMatrix ft = frobenius_matrix(alg).transpose();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < d; ++i) {
    const FpMatrix lt = alg.mult_matrix(alg.basis(i)).transpose();
    Vec col;
    for (std::size_t k = 0; k < d; ++k) {
      const Vec part = canonical_psi(alg, ft, lt * unit_vector(d, k)).flatten();
      col.insert(col.end(), part.begin(), part.end());
    }
    cols.push_back(std::move(col));
  }
  Vec rhs;
  for (const auto& m : psi_images) {
    const Vec part = m.flatten();
    rhs.insert(rhs.end(), part.begin(), part.end());
  }
  const auto u = solve(FpMatrix::from_columns(p, d * d * d, cols), rhs);
  if (!u) throw std::invalid_argument("Ψ: not a right-linear bimodule map _fE → Hom_{rR}(R_f, E)");
  if (!alg.is_unit(*u)) throw std::invalid_argument("Ψ: not an isomorphism");
  DualityContext ctx = make_context(a, *u);
  for (const auto& c : context_invariants(ctx))
    if (!c.passed) throw std::invalid_argument("Ψ: invariant failed: " + c.name + " " + c.detail);
  return ctx;
}

std::vector<InvariantCheck> context_invariants(const DualityContext& ctx) {
  const FiniteAlgebra& a = *ctx.algebra;
  const std::size_t d = a.dim();
  const Elem p = a.p();
  const FpMatrix f = frobenius_matrix(a);
  std::vector<InvariantCheck> out;

  {
    InvariantCheck c{"cogenerator", true, {}};
    // Hom(R/I, E) = {φ : φ·g = 0 for g ∈ I} must be nonzero for every proper ideal I.
    std::vector<Ideal> ideals{zero_ideal(a)};
    if (const auto total = checked_power(p, d, 4096)) {
      for (std::uint64_t i = 1; i < *total; ++i) ideals.push_back(ideal_from_generators(a, {element_from_index(a, i)}));
    } else {
      for (std::size_t i = 0; i < d; ++i) ideals.push_back(ideal_from_generators(a, {a.basis(i)}));
    }
    for (const auto& ideal : ideals) {
      if (ideal.is_unit()) continue;
      std::vector<FpMatrix> blocks;
      for (const auto& g : ideal.space.basis()) blocks.push_back(e_rho(ctx, g));
      const Subspace homs = blocks.empty() ? Subspace::full(p, d) : kernel(stack_rows(p, d, blocks));
      if (homs.is_zero()) {
        c.passed = false;
        c.detail = "Hom(R/I, E) = 0 for I of dimension " + std::to_string(ideal.dim());
        break;
      }
    }
    out.push_back(c);
  }
  {
    const auto rep = validate_module(ctx.injective_module());
    out.push_back({"xi_semilinear", rep.ok, rep.violation});
  }
  {
    InvariantCheck c{"psi_bimodule_iso", true, {}};
    if (!inverse(ctx.psi)) {
      c.passed = false;
      c.detail = "Ψ singular";
    }
    for (std::size_t i = 0; i < d && c.passed; ++i)
      for (std::size_t k = 0; k < d && c.passed; ++k) {
        const Vec z = unit_vector(d, k);
        const FpMatrix pz = ctx.psi_of(z);
        if (!ctx.hom_rf_space.contains(pz.flatten())) {
          c.passed = false;
          c.detail = "Ψ(ε" + std::to_string(k) + ") not right-linear";
        } else if (ctx.psi_of(e_rho(ctx, f.column(i)) * z) != e_rho(ctx, a.basis(i)) * pz) {
          c.passed = false;
          c.detail = "left action, basis element " + std::to_string(i);
        } else if (ctx.psi_of(e_rho(ctx, a.basis(i)) * z) != pz * a.mult_matrix(a.basis(i))) {
          c.passed = false;
          c.detail = "right action, basis element " + std::to_string(i);
        }
      }
    out.push_back(c);
  }
  {
    InvariantCheck c{"consistency", true, {}};
    for (std::size_t k = 0; k < d && c.passed; ++k) {
      const Vec z = unit_vector(d, k);
      if (ctx.xi_e * z != ctx.psi_of(z) * a.one()) {
        c.passed = false;
        c.detail = "zx != Ψ(z)(1) at ε" + std::to_string(k);
      }
    }
    out.push_back(c);
  }
  {
    InvariantCheck c{"nondegeneracy", true, {}};
    FpMatrix xn = ctx.xi_e;
    for (std::size_t n = 1; n <= 2 && c.passed; ++n, xn = ctx.xi_e * xn) {
      std::vector<FpMatrix> blocks;
      for (const auto& r : ctx.e_action) blocks.push_back(xn * r);
      if (!kernel(stack_rows(p, d, blocks)).is_zero()) {
        c.passed = false;
        c.detail = "nonzero z with z r x^" + std::to_string(n) + " = 0 for all r";
      }
    }
    out.push_back(c);
  }
  return out;
}

// --- functors ----------------------------------------------------------------

RightFModule dualize_left(const LeftFModule& h, const DualityContext& ctx) {
  require_same_algebra(ctx, h.algebra(), "dualize_left");
  std::vector<FpMatrix> action;
  for (const auto& r : h.action()) action.push_back(r.transpose());
  return RightFModule(h.algebra(), std::move(action), (h.rho(ctx.twist) * h.x()).transpose());
}

LeftFModule dualize_right(const RightFModule& m, const DualityContext& ctx) {
  require_same_algebra(ctx, m.algebra(), "dualize_right");
  std::vector<FpMatrix> action;
  for (const auto& r : m.action()) action.push_back(r.transpose());
  return LeftFModule(m.algebra(), std::move(action), (m.x() * m.rho(ctx.twist_inverse)).transpose());
}

FpMatrix dual_morphism(const FpMatrix& phi) { return phi.transpose(); }

template <Side S>
Vec as_e_map(const FModule<S>& g, const Vec& lambda, const Vec& v) {
  Vec z(g.action().size());
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = dot(g.p(), lambda, g.action()[k] * v);
  return z;
}

Vec eval_D_general(const DualityContext& ctx, const LeftFModule& h, const Vec& m, const Vec& r, const Vec& hv) {
  require_same_algebra(ctx, h.algebra(), "eval_D_general");
  const Vec z = as_e_map(h, m, h.x() * hv);  // m(α(1⊗h))
  return ctx.psi_of(z) * r;
}

Vec eval_D_fast(const DualityContext& ctx, const LeftFModule& h, const Vec& m, const Vec& r, const Vec& hv) {
  const RightFModule dh = dualize_left(h, ctx);
  return as_e_map(h, dh.x() * (dh.rho(r) * m), hv);
}

Vec eval_Dprime_general(const DualityContext& ctx, const RightFModule& mod, const Vec& r, const Vec& h, const Vec& m) {
  require_same_algebra(ctx, mod.algebra(), "eval_Dprime_general");
  const std::size_t d = ctx.dim();
  FpMatrix inner(mod.p(), d, d);  // r′ ↦ h(β(m ⊗ r′)) = h((m r′)x)
  for (std::size_t j = 0; j < d; ++j) inner.set_column(j, as_e_map(mod, h, mod.x() * (mod.action()[j] * m)));
  const auto coords = ctx.hom_rf_space.coordinates(inner.flatten());
  if (!coords) throw std::logic_error("eval_Dprime_general: inner map is not in Hom_{rR}(R_f, E)");
  return e_rho(ctx, r) * (ctx.psi_inv * *coords);
}

Vec eval_Dprime_fast(const DualityContext& ctx, const RightFModule& mod, const Vec& r, const Vec& h, const Vec& m) {
  const LeftFModule dm = dualize_right(mod, ctx);
  return as_e_map(mod, dm.rho(r) * (dm.x() * h), m);
}

template <Side S>
FpMatrix evaluation_map(const FModule<S>& g, const DualityContext& ctx) {
  const std::size_t n = g.dim();
  const Elem p = g.p();
  const auto& one = ctx.algebra->one();
  const auto dual = [&] {
    if constexpr (S == Side::Left) return dualize_left(g, ctx);
    else return dualize_right(g, ctx);
  }();
  const auto bidual = [&] {
    if constexpr (S == Side::Left) return dualize_right(dual, ctx);
    else return dualize_left(dual, ctx);
  }();

  // ω(g) is the functional m ↦ m(g)(1) on G*; check it against the E-valued map m ↦ m(g).
  FpMatrix w(p, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) w.set(k, j, dot(p, as_e_map(g, unit_vector(n, k), unit_vector(n, j)), one));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Vec direct = as_e_map(g, unit_vector(n, k), unit_vector(n, j));
      const Vec via_bidual = as_e_map(dual, w.column(j), unit_vector(n, k));
      if (direct != via_bidual) throw std::logic_error("evaluation_map: ω(g) is not the evaluation at g");
    }
  if (n > 0 && !inverse(w)) throw std::logic_error("evaluation_map: ω is not invertible");
  if (!is_homomorphism(g, bidual, w)) throw std::logic_error("evaluation_map: ω does not intertwine the structures");
  return w;
}

// --- identities --------------------------------------------------------------

void CheckReport::add(std::string name, std::string anchor, std::string instance, bool passed,
                      std::string counterexample) {
  results.push_back(
      {std::move(name), std::move(anchor), std::move(instance), passed, passed ? std::string{} : std::move(counterexample)});
}

void CheckReport::append(const CheckReport& other) {
  results.insert(results.end(), other.results.begin(), other.results.end());
}

bool CheckReport::all_passed() const { return failures() == 0; }

std::size_t CheckReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.passed ? 0 : 1;
  return n;
}

template <Side S>
std::vector<GradedTwoSidedIdeal> quotient_grann_chains(const FModule<S>& m, std::uint64_t budget) {
  std::set<GradedTwoSidedIdeal> out;
  for (const auto& l : enumerate_submodules(m, budget)) out.insert(grann(quotient_module(m, l)));
  return {out.begin(), out.end()};
}

template <Side S>
std::vector<GradedTwoSidedIdeal> submodule_grann_chains(const FModule<S>& m, std::uint64_t budget) {
  std::set<GradedTwoSidedIdeal> out;
  for (const auto& l : enumerate_submodules(m, budget)) out.insert(grann(restrict_to(m, l).module));
  return {out.begin(), out.end()};
}

namespace {

struct NamedIdeal {
  std::string name;
  GradedTwoSidedIdeal ideal;
};

GradedTwoSidedIdeal random_graded_ideal(const FiniteAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, std::numeric_limits<std::uint64_t>::max());
  const std::uint64_t total = checked_power(a.p(), a.dim(), std::numeric_limits<std::uint64_t>::max() / 2).value_or(1);
  std::vector<Ideal> chain;
  Ideal cur = zero_ideal(a);
  for (int n = 0; n < 3; ++n) {
    cur = ideal_sum(a, cur, ideal_from_generators(a, {element_from_index(a, pick(rng) % total)}));
    chain.push_back(cur);
  }
  return GradedTwoSidedIdeal(a, std::move(chain));
}

std::vector<NamedIdeal> sample_ideals(const FiniteAlgebra& a, const GradedTwoSidedIdeal& own, std::mt19937_64& rng) {
  return {{"0", zero_graded_ideal(a)},
          {"R[x,f]x", graded_ideal_rxft(a, 1)},
          {"R[x,f]x^2", graded_ideal_rxft(a, 2)},
          {"R[x,f]", graded_ideal_rxft(a, 0)},
          {"grann", own},
          {"random", random_graded_ideal(a, rng)}};
}

std::string chains_to_string(const FiniteAlgebra& a, const std::vector<GradedTwoSidedIdeal>& cs) {
  std::string s = "{";
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "; " : "") + cs[i].to_string(a);
  return s + "}";
}

std::string subspace_to_string(const Subspace& s) {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < s.basis().size(); ++i) {
    os << (i ? ", " : "") << '(';
    for (std::size_t k = 0; k < s.basis()[i].size(); ++k) os << (k ? " " : "") << s.basis()[i][k];
    os << ')';
  }
  os << '}';
  return os.str();
}

template <Side S>
std::string module_dump(const FModule<S>& m) {
  std::ostringstream os;
  os << side_name(S) << " module, dim " << m.dim() << ", X =\n" << m.x().to_string();
  return os.str();
}

constexpr const char* kAnchorEquivalence = "D and D' are inverse equivalences";
constexpr const char* kAnchorDoubleDual = "double dual composite is the identity";
constexpr const char* kAnchorGrann = "graded annihilators agree under duality";
constexpr const char* kAnchorKernel = "kernels of dualized inclusions and projections";
constexpr const char* kAnchorDivisible = "x-divisible iff dual is x-torsion-free";
constexpr const char* kAnchorExponent = "dual HSL exponent";
constexpr const char* kAnchorFiniteness = "grann chains of quotients vs submodules of the dual";

void check_left(const std::string& name, const LeftFModule& h, const DualityContext& ctx, std::mt19937_64& rng,
                std::uint64_t budget, CheckReport& rec) {
  const auto& a = *h.algebra();
  const RightFModule dh = dualize_left(h, ctx);

  try {
    const FpMatrix wh = evaluation_map(h, ctx);
    const FpMatrix wdh = evaluation_map(dh, ctx);
    rec.add("omega_iso", kAnchorEquivalence, name, true);
    const FpMatrix composite = dual_morphism(wh) * wdh;
    rec.add("double_dual_identity", kAnchorDoubleDual, name, h.dim() == 0 || composite.is_identity(),
            "D(ω_H)∘ω_D(H) =\n" + composite.to_string());
  } catch (const std::logic_error& e) {
    rec.add("omega_iso", kAnchorEquivalence, name, false, std::string(e.what()) + "\n" + module_dump(h));
  }

  const auto gh = grann_left(h), gdh = grann_right(dh);
  rec.add("grann_duality", kAnchorGrann, name, gh == gdh, "grann(H) = " + gh.to_string(a) + ", grann(D(H)) = " + gdh.to_string(a));

  for (const auto& b : sample_ideals(a, gh, rng)) {
    const FSubmodule ann = ann_graded_ideal(h, b.ideal);
    const FpMatrix incl = ann.space.basis_matrix();
    const Subspace lhs = kernel(dual_morphism(incl));
    const Subspace rhs = module_times_graded_ideal(dh, b.ideal).space;
    rec.add("kernel_of_dual_inclusion", kAnchorKernel, name + ", B = " + b.name, lhs == rhs,
            "ker D(ι) = " + subspace_to_string(lhs) + ", D(H)B = " + subspace_to_string(rhs));
  }

  rec.add("torsion_free_iff_dual_divisible", kAnchorDivisible, name, is_x_torsion_free(h) == is_x_divisible(dh),
          module_dump(h));
  const std::size_t e1 = hsl_exponent_left(h), e2 = xdiv_exponent_right(dh);
  rec.add("exponent_duality", kAnchorExponent, name, e1 == e2,
          "hsl(H) = " + std::to_string(e1) + ", xdiv(D(H)) = " + std::to_string(e2));

  if (checked_power(h.p(), h.dim(), budget)) {
    const auto q = quotient_grann_chains(h, budget);
    const auto s = submodule_grann_chains(dh, budget);
    rec.add("finiteness_correspondence", kAnchorFiniteness, name, q == s,
            "quotients: " + chains_to_string(a, q) + "\nsubmodules of dual: " + chains_to_string(a, s));
  }
}

void check_right(const std::string& name, const RightFModule& m, const DualityContext& ctx, std::mt19937_64& rng,
                 std::uint64_t budget, CheckReport& rec) {
  const auto& a = *m.algebra();
  const LeftFModule dm = dualize_right(m, ctx);

  try {
    const FpMatrix wm = evaluation_map(m, ctx);
    const FpMatrix wdm = evaluation_map(dm, ctx);
    rec.add("omega_iso", kAnchorEquivalence, name, true);
    const FpMatrix composite = dual_morphism(wm) * wdm;
    rec.add("double_dual_identity", kAnchorDoubleDual, name, m.dim() == 0 || composite.is_identity(),
            "D'(ω_M)∘ω_D'(M) =\n" + composite.to_string());
  } catch (const std::logic_error& e) {
    rec.add("omega_iso", kAnchorEquivalence, name, false, std::string(e.what()) + "\n" + module_dump(m));
  }

  const auto gm = grann_right(m), gdm = grann_left(dm);
  rec.add("grann_duality", kAnchorGrann, name, gm == gdm, "grann(M) = " + gm.to_string(a) + ", grann(D'(M)) = " + gdm.to_string(a));

  for (const auto& b : sample_ideals(a, gm, rng)) {
    const FSubmodule mb = module_times_graded_ideal(m, b.ideal);
    const auto q = quotient_with_map(m, mb);
    const Subspace lhs = image(dual_morphism(q.projection));
    const Subspace rhs = ann_graded_ideal(dm, b.ideal).space;
    rec.add("annihilator_is_dual_of_quotient", kAnchorKernel, name + ", B = " + b.name, lhs == rhs,
            "D'(M/MB) = " + subspace_to_string(lhs) + ", ann B = " + subspace_to_string(rhs));
  }

  rec.add("divisible_iff_dual_torsion_free", kAnchorDivisible, name, is_x_divisible(m) == is_x_torsion_free(dm),
          module_dump(m));
  const std::size_t e1 = xdiv_exponent_right(m), e2 = hsl_exponent_left(dm);
  rec.add("exponent_duality", kAnchorExponent, name, e1 == e2,
          "xdiv(M) = " + std::to_string(e1) + ", hsl(D'(M)) = " + std::to_string(e2));

  if (checked_power(m.p(), m.dim(), budget)) {
    const auto q = quotient_grann_chains(m, budget);
    const auto s = submodule_grann_chains(dm, budget);
    rec.add("finiteness_correspondence", kAnchorFiniteness, name, q == s,
            "quotients: " + chains_to_string(a, q) + "\nsubmodules of dual: " + chains_to_string(a, s));
  }
}

}  // namespace

CheckReport check_duality_identities(const std::vector<NamedModule>& samples, const DualityContext& ctx,
                                       std::uint64_t seed, std::uint64_t budget) {
  CheckReport report;
  CheckReport& rec = report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (i + 1));
    const auto& s = samples[i];
    if (const auto* h = std::get_if<LeftFModule>(&s.module)) {
      check_left(s.name, *h, ctx, rng, budget, rec);
    } else {
      check_right(s.name, std::get<RightFModule>(s.module), ctx, rng, budget, rec);
    }
  }
  return report;
}

template Vec as_e_map(const LeftFModule&, const Vec&, const Vec&);
template Vec as_e_map(const RightFModule&, const Vec&, const Vec&);
template FpMatrix evaluation_map(const LeftFModule&, const DualityContext&);
template FpMatrix evaluation_map(const RightFModule&, const DualityContext&);
template std::vector<GradedTwoSidedIdeal> quotient_grann_chains(const LeftFModule&, std::uint64_t);
template std::vector<GradedTwoSidedIdeal> quotient_grann_chains(const RightFModule&, std::uint64_t);
template std::vector<GradedTwoSidedIdeal> submodule_grann_chains(const LeftFModule&, std::uint64_t);
template std::vector<GradedTwoSidedIdeal> submodule_grann_chains(const RightFModule&, std::uint64_t);

}  // namespace froblab
