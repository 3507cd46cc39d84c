#include "froblab/suites.hpp"

#include <map>
#include <set>
#include <sstream>

namespace froblab {

namespace {

constexpr std::uint64_t kExhaustiveCap = 4096;

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << ')';
  return os.str();
}

Vec random_vec(Elem p, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> coeff(0, p - 1);
  Vec v(n);
  for (auto& e : v) e = coeff(rng);
  return v;
}

/// Elements to quantify over: all of them when few, otherwise a fixed stride sample.
std::vector<Vec> element_sample(const FiniteAlgebra& a) {
  std::vector<Vec> out;
  if (const auto total = checked_power(a.p(), a.dim(), kExhaustiveCap)) {
    for (std::uint64_t i = 0; i < *total; ++i) out.push_back(element_from_index(a, i));
    return out;
  }
  std::mt19937_64 rng(a.dim() * 1000003ULL + a.p());
  for (int i = 0; i < 64; ++i) out.push_back(random_element(a, rng));
  return out;
}

/// {r : ρ(r) X^n = 0} (left) or {r : X^n ρ(r) = 0} (right), by brute force when small.
template <Side S>
Subspace annihilator_component(const FModule<S>& m, std::size_t n) {
  const auto& a = *m.algebra();
  const FpMatrix xn = m.x().pow(n);
  auto kills = [&](const Vec& r) {
    const FpMatrix rr = m.rho(r);
    return (S == Side::Left ? rr * xn : xn * rr).is_zero();
  };
  if (const auto total = checked_power(a.p(), a.dim(), kExhaustiveCap)) {
    std::vector<Vec> members;
    for (std::uint64_t i = 0; i < *total; ++i) {
      Vec r = element_from_index(a, i);
      if (kills(r)) members.push_back(std::move(r));
    }
    return Subspace::span(a.p(), a.dim(), members);
  }
  std::vector<Vec> cols;
  for (const auto& r : m.action()) cols.push_back((S == Side::Left ? r * xn : xn * r).flatten());
  return kernel(FpMatrix::from_columns(a.p(), m.dim() * m.dim(), cols));
}

}  // namespace

void check_hsl(const std::string& name, const LeftFModule& h, CheckReport& report) {
  const char* anchor = "HSL exponent";
  const std::size_t e = hsl_exponent_left(h);
  const std::size_t n = h.dim();
  const FpMatrix& x = h.x();
  const Subspace ke = kernel(x.pow(e));
  const bool stable = ke == kernel(x.pow(e + 1)) && ke == kernel(x.pow(n + 1));
  report.add("hsl_kernel_chain_stable", anchor, name, stable, "e = " + std::to_string(e));

  if (const auto total = checked_power(h.p(), n, kExhaustiveCap)) {
    std::size_t worst = 0;
    bool all_killed = true;
    for (std::uint64_t i = 0; i < *total; ++i) {
      Vec v = vector_from_index(h.p(), n, i);
      std::size_t order = 0;
      while (order <= n && !vec_is_zero(v)) {
        v = x * v;
        ++order;
      }
      if (order > n) continue;  // not x-torsion
      worst = std::max(worst, order);
      all_killed = all_killed && order <= e;
    }
    report.add("hsl_exponent_exhaustive", anchor, name, all_killed && worst == e,
               "e = " + std::to_string(e) + ", largest torsion order = " + std::to_string(worst));
  }
}

template <Side S>
void check_grann(const std::string& name, const FModule<S>& m, CheckReport& report) {
  const char* anchor = "graded annihilator";
  const auto& a = *m.algebra();
  const GradedTwoSidedIdeal g = grann(m);
  report.add("grann_graded_two_sided", anchor, name, is_graded_two_sided(a, g.chain()), g.to_string(a));
  bool exact = true;
  std::string detail;
  for (std::size_t n = 0; n <= g.stable_from() + 2 && exact; ++n) {
    const Subspace direct = annihilator_component(m, n);
    if (direct != g.component(n).space) {
      exact = false;
      detail = "component " + std::to_string(n) + " differs from the direct annihilator";
    }
  }
  report.add("grann_exact_and_stable", anchor, name, exact, detail + " " + g.to_string(a));
}

void check_stabilization(const std::string& name, const RightFModule& m, CheckReport& report) {
  const char* anchor = "general stabilization";
  const StabilizationPipeline pipe = stabilization_pipeline(m);
  const std::size_t e = xdiv_exponent_right(m);
  const std::size_t n = m.dim();
  bool constant = true;
  const std::size_t r = rank(m.x().pow(e));
  for (std::size_t j = 1; j <= n + 1 && constant; ++j) constant = rank(m.x().pow(e + j)) == r;
  std::ostringstream os;
  os << "steps:";
  for (const auto& s : pipe.steps) os << ' ' << s.kind << "(killed " << s.killed_dim << ", l " << s.ell << ')';
  os << "; final dim " << pipe.final_dim << "; bound " << pipe.exponent_bound << "; direct e " << e;
  report.add("pipeline_terminates", anchor, name, pipe.final_dim == 0, os.str());
  report.add("pipeline_bound_dominates", anchor, name, e <= pipe.exponent_bound && constant, os.str());

  const RightFModule sig = sigma_reduction(m);
  const RightFModule gam = gamma_reduction(m);
  report.add("sigma_kills_x_infinity", anchor, name, x_infinity_image(sig).space.is_zero(), os.str());
  report.add("gamma_kills_rx_torsion", anchor, name, rx_annihilator_chain(gam).limit().is_zero(), os.str());
}

std::size_t check_s_squared(const std::string& name, const RightFModule& m, CheckReport& report) {
  const auto& a = *m.algebra();
  const Subspace mx = image(m.x());
  std::size_t applicable = 0;
  bool ok = true;
  std::string detail;
  for (const auto& s : element_sample(a)) {
    if (!mx.contains(image(m.rho(s)))) continue;
    ++applicable;
    const Subspace ms2 = image(m.rho(a.mul(s, s)));
    FpMatrix xk = m.x();
    for (std::size_t k = 1; k <= m.dim() + 1 && ok; ++k, xk = m.x() * xk)
      if (!image(xk).contains(ms2)) {
        ok = false;
        detail = "s = " + a.format(s) + ", k = " + std::to_string(k);
      }
    if (!ok) break;
  }
  report.add("s_squared_in_image_powers", "Ms ⊆ Mx implies Ms^2 ⊆ Mx^k", name, ok,
             detail + " (" + std::to_string(applicable) + " applicable elements)");
  return applicable;
}

std::size_t check_localization(const std::string& name, const RightFModule& m, CheckReport& report) {
  const char* anchor = "localization commutes with x-powers";
  const auto& a = *m.algebra();
  const LocalDecomposition dec = local_components(a);
  const Elem p = a.p();
  for (std::size_t c = 0; c < dec.idempotents.size(); ++c) {
    const std::string inst = name + ", component " + std::to_string(c);
    const LocalizedModule loc = localize_right_module(m, dec, c);
    const FpMatrix& j = loc.inclusion;
    const Vec& e = loc.idempotent;
    const FiniteAlgebra& comp = *dec.components[c];
    const FpMatrix& incl = dec.inclusions[c];

    const auto rep = validate_module(loc.module);
    report.add("localized_module_valid", anchor, inst, rep.ok, rep.violation);

    bool compatible = m.x() * j == j * loc.module.x();
    for (std::size_t b = 0; b < incl.cols() && compatible; ++b)
      compatible = m.rho(incl.column(b)) * j == j * loc.module.action()[b];
    report.add("localized_structure_restricts", anchor, inst, compatible);

    bool images = true;
    std::string detail;
    FpMatrix xk = FpMatrix::identity(p, m.dim());
    FpMatrix xlk = FpMatrix::identity(p, loc.module.dim());
    const FpMatrix re = m.rho(e);
    for (std::size_t k = 0; k <= m.dim() + 1 && images; ++k, xk = m.x() * xk, xlk = loc.module.x() * xlk) {
      const Subspace lhs = image(re * xk);
      const Subspace rhs = loc.module.dim() == 0 ? Subspace(p, m.dim()) : image_of(j, image(xlk));
      if (lhs != rhs) {
        images = false;
        detail = "k = " + std::to_string(k);
      }
    }
    report.add("localization_of_image_powers", anchor, inst, images, detail);

    // (m/s)x^k = (m s^{p^k - 1} x^k)/s, with m/s represented by ρ(t e) m for t = (es)^{-1} in eR.
    bool fraction = true;
    std::size_t tested = 0;
    for (const auto& s : element_sample(a)) {
      const auto es = solve(incl, a.mul(e, s));
      if (!es || !comp.is_unit(*es)) continue;
      ++tested;
      const Vec t = incl * comp.inverse(*es);
      const FpMatrix rte = m.rho(a.mul(t, e));
      std::uint64_t pk = 1;
      FpMatrix xk2 = FpMatrix::identity(p, m.dim());
      for (std::size_t k = 1; k <= 2 && fraction; ++k) {
        pk *= p;
        xk2 = m.x() * xk2;
        if (xk2 * rte != rte * xk2 * m.rho(a.pow(s, pk - 1))) {
          fraction = false;
          detail = "s = " + a.format(s) + ", k = " + std::to_string(k);
        }
      }
      if (!fraction) break;
    }
    report.add("fraction_formula", anchor, inst, fraction, detail + " (" + std::to_string(tested) + " denominators)");
  }
  return dec.idempotents.size();
}

std::size_t check_rank_one(const std::string& name, const AlgebraRef& a, CheckReport& report) {
  const char* anchor = "rank-one classification";
  const auto total = checked_power(a->p(), a->dim(), kExhaustiveCap);
  if (!total) throw EnumerationBoundError("check_rank_one: algebra too large");
  std::vector<Vec> units;
  for (std::uint64_t i = 0; i < *total; ++i)
    if (Vec u = element_from_index(*a, i); a->is_unit(u)) units.push_back(std::move(u));
  std::set<Vec> roots;  // (p-1)th powers of units
  for (const auto& u : units) roots.insert(a->pow(u, a->p() - 1));

  std::size_t comparisons = 0;
  bool agree = true;
  std::string detail;
  auto compare = [&](const Vec& c1, const Vec& c2, bool expected) {
    ++comparisons;
    const RankOneIso got = rank_one_iso(a, c1, c2);
    bool ok = got.isomorphic == expected;
    if (ok && got.witness) {
      const FpMatrix f = frobenius_matrix(*a);
      const FpMatrix lu = a->mult_matrix(*got.witness);
      ok = a->is_unit(*got.witness) && lu * a->mult_matrix(c1) * f == a->mult_matrix(c2) * f * lu;
    }
    if (!ok && agree) {
      agree = false;
      detail = "c1 = " + a->format(c1) + ", c2 = " + a->format(c2) + ", expected " + (expected ? "iso" : "non-iso");
    }
  };
  for (std::uint64_t i = 0; i < *total; ++i) {
    const Vec c = element_from_index(*a, i);
    compare(a->one(), c, a->is_unit(c) && roots.count(c) > 0);
  }
  for (const auto& c1 : units)
    for (const auto& c2 : units) compare(c1, c2, roots.count(a->mul(c1, a->inverse(c2))) > 0);
  report.add("rank_one_iso_criterion", anchor, name, agree, detail);
  return comparisons;
}

void check_frobenius_closure(const std::string& name, const FiniteAlgebra& a, const Ideal& ideal, CheckReport& report) {
  const char* anchor = "Frobenius closure";
  const FrobeniusClosure fc = frobenius_closure(a, ideal);
  std::string inst = name + ", a = (";
  for (std::size_t k = 0; k < ideal.space.basis().size(); ++k) inst += (k ? ", " : "") + a.format(ideal.space.basis()[k]);
  inst += ")";
  report.add("closure_contains_ideal", anchor, inst, fc.closure.space.contains(ideal.space));
  report.add("closure_idempotent", anchor, inst, frobenius_closure(a, fc.closure).closure == fc.closure);

  std::size_t log_q = 0;
  for (std::uint64_t q = fc.q; q > 1; q /= a.p()) ++log_q;
  bool witness = frobenius_power(a, fc.closure, log_q) == frobenius_power(a, ideal, log_q);
  if (log_q > 0) witness = witness && !(frobenius_power(a, fc.closure, log_q - 1) == frobenius_power(a, ideal, log_q - 1));
  report.add("q_least_with_witness", anchor, inst, witness, "Q = " + std::to_string(fc.q));

  if (const auto total = checked_power(a.p(), a.dim(), kExhaustiveCap)) {
    const std::size_t horizon = fc.chain.size() + a.dim() + 1;
    std::vector<Ideal> brackets;
    for (std::size_t n = 0; n <= horizon; ++n) brackets.push_back(frobenius_power(a, ideal, n));
    std::vector<Vec> members;
    for (std::uint64_t i = 0; i < *total; ++i) {
      Vec r = element_from_index(a, i);
      Vec power = r;
      for (std::size_t n = 0; n <= horizon; ++n, power = a.pow(power, a.p()))
        if (brackets[n].contains(power)) {
          members.push_back(r);
          break;
        }
    }
    const Subspace oracle = Subspace::span(a.p(), a.dim(), members);
    report.add("closure_matches_elementwise_oracle", anchor, inst,
               oracle == fc.closure.space && members.size() == checked_power(a.p(), oracle.dim(), *total),
               "oracle dim " + std::to_string(oracle.dim()) + ", computed dim " + std::to_string(fc.closure.dim()));
  }
}

void check_context(const std::string& name, const DualityContext& ctx, CheckReport& report) {
  for (const auto& c : context_invariants(ctx))
    report.add("context_" + c.name, "bimodule isomorphism for the injective cogenerator", name, c.passed, c.detail);
}

template <Side S>
void check_functoriality(const std::string& name, const FModule<S>& m, const DualityContext& ctx,
                         std::mt19937_64& rng, CheckReport& report) {
  const FModule<S> other = random_module<S>(m.algebra(), rng, 4);
  const FpMatrix psi = random_homomorphism(m, m, rng);
  const FpMatrix phi = random_homomorphism(m, other, rng);
  const auto dm = dualize(m, ctx);
  const auto dother = dualize(other, ctx);
  const bool hom = is_homomorphism(dother, dm, dual_morphism(phi)) && is_homomorphism(dm, dm, dual_morphism(psi));
  const bool contravariant = dual_morphism(phi * psi) == dual_morphism(psi) * dual_morphism(phi);
  report.add("dual_of_homomorphism", "functoriality", name, hom && contravariant, "φ =\n" + phi.to_string());
}

template <Side S>
std::size_t check_evaluators(const std::string& name, const FModule<S>& m, const DualityContext& ctx,
                             std::mt19937_64& rng, std::size_t count, CheckReport& report) {
  const auto& a = *m.algebra();
  const std::size_t n = m.dim();
  std::size_t compared = 0;
  bool ok = true;
  std::string detail;
  auto one_tuple = [&](const Vec& dual_vec, const Vec& r, const Vec& v) {
    ++compared;
    try {
      Vec general, fast;
      if constexpr (S == Side::Left) {
        general = eval_D_general(ctx, m, dual_vec, r, v);
        fast = eval_D_fast(ctx, m, dual_vec, r, v);
      } else {
        general = eval_Dprime_general(ctx, m, r, dual_vec, v);
        fast = eval_Dprime_fast(ctx, m, r, dual_vec, v);
      }
      if (general != fast && ok) {
        ok = false;
        detail = "dual " + vec_str(dual_vec) + ", r = " + a.format(r) + ", v = " + vec_str(v) + ": general " +
                 vec_str(general) + " vs fast " + vec_str(fast);
      }
    } catch (const std::logic_error& e) {
      if (ok) detail = e.what();
      ok = false;
    }
  };
  for (std::size_t i = 0; i < count; ++i) {
    const Vec dual_vec = random_vec(a.p(), n, rng);
    const Vec v = random_vec(a.p(), n, rng);
    one_tuple(dual_vec, i == 0 ? a.one() : random_element(a, rng), v);
  }
  one_tuple(Vec(n, 0), random_element(a, rng), random_vec(a.p(), n, rng));
  report.add(S == Side::Left ? "eval_D_literal_matches_transpose" : "eval_Dprime_literal_matches_transpose",
             "literal duality formulas", name, ok, detail);
  return compared;
}

CheckReport run_all_suites(const std::vector<NamedAlgebra>& algebras, const std::vector<NamedModule>& modules,
                           const SuiteOptions& options) {
  CheckReport report;
  std::map<const FiniteAlgebra*, DualityContext> contexts;
  auto context_for = [&](const AlgebraRef& a) -> const DualityContext& {
    auto it = contexts.find(a.get());
    if (it == contexts.end()) it = contexts.emplace(a.get(), build_duality_context(a)).first;
    return it->second;
  };

  std::vector<NamedModule> all = modules;
  for (std::size_t ai = 0; ai < algebras.size(); ++ai) {
    const auto& [aname, a] = algebras[ai];
    std::mt19937_64 rng(options.seed * 0x100000001b3ULL + ai);
    try {
      check_context(aname, context_for(a), report);
    } catch (const std::logic_error& e) {
      report.add("context_build", "bimodule isomorphism for the injective cogenerator", aname, false, e.what());
      continue;
    }
    if (checked_power(a->p(), a->dim(), 256)) check_rank_one(aname, a, report);
    check_frobenius_closure(aname, *a, zero_ideal(*a), report);
    check_frobenius_closure(aname, *a, unit_ideal(*a), report);
    for (int k = 0; k < 3; ++k) check_frobenius_closure(aname, *a, random_ideal(*a, rng), report);
    for (std::size_t k = 0; k < options.random_per_algebra; ++k) {
      all.push_back({aname + "/random-left-" + std::to_string(k), random_module<Side::Left>(a, rng, options.max_module_dim)});
      all.push_back({aname + "/random-right-" + std::to_string(k), random_module<Side::Right>(a, rng, options.max_module_dim)});
    }
  }

  std::map<const FiniteAlgebra*, std::vector<NamedModule>> by_algebra;
  std::vector<const FiniteAlgebra*> order;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& nm = all[i];
    std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
    try {
      std::visit(
          [&](const auto& m) {
            const auto& ctx = context_for(m.algebra());
            check_grann(nm.name, m, report);
            if constexpr (std::decay_t<decltype(m)>::side == Side::Left) {
              check_hsl(nm.name, m, report);
            } else {
              check_stabilization(nm.name, m, report);
              check_s_squared(nm.name, m, report);
              check_localization(nm.name, m, report);
            }
            check_functoriality(nm.name, m, ctx, rng, report);
            check_evaluators(nm.name, m, ctx, rng, 8, report);
            if (!by_algebra.count(m.algebra().get())) order.push_back(m.algebra().get());
            by_algebra[m.algebra().get()].push_back(nm);
          },
          nm.module);
    } catch (const std::exception& e) {
      report.add("suite_error", "instance could not be checked", nm.name, false, e.what());
    }
  }
  for (const auto* key : order)
    report.append(check_duality_identities(by_algebra[key], contexts.at(key), options.seed, options.enumeration_budget));
  return report;
}

template void check_grann(const std::string&, const LeftFModule&, CheckReport&);
template void check_grann(const std::string&, const RightFModule&, CheckReport&);
template void check_functoriality(const std::string&, const LeftFModule&, const DualityContext&, std::mt19937_64&,
                                  CheckReport&);
template void check_functoriality(const std::string&, const RightFModule&, const DualityContext&, std::mt19937_64&,
                                  CheckReport&);
template std::size_t check_evaluators(const std::string&, const LeftFModule&, const DualityContext&, std::mt19937_64&,
                                      std::size_t, CheckReport&);
template std::size_t check_evaluators(const std::string&, const RightFModule&, const DualityContext&,
                                      std::mt19937_64&, std::size_t, CheckReport&);

}  // namespace froblab
