#include "froblab/fmodule.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace froblab {

namespace {

std::string idx(std::initializer_list<std::size_t> is) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto i : is) {
    if (!first) os << ',';
    os << i + 1;
    first = false;
  }
  os << ')';
  return os.str();
}

/// Least e with rank X^e = rank X^{e+1}; kernels and images both stabilize there.
std::size_t rank_stabilization_index(const FpMatrix& x) {
  const std::size_t n = x.rows();
  FpMatrix xk = FpMatrix::identity(x.p(), n);
  std::size_t r = n;
  for (std::size_t k = 0;; ++k) {
    xk = x * xk;
    const std::size_t next = rank(xk);
    if (next == r) return k;
    r = next;
  }
}

/// Matrix of A restricted to the A-stable subspace W, in the canonical basis of W.
FpMatrix restrict_matrix(const FpMatrix& a, const Subspace& w) {
  FpMatrix out(a.p(), w.dim(), w.dim());
  for (std::size_t l = 0; l < w.dim(); ++l) {
    auto c = w.coordinates(a * w.basis()[l]);
    if (!c) throw std::logic_error("restrict_matrix: subspace is not stable");
    out.set_column(l, *c);
  }
  return out;
}

FpMatrix stack_rows(Elem p, std::size_t cols, const std::vector<FpMatrix>& blocks) {
  std::vector<Vec> rows;
  for (const auto& b : blocks)
    for (std::size_t r = 0; r < b.rows(); ++r) rows.push_back(b.row(r));
  return FpMatrix::from_rows(p, cols, rows);
}

/// Largest subspace of `s` mapped into itself by `x`.
Subspace largest_stable_subspace(const FpMatrix& x, Subspace s) {
  while (true) {
    Subspace next = subspace_intersect(s, preimage(x, s));
    if (next == s) return s;
    s = std::move(next);
  }
}

}  // namespace

// --- FModule ----------------------------------------------------------------

template <Side S>
FModule<S>::FModule(AlgebraRef algebra, std::vector<FpMatrix> action, FpMatrix x)
    : algebra_(std::move(algebra)), action_(std::move(action)), x_(std::move(x)) {
  if (!algebra_) throw std::invalid_argument("FModule: null algebra");
}

template <Side S>
FModule<S> FModule<S>::zero(AlgebraRef algebra) {
  const Elem p = algebra->p();
  std::vector<FpMatrix> action(algebra->dim(), FpMatrix(p, 0, 0));
  return FModule(std::move(algebra), std::move(action), FpMatrix(p, 0, 0));
}

template <Side S>
FpMatrix FModule<S>::rho(const Vec& r) const {
  if (r.size() != action_.size()) throw DimensionError("FModule::rho: element length mismatch");
  FpMatrix out(p(), dim(), dim());
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] % p()) out = out + action_[i].scaled(r[i] % p());
  return out;
}

template <Side S>
ValidationReport validate_module(const FModule<S>& m) {
  const auto& a = *m.algebra();
  const std::size_t n = m.dim();
  if (m.x().cols() != n || m.x().p() != a.p()) return ValidationReport::fail("shape(x)");
  if (m.action().size() != a.dim()) return ValidationReport::fail("shape(action)");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& r = m.action()[i];
    if (r.rows() != n || r.cols() != n || r.p() != a.p()) return ValidationReport::fail("shape" + idx({i}));
  }
  if (!m.rho(a.one()).is_identity() && n > 0) return ValidationReport::fail("unit");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (m.action()[i] * m.action()[j] != m.rho(a.table()[i][j]))
        return ValidationReport::fail("multiplicativity" + idx({i, j}));
  const FpMatrix f = frobenius_matrix(a);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const FpMatrix& ri = m.action()[i];
    const FpMatrix rfi = m.rho(f.column(i));
    const bool ok = S == Side::Left ? m.x() * ri == rfi * m.x() : m.x() * rfi == ri * m.x();
    if (!ok) return ValidationReport::fail("semilinearity" + idx({i}));
  }
  return ValidationReport::pass();
}

// --- construction -----------------------------------------------------------

template <Side S>
FModule<S> regular_module(AlgebraRef a, FpMatrix x) {
  std::vector<FpMatrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i) action.push_back(a->mult_matrix(a->basis(i)));
  return FModule<S>(std::move(a), std::move(action), std::move(x));
}

LeftFModule twist_c(AlgebraRef a, const Vec& c) {
  FpMatrix x = a->mult_matrix(c) * frobenius_matrix(*a);
  return regular_module<Side::Left>(std::move(a), std::move(x));
}

LeftFModule natural_module(AlgebraRef a) { return twist_c(a, a->one()); }

RankOneIso rank_one_iso(AlgebraRef a, const Vec& c1, const Vec& c2, std::uint64_t bound) {
  const auto count = checked_power(a->p(), a->dim(), bound);
  if (!count) throw EnumerationBoundError("rank_one_iso: p^d exceeds the enumeration bound");
  const FpMatrix f = frobenius_matrix(*a);
  const FpMatrix x1 = a->mult_matrix(c1) * f;
  const FpMatrix x2 = a->mult_matrix(c2) * f;
  auto works = [&](const Vec& u) {
    const FpMatrix lu = a->mult_matrix(u);
    return lu * x1 == x2 * lu;
  };
  if (works(a->one())) return {true, a->one()};
  for (std::uint64_t i = 1; i < *count; ++i) {
    Vec u = element_from_index(*a, i);
    if (u == a->one() || !a->is_unit(u)) continue;
    if (works(u)) return {true, u};
  }
  return {false, std::nullopt};
}

CartierResult cartier_from_splitting(AlgebraRef a) {
  const std::size_t d = a->dim();
  const Elem p = a->p();
  const FpMatrix f = frobenius_matrix(*a);
  if (rank(f) < d) return {std::nullopt, "not reduced"};

  // Unknown π as a flattened d×d matrix:
  //   π F = F,  π L(F e_j) = L(F e_j) π,  im π ⊆ im F.
  const FpMatrix id = FpMatrix::identity(p, d);
  std::vector<FpMatrix> blocks{kron_operator(id, f)};
  Vec rhs = f.flatten();
  for (std::size_t j = 0; j < d; ++j) {
    const FpMatrix l = a->mult_matrix(f.column(j));
    blocks.push_back(kron_operator(id, l) - kron_operator(l, id));
    rhs.resize(rhs.size() + d * d, 0);
  }
  const Subspace outside = image(f).perp();
  if (!outside.is_zero()) {
    const FpMatrix q = FpMatrix::from_rows(p, d, outside.basis());
    blocks.push_back(kron_operator(q, id));
    rhs.resize(rhs.size() + q.rows() * d, 0);
  }
  const auto pi_flat = solve(stack_rows(p, d * d, blocks), rhs);
  if (!pi_flat) return {std::nullopt, "no im(F)-linear splitting"};
  const FpMatrix pi = FpMatrix::unflatten(p, d, d, *pi_flat);

  FpMatrix x(p, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto y = solve(f, pi.column(i));
    if (!y) return {std::nullopt, "splitting leaves im(F)"};
    x.set_column(i, *y);
  }
  RightFModule m = regular_module<Side::Right>(a, std::move(x));
  if (auto rep = validate_module(m); !rep) return {std::nullopt, "induced x is not semilinear: " + rep.violation};
  return {std::move(m), {}};
}

template <Side S>
FModule<S> direct_sum(const FModule<S>& a, const FModule<S>& b) {
  std::vector<FpMatrix> action;
  for (std::size_t i = 0; i < a.action().size(); ++i) action.push_back(block_diagonal(a.action()[i], b.action()[i]));
  return FModule<S>(a.algebra(), std::move(action), block_diagonal(a.x(), b.x()));
}

template <Side S>
FModule<S> change_basis(const FModule<S>& m, const FpMatrix& p) {
  const auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("change_basis: matrix is singular");
  std::vector<FpMatrix> action;
  for (const auto& r : m.action()) action.push_back(p * r * *pinv);
  return FModule<S>(m.algebra(), std::move(action), p * m.x() * *pinv);
}

// --- x-action ---------------------------------------------------------------

template <Side S>
Vec apply_x(const FModule<S>& m, const Vec& v) {
  return m.x() * v;
}

template <Side S>
Vec apply_x_power(const FModule<S>& m, const Vec& v, std::size_t k) {
  Vec out = v;
  for (std::size_t i = 0; i < k; ++i) out = m.x() * out;
  return out;
}

std::size_t hsl_exponent_left(const LeftFModule& h) { return rank_stabilization_index(h.x()); }
std::size_t xdiv_exponent_right(const RightFModule& m) { return rank_stabilization_index(m.x()); }

FSubmodule x_torsion(const LeftFModule& h) { return {kernel(h.x().pow(hsl_exponent_left(h)))}; }
bool is_x_torsion_free(const LeftFModule& h) { return kernel(h.x()).is_zero(); }
bool is_x_divisible(const RightFModule& m) { return image(m.x()).is_full(); }

// --- graded annihilators ----------------------------------------------------

namespace {

/// b_n = {r : ρ(r) X^n = 0} (left) or {r : X^n ρ(r) = 0} (right).
template <Side S>
GradedTwoSidedIdeal graded_annihilator(const FModule<S>& m) {
  const auto& a = *m.algebra();
  const std::size_t e = rank_stabilization_index(m.x());
  std::vector<Ideal> chain;
  FpMatrix xn = FpMatrix::identity(a.p(), m.dim());
  for (std::size_t n = 0; n <= e; ++n, xn = m.x() * xn) {
    std::vector<Vec> cols;
    for (const auto& r : m.action()) cols.push_back((S == Side::Left ? r * xn : xn * r).flatten());
    const Subspace b = kernel(FpMatrix::from_columns(a.p(), m.dim() * m.dim(), cols));
    chain.push_back(ideal_from_space(a, b));
  }
  return GradedTwoSidedIdeal(a, std::move(chain));
}

}  // namespace

GradedTwoSidedIdeal grann_left(const LeftFModule& h) { return graded_annihilator(h); }
GradedTwoSidedIdeal grann_right(const RightFModule& m) { return graded_annihilator(m); }

template <Side S>
GradedTwoSidedIdeal grann(const FModule<S>& m) {
  return graded_annihilator(m);
}

FSubmodule module_times_graded_ideal(const RightFModule& m, const GradedTwoSidedIdeal& b) {
  std::vector<Vec> gens;
  FpMatrix xn = FpMatrix::identity(m.p(), m.dim());
  for (std::size_t n = 0; n <= b.stable_from(); ++n, xn = m.x() * xn)
    for (const auto& r : b.component(n).space.basis()) {
      const FpMatrix t = xn * m.rho(r);
      for (std::size_t j = 0; j < m.dim(); ++j) gens.push_back(t.column(j));
    }
  return submodule_generated(m, gens);
}

FSubmodule ann_graded_ideal(const LeftFModule& h, const GradedTwoSidedIdeal& b) {
  Subspace a = Subspace::full(h.p(), h.dim());
  FpMatrix xn = FpMatrix::identity(h.p(), h.dim());
  for (std::size_t n = 0; n <= b.stable_from(); ++n, xn = h.x() * xn)
    for (const auto& r : b.component(n).space.basis()) a = subspace_intersect(a, kernel(h.rho(r) * xn));
  Subspace s = largest_stable_subspace(h.x(), std::move(a));
  if (!is_submodule(h, s)) throw std::logic_error("ann_graded_ideal: result is not a submodule");
  return {std::move(s)};
}

// --- submodules and quotients -----------------------------------------------

template <Side S>
bool is_submodule(const FModule<S>& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) return false;
  for (const auto& v : s.basis()) {
    if (!s.contains(m.x() * v)) return false;
    for (const auto& r : m.action())
      if (!s.contains(r * v)) return false;
  }
  return true;
}

template <Side S>
FSubmodule submodule_generated(const FModule<S>& m, const std::vector<Vec>& vectors) {
  Subspace s = Subspace::span(m.p(), m.dim(), vectors);
  while (true) {
    std::vector<Vec> more = s.basis();
    for (const auto& v : s.basis()) {
      more.push_back(m.x() * v);
      for (const auto& r : m.action()) more.push_back(r * v);
    }
    Subspace next = Subspace::span(m.p(), m.dim(), more);
    if (next.dim() == s.dim()) return {std::move(s)};
    s = std::move(next);
  }
}

template <Side S>
Quotient<S> quotient_with_map(const FModule<S>& m, const FSubmodule& sub) {
  if (!is_submodule(m, sub.space)) throw std::invalid_argument("quotient: subspace is not a submodule");
  const Elem p = m.p();
  const std::size_t n = m.dim();
  const std::size_t k = n - sub.dim();
  const auto reps = quotient_basis(Subspace::full(p, n), sub.space);
  std::vector<Vec> cols = sub.space.basis();
  cols.insert(cols.end(), reps.begin(), reps.end());
  const auto binv = inverse(FpMatrix::from_columns(p, n, cols));
  if (!binv) throw std::logic_error("quotient: basis completion failed");
  FpMatrix proj(p, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) proj.set(i, j, (*binv)(sub.dim() + i, j));
  const FpMatrix lift = FpMatrix::from_columns(p, n, reps);
  std::vector<FpMatrix> action;
  for (const auto& r : m.action()) action.push_back(proj * r * lift);
  if (k == 0) {
    return {FModule<S>::zero(m.algebra()), proj};
  }
  return {FModule<S>(m.algebra(), std::move(action), proj * m.x() * lift), proj};
}

template <Side S>
FModule<S> quotient_module(const FModule<S>& m, const FSubmodule& sub) {
  return quotient_with_map(m, sub).module;
}

template <Side S>
Restriction<S> restrict_to(const FModule<S>& m, const FSubmodule& sub) {
  if (!is_submodule(m, sub.space)) throw std::invalid_argument("restrict_to: subspace is not a submodule");
  std::vector<FpMatrix> action;
  for (const auto& r : m.action()) action.push_back(restrict_matrix(r, sub.space));
  return {FModule<S>(m.algebra(), std::move(action), restrict_matrix(m.x(), sub.space)), sub.space.basis_matrix()};
}

template <Side S>
std::vector<FSubmodule> enumerate_submodules(const FModule<S>& m, std::uint64_t budget) {
  const auto count = checked_power(m.p(), m.dim(), budget);
  if (!count) throw EnumerationBoundError("enumerate_submodules: p^n exceeds the enumeration bound");
  std::set<Subspace> found;
  std::deque<Subspace> queue;
  const Subspace zero(m.p(), m.dim());
  found.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    const Subspace s = std::move(queue.front());
    queue.pop_front();
    for (std::uint64_t i = 1; i < *count; ++i) {
      Vec v = vector_from_index(m.p(), m.dim(), i);
      // one representative per line
      auto lead = std::find_if(v.rbegin(), v.rend(), [](Elem e) { return e != 0; });
      if (*lead != 1 || s.contains(v)) continue;
      std::vector<Vec> gens = s.basis();
      gens.push_back(std::move(v));
      Subspace t = submodule_generated(m, gens).space;
      if (found.insert(t).second) {
        if (found.size() > budget) throw EnumerationBoundError("enumerate_submodules: too many submodules");
        queue.push_back(std::move(t));
      }
    }
  }
  std::vector<FSubmodule> out;
  for (const auto& s : found) out.push_back({s});
  return out;
}

// --- homomorphisms ----------------------------------------------------------

template <Side S>
Subspace hom_space(const FModule<S>& from, const FModule<S>& to) {
  const Elem p = from.p();
  const std::size_t m = from.dim(), n = to.dim();
  if (m * n == 0) return Subspace(p, 0);
  const FpMatrix im = FpMatrix::identity(p, m), in = FpMatrix::identity(p, n);
  std::vector<FpMatrix> blocks{kron_operator(in, from.x()) - kron_operator(to.x(), im)};
  for (std::size_t i = 0; i < from.action().size(); ++i)
    blocks.push_back(kron_operator(in, from.action()[i]) - kron_operator(to.action()[i], im));
  return kernel(stack_rows(p, m * n, blocks));
}

template <Side S>
bool is_homomorphism(const FModule<S>& from, const FModule<S>& to, const FpMatrix& phi) {
  if (phi.rows() != to.dim() || phi.cols() != from.dim()) return false;
  if (phi * from.x() != to.x() * phi) return false;
  for (std::size_t i = 0; i < from.action().size(); ++i)
    if (phi * from.action()[i] != to.action()[i] * phi) return false;
  return true;
}

template <Side S>
std::optional<FpMatrix> find_isomorphism(const FModule<S>& a, const FModule<S>& b, std::uint64_t seed) {
  if (a.dim() != b.dim()) return std::nullopt;
  const Elem p = a.p();
  const std::size_t n = a.dim();
  if (n == 0) return FpMatrix(p, 0, 0);
  const Subspace h = hom_space(a, b);
  if (h.dim() == 0) return std::nullopt;
  auto combine = [&](const Vec& coeffs) {
    Vec flat(n * n, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k]) flat = vec_add(p, flat, vec_scale(p, coeffs[k], h.basis()[k]));
    return FpMatrix::unflatten(p, n, n, flat);
  };
  if (const auto total = checked_power(p, h.dim(), std::uint64_t{1} << 16)) {
    for (std::uint64_t i = 1; i < *total; ++i) {
      FpMatrix phi = combine(vector_from_index(p, h.dim(), i));
      if (inverse(phi)) return phi;
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> coeff(0, p - 1);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Vec c(h.dim());
    for (auto& e : c) e = coeff(rng);
    FpMatrix phi = combine(c);
    if (inverse(phi)) return phi;
  }
  return std::nullopt;
}

// --- reductions -------------------------------------------------------------

AnnihilatorChain rx_annihilator_chain(const RightFModule& m) {
  AnnihilatorChain out;
  const std::size_t n = m.dim();
  FpMatrix xk = FpMatrix::identity(m.p(), n);
  auto level = [&](const FpMatrix& x_power) {
    std::vector<FpMatrix> blocks;
    for (const auto& r : m.action()) blocks.push_back(x_power * r);
    return kernel(stack_rows(m.p(), n, blocks));
  };
  out.chain.push_back(level(xk));
  while (true) {
    xk = m.x() * xk;
    Subspace next = level(xk);
    if (next == out.chain.back()) break;
    out.chain.push_back(std::move(next));
  }
  out.stable_index = out.chain.size() - 1;
  return out;
}

FSubmodule x_infinity_image(const RightFModule& m) { return {image(m.x().pow(xdiv_exponent_right(m)))}; }

RightFModule gamma_reduction(const RightFModule& m) {
  return quotient_module(m, FSubmodule{rx_annihilator_chain(m).limit()});
}

RightFModule sigma_reduction(const RightFModule& m) { return quotient_module(m, x_infinity_image(m)); }

StabilizationPipeline stabilization_pipeline(const RightFModule& m) {
  StabilizationPipeline out;
  RightFModule cur = m;
  std::size_t idle = 0;
  for (std::size_t it = 0; cur.dim() > 0 && idle < 2 && it < 4 * (m.dim() + 1); ++it) {
    ReductionStep step;
    if (it % 2 == 0) {
      step.kind = 's';
      const FSubmodule killed = x_infinity_image(cur);
      step.killed_dim = killed.dim();
      cur = quotient_module(cur, killed);
    } else {
      step.kind = 'g';
      const AnnihilatorChain chain = rx_annihilator_chain(cur);
      step.ell = chain.stable_index;
      step.killed_dim = chain.limit().dim();
      cur = quotient_module(cur, FSubmodule{chain.limit()});
    }
    idle = step.killed_dim == 0 ? idle + 1 : 0;
    out.steps.push_back(step);
  }
  out.final_dim = cur.dim();
  std::size_t bound = cur.dim() == 0 ? 0 : xdiv_exponent_right(cur);
  for (auto it = out.steps.rbegin(); it != out.steps.rend(); ++it)
    if (it->kind == 'g') bound += it->ell;
  out.exponent_bound = bound;
  return out;
}

// --- localization -----------------------------------------------------------

LocalizedModule localize_right_module(const RightFModule& m, std::size_t component_index) {
  return localize_right_module(m, local_components(*m.algebra()), component_index);
}

LocalizedModule localize_right_module(const RightFModule& m, const LocalDecomposition& dec,
                                      std::size_t component_index) {
  if (component_index >= dec.idempotents.size()) throw std::out_of_range("localize_right_module: no such component");
  const Vec& e = dec.idempotents[component_index];
  const Subspace w = image(m.rho(e));
  const FpMatrix& incl = dec.inclusions[component_index];
  std::vector<FpMatrix> action;
  for (std::size_t j = 0; j < incl.cols(); ++j) action.push_back(restrict_matrix(m.rho(incl.column(j)), w));
  RightFModule local(dec.components[component_index], std::move(action), restrict_matrix(m.x(), w));
  return {std::move(local), w.basis_matrix(), e};
}

// --- explicit instantiations ------------------------------------------------

#define FROBLAB_INSTANTIATE(S)                                                                     \
  template class FModule<S>;                                                                       \
  template ValidationReport validate_module(const FModule<S>&);                                    \
  template FModule<S> regular_module<S>(AlgebraRef, FpMatrix);                                     \
  template FModule<S> direct_sum(const FModule<S>&, const FModule<S>&);                            \
  template FModule<S> change_basis(const FModule<S>&, const FpMatrix&);                            \
  template Vec apply_x(const FModule<S>&, const Vec&);                                             \
  template Vec apply_x_power(const FModule<S>&, const Vec&, std::size_t);                          \
  template GradedTwoSidedIdeal grann(const FModule<S>&);                                           \
  template bool is_submodule(const FModule<S>&, const Subspace&);                                  \
  template FSubmodule submodule_generated(const FModule<S>&, const std::vector<Vec>&);             \
  template Quotient<S> quotient_with_map(const FModule<S>&, const FSubmodule&);                    \
  template FModule<S> quotient_module(const FModule<S>&, const FSubmodule&);                       \
  template Restriction<S> restrict_to(const FModule<S>&, const FSubmodule&);                       \
  template std::vector<FSubmodule> enumerate_submodules(const FModule<S>&, std::uint64_t);         \
  template Subspace hom_space(const FModule<S>&, const FModule<S>&);                               \
  template bool is_homomorphism(const FModule<S>&, const FModule<S>&, const FpMatrix&);            \
  template std::optional<FpMatrix> find_isomorphism(const FModule<S>&, const FModule<S>&, std::uint64_t);

FROBLAB_INSTANTIATE(Side::Left)
FROBLAB_INSTANTIATE(Side::Right)

#undef FROBLAB_INSTANTIATE

}  // namespace froblab
