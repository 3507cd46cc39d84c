#include "froblab/generators.hpp"

#include <stdexcept>

namespace froblab {

namespace {

std::uint64_t element_count(const FiniteAlgebra& a) {
  const auto n = checked_power(a.p(), a.dim(), std::uint64_t{1} << 40);
  if (!n) throw EnumerationBoundError("algebra too large to sample elements uniformly");
  return *n;
}

FpMatrix stack_rows(Elem p, std::size_t cols, const std::vector<FpMatrix>& blocks) {
  std::vector<Vec> rows;
  for (const auto& b : blocks)
    for (std::size_t r = 0; r < b.rows(); ++r) rows.push_back(b.row(r));
  return FpMatrix::from_rows(p, cols, rows);
}

Vec random_in(const Subspace& s, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> coeff(0, s.p() - 1);
  Vec v(s.ambient_dim(), 0);
  for (const auto& b : s.basis()) v = vec_add(s.p(), v, vec_scale(s.p(), coeff(rng), b));
  return v;
}

}  // namespace

bool algebras_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.p() != b.p() || a.dim() != b.dim()) return false;
  const std::size_t d = a.dim();
  const auto total = checked_power(a.p(), d * d, std::uint64_t{1} << 20);
  if (!total) throw EnumerationBoundError("algebras_isomorphic: search space too large");
  for (std::uint64_t i = 0; i < *total; ++i) {
    const FpMatrix phi = FpMatrix::unflatten(a.p(), d, d, vector_from_index(a.p(), d * d, i));
    if (phi * a.one() != b.one() || !inverse(phi)) continue;
    bool ok = true;
    for (std::size_t x = 0; x < d && ok; ++x)
      for (std::size_t y = x; y < d && ok; ++y)
        ok = phi * a.table()[x][y] == b.mul(phi.column(x), phi.column(y));
    if (ok) return true;
  }
  return false;
}

std::vector<AlgebraRef> isomorphism_classes(const std::vector<AlgebraRef>& algebras) {
  std::vector<AlgebraRef> reps;
  for (const auto& a : algebras) {
    bool seen = false;
    for (const auto& r : reps)
      if (algebras_isomorphic(*a, *r)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(a);
  }
  return reps;
}

std::vector<NamedAlgebra> standard_catalog() {
  std::vector<NamedAlgebra> out;
  std::size_t k = 0;
  for (const auto& a : isomorphism_classes(enumerate_local_algebras(2, 3)))
    out.push_back({"F2-local-d" + std::to_string(a->dim()) + "-" + std::to_string(k++), a});
  out.push_back({"F4", polynomial_quotient(2, {1, 1}, "u")});
  out.push_back({"F9", polynomial_quotient(3, {1, 0}, "u")});
  out.push_back({"F3[t]/(t^2)", truncated_polynomial(3, 2)});
  out.push_back({"F2xF2", product_algebra(*prime_field(2), *prime_field(2))});
  out.push_back({"F3", prime_field(3)});
  out.push_back({"F5", prime_field(5)});
  return out;
}

Vec random_element(const FiniteAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, element_count(a) - 1);
  return element_from_index(a, pick(rng));
}

Ideal random_ideal(const FiniteAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> ngens(0, 2);
  std::vector<Vec> gens;
  for (int i = ngens(rng); i > 0; --i) gens.push_back(random_element(a, rng));
  return ideal_from_generators(a, gens);
}

FpMatrix random_invertible(Elem p, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> coeff(0, p - 1);
  while (true) {
    FpMatrix m(p, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.set(r, c, coeff(rng));
    if (inverse(m)) return m;
  }
}

std::vector<FpMatrix> cyclic_action(const FiniteAlgebra& a, const Ideal& ideal) {
  auto ref = std::make_shared<const FiniteAlgebra>(a);
  const auto regular = regular_module<Side::Left>(ref, FpMatrix(a.p(), a.dim(), a.dim()));
  return quotient_module(regular, FSubmodule{ideal.space}).action();
}

template <Side S>
Subspace semilinear_maps(const FiniteAlgebra& a, const std::vector<FpMatrix>& action) {
  const std::size_t n = action.empty() ? 0 : action.front().rows();
  const Elem p = a.p();
  if (n == 0) return Subspace(p, 0);
  const FpMatrix f = frobenius_matrix(a);
  const FpMatrix id = FpMatrix::identity(p, n);
  std::vector<FpMatrix> blocks;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    FpMatrix rf(p, n, n);
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (f(k, i)) rf = rf + action[k].scaled(f(k, i));
    if constexpr (S == Side::Left)  // X ρ(e_i) = ρ(F e_i) X
      blocks.push_back(kron_operator(id, action[i]) - kron_operator(rf, id));
    else  // X ρ(F e_i) = ρ(e_i) X
      blocks.push_back(kron_operator(id, rf) - kron_operator(action[i], id));
  }
  return kernel(stack_rows(p, n * n, blocks));
}

template <Side S>
FModule<S> random_module(const AlgebraRef& a, std::mt19937_64& rng, std::size_t max_dim) {
  const Elem p = a->p();
  std::uniform_int_distribution<int> percent(0, 99);
  if (percent(rng) < 3) return FModule<S>::zero(a);

  std::vector<FpMatrix> action(a->dim(), FpMatrix(p, 0, 0));
  std::size_t n = 0;
  std::uniform_int_distribution<int> pieces(1, 3);
  for (int piece = pieces(rng), tries = 0; piece > 0 && tries < 16; ++tries) {
    const Ideal ideal = random_ideal(*a, rng);
    const std::size_t k = a->dim() - ideal.dim();
    if (k == 0 || n + k > max_dim) continue;
    const auto block = cyclic_action(*a, ideal);
    for (std::size_t i = 0; i < action.size(); ++i) action[i] = block_diagonal(action[i], block[i]);
    n += k;
    --piece;
  }
  if (n == 0) {
    // fall back to R/I for the largest proper principal ideal I
    Ideal maximal = unit_ideal(*a);
    for (std::uint64_t i = 0; i < element_count(*a); ++i) {
      const Ideal c = ideal_from_generators(*a, {element_from_index(*a, i)});
      if (!c.is_unit() && (maximal.is_unit() || c.dim() > maximal.dim())) maximal = c;
    }
    if (maximal.is_unit()) maximal = zero_ideal(*a);
    action = cyclic_action(*a, maximal);
    n = a->dim() - maximal.dim();
  }

  const Subspace xs = semilinear_maps<S>(*a, action);
  Vec x = random_in(xs, rng);
  if (const int mode = percent(rng); mode >= 90) {
    x.assign(n * n, 0);
  } else if (mode >= 65 && xs.dim() > 0) {
    std::uniform_int_distribution<std::size_t> which(0, xs.dim() - 1);
    x = xs.basis()[which(rng)];
  }
  FModule<S> m(a, action, FpMatrix::unflatten(p, n, n, x));
  if (percent(rng) < 50) m = change_basis(m, random_invertible(p, n, rng));
  return m;
}

template <Side S>
FpMatrix random_homomorphism(const FModule<S>& from, const FModule<S>& to, std::mt19937_64& rng) {
  const Subspace h = hom_space(from, to);
  if (h.ambient_dim() == 0) return FpMatrix(from.p(), to.dim(), from.dim());
  return FpMatrix::unflatten(from.p(), to.dim(), from.dim(), random_in(h, rng));
}

namespace {
template <Side S>
FModule<S> residue_field(const AlgebraRef& a, Elem x) {
  const Ideal maximal = ideal_from_generators(*a, {a->basis(1)});
  return FModule<S>(a, cyclic_action(*a, maximal), FpMatrix(a->p(), 1, 1, {static_cast<std::int64_t>(x)}));
}
}  // namespace

RightFModule residue_field_right(const AlgebraRef& truncated, Elem x) { return residue_field<Side::Right>(truncated, x); }
LeftFModule residue_field_left(const AlgebraRef& truncated, Elem x) { return residue_field<Side::Left>(truncated, x); }

template Subspace semilinear_maps<Side::Left>(const FiniteAlgebra&, const std::vector<FpMatrix>&);
template Subspace semilinear_maps<Side::Right>(const FiniteAlgebra&, const std::vector<FpMatrix>&);
template LeftFModule random_module<Side::Left>(const AlgebraRef&, std::mt19937_64&, std::size_t);
template RightFModule random_module<Side::Right>(const AlgebraRef&, std::mt19937_64&, std::size_t);
template FpMatrix random_homomorphism(const LeftFModule&, const LeftFModule&, std::mt19937_64&);
template FpMatrix random_homomorphism(const RightFModule&, const RightFModule&, std::mt19937_64&);

}  // namespace froblab
