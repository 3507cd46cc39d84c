#include "froblab/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace froblab {

std::uint64_t enumeration_bound() {
  if (const char* env = std::getenv("FROBLAB_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationBound;
}

FiniteAlgebra::FiniteAlgebra(Elem p, std::vector<std::string> labels, std::vector<std::vector<Vec>> table, Vec one)
    : p_(p), labels_(std::move(labels)), table_(std::move(table)), one_(std::move(one)) {}

Vec FiniteAlgebra::mul(const Vec& a, const Vec& b) const {
  const std::size_t d = dim();
  if (a.size() != d || b.size() != d) throw DimensionError("FiniteAlgebra::mul: length mismatch");
  std::vector<std::uint64_t> acc(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const std::uint64_t c = std::uint64_t{a[i]} * b[j] % p_;
      const auto& t = table_[i][j];
      for (std::size_t k = 0; k < d; ++k) acc[k] = (acc[k] + c * t[k]) % p_;
    }
  }
  return Vec(acc.begin(), acc.end());
}

Vec FiniteAlgebra::pow(const Vec& a, std::uint64_t e) const {
  Vec result = one_, base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FpMatrix FiniteAlgebra::mult_matrix(const Vec& a) const {
  FpMatrix m(p_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, mul(a, basis(j)));
  return m;
}

bool FiniteAlgebra::is_unit(const Vec& a) const { return rank(mult_matrix(a)) == dim(); }

Vec FiniteAlgebra::inverse(const Vec& a) const {
  auto x = solve(mult_matrix(a), one_);
  if (!x || mul(a, *x) != one_) throw std::domain_error("element " + format(a) + " is not a unit");
  return *x;
}

std::string FiniteAlgebra::format(const Vec& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit_label = labels_[i] == "1";
    if (unit_label) {
      os << a[i];
    } else {
      if (a[i] != 1) os << a[i] << '*';
      os << labels_[i];
    }
  }
  if (first) os << '0';
  return os.str();
}

ValidationReport validate_algebra(const FiniteAlgebra& a) {
  if (!is_prime(a.p())) return ValidationReport::fail("prime(" + std::to_string(a.p()) + ")");
  const std::size_t d = a.dim();
  if (d == 0) return ValidationReport::fail("dimension(0)");
  if (a.table().size() != d) return ValidationReport::fail("table-shape");
  for (std::size_t i = 0; i < d; ++i) {
    if (a.table()[i].size() != d) return ValidationReport::fail("table-shape(" + std::to_string(i + 1) + ")");
    for (std::size_t j = 0; j < d; ++j) {
      const auto& v = a.table()[i][j];
      if (v.size() != d) return ValidationReport::fail("table-shape(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      for (auto e : v)
        if (e >= a.p()) return ValidationReport::fail("range(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  if (a.one().size() != d) return ValidationReport::fail("one-shape");
  for (auto e : a.one())
    if (e >= a.p()) return ValidationReport::fail("range(one)");

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (a.table()[i][j] != a.table()[j][i])
        return ValidationReport::fail("commutativity(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const auto lhs = a.mul(a.table()[i][j], a.basis(k));
        const auto rhs = a.mul(a.basis(i), a.table()[j][k]);
        if (lhs != rhs)
          return ValidationReport::fail("associativity(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                        std::to_string(k + 1) + ")");
      }
  for (std::size_t i = 0; i < d; ++i)
    if (a.mul(a.one(), a.basis(i)) != a.basis(i)) return ValidationReport::fail("identity(" + std::to_string(i + 1) + ")");
  return ValidationReport::pass();
}

FpMatrix frobenius_matrix(const FiniteAlgebra& a) {
  FpMatrix f(a.p(), a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) f.set_column(i, a.pow(a.basis(i), a.p()));
  return f;
}

FrobeniusData frobenius(const FiniteAlgebra& a) {
  FrobeniusData data;
  data.matrix = frobenius_matrix(a);
  std::vector<FpMatrix> powers{FpMatrix::identity(a.p(), a.dim())};
  for (;;) {
    FpMatrix next = data.matrix * powers.back();
    auto hit = std::find(powers.begin(), powers.end(), next);
    if (hit != powers.end()) {
      data.preperiod = static_cast<std::size_t>(hit - powers.begin());
      data.period = powers.size() - data.preperiod;
      return data;
    }
    powers.push_back(std::move(next));
  }
}

// --- ideals ----------------------------------------------------------------

bool is_ideal(const FiniteAlgebra& a, const Subspace& space) {
  for (const auto& v : space.basis())
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!space.contains(a.mul(a.basis(i), v))) return false;
  return true;
}

Ideal ideal_from_generators(const FiniteAlgebra& a, const std::vector<Vec>& gens) {
  Subspace space = Subspace::span(a.p(), a.dim(), gens);
  for (;;) {
    std::vector<Vec> vs = space.basis();
    for (const auto& v : space.basis())
      for (std::size_t i = 0; i < a.dim(); ++i) vs.push_back(a.mul(a.basis(i), v));
    Subspace next = Subspace::span(a.p(), a.dim(), vs);
    if (next == space) break;
    space = std::move(next);
  }
  return Ideal{gens, std::move(space)};
}

Ideal zero_ideal(const FiniteAlgebra& a) { return Ideal{{}, Subspace(a.p(), a.dim())}; }

Ideal unit_ideal(const FiniteAlgebra& a) { return Ideal{{a.one()}, Subspace::full(a.p(), a.dim())}; }

Ideal ideal_from_space(const FiniteAlgebra& a, const Subspace& space) {
  if (!is_ideal(a, space)) throw std::invalid_argument("subspace is not an ideal");
  return Ideal{space.basis(), space};
}

Ideal ideal_sum(const FiniteAlgebra& a, const Ideal& x, const Ideal& y) {
  auto gens = x.generators;
  gens.insert(gens.end(), y.generators.begin(), y.generators.end());
  return ideal_from_generators(a, gens);
}

Ideal nilradical(const FiniteAlgebra& a) {
  std::size_t m = 0;
  std::uint64_t pm = 1;
  while (pm < a.dim()) {
    pm *= a.p();
    ++m;
  }
  return ideal_from_space(a, kernel(frobenius_matrix(a).pow(m)));
}

Ideal frobenius_power(const FiniteAlgebra& a, const Ideal& ideal, std::size_t n) {
  if (n == 0) return ideal;
  const FpMatrix fn = frobenius_matrix(a).pow(n);
  std::vector<Vec> gens;
  for (const auto& g : ideal.generators) gens.push_back(fn * g);
  return ideal_from_generators(a, gens);
}

FrobeniusClosure frobenius_closure(const FiniteAlgebra& a, const Ideal& ideal) {
  const FpMatrix f = frobenius_matrix(a);
  // The state (F^n, a^{[p^n]}) determines the next one, so the first repeated
  // state fixes the eventual period of the c_n sequence. Consecutive equality of
  // c_n is not a valid stopping rule.
  std::vector<FpMatrix> fpow{FpMatrix::identity(a.p(), a.dim())};
  std::vector<Ideal> bracket{ideal};
  FrobeniusClosure out;
  for (;;) {
    const std::size_t n = fpow.size() - 1;
    out.chain.push_back(ideal_from_space(a, preimage(fpow[n], bracket[n].space)));
    FpMatrix next_f = f * fpow[n];
    Ideal next_b = frobenius_power(a, ideal_from_space(a, bracket[n].space), 1);
    std::size_t j = 0;
    for (; j <= n; ++j)
      if (fpow[j] == next_f && bracket[j].space == next_b.space) break;
    if (j <= n) {
      out.preperiod = j;
      out.period = n + 1 - j;
      out.chain.push_back(ideal_from_space(a, preimage(next_f, next_b.space)));
      break;
    }
    fpow.push_back(std::move(next_f));
    bracket.push_back(std::move(next_b));
  }
  out.closure = out.chain.back();
  const std::size_t horizon = out.preperiod + out.period;
  std::uint64_t q = 1;
  for (std::size_t m = 0; m <= horizon; ++m, q *= a.p()) {
    if (frobenius_power(a, out.closure, m) == frobenius_power(a, ideal, m)) {
      out.q = q;
      return out;
    }
  }
  throw std::logic_error("frobenius_closure: no Q found within the period bound");
}

// --- local decomposition ---------------------------------------------------

Vec element_from_index(const FiniteAlgebra& a, std::uint64_t index) { return vector_from_index(a.p(), a.dim(), index); }

LocalDecomposition local_components(const FiniteAlgebra& a, std::uint64_t bound) {
  const auto total = checked_power(a.p(), a.dim(), bound);
  if (!total)
    throw EnumerationBoundError("local_components: p^d exceeds the enumeration bound " + std::to_string(bound));
  std::vector<Vec> idempotents;
  for (std::uint64_t i = 1; i < *total; ++i) {
    Vec e = element_from_index(a, i);
    if (a.mul(e, e) == e) idempotents.push_back(std::move(e));
  }
  std::vector<Vec> primitive;
  for (const auto& e : idempotents) {
    const bool splits = std::any_of(idempotents.begin(), idempotents.end(),
                                    [&](const Vec& f) { return f != e && a.mul(e, f) == f; });
    if (!splits) primitive.push_back(e);
  }
  std::sort(primitive.begin(), primitive.end());

  LocalDecomposition out;
  for (std::size_t c = 0; c < primitive.size(); ++c) {
    const auto& e = primitive[c];
    const Subspace span = image(a.mult_matrix(e));
    const auto& basis = span.basis();
    const std::size_t k = basis.size();
    std::vector<std::string> labels;
    for (std::size_t b = 0; b < k; ++b) {
      auto it = std::find(basis[b].begin(), basis[b].end(), Elem{1});
      const bool is_unit_vec = it != basis[b].end() && std::count(basis[b].begin(), basis[b].end(), Elem{0}) + 1 ==
                                                           static_cast<std::ptrdiff_t>(basis[b].size());
      labels.push_back(is_unit_vec ? a.labels()[static_cast<std::size_t>(it - basis[b].begin())]
                                   : "c" + std::to_string(c) + "_" + std::to_string(b));
    }
    std::vector<std::vector<Vec>> table(k, std::vector<Vec>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) table[i][j] = *span.coordinates(a.mul(basis[i], basis[j]));
    auto comp = std::make_shared<const FiniteAlgebra>(a.p(), std::move(labels), std::move(table), *span.coordinates(e));
    out.idempotents.push_back(e);
    out.inclusions.push_back(span.basis_matrix());
    out.maximal_ideals.push_back(nilradical(*comp));
    out.components.push_back(std::move(comp));
  }
  return out;
}

bool is_local(const FiniteAlgebra& a) { return local_components(a).idempotents.size() == 1; }

// --- builders --------------------------------------------------------------

AlgebraRef prime_field(Elem p) {
  PrimeField f(p);
  return std::make_shared<const FiniteAlgebra>(p, std::vector<std::string>{"1"},
                                               std::vector<std::vector<Vec>>{{Vec{1}}}, Vec{1});
}

AlgebraRef truncated_polynomial(Elem p, std::size_t n, const std::string& var) {
  PrimeField f(p);
  if (n == 0) throw std::invalid_argument("truncated_polynomial: n must be positive");
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back(i == 1 ? var : var + "^" + std::to_string(i));
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n, Vec(n, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) table[i][j][i + j] = 1;
  return std::make_shared<const FiniteAlgebra>(p, std::move(labels), std::move(table), unit_vector(n, 0));
}

AlgebraRef polynomial_quotient(Elem p, const std::vector<Elem>& lower_coeffs, const std::string& var) {
  PrimeField f(p);
  const std::size_t n = lower_coeffs.size();
  if (n == 0) throw std::invalid_argument("polynomial_quotient: degree must be positive");
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back(i == 1 ? var : var + "^" + std::to_string(i));
  // reduce u^k for k < 2n - 1 using u^n = -sum g_i u^i
  std::vector<Vec> power(2 * n, Vec(n, 0));
  for (std::size_t k = 0; k < n; ++k) power[k][k] = 1;
  for (std::size_t k = n; k < 2 * n; ++k) {
    // u^k = u * u^{k-1}
    const Vec& prev = power[k - 1];
    Vec cur(n, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) cur[i + 1] = prev[i];
    const Elem top = prev[n - 1];
    for (std::size_t i = 0; i < n; ++i) cur[i] = f.sub(cur[i], f.mul(top, lower_coeffs[i] % p));
    power[k] = cur;
  }
  std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = power[i + j];
  return std::make_shared<const FiniteAlgebra>(p, std::move(labels), std::move(table), unit_vector(n, 0));
}

AlgebraRef product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.p() != b.p()) throw std::invalid_argument("product_algebra: characteristic mismatch");
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d, Vec(d, 0)));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) std::copy(a.table()[i][j].begin(), a.table()[i][j].end(), table[i][j].begin());
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      std::copy(b.table()[i][j].begin(), b.table()[i][j].end(), table[da + i][da + j].begin() + static_cast<std::ptrdiff_t>(da));
  Vec one(d, 0);
  std::copy(a.one().begin(), a.one().end(), one.begin());
  std::copy(b.one().begin(), b.one().end(), one.begin() + static_cast<std::ptrdiff_t>(da));
  return std::make_shared<const FiniteAlgebra>(a.p(), std::move(labels), std::move(table), std::move(one));
}

AlgebraRef square_zero_plane(Elem p) {
  PrimeField f(p);
  std::vector<std::vector<Vec>> table(3, std::vector<Vec>(3, Vec(3, 0)));
  for (std::size_t i = 0; i < 3; ++i) {
    table[0][i][i] = 1;
    table[i][0][i] = 1;
  }
  return std::make_shared<const FiniteAlgebra>(p, std::vector<std::string>{"1", "s", "t"}, std::move(table),
                                               unit_vector(3, 0));
}

std::vector<AlgebraRef> enumerate_local_algebras(Elem p, std::size_t max_dim) {
  std::vector<AlgebraRef> out;
  for (std::size_t d = 1; d <= max_dim; ++d) {
    std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
    for (std::size_t i = 1; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) free_pairs.emplace_back(i, j);
    const auto count = checked_power(p, d * free_pairs.size(), enumeration_bound());
    if (!count) throw EnumerationBoundError("enumerate_local_algebras: search space too large");
    std::vector<std::string> labels{"1"};
    for (std::size_t i = 1; i < d; ++i) labels.push_back("e" + std::to_string(i));
    for (std::uint64_t idx = 0; idx < *count; ++idx) {
      std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d, Vec(d, 0)));
      for (std::size_t i = 0; i < d; ++i) {
        table[0][i][i] = 1;
        table[i][0][i] = 1;
      }
      std::uint64_t rest = idx;
      for (const auto& [i, j] : free_pairs) {
        Vec v = vector_from_index(p, d, rest);
        for (std::size_t k = 0; k < d; ++k) rest /= p;
        table[i][j] = v;
        table[j][i] = v;
      }
      FiniteAlgebra candidate(p, labels, std::move(table), unit_vector(d, 0));
      if (!validate_algebra(candidate) || !is_local(candidate)) continue;
      out.push_back(std::make_shared<const FiniteAlgebra>(std::move(candidate)));
    }
  }
  return out;
}

}  // namespace froblab
