#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "froblab/algebra.hpp"
#include "froblab/generators.hpp"

using namespace froblab;

namespace {

std::vector<Vec> all_elements(const FiniteAlgebra& a) {
  std::vector<Vec> out;
  const auto total = *checked_power(a.p(), a.dim(), 1 << 16);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(element_from_index(a, i));
  return out;
}

// Smallest set containing gens closed under addition and multiplication by every element.
std::set<Vec> ideal_oracle(const FiniteAlgebra& a, const std::vector<Vec>& gens) {
  std::set<Vec> s{a.zero()};
  const auto elems = all_elements(a);
  bool grew = true;
  std::vector<Vec> frontier = gens;
  while (grew) {
    grew = false;
    std::vector<Vec> next;
    for (const auto& g : frontier)
      for (const auto& r : elems) {
        const Vec rg = a.mul(r, g);
        for (const auto& x : std::vector<Vec>(s.begin(), s.end())) {
          const Vec y = a.add(x, rg);
          if (s.insert(y).second) {
            next.push_back(y);
            grew = true;
          }
        }
      }
    frontier = next;
  }
  return s;
}

std::set<Vec> members(const FiniteAlgebra& a, const Ideal& i) {
  std::set<Vec> out;
  for (const auto& r : all_elements(a))
    if (i.contains(r)) out.insert(r);
  return out;
}

Vec ppow(const FiniteAlgebra& a, const Vec& r, std::size_t n) {
  Vec out = r;
  for (std::size_t k = 0; k < n; ++k) out = a.pow(out, a.p());
  return out;
}

// a^{[p^n]} from every element of a rather than from stored generators.
std::set<Vec> frobenius_power_oracle(const FiniteAlgebra& a, const Ideal& ideal, std::size_t n) {
  std::vector<Vec> gens;
  for (const auto& r : members(a, ideal)) gens.push_back(ppow(a, r, n));
  return ideal_oracle(a, gens);
}

std::vector<NamedAlgebra> small_algebras() {
  auto cat = standard_catalog();
  cat.push_back({"F2[t]/(t^4)", truncated_polynomial(2, 4)});
  cat.push_back({"F3[s,t]/(s,t)^2", square_zero_plane(3)});
  cat.push_back({"F2xF2[t]/(t^2)", product_algebra(*prime_field(2), *truncated_polynomial(2, 2))});
  return cat;
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate_algebra(*prime_field(2)).ok);
  EXPECT_TRUE(validate_algebra(*truncated_polynomial(2, 2)).ok);

  auto t = truncated_polynomial(2, 2)->table();
  t[0][1] = {1, 1};
  const FiniteAlgebra bad(2, {"1", "t"}, t, {1, 0});
  const auto r = validate_algebra(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violation, "commutativity(1,2)");
}

TEST(Validate, DetectsNonAssociativeAndBadIdentity) {
  // commutative with identity e_1, but (t s) s = s while t (s s) = 1
  std::vector<std::vector<Vec>> table{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                      {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                                      {{0, 0, 1}, {1, 0, 0}, {0, 0, 1}}};
  const FiniteAlgebra bad(2, {"1", "t", "s"}, table, {1, 0, 0});
  const auto r = validate_algebra(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violation.rfind("associativity(", 0), 0u) << r.violation;

  const FiniteAlgebra no_one(2, {"1", "t"}, truncated_polynomial(2, 2)->table(), {0, 1});
  EXPECT_EQ(validate_algebra(no_one).violation, "identity(1)");
  const FiniteAlgebra composite(4, {"1"}, {{{1}}}, {1});
  EXPECT_FALSE(validate_algebra(composite).ok);
}

TEST(Frobenius, Examples) {
  const auto d = frobenius(*truncated_polynomial(2, 2));
  EXPECT_EQ(d.matrix, FpMatrix(2, 2, 2, {1, 0, 0, 0}));
  EXPECT_EQ(d.preperiod, 1u);
  EXPECT_EQ(d.period, 1u);

  const auto f4 = frobenius(*polynomial_quotient(2, {1, 1}));
  EXPECT_EQ(f4.matrix.column(1), (Vec{1, 1}));
  EXPECT_EQ(f4.preperiod, 0u);
  EXPECT_EQ(f4.period, 2u);

  for (Elem p : {2u, 3u, 5u, 7u}) {
    const auto fp = frobenius(*prime_field(p));
    EXPECT_TRUE(fp.matrix.is_identity());
    EXPECT_EQ(fp.preperiod, 0u);
    EXPECT_EQ(fp.period, 1u);
  }
}

TEST(Frobenius, CycleDataMatchesElementwiseIteration) {
  for (const auto& [name, a] : small_algebras()) {
    const auto elems = all_elements(*a);
    // F^n as a function on the element set, compared by its value table
    std::vector<std::vector<Vec>> tables{elems};
    std::size_t lambda = 0, mu = 0;
    for (bool found = false; !found;) {
      std::vector<Vec> next;
      for (const auto& r : tables.back()) next.push_back(a->pow(r, a->p()));
      for (std::size_t k = 0; k < tables.size() && !found; ++k)
        if (tables[k] == next) {
          lambda = k;
          mu = tables.size() - k;
          found = true;
        }
      tables.push_back(next);
    }
    const auto data = frobenius(*a);
    EXPECT_EQ(data.preperiod, lambda) << name;
    EXPECT_EQ(data.period, mu) << name;
    for (const auto& r : elems) EXPECT_EQ(data.matrix * r, a->pow(r, a->p())) << name;
  }
}

TEST(Nilradical, Examples) {
  EXPECT_EQ(nilradical(*truncated_polynomial(2, 2)).space, Subspace::span(2, 2, {{0, 1}}));
  EXPECT_TRUE(nilradical(*polynomial_quotient(2, {1, 1})).is_zero());
  EXPECT_TRUE(nilradical(*product_algebra(*prime_field(2), *prime_field(2))).is_zero());
}

TEST(Nilradical, MatchesNilpotentElements) {
  for (const auto& [name, a] : small_algebras()) {
    std::set<Vec> nil;
    for (const auto& r : all_elements(*a))
      if (vec_is_zero(a->pow(r, a->dim() + 1))) nil.insert(r);
    EXPECT_EQ(members(*a, nilradical(*a)), nil) << name;
  }
}

TEST(Ideals, Examples) {
  const auto a = truncated_polynomial(2, 3);
  EXPECT_TRUE(ideal_from_generators(*a, {a->one()}).is_unit());
  EXPECT_TRUE(ideal_from_generators(*a, {}).is_zero());
  EXPECT_EQ(ideal_from_generators(*a, {a->basis(1)}).space, Subspace::span(2, 3, {{0, 1, 0}, {0, 0, 1}}));
}

TEST(Ideals, GenerationMatchesClosureOracle) {
  std::mt19937_64 rng(41);
  for (const auto& [name, a] : small_algebras())
    for (int t = 0; t < 6; ++t) {
      std::vector<Vec> gens{random_element(*a, rng)};
      if (t % 2) gens.push_back(random_element(*a, rng));
      const auto ideal = ideal_from_generators(*a, gens);
      EXPECT_TRUE(is_ideal(*a, ideal.space)) << name;
      EXPECT_EQ(members(*a, ideal), ideal_oracle(*a, gens)) << name;
    }
}

TEST(FrobeniusPower, Examples) {
  const auto a = truncated_polynomial(2, 3);
  const auto t = ideal_from_generators(*a, {a->basis(1)});
  const auto t2 = ideal_from_generators(*a, {a->basis(2)});
  EXPECT_EQ(frobenius_power(*a, t, 0), t);
  EXPECT_EQ(frobenius_power(*a, t, 1), t2);
  EXPECT_TRUE(frobenius_power(*a, t2, 1).is_zero());
}

TEST(FrobeniusPower, IndependentOfGenerators) {
  std::mt19937_64 rng(43);
  for (const auto& [name, a] : small_algebras())
    for (int t = 0; t < 5; ++t) {
      const auto ideal = random_ideal(*a, rng);
      const auto from_space = ideal_from_space(*a, ideal.space);
      for (std::size_t n = 0; n < 3; ++n) {
        const auto pw = frobenius_power(*a, ideal, n);
        EXPECT_EQ(pw, frobenius_power(*a, from_space, n)) << name;
        EXPECT_EQ(members(*a, pw), frobenius_power_oracle(*a, ideal, n)) << name;
      }
    }
}

TEST(FrobeniusClosure, PausingChainRegression) {
  const auto a = truncated_polynomial(2, 3);
  const auto t2 = ideal_from_generators(*a, {a->basis(2)});
  const auto fc = frobenius_closure(*a, t2);
  EXPECT_EQ(fc.closure, ideal_from_generators(*a, {a->basis(1)}));
  EXPECT_EQ(fc.q, 4u);
  ASSERT_GE(fc.chain.size(), 3u);
  EXPECT_EQ(fc.chain[1], t2);
  EXPECT_EQ(fc.chain[2], fc.closure);
}

TEST(FrobeniusClosure, TrivialCases) {
  const auto a = truncated_polynomial(2, 2);
  const auto t = ideal_from_generators(*a, {a->basis(1)});
  EXPECT_EQ(frobenius_closure(*a, t).closure, t);
  EXPECT_EQ(frobenius_closure(*a, t).q, 1u);
  const auto unit = frobenius_closure(*a, unit_ideal(*a));
  EXPECT_TRUE(unit.closure.is_unit());
  EXPECT_EQ(unit.q, 1u);
  const auto f9 = polynomial_quotient(3, {1, 0});
  EXPECT_TRUE(frobenius_closure(*f9, zero_ideal(*f9)).closure.is_zero());
}

TEST(FrobeniusClosure, MatchesElementwiseOracle) {
  std::mt19937_64 rng(47);
  for (const auto& [name, a] : small_algebras())
    for (int t = 0; t < 6; ++t) {
      const auto ideal = random_ideal(*a, rng);
      const auto fc = frobenius_closure(*a, ideal);
      std::vector<std::set<Vec>> powers;
      for (std::size_t n = 0; n <= 8; ++n) powers.push_back(frobenius_power_oracle(*a, ideal, n));
      std::set<Vec> oracle;
      for (const auto& r : all_elements(*a))
        for (std::size_t n = 0; n <= 8; ++n)
          if (powers[n].count(ppow(*a, r, n))) {
            oracle.insert(r);
            break;
          }
      EXPECT_EQ(members(*a, fc.closure), oracle) << name;
      for (std::size_t n = 0; n + 1 < fc.chain.size(); ++n) EXPECT_TRUE(fc.chain[n + 1].space.contains(fc.chain[n].space));

      // Q: least power of p at which the closure's Frobenius power meets a's
      std::uint64_t q = 1;
      for (std::size_t m = 0;; ++m, q *= a->p()) {
        ASSERT_LE(m, 8u);
        if (frobenius_power_oracle(*a, fc.closure, m) == powers[m]) break;
      }
      EXPECT_EQ(fc.q, q) << name;
      EXPECT_EQ(frobenius_closure(*a, fc.closure).closure, fc.closure) << name;
    }
}

TEST(LocalComponents, Examples) {
  const auto local = local_components(*truncated_polynomial(2, 2));
  ASSERT_EQ(local.components.size(), 1u);
  EXPECT_EQ(local.maximal_ideals[0].space, Subspace::span(2, 2, {{0, 1}}));

  const auto split = local_components(*product_algebra(*prime_field(2), *prime_field(2)));
  ASSERT_EQ(split.components.size(), 2u);
  EXPECT_EQ(std::set<Vec>(split.idempotents.begin(), split.idempotents.end()), (std::set<Vec>{{1, 0}, {0, 1}}));

  EXPECT_EQ(local_components(*polynomial_quotient(2, {1, 1})).components.size(), 1u);
}

TEST(LocalComponents, ReassemblesAlgebra) {
  for (const auto& [name, a] : small_algebras()) {
    const auto dec = local_components(*a);
    Vec sum = a->zero();
    std::size_t total = 0;
    FpMatrix stacked(a->p(), a->dim(), 0);
    for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
      const auto& e = dec.idempotents[i];
      sum = a->add(sum, e);
      EXPECT_EQ(a->mul(e, e), e) << name;
      for (std::size_t j = 0; j < i; ++j) EXPECT_TRUE(vec_is_zero(a->mul(e, dec.idempotents[j]))) << name;
      const auto& c = *dec.components[i];
      EXPECT_TRUE(validate_algebra(c).ok) << name;
      EXPECT_TRUE(is_local(c)) << name;
      total += c.dim();
      const auto& inc = dec.inclusions[i];
      stacked = hstack(stacked, inc);
      EXPECT_EQ(inc * c.one(), e) << name;
      for (std::size_t x = 0; x < c.dim(); ++x)
        for (std::size_t y = 0; y < c.dim(); ++y)
          EXPECT_EQ(inc * c.mul(c.basis(x), c.basis(y)), a->mul(inc.column(x), inc.column(y))) << name;
      // units of a local component are exactly the elements outside its maximal ideal
      for (const auto& r : all_elements(c)) EXPECT_NE(c.is_unit(r), dec.maximal_ideals[i].contains(r)) << name;
    }
    EXPECT_EQ(sum, a->one()) << name;
    EXPECT_EQ(total, a->dim()) << name;
    EXPECT_TRUE(inverse(stacked).has_value()) << name;
  }
}

TEST(LocalComponents, BoundIsEnforced) {
  EXPECT_THROW(local_components(*truncated_polynomial(3, 4), 10), EnumerationBoundError);
}

TEST(Catalog, SixLocalClassesUpToDimensionThree) {
  const auto classes = isomorphism_classes(enumerate_local_algebras(2, 3));
  EXPECT_EQ(classes.size(), 6u);
  std::map<std::size_t, int> by_dim;
  for (const auto& a : classes) {
    EXPECT_TRUE(validate_algebra(*a).ok);
    EXPECT_TRUE(is_local(*a));
    ++by_dim[a->dim()];
  }
  EXPECT_EQ(by_dim[1], 1);
  EXPECT_EQ(by_dim[2], 2);
  EXPECT_EQ(by_dim[3], 3);
}

TEST(Units, InverseRoundTrip) {
  for (const auto& [name, a] : small_algebras())
    for (const auto& r : all_elements(*a))
      if (a->is_unit(r)) EXPECT_EQ(a->mul(r, a->inverse(r)), a->one()) << name;
}
