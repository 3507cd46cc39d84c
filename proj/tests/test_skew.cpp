#include <gtest/gtest.h>

#include <random>

#include "froblab/generators.hpp"
#include "froblab/skew.hpp"

using namespace froblab;

namespace {

SkewPolynomial random_skew(const AlgebraRef& a, std::mt19937_64& rng, std::size_t max_deg = 3) {
  std::uniform_int_distribution<std::size_t> deg(0, max_deg);
  std::vector<Vec> c;
  for (std::size_t i = 0, n = deg(rng); i <= n; ++i) c.push_back(random_element(*a, rng));
  return SkewPolynomial(a, c);
}

// Σ a_i b_j^{p^i} x^{i+j} with powers taken by repeated multiplication.
std::vector<Vec> product_oracle(const FiniteAlgebra& a, const SkewPolynomial& f, const SkewPolynomial& g) {
  std::vector<Vec> out(f.coeffs().size() + g.coeffs().size(), a.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      Vec b = g.coeffs()[j];
      for (std::size_t k = 0; k < i; ++k) b = a.pow(b, a.p());
      out[i + j] = a.add(out[i + j], a.mul(f.coeffs()[i], b));
    }
  while (!out.empty() && vec_is_zero(out.back())) out.pop_back();
  return out;
}

}  // namespace

TEST(SkewMul, Examples) {
  const auto f3 = prime_field(3);
  const auto x = SkewPolynomial::monomial(f3, {1}, 1);
  EXPECT_EQ(x * SkewPolynomial::monomial(f3, {2}, 0), SkewPolynomial::monomial(f3, {2}, 1));

  const auto t3 = truncated_polynomial(2, 3);
  const auto tx = SkewPolynomial::monomial(t3, t3->basis(1), 1);
  EXPECT_TRUE((tx * tx).is_zero());

  const auto f4 = polynomial_quotient(2, {1, 1});
  const auto xu = SkewPolynomial::monomial(f4, {1, 0}, 1) * SkewPolynomial::monomial(f4, {0, 1}, 0);
  EXPECT_EQ(xu, SkewPolynomial::monomial(f4, {1, 1}, 1));
}

TEST(SkewMul, MatchesOracleAndRingAxioms) {
  std::mt19937_64 rng(53);
  for (const auto& a : {truncated_polynomial(2, 3), square_zero_plane(2), polynomial_quotient(2, {1, 1}),
                        truncated_polynomial(3, 2), polynomial_quotient(3, {1, 0})})
    for (int t = 0; t < 40; ++t) {
      const auto f = random_skew(a, rng), g = random_skew(a, rng), h = random_skew(a, rng);
      EXPECT_EQ((f * g).coeffs(), product_oracle(*a, f, g));
      EXPECT_EQ((f * g) * h, f * (g * h));
      EXPECT_EQ(f * (g + h), f * g + f * h);
      EXPECT_EQ((f + g) * h, f * h + g * h);
      EXPECT_LE((f * g).degree(), std::max(-1L, f.degree() + g.degree()));
    }
}

TEST(SkewMul, HomogeneousGradingAndDegreeZero) {
  std::mt19937_64 rng(59);
  const auto a = truncated_polynomial(3, 2);
  const FpMatrix f = frobenius_matrix(*a);
  for (int t = 0; t < 30; ++t) {
    const Vec r = random_element(*a, rng), s = random_element(*a, rng);
    const std::size_t i = t % 3, j = (t / 3) % 3;
    const auto prod = SkewPolynomial::monomial(a, r, i) * SkewPolynomial::monomial(a, s, j);
    EXPECT_EQ(prod.coeff(i + j), a->mul(r, f.pow(i) * s));
    for (std::size_t k = 0; k < i + j; ++k) EXPECT_TRUE(vec_is_zero(prod.coeff(k)));
    EXPECT_EQ((SkewPolynomial::monomial(a, r, 0) * SkewPolynomial::monomial(a, s, 0)).coeff(0), a->mul(r, s));
  }
}

TEST(SkewMul, AlgebraMismatchThrows) {
  const auto a = SkewPolynomial::monomial(prime_field(2), {1}, 1);
  const auto b = SkewPolynomial::monomial(prime_field(3), {1}, 1);
  EXPECT_THROW(a * b, std::invalid_argument);
}

TEST(SkewPolynomial, Rendering) {
  const auto a = truncated_polynomial(2, 2);
  const SkewPolynomial f(a, {{1, 0}, {0, 0}, {1, 1}});
  EXPECT_EQ(f.to_string(), "1 + (1 + t)*x^2");
  EXPECT_EQ(SkewPolynomial(a, {}).to_string(), "0");
  EXPECT_EQ(SkewPolynomial::monomial(a, {0, 1}, 1).to_string(), "t*x");
}

TEST(GradedIdeal, Examples) {
  const auto a = truncated_polynomial(2, 2);
  const auto zero = zero_ideal(*a), unit = unit_ideal(*a), t = ideal_from_generators(*a, {a->basis(1)});
  EXPECT_TRUE(is_graded_two_sided(*a, {zero, unit, unit}));
  EXPECT_TRUE(is_graded_two_sided(*a, {t, t, t}));
  EXPECT_FALSE(is_graded_two_sided(*a, {unit, t, zero}));
  EXPECT_THROW(GradedTwoSidedIdeal(*a, {unit, t}), std::invalid_argument);
  EXPECT_THROW(ideal_from_space(*a, Subspace::span(2, 2, {{1, 1}})), std::invalid_argument);
  EXPECT_FALSE(is_graded_two_sided(*a, {Ideal{{}, Subspace::span(2, 2, {{1, 1}})}}));

  EXPECT_TRUE(graded_ideal_rxft(*a, 0).is_unit());
  const auto rx = graded_ideal_rxft(*a, 1);
  EXPECT_EQ(rx.stable_from(), 1u);
  EXPECT_TRUE(rx.component(0).is_zero());
  EXPECT_TRUE(rx.component(5).is_unit());
  const auto rx2 = graded_ideal_rxft(*a, 2);
  EXPECT_TRUE(rx2.component(1).is_zero());
  EXPECT_TRUE(rx2.component(2).is_unit());
}

TEST(GradedIdeal, TrailingRepeatsTrimmed) {
  const auto a = truncated_polynomial(2, 2);
  const auto t = ideal_from_generators(*a, {a->basis(1)});
  const GradedTwoSidedIdeal b(*a, {zero_ideal(*a), t, t, t});
  EXPECT_EQ(b.stable_from(), 1u);
  EXPECT_EQ(b, GradedTwoSidedIdeal(*a, {zero_ideal(*a), t}));
  EXPECT_EQ(b.to_string(*a), "[(), (t), ...]");
}

TEST(GradedIdeal, AbsorbsMultiplicationOnBothSides) {
  std::mt19937_64 rng(61);
  for (const auto& a : {truncated_polynomial(2, 3), truncated_polynomial(3, 2), square_zero_plane(2)})
    for (int t = 0; t < 20; ++t) {
      // random ascending chain: partial sums of random ideals
      std::vector<Ideal> chain{random_ideal(*a, rng)};
      for (int k = 0; k < 2; ++k) chain.push_back(ideal_sum(*a, chain.back(), random_ideal(*a, rng)));
      const GradedTwoSidedIdeal b(*a, chain);
      std::vector<Vec> coeffs;
      for (std::size_t n = 0; n < 4; ++n) {
        const auto& basis = b.component(n).space.basis();
        coeffs.push_back(basis.empty() ? a->zero() : basis[t % basis.size()]);
      }
      const SkewPolynomial member(a, coeffs);
      ASSERT_TRUE(b.contains(member));
      const auto g = random_skew(a, rng);
      EXPECT_TRUE(b.contains(g * member));
      EXPECT_TRUE(b.contains(member * g));
    }
}
