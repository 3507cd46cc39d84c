#pragma once

// The Frobenius skew polynomial ring R[x,f] (x r = r^p x) and its graded
// two-sided ideals, stored as eventually constant ascending chains of ideals.

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "froblab/algebra.hpp"

namespace froblab {

class SkewPolynomial {
 public:
  SkewPolynomial(AlgebraRef algebra, std::vector<Vec> coeffs);
  /// r·x^degree
  static SkewPolynomial monomial(AlgebraRef algebra, const Vec& r, std::size_t degree);

  const AlgebraRef& algebra() const noexcept { return algebra_; }
  /// coeffs()[i] is the left coefficient of x^i; trailing zeros are trimmed.
  const std::vector<Vec>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Vec coeff(std::size_t i) const;

  SkewPolynomial operator+(const SkewPolynomial& o) const;
  SkewPolynomial operator*(const SkewPolynomial& o) const;

  /// "c0 + c1*x + c2*x^2" with coefficients in basis-label notation.
  std::string to_string() const;

  friend bool operator==(const SkewPolynomial& a, const SkewPolynomial& b) {
    return *a.algebra_ == *b.algebra_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_same_algebra(const SkewPolynomial& o) const;

  AlgebraRef algebra_;
  std::vector<Vec> coeffs_;
};

SkewPolynomial skew_mul(const SkewPolynomial& a, const SkewPolynomial& b);

/// ⊕ b_n x^n with b_0 ⊆ b_1 ⊆ ... and b_n = b_N for n ≥ N = stable_from().
class GradedTwoSidedIdeal {
 public:
  /// The last entry of `chain` is taken to repeat forever. Throws if the
  /// chain is not ascending or some entry is not an ideal.
  GradedTwoSidedIdeal(const FiniteAlgebra& a, std::vector<Ideal> chain);

  std::size_t stable_from() const noexcept { return chain_.size() - 1; }
  const std::vector<Ideal>& chain() const noexcept { return chain_; }
  const Ideal& component(std::size_t n) const { return chain_[std::min(n, stable_from())]; }

  bool is_zero() const noexcept { return chain_.size() == 1 && chain_[0].is_zero(); }
  bool is_unit() const noexcept { return chain_.size() == 1 && chain_[0].is_unit(); }
  bool contains(const SkewPolynomial& f) const;

  std::string to_string(const FiniteAlgebra& a) const;

  friend bool operator==(const GradedTwoSidedIdeal& a, const GradedTwoSidedIdeal& b) { return a.chain_ == b.chain_; }
  friend auto operator<=>(const GradedTwoSidedIdeal& a, const GradedTwoSidedIdeal& b) {
    return std::lexicographical_compare_three_way(a.chain_.begin(), a.chain_.end(), b.chain_.begin(), b.chain_.end(),
                                                  [](const Ideal& x, const Ideal& y) { return x.space <=> y.space; });
  }

 private:
  std::vector<Ideal> chain_;
};

/// True iff every entry is an ideal and the chain ascends.
bool is_graded_two_sided(const FiniteAlgebra& a, const std::vector<Ideal>& chain);

/// R[x,f]x^t: b_n = 0 for n < t and R for n ≥ t.
GradedTwoSidedIdeal graded_ideal_rxft(const FiniteAlgebra& a, std::size_t t);
GradedTwoSidedIdeal zero_graded_ideal(const FiniteAlgebra& a);

}  // namespace froblab
