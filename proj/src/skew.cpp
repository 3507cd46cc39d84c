#include "froblab/skew.hpp"

#include <sstream>

namespace froblab {

namespace {
void trim(std::vector<Vec>& coeffs) {
  while (!coeffs.empty() && vec_is_zero(coeffs.back())) coeffs.pop_back();
}
}  // namespace

SkewPolynomial::SkewPolynomial(AlgebraRef algebra, std::vector<Vec> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) {
    if (c.size() != algebra_->dim()) throw DimensionError("SkewPolynomial: coefficient length mismatch");
    for (auto& e : c) e %= algebra_->p();
  }
  trim(coeffs_);
}

SkewPolynomial SkewPolynomial::monomial(AlgebraRef algebra, const Vec& r, std::size_t degree) {
  std::vector<Vec> coeffs(degree + 1, algebra->zero());
  coeffs[degree] = r;
  return SkewPolynomial(std::move(algebra), std::move(coeffs));
}

Vec SkewPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : algebra_->zero(); }

void SkewPolynomial::check_same_algebra(const SkewPolynomial& o) const {
  if (algebra_ != o.algebra_ && !(*algebra_ == *o.algebra_))
    throw std::invalid_argument("skew polynomials over different algebras");
}

SkewPolynomial SkewPolynomial::operator+(const SkewPolynomial& o) const {
  check_same_algebra(o);
  std::vector<Vec> out(std::max(coeffs_.size(), o.coeffs_.size()), algebra_->zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = algebra_->add(coeff(i), o.coeff(i));
  return SkewPolynomial(algebra_, std::move(out));
}

SkewPolynomial SkewPolynomial::operator*(const SkewPolynomial& o) const {
  check_same_algebra(o);
  if (is_zero() || o.is_zero()) return SkewPolynomial(algebra_, {});
  const auto& a = *algebra_;
  const FpMatrix f = frobenius_matrix(a);
  std::vector<Vec> out(coeffs_.size() + o.coeffs_.size() - 1, a.zero());
  // (r x^i)(s x^j) = r F^i(s) x^{i+j}
  FpMatrix fi = FpMatrix::identity(a.p(), a.dim());
  for (std::size_t i = 0; i < coeffs_.size(); ++i, fi = f * fi) {
    if (vec_is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = a.add(out[i + j], a.mul(coeffs_[i], fi * o.coeffs_[j]));
  }
  return SkewPolynomial(algebra_, std::move(out));
}

SkewPolynomial skew_mul(const SkewPolynomial& a, const SkewPolynomial& b) { return a * b; }

std::string SkewPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (vec_is_zero(coeffs_[i])) continue;
    if (!first) os << " + ";
    first = false;
    const std::string c = algebra_->format(coeffs_[i]);
    const bool compound = c.find(' ') != std::string::npos;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != "1") os << (compound ? "(" + c + ")" : c) << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

bool is_graded_two_sided(const FiniteAlgebra& a, const std::vector<Ideal>& chain) {
  for (std::size_t n = 0; n < chain.size(); ++n) {
    if (chain[n].space.ambient_dim() != a.dim() || !is_ideal(a, chain[n].space)) return false;
    if (n + 1 < chain.size() && !chain[n + 1].space.contains(chain[n].space)) return false;
  }
  return true;
}

GradedTwoSidedIdeal::GradedTwoSidedIdeal(const FiniteAlgebra& a, std::vector<Ideal> chain) : chain_(std::move(chain)) {
  if (chain_.empty()) throw std::invalid_argument("GradedTwoSidedIdeal: empty chain");
  if (!is_graded_two_sided(a, chain_)) throw std::invalid_argument("GradedTwoSidedIdeal: chain is not an ascending chain of ideals");
  while (chain_.size() > 1 && chain_[chain_.size() - 2] == chain_.back()) chain_.pop_back();
}

bool GradedTwoSidedIdeal::contains(const SkewPolynomial& f) const {
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    if (!component(i).contains(f.coeffs()[i])) return false;
  return true;
}

std::string GradedTwoSidedIdeal::to_string(const FiniteAlgebra& a) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t n = 0; n < chain_.size(); ++n) {
    if (n) os << ", ";
    os << '(';
    const auto& basis = chain_[n].space.basis();
    for (std::size_t k = 0; k < basis.size(); ++k) os << (k ? ", " : "") << a.format(basis[k]);
    os << ')';
  }
  os << ", ...]";
  return os.str();
}

GradedTwoSidedIdeal graded_ideal_rxft(const FiniteAlgebra& a, std::size_t t) {
  std::vector<Ideal> chain(t, zero_ideal(a));
  chain.push_back(unit_ideal(a));
  return GradedTwoSidedIdeal(a, std::move(chain));
}

GradedTwoSidedIdeal zero_graded_ideal(const FiniteAlgebra& a) { return GradedTwoSidedIdeal(a, {zero_ideal(a)}); }

}  // namespace froblab
