#pragma once

// Finite commutative F_p-algebras given by structure constants, their
// Frobenius endomorphism, ideals, Frobenius powers and Frobenius closure.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "froblab/linalg.hpp"

namespace froblab {

/// Default cap on exhaustive element enumeration (p^d or p^n).
inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 20;

/// The enumeration cap, honouring the FROBLAB_BUDGET environment variable.
std::uint64_t enumeration_bound();

class EnumerationBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ValidationReport {
  bool ok = true;
  std::string violation;  // first violated axiom with 1-based basis indices, e.g. "commutativity(1,2)"

  explicit operator bool() const noexcept { return ok; }
  static ValidationReport pass() { return {}; }
  static ValidationReport fail(std::string what) { return {false, std::move(what)}; }
};

class FiniteAlgebra {
 public:
  /// No validation happens here; call validate_algebra() on untrusted input.
  FiniteAlgebra(Elem p, std::vector<std::string> labels, std::vector<std::vector<Vec>> table, Vec one);

  Elem p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<Vec>>& table() const noexcept { return table_; }
  const Vec& one() const noexcept { return one_; }

  Vec zero() const { return Vec(dim(), 0); }
  Vec basis(std::size_t i) const { return unit_vector(dim(), i); }

  Vec add(const Vec& a, const Vec& b) const { return vec_add(p_, a, b); }
  Vec sub(const Vec& a, const Vec& b) const { return vec_sub(p_, a, b); }
  Vec scale(Elem c, const Vec& a) const { return vec_scale(p_, c, a); }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(const Vec& a, std::uint64_t e) const;

  /// Matrix of r ↦ a·r (the regular representation of a).
  FpMatrix mult_matrix(const Vec& a) const;
  bool is_unit(const Vec& a) const;
  Vec inverse(const Vec& a) const;

  /// Renders a in basis-label notation, e.g. "1 + 2*t".
  std::string format(const Vec& a) const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  Elem p_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vec>> table_;
  Vec one_;
};

using AlgebraRef = std::shared_ptr<const FiniteAlgebra>;

ValidationReport validate_algebra(const FiniteAlgebra& a);

/// The Frobenius r ↦ r^p as an F_p-linear map, with the eventual-periodicity
/// data of its powers: F^{preperiod + period} = F^{preperiod}.
struct FrobeniusData {
  FpMatrix matrix;
  std::size_t preperiod = 0;
  std::size_t period = 1;
};

FrobeniusData frobenius(const FiniteAlgebra& a);
/// Column i holds the coordinates of e_i^p.
FpMatrix frobenius_matrix(const FiniteAlgebra& a);

struct Ideal {
  std::vector<Vec> generators;
  Subspace space;

  bool contains(const Vec& v) const { return space.contains(v); }
  bool is_zero() const noexcept { return space.is_zero(); }
  bool is_unit() const noexcept { return space.is_full(); }
  std::size_t dim() const noexcept { return space.dim(); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.space == b.space; }
};

Ideal ideal_from_generators(const FiniteAlgebra& a, const std::vector<Vec>& gens);
Ideal zero_ideal(const FiniteAlgebra& a);
Ideal unit_ideal(const FiniteAlgebra& a);
/// An ideal whose generators are the canonical basis of `space`.
Ideal ideal_from_space(const FiniteAlgebra& a, const Subspace& space);
bool is_ideal(const FiniteAlgebra& a, const Subspace& space);
Ideal ideal_sum(const FiniteAlgebra& a, const Ideal& x, const Ideal& y);

Ideal nilradical(const FiniteAlgebra& a);

struct LocalDecomposition {
  std::vector<Vec> idempotents;  // primitive, sorted
  std::vector<AlgebraRef> components;
  /// Column k of inclusions[i] is the k-th basis element of component i, as an element of A.
  std::vector<FpMatrix> inclusions;
  std::vector<Ideal> maximal_ideals;  // per component, in component coordinates
};

/// Exhaustive idempotent search; throws EnumerationBoundError if p^d exceeds `bound`.
LocalDecomposition local_components(const FiniteAlgebra& a, std::uint64_t bound = enumeration_bound());
bool is_local(const FiniteAlgebra& a);

Ideal frobenius_power(const FiniteAlgebra& a, const Ideal& ideal, std::size_t n);

struct FrobeniusClosure {
  Ideal closure;
  std::uint64_t q = 1;  // Q(a), a power of p
  /// c_0, ..., c_{preperiod+period}; c_n = {r : r^{p^n} ∈ a^{[p^n]}}.
  std::vector<Ideal> chain;
  std::size_t preperiod = 0;
  std::size_t period = 1;
};

FrobeniusClosure frobenius_closure(const FiniteAlgebra& a, const Ideal& ideal);

// --- builders --------------------------------------------------------------

AlgebraRef prime_field(Elem p);
/// F_p[t]/(t^n), basis 1, t, ..., t^{n-1}.
AlgebraRef truncated_polynomial(Elem p, std::size_t n, const std::string& var = "t");
/// F_p[u]/(g) for monic g given by its coefficients g_0..g_{deg-1} (leading 1 omitted).
AlgebraRef polynomial_quotient(Elem p, const std::vector<Elem>& lower_coeffs, const std::string& var = "u");
AlgebraRef product_algebra(const FiniteAlgebra& a, const FiniteAlgebra& b);
/// F_p[s,t]/(s,t)^2, basis 1, s, t.
AlgebraRef square_zero_plane(Elem p);

/// All valid local algebras of dimension ≤ max_dim over F_p with e_0 = 1, found
/// by searching the free structure constants (many are isomorphic).
std::vector<AlgebraRef> enumerate_local_algebras(Elem p, std::size_t max_dim);

/// Sampling helpers shared by tests and suites.
Vec element_from_index(const FiniteAlgebra& a, std::uint64_t index);

}  // namespace froblab
