#pragma once

// Exact dense linear algebra over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace froblab {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Single-word prime modulus with field arithmetic.
class PrimeField {
 public:
  explicit PrimeField(Elem p);

  Elem p() const noexcept { return p_; }
  Elem reduce(std::int64_t v) const noexcept;
  Elem add(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} + b) % p_); }
  Elem sub(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} + p_ - b) % p_); }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} * b) % p_); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem inv(Elem a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Elem p_;
};

// Vector helpers; all arguments must share the modulus p.
Vec vec_add(Elem p, const Vec& a, const Vec& b);
Vec vec_sub(Elem p, const Vec& a, const Vec& b);
Vec vec_scale(Elem p, Elem c, const Vec& a);
bool vec_is_zero(const Vec& a) noexcept;
Vec unit_vector(std::size_t n, std::size_t i);
Elem dot(Elem p, const Vec& a, const Vec& b);

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(Elem p, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p.
  FpMatrix(Elem p, std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major);

  static FpMatrix zero(Elem p, std::size_t rows, std::size_t cols) { return FpMatrix(p, rows, cols); }
  static FpMatrix identity(Elem p, std::size_t n);
  static FpMatrix from_rows(Elem p, std::size_t cols, const std::vector<Vec>& rows);
  static FpMatrix from_columns(Elem p, std::size_t rows, const std::vector<Vec>& cols);
  static FpMatrix scalar(Elem p, std::size_t n, Elem c);

  Elem p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v);
  std::span<const Elem> data() const noexcept { return data_; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_column(std::size_t c, const Vec& v);

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix operator*(const FpMatrix& o) const;
  Vec operator*(const Vec& v) const;
  FpMatrix scaled(Elem c) const;
  FpMatrix transpose() const;
  FpMatrix pow(std::uint64_t k) const;

  bool is_zero() const noexcept;
  bool is_identity() const noexcept;

  /// Rows/columns stacked; the vectorisation is row-major.
  Vec flatten() const { return data_; }
  static FpMatrix unflatten(Elem p, std::size_t rows, std::size_t cols, const Vec& v);

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

  std::string to_string() const;

 private:
  void check_same_shape(const FpMatrix& o, const char* op) const;

  Elem p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b);
/// Matrix K with flatten(L·P·R) = K·flatten(P) for P of shape L.cols() × R.rows().
FpMatrix kron_operator(const FpMatrix& left, const FpMatrix& right);

struct RrefResult {
  FpMatrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);
std::optional<FpMatrix> inverse(const FpMatrix& m);

/// A subspace of F_p^n held by its reduced echelon basis, so equal subspaces
/// have identical data.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Elem p, std::size_t ambient_dim);
  static Subspace span(Elem p, std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(Elem p, std::size_t ambient_dim);

  Elem p() const noexcept { return p_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  bool is_full() const noexcept { return basis_.size() == ambient_; }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Canonical representative of v modulo this subspace (zero at pivots).
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(); nullopt if v is not in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  /// Matrix whose columns are the basis vectors.
  FpMatrix basis_matrix() const;
  /// Orthogonal complement under the standard bilinear form.
  Subspace perp() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace& a, const Subspace& b) {
    return a.basis_ <=> b.basis_;
  }

 private:
  Elem p_ = 2;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const FpMatrix& m);
Subspace image(const FpMatrix& m);
std::optional<Vec> solve(const FpMatrix& m, const Vec& b);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_eq(const Subspace& a, const Subspace& b);
/// Vectors of `a` whose classes form a basis of a / sub. Requires sub ⊆ a.
std::vector<Vec> quotient_basis(const Subspace& a, const Subspace& sub);

/// m(S) and m^{-1}(S).
Subspace image_of(const FpMatrix& m, const Subspace& s);
Subspace preimage(const FpMatrix& m, const Subspace& s);

/// Index <-> vector bijection used by exhaustive enumerations over F_p^n.
Vec vector_from_index(Elem p, std::size_t n, std::uint64_t index);
/// p^n, or nullopt if it exceeds `cap`.
std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t n, std::uint64_t cap);

}  // namespace froblab
