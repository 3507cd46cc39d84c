#include "froblab/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace froblab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(Elem p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Elem PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  std::uint64_t result = 1 % p_, base = a % p_;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<Elem>(result);
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

Vec vec_add(Elem p, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vec_add: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<Elem>((std::uint64_t{a[i]} + b[i]) % p);
  return r;
}

Vec vec_sub(Elem p, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vec_sub: length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<Elem>((std::uint64_t{a[i]} + p - b[i]) % p);
  return r;
}

Vec vec_scale(Elem p, Elem c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<Elem>(std::uint64_t{a[i]} * c % p);
  return r;
}

bool vec_is_zero(const Vec& a) noexcept {
  return std::all_of(a.begin(), a.end(), [](Elem e) { return e == 0; });
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

Elem dot(Elem p, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = (acc + std::uint64_t{a[i]} * b[i]) % p;
  return static_cast<Elem>(acc);
}

// ---------------------------------------------------------------------------

FpMatrix::FpMatrix(Elem p, std::size_t rows, std::size_t cols)
    : p_(PrimeField(p).p()), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix::FpMatrix(Elem p, std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major)
    : FpMatrix(p, rows, cols) {
  if (row_major.size() != rows * cols) throw DimensionError("FpMatrix: entry count does not match shape");
  PrimeField f(p);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = f.reduce(row_major[i]);
}

FpMatrix FpMatrix::identity(Elem p, std::size_t n) { return scalar(p, n, 1); }

FpMatrix FpMatrix::scalar(Elem p, std::size_t n, Elem c) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = c % p;
  return m;
}

FpMatrix FpMatrix::from_rows(Elem p, std::size_t cols, const std::vector<Vec>& rows) {
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_rows: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = rows[r][c] % p;
  }
  return m;
}

FpMatrix FpMatrix::from_columns(Elem p, std::size_t rows, const std::vector<Vec>& cols) {
  FpMatrix m(p, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  if (r >= rows_ || c >= cols_) throw DimensionError("FpMatrix::set out of range");
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  data_[r * cols_ + c] = static_cast<Elem>(m < 0 ? m + p_ : m);
}

Vec FpMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec FpMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = data_[r * cols_ + c];
  return v;
}

void FpMatrix::set_column(std::size_t c, const Vec& v) {
  if (v.size() != rows_ || c >= cols_) throw DimensionError("set_column: shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + c] = v[r] % p_;
}

void FpMatrix::check_same_shape(const FpMatrix& o, const char* op) const {
  if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError(std::string(op) + ": shape or modulus mismatch");
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  check_same_shape(o, "operator+");
  FpMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = static_cast<Elem>((std::uint64_t{data_[i]} + o.data_[i]) % p_);
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  check_same_shape(o, "operator-");
  FpMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i)
    r.data_[i] = static_cast<Elem>((std::uint64_t{data_[i]} + p_ - o.data_[i]) % p_);
  return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw DimensionError("operator*: inner dimension mismatch");
  FpMatrix r(p_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = data_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        auto& dst = r.data_[i * o.cols_ + j];
        dst = static_cast<Elem>((dst + a * o.data_[k * o.cols_ + j]) % p_);
      }
    }
  return r;
}

Vec FpMatrix::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector: length mismatch");
  Vec r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) acc = (acc + std::uint64_t{data_[i * cols_ + k]} * v[k]) % p_;
    r[i] = static_cast<Elem>(acc);
  }
  return r;
}

FpMatrix FpMatrix::scaled(Elem c) const {
  FpMatrix r(*this);
  for (auto& e : r.data_) e = static_cast<Elem>(std::uint64_t{e} * c % p_);
  return r;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix r(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.data_[j * rows_ + i] = data_[i * cols_ + j];
  return r;
}

FpMatrix FpMatrix::pow(std::uint64_t k) const {
  if (rows_ != cols_) throw DimensionError("pow: matrix not square");
  FpMatrix result = identity(p_, rows_), base = *this;
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool FpMatrix::is_zero() const noexcept { return vec_is_zero(data_); }

bool FpMatrix::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (data_[i * cols_ + j] != (i == j ? 1u : 0u)) return false;
  return true;
}

FpMatrix FpMatrix::unflatten(Elem p, std::size_t rows, std::size_t cols, const Vec& v) {
  if (v.size() != rows * cols) throw DimensionError("unflatten: length mismatch");
  FpMatrix m(p, rows, cols);
  for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = v[i] % p;
  return m;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << data_[r * cols_ + c];
    os << ']';
  }
  os << ']';
  return os.str();
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows() || a.p() != b.p()) throw DimensionError("hstack: row mismatch");
  FpMatrix r(a.p(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b(i, j));
  }
  return r;
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols() != b.cols() || a.p() != b.p()) throw DimensionError("vstack: column mismatch");
  FpMatrix r(a.p(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) r.set(i, j, a(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i) r.set(a.rows() + i, j, b(i, j));
  }
  return r;
}

FpMatrix kron_operator(const FpMatrix& left, const FpMatrix& right) {
  if (left.p() != right.p()) throw DimensionError("kron_operator: modulus mismatch");
  const std::size_t r = left.rows(), m = left.cols(), q = right.rows(), c = right.cols();
  FpMatrix out(left.p(), r * c, m * q);
  const PrimeField f(left.p());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      const Elem l = left(i, a);
      if (l == 0) continue;
      for (std::size_t j = 0; j < c; ++j)
        for (std::size_t b = 0; b < q; ++b) out.set(i * c + j, a * q + b, f.mul(l, right(b, j)));
    }
  return out;
}

FpMatrix block_diagonal(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p()) throw DimensionError("block_diagonal: modulus mismatch");
  FpMatrix r(a.p(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.set(a.rows() + i, a.cols() + j, b(i, j));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// In-place Gauss-Jordan elimination on a row list.
std::vector<std::size_t> eliminate(Elem p, std::vector<Vec>& rows, std::size_t cols) {
  PrimeField f(p);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Elem inv = f.inv(rows[r][c]);
    for (auto& e : rows[r]) e = f.mul(e, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t factor = rows[i][c];
      for (std::size_t k = c; k < cols; ++k)
        rows[i][k] = static_cast<Elem>((rows[i][k] + (p - factor) * rows[r][k]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vec> to_rows(const FpMatrix& m) {
  std::vector<Vec> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = m.row(r);
  return rows;
}

}  // namespace

RrefResult rref(const FpMatrix& m) {
  auto rows = to_rows(m);
  auto pivots = eliminate(m.p(), rows, m.cols());
  RrefResult res;
  res.rank = rows.size();
  res.pivots = std::move(pivots);
  rows.resize(m.rows(), Vec(m.cols(), 0));
  res.matrix = m.rows() ? FpMatrix::from_rows(m.p(), m.cols(), rows) : FpMatrix(m.p(), 0, m.cols());
  return res;
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix not square");
  const std::size_t n = m.rows();
  auto aug = rref(hstack(m, FpMatrix::identity(m.p(), n)));
  if (aug.rank < n || (n > 0 && aug.pivots[n - 1] >= n)) return std::nullopt;
  FpMatrix inv(m.p(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, aug.matrix(i, n + j));
  return inv;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(Elem p, std::size_t ambient_dim) : p_(PrimeField(p).p()), ambient_(ambient_dim) {}

Subspace Subspace::span(Elem p, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(p, ambient_dim);
  std::vector<Vec> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw DimensionError("Subspace::span: vector length mismatch");
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] % p;
    rows.push_back(std::move(r));
  }
  s.pivots_ = eliminate(p, rows, ambient_dim);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::full(Elem p, std::size_t ambient_dim) {
  std::vector<Vec> units;
  for (std::size_t i = 0; i < ambient_dim; ++i) units.push_back(unit_vector(ambient_dim, i));
  return span(p, ambient_dim, units);
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("Subspace::reduce: length mismatch");
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] % p_;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::uint64_t c = r[pivots_[k]];
    if (c == 0) continue;
    for (std::size_t i = 0; i < ambient_; ++i)
      r[i] = static_cast<Elem>((r[i] + (p_ - c) * basis_[k][i]) % p_);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("Subspace::contains: ambient mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]] % p_;
  return c;
}

FpMatrix Subspace::basis_matrix() const { return FpMatrix::from_columns(p_, ambient_, basis_); }

Subspace Subspace::perp() const {
  if (basis_.empty()) return full(p_, ambient_);
  return kernel(FpMatrix::from_rows(p_, ambient_, basis_));
}

Subspace kernel(const FpMatrix& m) {
  auto red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < red.rank; ++k) {
      const Elem e = red.matrix(k, free);
      v[red.pivots[k]] = e == 0 ? 0 : m.p() - e;
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.p(), n, gens);
}

Subspace image(const FpMatrix& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.p(), m.rows(), cols);
}

std::optional<Vec> solve(const FpMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  FpMatrix rhs(m.p(), m.rows(), 1);
  rhs.set_column(0, b);
  auto red = rref(hstack(m, rhs));
  const std::size_t n = m.cols();
  if (red.rank > 0 && red.pivots[red.rank - 1] == n) return std::nullopt;
  Vec x(n, 0);
  for (std::size_t k = 0; k < red.rank; ++k) x[red.pivots[k]] = red.matrix(k, n);
  return x;
}

namespace {
void check_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim() || a.p() != b.p())
    throw DimensionError(std::string(op) + ": ambient mismatch");
}
}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b, "subspace_sum");
  auto vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.p(), a.ambient_dim(), vs);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_ambient(a, b, "subspace_intersect");
  return subspace_sum(a.perp(), b.perp()).perp();
}

bool subspace_eq(const Subspace& a, const Subspace& b) {
  check_ambient(a, b, "subspace_eq");
  return a == b;
}

std::vector<Vec> quotient_basis(const Subspace& a, const Subspace& sub) {
  check_ambient(a, sub, "quotient_basis");
  if (!a.contains(sub)) throw DimensionError("quotient_basis: sub is not contained in a");
  std::vector<Vec> reps;
  auto acc = sub;
  for (const auto& v : a.basis()) {
    if (acc.contains(v)) continue;
    reps.push_back(v);
    acc = subspace_sum(acc, Subspace::span(a.p(), a.ambient_dim(), {v}));
  }
  return reps;
}

Subspace image_of(const FpMatrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionError("image_of: dimension mismatch");
  std::vector<Vec> vs;
  for (const auto& v : s.basis()) vs.push_back(m * v);
  return Subspace::span(m.p(), m.rows(), vs);
}

Subspace preimage(const FpMatrix& m, const Subspace& s) {
  if (m.rows() != s.ambient_dim()) throw DimensionError("preimage: dimension mismatch");
  const auto annihilator = s.perp();
  if (annihilator.is_zero()) return Subspace::full(m.p(), m.cols());
  return kernel(FpMatrix::from_rows(m.p(), m.rows(), annihilator.basis()) * m);
}

Vec vector_from_index(Elem p, std::size_t n, std::uint64_t index) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Elem>(index % p);
    index /= p;
  }
  return v;
}

std::optional<std::uint64_t> checked_power(std::uint64_t p, std::size_t n, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > cap / p) return std::nullopt;
    r *= p;
  }
  if (r > cap) return std::nullopt;
  return r;
}

}  // namespace froblab
