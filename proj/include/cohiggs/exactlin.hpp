#pragma once

// Exact rational linear algebra over Q.
//
// Scalars are GMP rationals (always canonical: lowest terms, positive
// denominator). Matrices are dense and row-major. Row reduction uses a fixed
// pivot rule (leftmost nonzero column, topmost nonzero entry) so every echelon
// form, kernel basis and quotient representative is reproducible.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cohiggs {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "n" or "n/m" into a canonical rational. Throws std::invalid_argument.
Scalar parse_scalar(const std::string& text);
std::string to_string(const Scalar& s);

bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
/// v += s * w
void axpy(Vector& v, const Scalar& s, const Vector& w);
Vector unit_vector(std::size_t dim, std::size_t index);
Vector concat(const std::vector<Vector>& parts);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Every row must have length `cols`; `cols` is needed when `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& other) const;
  bool operator==(const Matrix& other) const = default;

  Matrix permuted(const std::vector<std::size_t>& row_order,
                  const std::vector<std::size_t>& col_order) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of row i, for i < rank
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0} in reduced row echelon form (canonical).
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Nonzero rows of the RREF of the span (canonical basis of the span).
std::vector<Vector> canonical_basis(const std::vector<Vector>& vectors, std::size_t dim);
std::size_t span_dim(const std::vector<Vector>& vectors, std::size_t dim);

/// dim span(a) - dim span(b) for span(b) contained in span(a).
/// Throws ContainmentViolation when some vector of `b` lies outside span(a).
std::size_t subspace_quotient_dim(const std::vector<Vector>& span_a,
                                  const std::vector<Vector>& span_b);

/// A subspace of Q^n held in reduced echelon form. Reduction modulo the
/// subspace clears the pivot coordinates, which gives a canonical
/// representative of every coset.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const std::vector<Vector>& spanning, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates not used as pivots; they index the quotient Q^n / U.
  const std::vector<std::size_t>& free_columns() const { return free_; }

  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  /// Coefficients of v in `basis()`; v must lie in the subspace.
  Vector coordinates_of(const Vector& v) const;
  /// Quotient coordinates (entries of reduce(v) at free columns).
  Vector quotient_coordinates(const Vector& v) const;
  /// Canonical representative with the given quotient coordinates.
  Vector lift(const Vector& quotient_coords) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
};

}  // namespace cohiggs
