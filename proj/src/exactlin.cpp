#include "cohiggs/exactlin.hpp"

#include <algorithm>
#include <stdexcept>

#include "cohiggs/errors.hpp"

namespace cohiggs {

Scalar parse_scalar(const std::string& text) {
  Scalar s;
  if (text.empty() || s.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (s.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  s.canonicalize();
  return s;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x == 0; });
}

Vector add(const Vector& a, const Vector& b) {
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

void axpy(Vector& v, const Scalar& s, const Vector& w) {
  if (s == 0) return;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != 0) v[i] += s * w[i];
  }
}

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v(dim);
  v.at(index) = 1;
  return v;
}

Vector concat(const std::vector<Vector>& parts) {
  Vector out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged row in Matrix::from_rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("ragged column in Matrix::from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in Matrix::apply");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (a != 0 && v[c] != 0) acc += a * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in Matrix::operator*");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        if (other(k, c) != 0) out(r, c) += a * other(k, c);
      }
    }
  return out;
}

Matrix Matrix::permuted(const std::vector<std::size_t>& row_order,
                        const std::vector<std::size_t>& col_order) const {
  Matrix out(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(row_order[r], col_order[c]);
  return out;
}

namespace {

// Gauss-Jordan on a list of rows; returns pivot columns. Rows are left in
// reduced echelon form with zero rows moved to the end.
std::vector<std::size_t> reduce_rows(std::vector<Vector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    std::size_t found = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r][c] != 0) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    Vector& prow = rows[next];
    const Scalar inv = 1 / prow[c];
    for (std::size_t j = c; j < cols; ++j) {
      if (prow[j] != 0) prow[j] *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][c] == 0) continue;
      const Scalar f = rows[r][c];
      Vector& target = rows[r];
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j] != 0) target[j] -= f * prow[j];
      }
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

Echelon rref(Matrix m) {
  auto rows = rows_of(m);
  auto pivots = reduce_rows(rows, m.cols());
  return {Matrix::from_rows(rows, m.cols()), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  auto rows = rows_of(m);
  return reduce_rows(rows, m.cols()).size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  auto rows = rows_of(m);
  const auto pivots = reduce_rows(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> kernel;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
    kernel.push_back(std::move(v));
  }
  return canonical_basis(kernel, m.cols());
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
  std::vector<Vector> rows = rows_of(m);
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(b[r]);
  const auto pivots = reduce_rows(rows, m.cols() + 1);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][m.cols()];
  return x;
}

std::vector<Vector> canonical_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  std::vector<Vector> rows = vectors;
  const auto pivots = reduce_rows(rows, dim);
  rows.resize(pivots.size());
  return rows;
}

std::size_t span_dim(const std::vector<Vector>& vectors, std::size_t dim) {
  std::vector<Vector> rows = vectors;
  return reduce_rows(rows, dim).size();
}

std::size_t subspace_quotient_dim(const std::vector<Vector>& span_a,
                                  const std::vector<Vector>& span_b) {
  std::size_t dim = 0;
  if (!span_a.empty()) dim = span_a.front().size();
  else if (!span_b.empty()) dim = span_b.front().size();
  const Subspace a(span_a, dim);
  for (std::size_t i = 0; i < span_b.size(); ++i) {
    if (!a.contains(span_b[i])) {
      throw ContainmentViolation("vector " + std::to_string(i) +
                                 " of the subspace lies outside the ambient span");
    }
  }
  return a.dim() - span_dim(span_b, dim);
}

Subspace::Subspace(const std::vector<Vector>& spanning, std::size_t ambient_dim)
    : ambient_(ambient_dim) {
  basis_ = spanning;
  for (const auto& v : basis_) {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: vector of wrong dimension");
  }
  pivots_ = reduce_rows(basis_, ambient_);
  basis_.resize(pivots_.size());
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (!is_pivot[c]) free_.push_back(c);
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: wrong dimension");
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar f = v[pivots_[i]];
    if (f != 0) axpy(v, -f, basis_[i]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

Vector Subspace::coordinates_of(const Vector& v) const {
  if (!contains(v)) throw ContainmentViolation("Subspace::coordinates_of: vector not in subspace");
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vector Subspace::quotient_coordinates(const Vector& v) const {
  const Vector r = reduce(v);
  Vector c(free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i) c[i] = r[free_[i]];
  return c;
}

Vector Subspace::lift(const Vector& quotient_coords) const {
  if (quotient_coords.size() != free_.size()) throw std::invalid_argument("Subspace::lift: wrong dimension");
  Vector v(ambient_);
  for (std::size_t i = 0; i < free_.size(); ++i) v[free_[i]] = quotient_coords[i];
  return v;
}

}  // namespace cohiggs
