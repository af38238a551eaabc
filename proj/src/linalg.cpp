#include "ftvs/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "ftvs/domain.hpp"

namespace ftvs::linalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw ArgumentError("matrix data length mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_columns(std::span<const std::vector<double>> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ArgumentError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const std::vector<double>> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ArgumentError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

std::vector<double> Matrix::apply(std::span<const double> x) const {
  if (x.size() != cols_) throw ArgumentError("matrix-vector dimension mismatch");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

struct Echelon {
  Matrix a;
  std::vector<double> b;
  std::vector<std::size_t> pivot_cols;  // pivot column of row i
};

// Forward elimination with partial pivoting; rows [0, pivot_cols.size())
// carry pivots, the rest are numerically zero in the coefficient part.
Echelon eliminate(Matrix a, std::vector<double> b, double tolerance) {
  const double threshold = tolerance * std::max(a.max_abs(), 0.0);
  Echelon e{std::move(a), std::move(b), {}};
  Matrix& m = e.a;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (std::abs(m(r, col)) > std::abs(m(best, col))) best = r;
    }
    if (!(std::abs(m(best, col)) > threshold)) continue;
    if (best != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(best, c), m(row, c));
      std::swap(e.b[best], e.b[row]);
    }
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      const double f = m(r, col) / m(row, col);
      if (f == 0.0) continue;
      m(r, col) = 0.0;
      for (std::size_t c = col + 1; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
      e.b[r] -= f * e.b[row];
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

std::size_t rank(const Matrix& a, double tolerance) {
  if (a.rows() == 0 || a.cols() == 0 || a.max_abs() == 0.0) return 0;
  return eliminate(a, std::vector<double>(a.rows(), 0.0), tolerance).pivot_cols.size();
}

std::optional<std::vector<double>> solve(const Matrix& a, std::span<const double> b, double tolerance) {
  if (b.size() != a.rows()) throw ArgumentError("right-hand side length mismatch");
  double scale = a.max_abs();
  for (double v : b) scale = std::max(scale, std::abs(v));
  if (a.cols() == 0 || a.max_abs() == 0.0) {
    for (double v : b) {
      if (std::abs(v) > tolerance * std::max(scale, 1.0)) return std::nullopt;
    }
    return std::vector<double>(a.cols(), 0.0);
  }
  Echelon e = eliminate(a, std::vector<double>(b.begin(), b.end()), tolerance);
  const std::size_t pivots = e.pivot_cols.size();
  for (std::size_t r = pivots; r < e.a.rows(); ++r) {
    if (std::abs(e.b[r]) > tolerance * std::max(scale, 1.0)) return std::nullopt;
  }
  std::vector<double> x(a.cols(), 0.0);
  for (std::size_t i = pivots; i-- > 0;) {
    const std::size_t col = e.pivot_cols[i];
    double acc = e.b[i];
    for (std::size_t c = col + 1; c < e.a.cols(); ++c) acc -= e.a(i, c) * x[c];
    x[col] = acc / e.a(i, col);
  }
  return x;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ArgumentError("vector length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace ftvs::linalg
