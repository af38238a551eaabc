#ifndef FTVS_LINALG_HPP
#define FTVS_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ftvs::linalg {

/// Dense row-major matrix, just enough for span tests on small systems.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(std::span<const std::vector<double>> columns, std::size_t rows);
  static Matrix from_rows(std::span<const std::vector<double>> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<double>& data() const { return data_; }

  Matrix transpose() const;
  std::vector<double> apply(std::span<const double> x) const;
  double max_abs() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Pivot threshold relative to the largest entry.
inline constexpr double kPivotTolerance = 1e-9;

/// Rank via row reduction with partial pivoting. A column is a pivot column
/// when its best remaining entry exceeds `tolerance * max_abs()`.
std::size_t rank(const Matrix& a, double tolerance = kPivotTolerance);

/// Solves a x = b when the system is consistent; free variables are set to
/// zero. Returns nullopt when elimination leaves a nonzero right-hand side
/// on a row without a pivot.
std::optional<std::vector<double>> solve(const Matrix& a, std::span<const double> b,
                                         double tolerance = kPivotTolerance);

double max_abs_diff(std::span<const double> a, std::span<const double> b);

}  // namespace ftvs::linalg

#endif  // FTVS_LINALG_HPP
