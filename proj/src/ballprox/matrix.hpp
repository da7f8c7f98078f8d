#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ballprox {

/// Dense row-major real matrix. Small by construction (at most a few dozen
/// rows), so no expression templates.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<double>& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const noexcept { return data_; }

  Matrix transposed() const;
  /// Copy padded with zeros (or truncated) to rows x cols.
  Matrix resized(std::size_t rows, std::size_t cols) const;

  Matrix& operator*=(double c);
  friend Matrix operator*(double c, Matrix m) { return m *= c; }
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

double max_abs_entry(const Matrix& m);
/// Maximum absolute column sum (the l1 -> l1 operator norm).
double max_column_sum(const Matrix& m);

}  // namespace ballprox
