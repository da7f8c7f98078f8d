#include "ballprox/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "ballprox/errors.hpp"

namespace ballprox {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ValidationError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::resized(std::size_t rows, std::size_t cols) const {
  Matrix r(rows, cols);
  for (std::size_t i = 0; i < std::min(rows, rows_); ++i)
    for (std::size_t j = 0; j < std::min(cols, cols_); ++j) r(i, j) = (*this)(i, j);
  return r;
}

Matrix& Matrix::operator*=(double c) {
  for (double& x : data_) x *= c;
  return *this;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix shape mismatch");
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ValidationError("matrix shape mismatch");
  Matrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

double max_abs_entry(const Matrix& m) {
  double best = 0.0;
  for (double x : m.data()) best = std::max(best, std::abs(x));
  return best;
}

double max_column_sum(const Matrix& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace ballprox
