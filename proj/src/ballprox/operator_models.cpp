#include "ballprox/operator_models.hpp"

#include <algorithm>
#include <cmath>

#include "ballprox/errors.hpp"
#include "ballprox/jacobi_svd.hpp"

namespace ballprox {
namespace {

void require_finite(const std::vector<double>& xs, const char* field) {
  for (double x : xs)
    if (!std::isfinite(x)) throw ValidationError(std::string(field) + " must contain finite numbers", field);
}

double max_abs(const std::vector<double>& xs) {
  double best = 0.0;
  for (double x : xs) best = std::max(best, std::abs(x));
  return best;
}

}  // namespace

HilbertOperator::HilbertOperator(HilbertShape shape, std::vector<double> entries, Matrix block, TailRule tail)
    : shape_(shape), explicit_(std::move(entries)), block_(std::move(block)), tail_(tail) {}

HilbertOperator HilbertOperator::diagonal(std::vector<double> entries, TailRule tail) {
  require_finite(entries, "explicit");
  return HilbertOperator(HilbertShape::Diagonal, std::move(entries), Matrix{}, tail);
}

HilbertOperator HilbertOperator::weighted_shift(std::vector<double> weights, TailRule tail) {
  require_finite(weights, "explicit");
  return HilbertOperator(HilbertShape::WeightedShift, std::move(weights), Matrix{}, tail);
}

HilbertOperator HilbertOperator::finite_matrix(Matrix block) {
  if (block.rows() != block.cols()) throw ValidationError("matrix block must be square", "matrix");
  require_finite(block.data(), "matrix");
  return HilbertOperator(HilbertShape::FiniteMatrix, {}, std::move(block), TailRule::constant(0.0));
}

double HilbertOperator::entry(std::size_t n) const {
  if (!is_sequence_model()) throw ValidationError("entry() needs a diagonal or shift model");
  if (n < explicit_.size()) return explicit_[n];
  return tail_.entry(n - explicit_.size() + 1);
}

HilbertOperator HilbertOperator::scaled(double c) const {
  if (!std::isfinite(c)) throw ValidationError("scalar must be finite");
  std::vector<double> e = explicit_;
  for (double& x : e) x *= c;
  return HilbertOperator(shape_, std::move(e), c * block_, tail_.scaled(c));
}

std::string to_string(HilbertShape shape) {
  switch (shape) {
    case HilbertShape::Diagonal: return "diagonal";
    case HilbertShape::WeightedShift: return "shift";
    case HilbertShape::FiniteMatrix: return "matrix";
  }
  return "unknown";
}

L1Operator::L1Operator(std::vector<std::vector<double>> columns, std::vector<double> tail_weights, TailRule tail)
    : columns_(std::move(columns)), tail_weights_(std::move(tail_weights)), tail_(tail) {
  for (const auto& c : columns_) require_finite(c, "columns");
  require_finite(tail_weights_, "tail_weights");
  if (tail_.kind() != TailKind::Const)
    throw ValidationError("l1 tail weights must end in a const tail", "tail.kind");
}

std::size_t L1Operator::explicit_row_count() const noexcept {
  std::size_t rows = 0;
  for (const auto& c : columns_) rows = std::max(rows, c.size());
  return rows;
}

double L1Operator::tail_weight(std::size_t i) const {
  if (i < tail_weights_.size()) return tail_weights_[i];
  return tail_.entry(i - tail_weights_.size() + 1);
}

L1Operator L1Operator::scaled(double c) const {
  if (!std::isfinite(c)) throw ValidationError("scalar must be finite");
  auto cols = columns_;
  for (auto& col : cols)
    for (double& x : col) x *= c;
  auto w = tail_weights_;
  for (double& x : w) x *= c;
  return L1Operator(std::move(cols), std::move(w), tail_.scaled(c));
}

double column_mass(const std::vector<double>& column) {
  double s = 0.0;
  for (double x : column) s += std::abs(x);
  return s;
}

double op_norm(const HilbertOperator& t) {
  if (t.shape() == HilbertShape::FiniteMatrix) return spectral_norm(t.block());
  return std::max(max_abs(t.explicit_entries()), t.tail().sup_abs());
}

double op_norm(const L1Operator& t) {
  double best = std::max(max_abs(t.tail_weights()), t.tail().sup_abs());
  for (const auto& c : t.columns()) best = std::max(best, column_mass(c));
  return best;
}

double op_norm(const Operator& t) {
  return std::visit([](const auto& x) { return op_norm(x); }, t);
}

double ess_norm(const HilbertOperator& t) {
  return t.shape() == HilbertShape::FiniteMatrix ? 0.0 : t.tail().sup_abs();
}

double ess_norm(const L1Operator& t) { return t.tail().sup_abs(); }

double ess_norm(const Operator& t) {
  return std::visit([](const auto& x) { return ess_norm(x); }, t);
}

bool attains_norm(const HilbertOperator& t) {
  if (t.shape() == HilbertShape::FiniteMatrix || t.tail().attains_sup()) return true;
  return max_abs(t.explicit_entries()) >= t.tail().sup_abs();
}

Matrix finite_section(const HilbertOperator& t, std::size_t n) {
  if (n == 0) throw ValidationError("section size must be positive", "N");
  switch (t.shape()) {
    case HilbertShape::FiniteMatrix:
      if (n < t.block().rows()) throw ValidationError("section smaller than the matrix block", "N");
      return t.block().resized(n, n);
    case HilbertShape::Diagonal: {
      if (n < t.explicit_entries().size()) throw ValidationError("section smaller than the explicit part", "N");
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) m(i, i) = t.entry(i);
      return m;
    }
    case HilbertShape::WeightedShift: {
      if (n < t.explicit_entries().size()) throw ValidationError("section smaller than the explicit part", "N");
      Matrix m(n, n);
      for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = t.entry(i);
      return m;
    }
  }
  return {};
}

Matrix finite_section(const L1Operator& t, std::size_t n) {
  if (n == 0) throw ValidationError("section size must be positive", "N");
  if (n < t.explicit_column_count() || n < t.explicit_row_count())
    throw ValidationError("section smaller than the explicit part", "N");
  Matrix m(n, n);
  const std::size_t j_count = t.explicit_column_count();
  for (std::size_t j = 0; j < j_count; ++j)
    for (std::size_t i = 0; i < t.columns()[j].size(); ++i) m(i, j) = t.columns()[j][i];
  for (std::size_t j = j_count; j + 1 < n; ++j) m(j + 1, j) = t.tail_weight(j - j_count);
  return m;
}

double residual_norm(const HilbertOperator& t, const HilbertOperator& k) {
  if (t.shape() != k.shape()) throw ValidationError("residual needs operators of the same model class");
  if (!k.tail().is_zero()) throw ValidationError("competitor must have a zero tail", "tail");
  if (t.shape() == HilbertShape::FiniteMatrix) {
    const std::size_t n = std::max(t.block().rows(), k.block().rows());
    return spectral_norm(t.block().resized(n, n) - k.block().resized(n, n));
  }
  const std::size_t len = std::max(t.explicit_entries().size(), k.explicit_entries().size());
  double best = t.tail().sup_abs();
  for (std::size_t n = 0; n < len; ++n) best = std::max(best, std::abs(t.entry(n) - k.entry(n)));
  return best;
}

double residual_norm(const L1Operator& t, const L1Operator& k) {
  if (!k.tail().is_zero()) throw ValidationError("competitor must have a zero tail", "tail");
  if (t.explicit_column_count() != k.explicit_column_count())
    throw ValidationError("competitor must have the same explicit columns", "columns");
  double best = t.tail().sup_abs();
  for (std::size_t j = 0; j < t.explicit_column_count(); ++j) {
    const auto& a = t.columns()[j];
    const auto& b = k.columns()[j];
    double mass = 0.0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
      mass += std::abs((i < a.size() ? a[i] : 0.0) - (i < b.size() ? b[i] : 0.0));
    best = std::max(best, mass);
  }
  const std::size_t len = std::max(t.tail_weights().size(), k.tail_weights().size());
  for (std::size_t i = 0; i < len; ++i) best = std::max(best, std::abs(t.tail_weight(i) - k.tail_weight(i)));
  return best;
}

}  // namespace ballprox
