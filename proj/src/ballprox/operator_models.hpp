#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ballprox/matrix.hpp"
#include "ballprox/tail_rule.hpp"

namespace ballprox {

enum class HilbertShape { Diagonal, WeightedShift, FiniteMatrix };

/// Operator on l2 from one of three model classes:
///   Diagonal       T e_n = t_n e_n
///   WeightedShift  T e_n = w_n e_{n+1}
///   FiniteMatrix   dense m x m block embedded as T (+) 0
/// Diagonal and shift operators carry a finite explicit prefix followed by a
/// TailRule; the n-th entry (0-based) is explicit[n] for n < size and
/// tail.entry(n - size + 1) afterwards.
class HilbertOperator {
 public:
  /// The zero diagonal operator.
  HilbertOperator() : HilbertOperator(HilbertShape::Diagonal, {}, Matrix{}, TailRule{}) {}

  static HilbertOperator diagonal(std::vector<double> entries, TailRule tail);
  static HilbertOperator weighted_shift(std::vector<double> weights, TailRule tail);
  static HilbertOperator finite_matrix(Matrix block);

  HilbertShape shape() const noexcept { return shape_; }
  bool is_sequence_model() const noexcept { return shape_ != HilbertShape::FiniteMatrix; }

  /// Explicit diagonal entries or shift weights (empty for FiniteMatrix).
  const std::vector<double>& explicit_entries() const noexcept { return explicit_; }
  /// Dense block (empty unless FiniteMatrix).
  const Matrix& block() const noexcept { return block_; }
  /// Tail rule; FiniteMatrix reports Const(0).
  const TailRule& tail() const noexcept { return tail_; }

  /// n-th entry of the full sequence (sequence models only).
  double entry(std::size_t n) const;

  HilbertOperator scaled(double c) const;

  bool operator==(const HilbertOperator&) const = default;

 private:
  HilbertOperator(HilbertShape shape, std::vector<double> entries, Matrix block, TailRule tail);

  HilbertShape shape_;
  std::vector<double> explicit_;
  Matrix block_;
  TailRule tail_;
};

/// Operator on l1 given by its columns: finitely many explicit columns
/// 0..J-1 (dense row vectors, finitely supported), then single-entry columns
/// j >= J carrying the weight tail_weight(j - J) in row j + 1. The tail
/// weights are a finite list followed by a Const tail rule.
class L1Operator {
 public:
  L1Operator() = default;
  L1Operator(std::vector<std::vector<double>> columns, std::vector<double> tail_weights, TailRule tail);

  const std::vector<std::vector<double>>& columns() const noexcept { return columns_; }
  const std::vector<double>& tail_weights() const noexcept { return tail_weights_; }
  const TailRule& tail() const noexcept { return tail_; }

  std::size_t explicit_column_count() const noexcept { return columns_.size(); }
  /// Number of rows touched by the explicit columns.
  std::size_t explicit_row_count() const noexcept;

  /// Weight of the i-th single-entry tail column (0-based, i.e. column J + i).
  double tail_weight(std::size_t i) const;

  L1Operator scaled(double c) const;

  bool operator==(const L1Operator&) const = default;

 private:
  std::vector<std::vector<double>> columns_;
  std::vector<double> tail_weights_;
  TailRule tail_;
};

using Operator = std::variant<HilbertOperator, L1Operator>;

double column_mass(const std::vector<double>& column);

/// Exact operator norm: spectral norm for l2 models, maximum column mass for
/// l1 models.
double op_norm(const HilbertOperator& t);
double op_norm(const L1Operator& t);
double op_norm(const Operator& t);

/// Distance to the compact operators: |tail limit| (0 for FiniteMatrix).
double ess_norm(const HilbertOperator& t);
double ess_norm(const L1Operator& t);
double ess_norm(const Operator& t);

/// Whether the supremum defining op_norm is achieved by an explicit entry,
/// a singular value or a Const tail.
bool attains_norm(const HilbertOperator& t);

/// Compression to the first n basis vectors. Throws ValidationError when n
/// does not cover the explicit part.
Matrix finite_section(const HilbertOperator& t, std::size_t n);
Matrix finite_section(const L1Operator& t, std::size_t n);

/// Operator norm of t - k for a compact model instance k of the same class
/// (k must have a zero tail). Computed in closed form from the entries.
double residual_norm(const HilbertOperator& t, const HilbertOperator& k);
double residual_norm(const L1Operator& t, const L1Operator& k);

std::string to_string(HilbertShape shape);

}  // namespace ballprox
