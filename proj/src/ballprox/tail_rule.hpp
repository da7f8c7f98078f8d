#pragma once

#include <cstddef>

namespace ballprox {

enum class TailKind { Const, GeometricApproach };

/// Infinite tail of diagonal entries, shift weights or single-entry l1
/// columns. Tail entries are indexed from 1:
///   Const:             entry(k) = limit
///   GeometricApproach: entry(k) = limit * (1 - ratio^k), ratio in (0, 1)
/// A geometric tail never reaches its limit, so its supremum |limit| is not
/// attained.
class TailRule {
 public:
  /// Const(0).
  TailRule() = default;

  static TailRule constant(double value);
  static TailRule geometric(double limit, double ratio);

  TailKind kind() const noexcept { return kind_; }
  double limit() const noexcept { return limit_; }
  double ratio() const noexcept { return ratio_; }

  double entry(std::size_t k) const;
  double sup_abs() const;
  bool attains_sup() const noexcept { return kind_ == TailKind::Const; }
  bool is_zero() const noexcept { return kind_ == TailKind::Const && limit_ == 0.0; }

  /// Tail of c*T. Scaling a geometric tail by 0 collapses it to Const(0).
  TailRule scaled(double c) const;

  bool operator==(const TailRule&) const = default;

 private:
  TailRule(TailKind kind, double limit, double ratio) : kind_(kind), limit_(limit), ratio_(ratio) {}

  TailKind kind_ = TailKind::Const;
  double limit_ = 0.0;
  double ratio_ = 0.0;
};

}  // namespace ballprox
