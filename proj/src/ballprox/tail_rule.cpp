#include "ballprox/tail_rule.hpp"

#include <cmath>
#include <string>

#include "ballprox/errors.hpp"

namespace ballprox {

TailRule TailRule::constant(double value) {
  if (!std::isfinite(value)) throw ValidationError("tail value must be finite", "tail.value");
  return TailRule(TailKind::Const, value, 0.0);
}

TailRule TailRule::geometric(double limit, double ratio) {
  if (!std::isfinite(limit)) throw ValidationError("tail limit must be finite", "tail.limit");
  if (!std::isfinite(ratio) || !(ratio > 0.0 && ratio < 1.0))
    throw ValidationError("tail ratio must lie in (0, 1)", "tail.ratio");
  if (limit == 0.0)
    throw ValidationError("geometric tail needs a nonzero limit", "tail.limit");
  return TailRule(TailKind::GeometricApproach, limit, ratio);
}

double TailRule::entry(std::size_t k) const {
  if (k == 0) throw ValidationError("tail entries are indexed from 1");
  if (kind_ == TailKind::Const) return limit_;
  return limit_ * (1.0 - std::pow(ratio_, static_cast<double>(k)));
}

double TailRule::sup_abs() const { return std::abs(limit_); }

TailRule TailRule::scaled(double c) const {
  if (kind_ == TailKind::Const || c == 0.0) return constant(limit_ * c);
  return geometric(limit_ * c, ratio_);
}

}  // namespace ballprox
