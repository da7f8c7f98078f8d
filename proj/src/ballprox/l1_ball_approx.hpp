#pragma once

#include <cstddef>
#include <vector>

#include "ballprox/ball_approx_result.hpp"
#include "ballprox/operator_models.hpp"

namespace ballprox {

using L1Approx = BallApproxResult<L1Operator>;

/// max(|T| - 1, R, 0) where R is the row-tail limit (ess_norm).
double dist_ball_l1(const L1Operator& t);

/// Column truncation: keeps the head of `column` and cuts its row tail so
/// that exactly mass d remains in the residual. Returns 0 when the column
/// mass is at most d. Requires d >= 0.
std::vector<double> truncate_column(const std::vector<double>& column, double d);

/// Applies truncate_column at d = dist_ball_l1(T) to every column, explicit
/// and tail.
L1Approx best_ball_approx_l1(const L1Operator& t);

/// max over the first n columns of (column mass - 1)_+. A lower bound on the
/// distance to the ball; requires n to cover every explicit column.
double finite_column_oracle(const L1Operator& t, std::size_t n);

}  // namespace ballprox
