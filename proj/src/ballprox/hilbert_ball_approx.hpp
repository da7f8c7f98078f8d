#pragma once

#include <cstddef>
#include <vector>

#include "ballprox/ball_approx_result.hpp"
#include "ballprox/operator_models.hpp"

namespace ballprox {

using HilbertApprox = BallApproxResult<HilbertOperator>;

/// max(|T| - 1, ess_norm(T), 0).
double dist_ball_h(const HilbertOperator& t);

/// Successive norm maximizers of a diagonal or shift model: at each step the
/// basis vector attaining the norm of T restricted to the complement of the
/// ones already chosen. Ties go to explicit entries, lower index first.
struct MaximizerEnumeration {
  /// Explicit indices, in the order they are chosen.
  std::vector<std::size_t> explicit_indices;
  /// True when the enumeration continues forever into a Const tail; false
  /// when it stops because the remaining supremum is not attained.
  bool continues_into_tail = false;
};

MaximizerEnumeration enumerate_maximizers(const HilbertOperator& t);

/// Best approximant following the case analysis:
///   compact input          T / max(|T|, 1)
///   |T| > 1, not attained  0
///   |T| > 1, attained      scaled head plus soft-thresholded remainder
///   |T| <= 1               soft-threshold every entry at ess_norm(T)
HilbertApprox best_ball_approx_h(const HilbertOperator& t);

/// Independent optimal approximant: soft-threshold every entry (singular
/// value for FiniteMatrix) at d = dist_ball_h(T).
HilbertApprox soft_threshold_approx(const HilbertOperator& t);

/// For a unimodular weighted shift V, checks d(aV, ball) == d(aV, compacts)
/// == |a| to 1e-12. Throws ValidationError if t is not such a shift.
bool isometry_distance_check(double a, const HilbertOperator& t);

/// Best approximant of a positive diagonal operator that is itself a positive
/// diagonal operator. Throws ValidationError on negative input entries.
HilbertApprox positive_ball_approx(const HilbertOperator& t);

}  // namespace ballprox
