#pragma once

#include <cstddef>
#include <cstdint>

#include "ballprox/matrix.hpp"
#include "ballprox/operator_models.hpp"

namespace ballprox {

/// Outcome of a competitor search. `pass` requires that no competitor beats
/// the claimed distance by more than `tol` and that some competitor attains
/// it within `tol`.
struct CompetitorReport {
  bool pass = false;
  bool attained = false;
  double claimed = 0.0;
  double best_found = 0.0;
  double tol = 0.0;
  std::size_t trials = 0;
  std::size_t evaluated = 0;
  Operator best_competitor = HilbertOperator{};
};

/// Samples compact competitors of norm <= 1 from the model class of t
/// (random entries or columns with a zero tail, perturbations of known
/// optimal candidates) together with deterministic candidates, and compares
/// their exact residual norms against d_claimed. Residual norms are computed
/// here, independently of the approximation modules; matrix residuals use
/// Eigen's SVD.
CompetitorReport competitor_search(const Operator& t, double d_claimed, std::size_t trials, std::uint64_t seed,
                                   double tol = 1e-10);

struct SvdClipResult {
  Matrix approximant;
  double distance = 0.0;
  /// Distance produced by best_ball_approx_h on the same FiniteMatrix.
  double case_analysis_distance = 0.0;
  bool agrees = false;
};

/// Clips the singular values of m at 1 (Eigen SVD) and compares the
/// resulting distance with best_ball_approx_h to 1e-10. Dimension <= 64.
SvdClipResult svd_clip_oracle(const Matrix& m);

struct SectionBounds {
  double section_norm = 0.0;
  /// max(|T_N| - 1, 0): what a finite section alone can certify.
  double lower = 0.0;
  /// The closed-form distance to the ball.
  double upper = 0.0;
};

/// Throws NumericError if the finite-section lower bound exceeds the
/// distance formula.
SectionBounds finite_section_bounds(const HilbertOperator& t, std::size_t n);
SectionBounds finite_section_bounds(const L1Operator& t, std::size_t n);

/// Spectral norm through Eigen's SVD, for cross-checking the in-house Jacobi.
double reference_spectral_norm(const Matrix& m);

}  // namespace ballprox
