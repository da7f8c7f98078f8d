#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ballprox {

enum class Branch { CompactInput, NonAttaining, FiniteHead, InfiniteSeries, SmallNorm, L1Truncation };

std::string to_string(Branch branch);

/// Inputs of the distance formula plus the residuals that realize it.
struct Certificate {
  std::string method;
  double op_norm = 0.0;
  double ess_norm = 0.0;
  double formula_distance = 0.0;
  /// Explicit-entry residuals |t_n - k_n|, residual column masses (l1), or
  /// singular values of the residual (FiniteMatrix).
  std::vector<double> residuals;
  /// Supremum of the residual over the tail.
  double tail_residual = 0.0;
  /// Explicit indices enumerated as successive norm maximizers, in order.
  std::vector<std::size_t> enumeration;
  /// Number of enumerated entries scaled by 1/|T| (the rest are thresholded).
  std::size_t scaled_count = 0;
};

/// Best approximant from the unit ball of compact operators. The approximant
/// lives in the input's model class and always has a zero tail.
template <class Op>
struct BallApproxResult {
  double distance = 0.0;
  Op approximant;
  Branch branch = Branch::CompactInput;
  Certificate certificate;
};

}  // namespace ballprox
