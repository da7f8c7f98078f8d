#pragma once

#include <vector>

#include "ballprox/matrix.hpp"

namespace ballprox {

/// Thin SVD A = U * diag(singular_values) * V^T of a dense matrix with
/// rows >= cols (wider inputs are handled by transposition). Singular values
/// are sorted in nonincreasing order.
struct Svd {
  Matrix u;
  std::vector<double> singular_values;
  Matrix v;
};

struct JacobiOptions {
  /// Columns p, q count as orthogonal once |<a_p, a_q>| <= tol * |a_p| |a_q|.
  double tolerance = 1e-12;
  int max_sweeps = 60;
};

/// One-sided (Hestenes) Jacobi SVD. Throws NumericError when the column
/// pairs are still not orthogonal after `max_sweeps` sweeps.
Svd jacobi_svd(const Matrix& a, const JacobiOptions& options = {});

/// Largest singular value; 0 for an empty matrix.
double spectral_norm(const Matrix& a, const JacobiOptions& options = {});

}  // namespace ballprox
