#include "ballprox/jacobi_svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ballprox/errors.hpp"

namespace ballprox {
namespace {

Svd jacobi_tall(const Matrix& a, const JacobiOptions& options) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix w = a;
  Matrix v = Matrix::identity(n);

  bool converged = n < 2;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += w(i, p) * w(i, p);
          beta += w(i, q) * w(i, q);
          gamma += w(i, p) * w(i, q);
        }
        if (gamma == 0.0 || std::abs(gamma) <= options.tolerance * std::sqrt(alpha * beta)) continue;
        converged = false;

        // Rotation that zeroes the (p, q) entry of the 2x2 Gram block.
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double wp = w(i, p);
          const double wq = w(i, q);
          w(i, p) = c * wp - s * wq;
          w(i, q) = s * wp + c * wq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = v(i, p);
          const double vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
  }
  if (!converged) throw NumericError("Jacobi SVD did not converge");

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += w(i, j) * w(i, j);
    sigma[j] = std::sqrt(s);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  Svd out{Matrix(m, n), std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.singular_values[k] = sigma[j];
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, j);
    if (sigma[j] > 0.0)
      for (std::size_t i = 0; i < m; ++i) out.u(i, k) = w(i, j) / sigma[j];
  }
  // Null directions get a U column orthogonal to the others (Gram-Schmidt on
  // the unit basis) so that U keeps orthonormal columns.
  for (std::size_t k = 0; k < n; ++k) {
    if (out.singular_values[k] > 0.0) continue;
    for (std::size_t e = 0; e < m; ++e) {
      std::vector<double> cand(m, 0.0);
      cand[e] = 1.0;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == k) continue;
        double dot = 0.0;
        for (std::size_t i = 0; i < m; ++i) dot += out.u(i, l) * cand[i];
        for (std::size_t i = 0; i < m; ++i) cand[i] -= dot * out.u(i, l);
      }
      double nrm = 0.0;
      for (double x : cand) nrm += x * x;
      nrm = std::sqrt(nrm);
      if (nrm > 1e-8) {
        for (std::size_t i = 0; i < m; ++i) out.u(i, k) = cand[i] / nrm;
        break;
      }
    }
  }
  return out;
}

}  // namespace

Svd jacobi_svd(const Matrix& a, const JacobiOptions& options) {
  if (a.rows() >= a.cols()) return jacobi_tall(a, options);
  Svd t = jacobi_tall(a.transposed(), options);
  return Svd{std::move(t.v), std::move(t.singular_values), std::move(t.u)};
}

double spectral_norm(const Matrix& a, const JacobiOptions& options) {
  if (a.empty()) return 0.0;
  return jacobi_svd(a, options).singular_values.front();
}

}  // namespace ballprox
