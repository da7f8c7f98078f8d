#include <cmath>

#include "../support/generators.hpp"
#include "ballprox/errors.hpp"
#include "ballprox/jacobi_svd.hpp"
#include "doctest.h"

using namespace ballprox;

namespace {

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) d = std::max(d, std::abs(a.data()[k] - b.data()[k]));
  return d;
}

}  // namespace

TEST_CASE("diagonal and zero inputs") {
  const Svd s = jacobi_svd(Matrix::diagonal({2, -0.5, 3}));
  CHECK(s.singular_values == std::vector<double>{3, 2, 0.5});
  CHECK(spectral_norm(Matrix(4, 4)) == 0.0);
  CHECK(spectral_norm(Matrix{}) == 0.0);
}

TEST_CASE("reconstruction and orthogonality on random matrices") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 40u, 64u}) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = u(rng);
    const Svd s = jacobi_svd(a);
    Matrix sigma = Matrix::diagonal(s.singular_values);
    CHECK(max_abs_diff(s.u * sigma * s.v.transposed(), a) < 1e-12);
    CHECK(max_abs_diff(s.v.transposed() * s.v, Matrix::identity(n)) < 1e-12);
    CHECK(max_abs_diff(s.u.transposed() * s.u, Matrix::identity(n)) < 1e-12);
    CHECK(std::is_sorted(s.singular_values.rbegin(), s.singular_values.rend()));
    CHECK(s.singular_values.front() == doctest::Approx(testing::eigen_spectral_norm(a)).epsilon(1e-13));
  }
}

TEST_CASE("rank-deficient and rectangular inputs") {
  Matrix a{{1, 2, 3}, {2, 4, 6}, {0, 0, 0}};
  const Svd s = jacobi_svd(a);
  CHECK(s.singular_values[0] == doctest::Approx(std::sqrt(70.0)));
  CHECK(std::abs(s.singular_values[1]) < 1e-12);
  CHECK(max_abs_diff(s.u * Matrix::diagonal(s.singular_values) * s.v.transposed(), a) < 1e-12);
  CHECK(max_abs_diff(s.u.transposed() * s.u, Matrix::identity(3)) < 1e-10);

  Matrix wide{{3, 0, 4}, {0, 1, 0}};
  const Svd w = jacobi_svd(wide);
  CHECK(w.singular_values[0] == doctest::Approx(5.0));
  CHECK(w.singular_values[1] == doctest::Approx(1.0));
  CHECK(max_abs_diff(w.u * Matrix::diagonal(w.singular_values) * w.v.transposed(), wide) < 1e-12);
}

TEST_CASE("known singular values are recovered") {
  std::mt19937_64 rng(9);
  const std::vector<double> sigma{3.0, 1.25, 0.5, 0.125, 0.0};
  const Matrix m = testing::with_singular_values(sigma, rng);
  const Svd s = jacobi_svd(m);
  for (std::size_t i = 0; i < sigma.size(); ++i) CHECK(std::abs(s.singular_values[i] - sigma[i]) < 1e-13);
}

TEST_CASE("sweep budget exhaustion raises NumericError") {
  Matrix a{{1, 2}, {3, 4}};
  CHECK_THROWS_AS(jacobi_svd(a, JacobiOptions{1e-12, 0}), NumericError);
}
