#include <cmath>

#include "../support/generators.hpp"
#include "ballprox/errors.hpp"
#include "ballprox/hilbert_ball_approx.hpp"
#include "ballprox/oracles.hpp"
#include "doctest.h"

using namespace ballprox;
using ballprox::testing::InstanceGenerator;

namespace {

HilbertOperator diag(std::vector<double> e, TailRule t) { return HilbertOperator::diagonal(std::move(e), t); }

void check_entries(const HilbertOperator& k, const std::vector<double>& expected) {
  REQUIRE(k.explicit_entries().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(k.explicit_entries()[i] == doctest::Approx(expected[i]).epsilon(1e-15));
  CHECK(k.tail().is_zero());
}

}  // namespace

TEST_CASE("dist_ball_h examples") {
  const auto t1 = diag({3, 2, 0.5}, TailRule::constant(1));
  CHECK(dist_ball_h(t1) == 2.0);
  CHECK(competitor_search(t1, 2.0, 2000, 1).pass);

  CHECK(dist_ball_h(diag({0.5}, TailRule::geometric(2, 0.5))) == 2.0);
  CHECK(dist_ball_h(diag({0.5}, TailRule::constant(0.2))) == 0.2);
  CHECK(dist_ball_h(diag({0.5, -0.25}, TailRule{})) == 0.0);
}

TEST_CASE("best_ball_approx_h: infinite series branch") {
  const auto r = best_ball_approx_h(diag({3, 2, 0.5}, TailRule::constant(1)));
  CHECK(r.branch == Branch::InfiniteSeries);
  check_entries(r.approximant, {1, 1, 0});
  CHECK(r.distance == 2.0);
  CHECK(r.certificate.scaled_count == 1);
  CHECK(r.certificate.enumeration == std::vector<std::size_t>{0, 1});
  CHECK(r.certificate.residuals == std::vector<double>{2, 1, 0.5});
  CHECK(r.certificate.tail_residual == 1.0);
}

TEST_CASE("best_ball_approx_h: finite head branch") {
  const auto r = best_ball_approx_h(diag({3, 2}, TailRule::geometric(1.5, 0.5)));
  CHECK(r.branch == Branch::FiniteHead);
  check_entries(r.approximant, {1, 2.0 / 3.0});
  CHECK(r.distance == 2.0);
  CHECK(r.certificate.residuals[1] == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("best_ball_approx_h: compact input, non-attaining, small norm, zero") {
  const auto c = best_ball_approx_h(diag({2, 1}, TailRule{}));
  CHECK(c.branch == Branch::CompactInput);
  check_entries(c.approximant, {1, 0.5});
  CHECK(c.distance == 1.0);

  const auto n = best_ball_approx_h(diag({0.5, -1.2}, TailRule::geometric(-2, 0.5)));
  CHECK(n.branch == Branch::NonAttaining);
  check_entries(n.approximant, {0, 0});
  CHECK(n.distance == 2.0);

  const auto s = best_ball_approx_h(diag({0.9, -0.1, 0.5}, TailRule::constant(0.3)));
  CHECK(s.branch == Branch::SmallNorm);
  check_entries(s.approximant, {0.6, 0, 0.2});
  CHECK(s.distance == doctest::Approx(0.3).epsilon(1e-15));

  const auto z = best_ball_approx_h(diag({0, 0}, TailRule{}));
  CHECK(z.branch == Branch::CompactInput);
  check_entries(z.approximant, {0, 0});
  CHECK(z.distance == 0.0);

  const auto zm = best_ball_approx_h(HilbertOperator::finite_matrix(Matrix(3, 3)));
  CHECK(zm.branch == Branch::CompactInput);
  CHECK(zm.distance == 0.0);
}

TEST_CASE("best_ball_approx_h on weighted shifts and matrices") {
  // 3S: every tail weight attains the norm, so the enumeration never stops
  // and thresholding at delta = 3 zeroes everything.
  const auto r = best_ball_approx_h(HilbertOperator::weighted_shift({}, TailRule::constant(3)));
  CHECK(r.branch == Branch::InfiniteSeries);
  CHECK(r.distance == 3.0);

  const auto s = best_ball_approx_h(HilbertOperator::weighted_shift({-5, 2}, TailRule::constant(1.5)));
  CHECK(s.branch == Branch::InfiniteSeries);
  check_entries(s.approximant, {-1, 0.5});
  CHECK(s.distance == 4.0);

  const auto m = best_ball_approx_h(HilbertOperator::finite_matrix(Matrix::diagonal({2, 0.5})));
  CHECK(m.branch == Branch::CompactInput);
  CHECK(m.distance == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m.approximant.block()(0, 0) == doctest::Approx(1.0));
  CHECK(m.approximant.block()(1, 1) == doctest::Approx(0.25));
}

TEST_CASE("tie handling: explicit entries equal to the tail limit are enumerated first") {
  const auto t = diag({1.0, 4.0, -1.0, 0.5}, TailRule::constant(-1.0));
  const auto order = enumerate_maximizers(t);
  CHECK(order.explicit_indices == std::vector<std::size_t>{1, 0, 2});
  CHECK(order.continues_into_tail);
  const auto r = best_ball_approx_h(t);
  check_entries(r.approximant, {0, 1, 0, 0});
  CHECK(r.distance == 3.0);

  // Head sizes larger than one: several entries exceed delta + 1.
  const auto big = best_ball_approx_h(diag({5, 4, 3.5, 2.5, 0.1}, TailRule::constant(2)));
  CHECK(big.certificate.scaled_count == 3);
  check_entries(big.approximant, {1, 0.8, 0.7, 0.5, 0});
  CHECK(big.distance == 4.0);
}

TEST_CASE("soft_threshold_approx examples") {
  const auto a = soft_threshold_approx(diag({3, 2, 0.5}, TailRule::constant(1)));
  check_entries(a.approximant, {1, 0, 0});
  CHECK(a.distance == 2.0);

  const auto b = soft_threshold_approx(diag({0.5}, TailRule::constant(0.2)));
  check_entries(b.approximant, {0.3});
  CHECK(b.distance == doctest::Approx(0.2).epsilon(1e-15));

  const auto t = diag({0.7, -1.0, 0.2}, TailRule{});
  const auto c = soft_threshold_approx(t);
  CHECK(c.approximant == t);
  CHECK(c.distance == 0.0);
}

TEST_CASE("isometry_distance_check") {
  const auto v = HilbertOperator::weighted_shift({}, TailRule::constant(1));
  CHECK(isometry_distance_check(3, v));
  CHECK(isometry_distance_check(0.5, v));
  CHECK(isometry_distance_check(1, v));
  CHECK(isometry_distance_check(-2, HilbertOperator::weighted_shift({1, -1, 1}, TailRule::constant(-1))));
  CHECK_THROWS_AS(isometry_distance_check(2, HilbertOperator::weighted_shift({0.5}, TailRule::constant(1))),
                  ValidationError);
  CHECK_THROWS_AS(isometry_distance_check(2, diag({}, TailRule::constant(1))), ValidationError);
}

TEST_CASE("positive_ball_approx examples") {
  const auto a = positive_ball_approx(diag({2, 1.2}, TailRule::constant(0.8)));
  check_entries(a.approximant, {1, 0.4});
  CHECK(a.distance == 1.0);

  const auto b = positive_ball_approx(diag({0.9}, TailRule::constant(0.3)));
  check_entries(b.approximant, {0.6});
  CHECK(b.distance == doctest::Approx(0.3).epsilon(1e-15));

  const auto c = positive_ball_approx(diag({1}, TailRule{}));
  check_entries(c.approximant, {1});
  CHECK(c.distance == 0.0);

  CHECK_THROWS_AS(positive_ball_approx(diag({1, -0.5}, TailRule{})), ValidationError);
  CHECK_THROWS_AS(positive_ball_approx(diag({1}, TailRule::constant(-0.5))), ValidationError);
  CHECK_THROWS_AS(positive_ball_approx(HilbertOperator::weighted_shift({1}, TailRule{})), ValidationError);
}

TEST_CASE("property: distance formula, ball membership and optimality") {
  InstanceGenerator gen(21);
  for (int trial = 0; trial < 400; ++trial) {
    const auto t = gen.hilbert();
    const double d = dist_ball_h(t);
    CHECK(d == std::max({op_norm(t) - 1.0, ess_norm(t), 0.0}));

    const auto r = best_ball_approx_h(t);
    CHECK(std::abs(r.distance - d) <= 1e-12);
    CHECK(op_norm(r.approximant) <= 1.0 + 1e-12);
    CHECK(r.approximant.tail().is_zero());

    const auto s = soft_threshold_approx(t);
    CHECK(std::abs(s.distance - r.distance) <= 1e-12);
    CHECK(op_norm(s.approximant) <= 1.0 + 1e-12);

    if (t.is_sequence_model()) {
      CHECK(std::abs(d - testing::decoupled_sequence_distance(t)) <= 1e-12);
    } else {
      CHECK(std::abs(d - testing::clipped_matrix_distance(t.block())) <= 1e-10);
    }
    if (ess_norm(t) == 0.0 && op_norm(t) <= 1.0) {
      CHECK(d == 0.0);
      CHECK(r.approximant == t);
    }
    if (op_norm(t) <= 1.0) CHECK(d == ess_norm(t));

    // Random in-ball compact competitors of the same class never do better.
    if (t.is_sequence_model()) {
      for (int k = 0; k < 20; ++k) {
        std::vector<double> e(t.explicit_entries().size() + gen.index(0, 3));
        for (double& x : e) x = gen.uniform(-1, 1);
        const auto comp = t.shape() == HilbertShape::Diagonal ? HilbertOperator::diagonal(e, TailRule{})
                                                              : HilbertOperator::weighted_shift(e, TailRule{});
        CHECK(residual_norm(t, comp) >= d - 1e-10);
      }
    }
  }
}

TEST_CASE("property: positive inputs give dominated positive approximants") {
  InstanceGenerator gen(22);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = gen.positive_diagonal();
    const auto r = positive_ball_approx(t);
    for (std::size_t i = 0; i < t.explicit_entries().size(); ++i) {
      CHECK(r.approximant.explicit_entries()[i] >= 0.0);
      CHECK(r.approximant.explicit_entries()[i] <= t.explicit_entries()[i]);
    }
    CHECK(std::abs(r.distance - dist_ball_h(t)) <= 1e-12);
  }
}
