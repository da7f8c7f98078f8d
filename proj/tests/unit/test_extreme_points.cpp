#include <cmath>

#include "../support/generators.hpp"
#include "ballprox/errors.hpp"
#include "ballprox/extreme_points.hpp"
#include "doctest.h"

using namespace ballprox;

TEST_CASE("is_extreme examples") {
  CHECK(is_extreme({Space::Linf, {1, -1, 1}}));
  CHECK_FALSE(is_extreme({Space::Linf, {1, 0, 1}}));
  CHECK(is_extreme({Space::L1, {0, 1, 0}}));
  CHECK_FALSE(is_extreme({Space::L1, {0.5, 0.5, 0}}));
  CHECK(is_extreme({Space::L2, {0.6, -0.8}}));
  CHECK_FALSE(is_extreme({Space::L2, {0.6, 0.7}}));
  CHECK_THROWS_AS(is_extreme({Space::Linf, {1.5, 0}}), ValidationError);
  CHECK_THROWS_AS(is_extreme({Space::L1, {}}), ValidationError);
}

TEST_CASE("project_scalar_multiple examples") {
  const auto a = project_scalar_multiple(2.5, {Space::Linf, {1, -1, 1}});
  CHECK(a.point.coords == std::vector<double>{1, -1, 1});
  CHECK(a.distance == 1.5);

  const auto b = project_scalar_multiple(-3, {Space::L1, {0, 1, 0}});
  CHECK(b.point.coords == std::vector<double>{0, -1, 0});
  CHECK(b.distance == 2.0);

  const auto c = project_scalar_multiple(2, {Space::L2, {0.6, 0.8}});
  CHECK(c.point.coords == std::vector<double>{0.6, 0.8});
  CHECK(c.distance == 1.0);
  CHECK(norm(c.point) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(project_scalar_multiple(0.5, {Space::L2, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(project_scalar_multiple(2, {Space::Linf, {1, 0}}), ValidationError);
}

TEST_CASE("grid search agrees with the radial projection") {
  // Exhaustive grid over the linf square and the l1 diamond in 2D.
  for (Space space : {Space::Linf, Space::L1}) {
    const std::vector<double> e = space == Space::Linf ? std::vector<double>{1, -1} : std::vector<double>{0, 1};
    const double alpha = space == Space::Linf ? 2.5 : -3.0;
    std::vector<double> target = e;
    for (double& x : target) x *= alpha;
    double best = 1e300;
    std::vector<double> argmin;
    for (int i = -200; i <= 200; ++i)
      for (int j = -200; j <= 200; ++j) {
        std::vector<double> f{i / 200.0, j / 200.0};
        if (norm(space, f) > 1.0) continue;
        const double d = distance(space, target, f);
        if (d < best) best = d, argmin = f;
      }
    const auto p = project_scalar_multiple(alpha, {space, e});
    CHECK(best == doctest::Approx(p.distance).epsilon(1e-14));
    CHECK(distance(space, argmin, p.point.coords) < 1e-12);
  }
}

TEST_CASE("verify_unique_projection examples") {
  const auto a = verify_unique_projection(2, {Space::Linf, {1, -1}}, 10000, 3, 1e-3);
  CHECK(a.pass);
  CHECK(a.violations == 0);
  CHECK(a.near_minimizers > 0);
  CHECK(a.radius <= 1e-3 + 1e-12);
  CHECK(a.min_distance >= 1.0 - 1e-12);

  const double s = 1.0 / std::sqrt(3.0);
  const auto b = verify_unique_projection(3, {Space::L2, {s, -s, s}}, 10000, 4, 1e-3);
  CHECK(b.pass);
  CHECK(b.near_minimizers > 0);

  // (1, 0) is not extreme in linf^2: every (1, t) is a minimizer.
  const auto c = verify_unique_projection(2, {Space::Linf, {1, 0}}, 10000, 5, 1e-3);
  CHECK_FALSE(c.pass);
  CHECK(c.violations == 0);
  CHECK(c.spread > 0.1);
  CHECK(distance(Space::Linf, c.spread_a, c.spread_b) > 0.1);
}

TEST_CASE("verification is deterministic in the seed") {
  const auto a = verify_unique_projection(-1.5, {Space::L1, {0, 0, -1}}, 3000, 42, 1e-3);
  const auto b = verify_unique_projection(-1.5, {Space::L1, {0, 0, -1}}, 3000, 42, 1e-3);
  CHECK(a.min_distance == b.min_distance);
  CHECK(a.closest_sample == b.closest_sample);
  CHECK(a.radius == b.radius);
  CHECK(a.pass);
}

TEST_CASE("property: non-extreme points exhibit distinct minimizers") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (std::size_t dim = 2; dim <= 5; ++dim) {
    // linf: pin one coordinate to 1, leave another strictly inside.
    std::vector<double> e(dim, 1.0);
    e[dim - 1] = u(rng);
    const auto r = verify_unique_projection(2.0, {Space::Linf, e}, 5000, dim, 1e-3);
    CHECK_FALSE(r.pass);
    CHECK(r.spread > 0.1);

    // l1: unit-norm point spread over two coordinates.
    std::vector<double> f(dim, 0.0);
    f[0] = 0.5;
    f[1] = -0.5;
    const auto q = verify_unique_projection(3.0, {Space::L1, f}, 5000, dim + 100, 1e-3);
    CHECK_FALSE(q.pass);
    CHECK(q.spread > 0.1);
  }
}
