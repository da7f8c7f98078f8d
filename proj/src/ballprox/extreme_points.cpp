#include "ballprox/extreme_points.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ballprox/errors.hpp"

namespace ballprox {
namespace {

constexpr double kUnitTol = 1e-12;

void validate(const NormedSpacePoint& p) {
  if (p.coords.empty()) throw ValidationError("point must have positive dimension", "point");
  for (double x : p.coords)
    if (!std::isfinite(x)) throw ValidationError("point coordinates must be finite", "point");
}

class BallSampler {
 public:
  BallSampler(Space space, std::size_t dim, std::uint64_t seed) : space_(space), dim_(dim), rng_(seed) {}

  /// Uniform point of the ball.
  std::vector<double> interior() {
    std::vector<double> x(dim_);
    switch (space_) {
      case Space::Linf:
        for (double& c : x) c = unit_(rng_);
        return x;
      case Space::L2:
        do {
          for (double& c : x) c = unit_(rng_);
        } while (norm(Space::L2, x) > 1.0);
        return x;
      case Space::L1: {
        // Dirichlet(1, ..., 1, 1) weights; the last one is the slack, so the
        // point is uniform in the cross-polytope.
        std::vector<double> g(dim_ + 1);
        double s = 0.0;
        for (double& c : g) s += (c = exp_(rng_));
        for (std::size_t i = 0; i < dim_; ++i) x[i] = random_sign() * g[i] / s;
        return x;
      }
    }
    return x;
  }

  /// Point on the unit sphere, concentrated on low-dimensional faces.
  std::vector<double> boundary() {
    std::vector<double> x(dim_);
    switch (space_) {
      case Space::Linf: {
        for (double& c : x) c = unit_(rng_);
        std::bernoulli_distribution pin(0.5);
        bool any = false;
        for (double& c : x)
          if (pin(rng_)) c = random_sign(), any = true;
        if (!any) x[index_(rng_) % dim_] = random_sign();
        return x;
      }
      case Space::L2: {
        std::normal_distribution<double> gauss;
        for (double& c : x) c = gauss(rng_);
        return normalized(std::move(x));
      }
      case Space::L1: {
        std::bernoulli_distribution keep(0.5);
        double s = 0.0;
        for (double& c : x)
          if (keep(rng_)) s += (c = exp_(rng_));
        if (s == 0.0) s = x[index_(rng_) % dim_] = 1.0;
        for (double& c : x) c = random_sign() * c / s;
        return x;
      }
    }
    return x;
  }

  /// Point on the smallest face of the sphere containing `center`: linf pins
  /// the coordinates where |center_i| = 1, l1 keeps the support and signs of
  /// center. For l2 every face is a single point, so this is a generic sphere
  /// sample.
  std::vector<double> face_through(const std::vector<double>& center) {
    std::vector<double> x(dim_);
    switch (space_) {
      case Space::Linf:
        for (std::size_t i = 0; i < dim_; ++i)
          x[i] = std::abs(center[i]) >= 1.0 ? std::copysign(1.0, center[i]) : unit_(rng_);
        return x;
      case Space::L1: {
        double s = 0.0;
        for (std::size_t i = 0; i < dim_; ++i)
          if (center[i] != 0.0) s += (x[i] = exp_(rng_));
        for (std::size_t i = 0; i < dim_; ++i) x[i] = std::copysign(x[i] / s, center[i]);
        return x;
      }
      case Space::L2:
        return boundary();
    }
    return x;
  }

  /// Point of the ball near `center`, at a log-uniform scale in [1e-7, 1].
  std::vector<double> near(const std::vector<double>& center) {
    std::normal_distribution<double> gauss;
    const double scale = std::pow(10.0, -7.0 * std::uniform_real_distribution<double>(0.0, 1.0)(rng_));
    std::vector<double> x = center;
    for (double& c : x) c += scale * gauss(rng_);
    if (space_ == Space::Linf && std::bernoulli_distribution(0.5)(rng_)) {
      for (double& c : x) c = std::clamp(c, -1.0, 1.0);
      return x;
    }
    const double n = norm(space_, x);
    if (n > 1.0)
      for (double& c : x) c /= n;
    return x;
  }

 private:
  double random_sign() { return std::bernoulli_distribution(0.5)(rng_) ? 1.0 : -1.0; }

  std::vector<double> normalized(std::vector<double> x) const {
    const double n = norm(space_, x);
    for (double& c : x) c /= n;
    return x;
  }

  Space space_;
  std::size_t dim_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{-1.0, 1.0};
  std::exponential_distribution<double> exp_{1.0};
  std::uniform_int_distribution<std::size_t> index_;
};

}  // namespace

std::string to_string(Space space) {
  switch (space) {
    case Space::L1: return "l1";
    case Space::L2: return "l2";
    case Space::Linf: return "linf";
  }
  return "unknown";
}

Space parse_space(const std::string& name) {
  if (name == "l1") return Space::L1;
  if (name == "l2") return Space::L2;
  if (name == "linf") return Space::Linf;
  throw ValidationError("unknown space '" + name + "'", "space");
}

double norm(Space space, const std::vector<double>& x) {
  double acc = 0.0;
  switch (space) {
    case Space::L1:
      for (double c : x) acc += std::abs(c);
      return acc;
    case Space::L2:
      for (double c : x) acc += c * c;
      return std::sqrt(acc);
    case Space::Linf:
      for (double c : x) acc = std::max(acc, std::abs(c));
      return acc;
  }
  return acc;
}

double norm(const NormedSpacePoint& p) { return norm(p.space, p.coords); }

double distance(Space space, const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
  return norm(space, d);
}

bool is_extreme(const NormedSpacePoint& p) {
  validate(p);
  if (norm(p) > 1.0 + kUnitTol) throw ValidationError("point lies outside the unit ball", "point");
  switch (p.space) {
    case Space::Linf:
      return std::all_of(p.coords.begin(), p.coords.end(),
                         [](double c) { return std::abs(std::abs(c) - 1.0) <= kUnitTol; });
    case Space::L1: {
      const auto nonzero = std::count_if(p.coords.begin(), p.coords.end(), [](double c) { return c != 0.0; });
      return nonzero == 1 && std::abs(norm(p) - 1.0) <= kUnitTol;
    }
    case Space::L2:
      return std::abs(norm(p) - 1.0) <= kUnitTol;
  }
  return false;
}

Projection project_scalar_multiple(double alpha, const NormedSpacePoint& e) {
  if (!std::isfinite(alpha) || !(std::abs(alpha) > 1.0)) throw ValidationError("|alpha| must exceed 1", "alpha");
  if (!is_extreme(e)) throw ValidationError("point is not an extreme point of the unit ball", "point");
  Projection p{e, std::abs(alpha) - 1.0};
  const double sign = std::copysign(1.0, alpha);
  for (double& c : p.point.coords) c *= sign;
  return p;
}

UniquenessReport verify_unique_projection(double alpha, const NormedSpacePoint& e, std::size_t samples,
                                          std::uint64_t seed, double tol) {
  validate(e);
  if (!std::isfinite(alpha) || !(std::abs(alpha) > 1.0)) throw ValidationError("|alpha| must exceed 1", "alpha");
  if (samples == 0) throw ValidationError("need at least one sample", "samples");
  if (!(tol > 0.0)) throw ValidationError("tolerance must be positive", "tol");
  if (norm(e) > 1.0 + kUnitTol) throw ValidationError("point lies outside the unit ball", "point");

  const Space space = e.space;
  const double target = std::abs(alpha) - 1.0;
  std::vector<double> scaled = e.coords;
  for (double& c : scaled) c *= alpha;
  std::vector<double> radial = e.coords;
  for (double& c : radial) c *= std::copysign(1.0, alpha) / norm(e);

  UniquenessReport rep;
  rep.samples = samples;
  rep.min_distance = std::numeric_limits<double>::infinity();
  // Slack of 1e-12 absorbs rounding in the distance evaluations.
  rep.allowed_radius = (space == Space::L2 ? std::sqrt(2.0 * tol) : tol) + 1e-12;

  BallSampler sampler(space, e.dim(), seed);
  std::vector<std::vector<double>> near_set;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<double> f;
    switch (s % 3) {
      case 0: f = sampler.interior(); break;
      case 1: f = (s / 3) % 2 ? sampler.face_through(radial) : sampler.boundary(); break;
      default: f = sampler.near(radial); break;
    }
    const double dist = distance(space, scaled, f);
    if (dist < rep.min_distance) rep.min_distance = dist, rep.closest_sample = f;
    if (dist < target - 1e-12) ++rep.violations;
    if (dist <= target + tol) {
      const double r = distance(space, f, radial);
      if (r > rep.radius || rep.worst_offender.empty()) rep.radius = r, rep.worst_offender = f;
      near_set.push_back(std::move(f));
    }
  }
  rep.near_minimizers = near_set.size();

  // Diameter witness: farthest near-minimizer from the worst offender.
  for (const auto& f : near_set) {
    const double d = distance(space, f, rep.worst_offender);
    if (d > rep.spread) rep.spread = d, rep.spread_a = rep.worst_offender, rep.spread_b = f;
  }

  rep.pass = rep.violations == 0 && rep.radius <= rep.allowed_radius;
  return rep;
}

}  // namespace ballprox
