#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ballprox {

enum class Space { L1, L2, Linf };

std::string to_string(Space space);
Space parse_space(const std::string& name);

/// Point of the finite-dimensional space l1^n, l2^n or linf^n.
struct NormedSpacePoint {
  Space space = Space::L2;
  std::vector<double> coords;

  std::size_t dim() const noexcept { return coords.size(); }
};

double norm(Space space, const std::vector<double>& x);
double norm(const NormedSpacePoint& p);
double distance(Space space, const std::vector<double>& x, const std::vector<double>& y);

/// Whether p is an extreme point of the closed unit ball:
///   linf: every |coordinate| = 1
///   l1:   exactly one nonzero coordinate, of modulus 1
///   l2:   norm 1
/// Throws ValidationError if p lies outside the ball.
bool is_extreme(const NormedSpacePoint& p);

struct Projection {
  NormedSpacePoint point;
  double distance = 0.0;
};

/// Nearest point of the unit ball to alpha*e for an extreme point e and
/// |alpha| > 1: the radial projection alpha*e/|alpha| at distance |alpha| - 1.
Projection project_scalar_multiple(double alpha, const NormedSpacePoint& e);

struct UniquenessReport {
  bool pass = false;
  std::size_t samples = 0;
  /// Smallest |alpha*e - f| over the samples, and the sample realizing it.
  double min_distance = 0.0;
  std::vector<double> closest_sample;
  /// Samples strictly closer than |alpha| - 1 (beyond 1e-12).
  std::size_t violations = 0;
  /// Samples with |alpha*e - f| <= |alpha| - 1 + tol.
  std::size_t near_minimizers = 0;
  /// Largest distance from a near-minimizer to the radial projection, and
  /// the near-minimizer realizing it.
  double radius = 0.0;
  std::vector<double> worst_offender;
  /// Bound the radius must respect for extreme e (tol for l1/linf,
  /// sqrt(2 tol) for l2).
  double allowed_radius = 0.0;
  /// Two near-minimizers as far apart as found (witnesses non-uniqueness).
  double spread = 0.0;
  std::vector<double> spread_a;
  std::vector<double> spread_b;
};

/// Samples the unit ball (interior, random boundary faces, the faces through
/// the radial projection and a neighbourhood of it) and checks that no sample beats |alpha| - 1 and that
/// every near-minimizer sits within the allowed radius of alpha*e/|alpha|.
/// Accepts non-extreme e (the check then fails where uniqueness fails).
UniquenessReport verify_unique_projection(double alpha, const NormedSpacePoint& e, std::size_t samples,
                                          std::uint64_t seed, double tol);

}  // namespace ballprox
