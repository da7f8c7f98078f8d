#include "ballprox/ballprox.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <variant>

#include "ballprox/errors.hpp"
#include "ballprox/extreme_points.hpp"
#include "ballprox/hilbert_ball_approx.hpp"
#include "ballprox/l1_ball_approx.hpp"
#include "ballprox/operator_json.hpp"
#include "ballprox/oracles.hpp"

struct bp_operator {
  ballprox::Operator value;
};

struct bp_result {
  double distance;
  std::string branch;
  ballprox::Operator approximant;
  ballprox::Certificate certificate;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_field;

bp_status fail(bp_status status, std::string message, std::string field = {}) {
  g_error = std::move(message);
  g_field = std::move(field);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
bp_status guarded(Fn&& fn) {
  g_error.clear();
  g_field.clear();
  try {
    fn();
    return BP_OK;
  } catch (const ballprox::ValidationError& e) {
    return fail(BP_ERR_VALIDATION, e.what(), e.field());
  } catch (const ballprox::NumericError& e) {
    return fail(BP_ERR_NUMERIC, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BP_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ballprox::NormedSpacePoint make_point(bp_space space, const double* coords, size_t dim) {
  ballprox::NormedSpacePoint p;
  switch (space) {
    case BP_SPACE_L1: p.space = ballprox::Space::L1; break;
    case BP_SPACE_L2: p.space = ballprox::Space::L2; break;
    case BP_SPACE_LINF: p.space = ballprox::Space::Linf; break;
    default: throw ballprox::ValidationError("unknown space", "space");
  }
  if (dim == 0) throw ballprox::ValidationError("point must have positive dimension", "point");
  p.coords.assign(coords, coords + dim);
  return p;
}

const ballprox::HilbertOperator& hilbert(const bp_operator* op) {
  const auto* h = std::get_if<ballprox::HilbertOperator>(&op->value);
  if (!h) throw ballprox::ValidationError("operation needs an l2 operator", "space");
  return *h;
}

}  // namespace

#define BP_REQUIRE(ptr)                                       \
  do {                                                        \
    if (!(ptr)) return fail(BP_ERR_NULL_ARG, #ptr " is null"); \
  } while (0)

extern "C" {

const char* bp_version(void) { return "1.0.0"; }

const char* bp_status_name(bp_status status) {
  switch (status) {
    case BP_OK: return "ok";
    case BP_ERR_VALIDATION: return "validation";
    case BP_ERR_NUMERIC: return "numeric";
    case BP_ERR_NULL_ARG: return "null_argument";
    case BP_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* bp_last_error(void) { return g_error.c_str(); }
const char* bp_last_error_field(void) { return g_field.c_str(); }

void bp_string_free(char* s) { delete[] s; }

bp_status bp_operator_from_json(const char* json, bp_operator** out) {
  BP_REQUIRE(json);
  BP_REQUIRE(out);
  return guarded([&] { *out = new bp_operator{ballprox::parse_operator(std::string(json))}; });
}

bp_status bp_operator_to_json(const bp_operator* op, char** out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] { *out = dup_string(ballprox::to_json(op->value).dump()); });
}

bp_status bp_operator_clone(const bp_operator* op, bp_operator** out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] { *out = new bp_operator{op->value}; });
}

bp_status bp_operator_scale(const bp_operator* op, double c, bp_operator** out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] {
    *out = new bp_operator{std::visit([c](const auto& t) -> ballprox::Operator { return t.scaled(c); }, op->value)};
  });
}

void bp_operator_free(bp_operator* op) { delete op; }

int bp_operator_is_hilbert(const bp_operator* op) {
  return op && std::holds_alternative<ballprox::HilbertOperator>(op->value) ? 1 : 0;
}

bp_status bp_op_norm(const bp_operator* op, double* out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] { *out = ballprox::op_norm(op->value); });
}

bp_status bp_ess_norm(const bp_operator* op, double* out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] { *out = ballprox::ess_norm(op->value); });
}

bp_status bp_attains_norm(const bp_operator* op, int* out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] { *out = ballprox::attains_norm(hilbert(op)) ? 1 : 0; });
}

bp_status bp_dist_ball(const bp_operator* op, double* out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] {
    if (const auto* h = std::get_if<ballprox::HilbertOperator>(&op->value))
      *out = ballprox::dist_ball_h(*h);
    else
      *out = ballprox::dist_ball_l1(std::get<ballprox::L1Operator>(op->value));
  });
}

bp_status bp_best_approx(const bp_operator* op, int positive, bp_result** out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] {
    if (const auto* h = std::get_if<ballprox::HilbertOperator>(&op->value)) {
      auto r = positive ? ballprox::positive_ball_approx(*h) : ballprox::best_ball_approx_h(*h);
      *out = new bp_result{r.distance, ballprox::to_string(r.branch), r.approximant, r.certificate};
      return;
    }
    if (positive) throw ballprox::ValidationError("positive approximation needs an l2 diagonal operator", "space");
    auto r = ballprox::best_ball_approx_l1(std::get<ballprox::L1Operator>(op->value));
    *out = new bp_result{r.distance, ballprox::to_string(r.branch), r.approximant, r.certificate};
  });
}

bp_status bp_soft_threshold_approx(const bp_operator* op, bp_result** out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] {
    auto r = ballprox::soft_threshold_approx(hilbert(op));
    *out = new bp_result{r.distance, ballprox::to_string(r.branch), r.approximant, r.certificate};
  });
}

void bp_result_free(bp_result* r) { delete r; }

double bp_result_distance(const bp_result* r) { return r ? r->distance : 0.0; }

const char* bp_result_branch(const bp_result* r) { return r ? r->branch.c_str() : ""; }

bp_status bp_result_approximant(const bp_result* r, bp_operator** out) {
  BP_REQUIRE(r);
  BP_REQUIRE(out);
  return guarded([&] { *out = new bp_operator{r->approximant}; });
}

bp_status bp_result_certificate_json(const bp_result* r, char** out) {
  BP_REQUIRE(r);
  BP_REQUIRE(out);
  return guarded([&] { *out = dup_string(ballprox::to_json(r->certificate).dump()); });
}

bp_status bp_isometry_distance_check(double a, const bp_operator* op, int* out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] { *out = ballprox::isometry_distance_check(a, hilbert(op)) ? 1 : 0; });
}

bp_status bp_competitor_search(const bp_operator* op, double d_claimed, uint64_t trials, uint64_t seed, double tol,
                               bp_search_report* out, bp_operator** best_competitor) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] {
    const auto r = ballprox::competitor_search(op->value, d_claimed, trials, seed, tol);
    *out = bp_search_report{r.pass ? 1 : 0, r.attained ? 1 : 0, r.claimed, r.best_found, r.tol,
                            static_cast<uint64_t>(r.trials), static_cast<uint64_t>(r.evaluated)};
    if (best_competitor) *best_competitor = new bp_operator{r.best_competitor};
  });
}

bp_status bp_competitor_search_json(const bp_operator* op, double d_claimed, uint64_t trials, uint64_t seed,
                                    double tol, char** out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] {
    const auto r = ballprox::competitor_search(op->value, d_claimed, trials, seed, tol);
    auto j = ballprox::to_json(r);
    j["pass"] = r.pass;
    *out = dup_string(j.dump());
  });
}

bp_status bp_finite_section_bounds(const bp_operator* op, size_t n, double* lower, double* upper) {
  BP_REQUIRE(op);
  BP_REQUIRE(lower);
  BP_REQUIRE(upper);
  return guarded([&] {
    const auto b = std::visit([n](const auto& t) { return ballprox::finite_section_bounds(t, n); }, op->value);
    *lower = b.lower;
    *upper = b.upper;
  });
}

bp_status bp_finite_column_oracle(const bp_operator* op, size_t n, double* out) {
  BP_REQUIRE(op);
  BP_REQUIRE(out);
  return guarded([&] {
    const auto* t = std::get_if<ballprox::L1Operator>(&op->value);
    if (!t) throw ballprox::ValidationError("column oracle needs an l1 operator", "space");
    *out = ballprox::finite_column_oracle(*t, n);
  });
}

bp_status bp_is_extreme(bp_space space, const double* coords, size_t dim, int* out) {
  BP_REQUIRE(coords);
  BP_REQUIRE(out);
  return guarded([&] { *out = ballprox::is_extreme(make_point(space, coords, dim)) ? 1 : 0; });
}

bp_status bp_project_scalar_multiple(bp_space space, const double* coords, size_t dim, double alpha,
                                     double* out_coords, double* out_distance) {
  BP_REQUIRE(coords);
  BP_REQUIRE(out_coords);
  BP_REQUIRE(out_distance);
  return guarded([&] {
    const auto p = ballprox::project_scalar_multiple(alpha, make_point(space, coords, dim));
    std::copy(p.point.coords.begin(), p.point.coords.end(), out_coords);
    *out_distance = p.distance;
  });
}

bp_status bp_verify_unique_projection(bp_space space, const double* coords, size_t dim, double alpha,
                                      uint64_t samples, uint64_t seed, double tol, bp_projection_report* out) {
  BP_REQUIRE(coords);
  BP_REQUIRE(out);
  return guarded([&] {
    const auto r = ballprox::verify_unique_projection(alpha, make_point(space, coords, dim), samples, seed, tol);
    *out = bp_projection_report{r.pass ? 1 : 0,
                                static_cast<uint64_t>(r.samples),
                                static_cast<uint64_t>(r.violations),
                                static_cast<uint64_t>(r.near_minimizers),
                                r.min_distance,
                                r.radius,
                                r.allowed_radius,
                                r.spread};
  });
}

bp_status bp_verify_unique_projection_json(bp_space space, const double* coords, size_t dim, double alpha,
                                           uint64_t samples, uint64_t seed, double tol, char** out) {
  BP_REQUIRE(coords);
  BP_REQUIRE(out);
  return guarded([&] {
    const auto r = ballprox::verify_unique_projection(alpha, make_point(space, coords, dim), samples, seed, tol);
    *out = dup_string(ballprox::to_json(r).dump());
  });
}

}  // extern "C"
