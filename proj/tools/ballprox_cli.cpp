// Command-line front end over the ballprox C API.
//
//   ballprox <command> [operator.json] [flags]
//
// Reads an operator document from the file (or stdin), writes one JSON
// document to stdout. Exit codes: 0 success, 1 input error, 2 verification
// failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ballprox/ballprox.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

struct InputError {
  std::string message;
  std::string field;
  bp_status status = BP_ERR_VALIDATION;
};

struct OperatorDeleter {
  void operator()(bp_operator* op) const { bp_operator_free(op); }
};
struct ResultDeleter {
  void operator()(bp_result* r) const { bp_result_free(r); }
};
using OperatorPtr = std::unique_ptr<bp_operator, OperatorDeleter>;
using ResultPtr = std::unique_ptr<bp_result, ResultDeleter>;

void check(bp_status status) {
  if (status == BP_OK) return;
  throw InputError{bp_last_error(), bp_last_error_field(), status};
}

Json take_json(char* raw) {
  Json j = Json::parse(raw);
  bp_string_free(raw);
  return j;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw InputError{"cannot open " + path, "input"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OperatorPtr load_operator(const std::string& path) {
  const std::string text = read_input(path);
  bp_operator* raw = nullptr;
  check(bp_operator_from_json(text.c_str(), &raw));
  return OperatorPtr(raw);
}

Json operator_json(const bp_operator* op) {
  char* raw = nullptr;
  check(bp_operator_to_json(op, &raw));
  return take_json(raw);
}

Json envelope(const std::string& command) {
  return Json{{"command", command}, {"value", nullptr},       {"branch", nullptr},
              {"approximant", nullptr}, {"certificate", nullptr}, {"pass", true}};
}

std::vector<double> parse_point(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    try {
      return Json::parse(body).get<std::vector<double>>();
    } catch (const std::exception&) {
      throw InputError{"point must be a JSON array of numbers", "point"};
    }
  }
  std::vector<double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError{"bad coordinate '" + item + "'", "point"};
    }
  }
  if (out.empty()) throw InputError{"point needs at least one coordinate", "point"};
  return out;
}

bp_space parse_space(const std::string& name) {
  if (name == "l1") return BP_SPACE_L1;
  if (name == "l2") return BP_SPACE_L2;
  if (name == "linf") return BP_SPACE_LINF;
  throw InputError{"unknown space '" + name + "'", "space"};
}

struct Options {
  std::string input;
  bool positive = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::optional<double> alpha;
  std::string point;
  std::string space;
};

int run_norm(const std::string& cmd, const Options& o, Json& out) {
  auto op = load_operator(o.input);
  double v = 0.0;
  check(cmd == "norm" ? bp_op_norm(op.get(), &v) : bp_ess_norm(op.get(), &v));
  out["value"] = v;
  return kExitOk;
}

int run_distball(const Options& o, Json& out) {
  auto op = load_operator(o.input);
  double d = 0.0, n = 0.0, e = 0.0;
  check(bp_dist_ball(op.get(), &d));
  check(bp_op_norm(op.get(), &n));
  check(bp_ess_norm(op.get(), &e));
  out["value"] = d;
  out["certificate"] = Json{{"op_norm", n}, {"ess_norm", e}};
  return kExitOk;
}

int run_approx(const Options& o, Json& out) {
  auto op = load_operator(o.input);
  bp_result* raw = nullptr;
  check(bp_best_approx(op.get(), o.positive ? 1 : 0, &raw));
  ResultPtr result(raw);

  bp_operator* approx_raw = nullptr;
  check(bp_result_approximant(result.get(), &approx_raw));
  OperatorPtr approx(approx_raw);
  char* cert = nullptr;
  check(bp_result_certificate_json(result.get(), &cert));

  double formula = 0.0, approx_norm = 0.0;
  check(bp_dist_ball(op.get(), &formula));
  check(bp_op_norm(approx.get(), &approx_norm));
  const double distance = bp_result_distance(result.get());

  out["value"] = distance;
  out["branch"] = bp_result_branch(result.get());
  out["approximant"] = operator_json(approx.get());
  out["certificate"] = take_json(cert);
  const bool pass = std::abs(distance - formula) <= 1e-10 && approx_norm <= 1.0 + 1e-12;
  out["pass"] = pass;
  return pass ? kExitOk : kExitVerification;
}

int run_verify(const Options& o, Json& out) {
  auto op = load_operator(o.input);
  double d = 0.0;
  check(bp_dist_ball(op.get(), &d));
  char* raw = nullptr;
  check(bp_competitor_search_json(op.get(), d, o.samples, o.seed, o.tol.value_or(1e-10), &raw));
  Json report = take_json(raw);
  const bool pass = report.at("pass").get<bool>();
  out["value"] = d;
  out["certificate"] = report;
  out["pass"] = pass;
  out["best_found"] = report.at("best_found");
  return pass ? kExitOk : kExitVerification;
}

int run_project(const Options& o, Json& out) {
  if (!o.alpha) throw InputError{"--alpha is required", "alpha"};
  if (o.point.empty()) throw InputError{"--point is required", "point"};
  if (o.space.empty()) throw InputError{"--space is required", "space"};
  const bp_space space = parse_space(o.space);
  const std::vector<double> e = parse_point(o.point);

  int extreme = 0;
  check(bp_is_extreme(space, e.data(), e.size(), &extreme));
  char* raw = nullptr;
  check(bp_verify_unique_projection_json(space, e.data(), e.size(), *o.alpha, o.samples, o.seed,
                                         o.tol.value_or(1e-3), &raw));
  Json report = take_json(raw);
  const bool pass = report.at("pass").get<bool>();
  report["extreme"] = extreme != 0;
  if (extreme) {
    std::vector<double> projected(e.size());
    double distance = 0.0;
    check(bp_project_scalar_multiple(space, e.data(), e.size(), *o.alpha, projected.data(), &distance));
    out["value"] = distance;
    out["approximant"] = Json{{"space", o.space}, {"coords", projected}};
  } else {
    // No closed form: report the best sampled point and let the check speak.
    out["value"] = report.at("min_distance");
    out["approximant"] = Json{{"space", o.space}, {"coords", report.at("closest_sample")}};
  }
  out["certificate"] = report;
  out["pass"] = pass;
  return pass ? kExitOk : kExitVerification;
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Best approximation from the unit ball of compact operators"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Operator JSON file (stdin when omitted or '-')");
  };
  const std::pair<const char*, const char*> simple[] = {
      {"norm", "Operator norm"},
      {"essnorm", "Essential norm (distance to the compact operators)"},
      {"distball", "Distance to the unit ball of the compact operators"},
  };
  for (const auto& [name, help] : simple) add_input(app.add_subcommand(name, help));
  auto* approx = app.add_subcommand("approx", "Best approximant from the compact unit ball");
  add_input(approx);
  approx->add_flag("--positive", o.positive, "Require a positive diagonal input and approximant");
  auto* verify = app.add_subcommand("verify", "Certify the distance by competitor search");
  add_input(verify);
  verify->add_option("--samples", o.samples, "Random competitors");
  verify->add_option("--seed", o.seed, "RNG seed");
  verify->add_option("--tol", o.tol, "Comparison tolerance (default 1e-10)");
  auto* project = app.add_subcommand("project-extreme", "Project alpha*e onto the unit ball of l1/l2/linf");
  project->add_option("--alpha", o.alpha, "Scalar with |alpha| > 1");
  project->add_option("--point", o.point, "Point of the unit ball, e.g. '1,-1,1' or '[1,-1,1]'");
  project->add_option("--space", o.space, "l1, l2 or linf");
  project->add_option("--samples", o.samples, "Uniqueness samples");
  project->add_option("--seed", o.seed, "RNG seed");
  project->add_option("--tol", o.tol, "Near-minimizer tolerance (default 1e-3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print(Json{{"command", nullptr}, {"error", e.what()}, {"field", "arguments"}, {"pass", false}});
    return kExitInput;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  Json out = envelope(cmd);
  try {
    int code = kExitOk;
    if (cmd == "norm" || cmd == "essnorm")
      code = run_norm(cmd, o, out);
    else if (cmd == "distball")
      code = run_distball(o, out);
    else if (cmd == "approx")
      code = run_approx(o, out);
    else if (cmd == "verify")
      code = run_verify(o, out);
    else
      code = run_project(o, out);
    print(out);
    return code;
  } catch (const InputError& e) {
    print(Json{{"command", cmd}, {"error", e.message}, {"field", e.field}, {"pass", false}});
    return e.status == BP_ERR_NUMERIC ? kExitVerification : kExitInput;
  }
}
