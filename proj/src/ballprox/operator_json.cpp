#include "ballprox/operator_json.hpp"

#include <cmath>

#include "ballprox/errors.hpp"

namespace ballprox {
namespace {

double number(const Json& v, const std::string& field) {
  if (!v.is_number()) throw ValidationError(field + " must be a number", field);
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError(field + " must be finite", field);
  return x;
}

std::vector<double> numbers(const Json& doc, const std::string& key, const std::string& field) {
  if (!doc.contains(key)) return {};
  const Json& arr = doc.at(key);
  if (!arr.is_array()) throw ValidationError(field + " must be an array", field);
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(number(arr[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::string text(const Json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ValidationError("missing field " + key, key);
  if (!doc.at(key).is_string()) throw ValidationError(key + " must be a string", key);
  return doc.at(key).get<std::string>();
}

TailRule parse_tail(const Json& doc) {
  if (!doc.contains("tail")) return TailRule::constant(0.0);
  const Json& t = doc.at("tail");
  if (!t.is_object()) throw ValidationError("tail must be an object", "tail");
  const std::string kind = t.contains("kind") && t.at("kind").is_string() ? t.at("kind").get<std::string>() : "";
  if (kind == "const") {
    if (!t.contains("value")) throw ValidationError("const tail needs a value", "tail.value");
    return TailRule::constant(number(t.at("value"), "tail.value"));
  }
  if (kind == "geometric") {
    if (!t.contains("limit")) throw ValidationError("geometric tail needs a limit", "tail.limit");
    if (!t.contains("ratio")) throw ValidationError("geometric tail needs a ratio", "tail.ratio");
    return TailRule::geometric(number(t.at("limit"), "tail.limit"), number(t.at("ratio"), "tail.ratio"));
  }
  throw ValidationError("unknown tail kind '" + kind + "'", "tail.kind");
}

Matrix parse_matrix(const Json& doc) {
  if (!doc.contains("matrix") || !doc.at("matrix").is_array())
    throw ValidationError("matrix model needs a matrix array", "matrix");
  const Json& rows = doc.at("matrix");
  const std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string field = "matrix[" + std::to_string(i) + "]";
    if (!rows[i].is_array() || rows[i].size() != n) throw ValidationError("matrix must be square", field);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = number(rows[i][j], field + "[" + std::to_string(j) + "]");
  }
  return m;
}

}  // namespace

Operator parse_operator(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("operator document must be an object", "");
  const std::string space = text(doc, "space");
  const std::string model = text(doc, "model");
  if (space == "l2") {
    if (model == "diagonal") return HilbertOperator::diagonal(numbers(doc, "explicit", "explicit"), parse_tail(doc));
    if (model == "shift") return HilbertOperator::weighted_shift(numbers(doc, "explicit", "explicit"), parse_tail(doc));
    if (model == "matrix") return HilbertOperator::finite_matrix(parse_matrix(doc));
    throw ValidationError("unknown l2 model '" + model + "'", "model");
  }
  if (space == "l1") {
    if (model != "columns") throw ValidationError("unknown l1 model '" + model + "'", "model");
    std::vector<std::vector<double>> cols;
    if (doc.contains("columns")) {
      if (!doc.at("columns").is_array()) throw ValidationError("columns must be an array", "columns");
      for (std::size_t j = 0; j < doc.at("columns").size(); ++j) {
        Json wrapper = {{"c", doc.at("columns")[j]}};
        cols.push_back(numbers(wrapper, "c", "columns[" + std::to_string(j) + "]"));
      }
    }
    return L1Operator(std::move(cols), numbers(doc, "tail_weights", "tail_weights"), parse_tail(doc));
  }
  throw ValidationError("unknown space '" + space + "'", "space");
}

Operator parse_operator(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what(), "");
  }
  return parse_operator(doc);
}

Json to_json(const TailRule& tail) {
  if (tail.kind() == TailKind::Const) return Json{{"kind", "const"}, {"value", tail.limit()}};
  return Json{{"kind", "geometric"}, {"limit", tail.limit()}, {"ratio", tail.ratio()}};
}

Json to_json(const HilbertOperator& t) {
  Json j{{"space", "l2"}, {"model", to_string(t.shape())}};
  if (t.shape() == HilbertShape::FiniteMatrix) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.block().rows(); ++i) {
      Json row = Json::array();
      for (std::size_t c = 0; c < t.block().cols(); ++c) row.push_back(t.block()(i, c));
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    return j;
  }
  j["explicit"] = t.explicit_entries();
  j["tail"] = to_json(t.tail());
  return j;
}

Json to_json(const L1Operator& t) {
  Json j{{"space", "l1"}, {"model", "columns"}};
  j["columns"] = t.columns();
  j["tail_weights"] = t.tail_weights();
  j["tail"] = to_json(t.tail());
  return j;
}

Json to_json(const Operator& t) {
  return std::visit([](const auto& x) { return to_json(x); }, t);
}

Json to_json(const Certificate& c) {
  return Json{{"method", c.method},
              {"op_norm", c.op_norm},
              {"ess_norm", c.ess_norm},
              {"formula_distance", c.formula_distance},
              {"residuals", c.residuals},
              {"tail_residual", c.tail_residual},
              {"enumeration", c.enumeration},
              {"scaled_count", c.scaled_count}};
}

Json to_json(const CompetitorReport& r) {
  return Json{{"claimed", r.claimed},      {"best_found", r.best_found}, {"attained", r.attained},
              {"tol", r.tol},              {"trials", r.trials},         {"evaluated", r.evaluated},
              {"best_competitor", to_json(r.best_competitor)}};
}

Json to_json(const UniquenessReport& r) {
  return Json{{"pass", r.pass},
              {"samples", r.samples},
              {"min_distance", r.min_distance},
              {"closest_sample", r.closest_sample},
              {"violations", r.violations},
              {"near_minimizers", r.near_minimizers},
              {"radius", r.radius},
              {"allowed_radius", r.allowed_radius},
              {"worst_offender", r.worst_offender},
              {"spread", r.spread},
              {"spread_witnesses", Json::array({r.spread_a, r.spread_b})}};
}

}  // namespace ballprox
