#include "../support/generators.hpp"
#include "ballprox/errors.hpp"
#include "ballprox/operator_json.hpp"
#include "doctest.h"

using namespace ballprox;
using ballprox::testing::InstanceGenerator;

namespace {

std::string field_of(const std::string& text) {
  try {
    parse_operator(text);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("parse_operator examples") {
  const Operator d = parse_operator(
      R"({"space":"l2","model":"diagonal","explicit":[3,2,0.5],"tail":{"kind":"const","value":1}})");
  CHECK(std::get<HilbertOperator>(d) == HilbertOperator::diagonal({3, 2, 0.5}, TailRule::constant(1)));

  const Operator l = parse_operator(
      R"({"space":"l1","model":"columns","columns":[[0.6,0.9,0.9]],"tail":{"kind":"const","value":1}})");
  CHECK(std::get<L1Operator>(l) == L1Operator({{0.6, 0.9, 0.9}}, {}, TailRule::constant(1)));

  CHECK(field_of(R"({"space":"l2","model":"diagonal","tail":{"kind":"geometric","limit":2,"ratio":1.5}})") ==
        "tail.ratio");
}

TEST_CASE("parse_operator diagnostics name the field") {
  CHECK(field_of(R"({"space":"l3","model":"diagonal"})") == "space");
  CHECK(field_of(R"({"space":"l2","model":"banded"})") == "model");
  CHECK(field_of(R"({"space":"l2","model":"diagonal","tail":{"kind":"poly"}})") == "tail.kind");
  CHECK(field_of(R"({"space":"l2","model":"diagonal","explicit":[1,"x"]})") == "explicit[1]");
  // Out-of-range literals are rejected by the JSON reader itself.
  CHECK(field_of(R"({"space":"l2","model":"diagonal","explicit":[1e999]})") == "");
  CHECK(field_of(R"({"space":"l2","model":"matrix","matrix":[[1,2],[3]]})") == "matrix[1]");
  CHECK(field_of(R"({"space":"l1","model":"columns","tail":{"kind":"geometric","limit":1,"ratio":0.5}})") ==
        "tail.kind");
  CHECK(field_of(R"({"model":"diagonal"})") == "space");
  CHECK(field_of("{not json") == "");
  CHECK(field_of(R"({"space":"l2","model":"shift"})") == "<accepted>");
}

TEST_CASE("printed documents use the input schema") {
  const auto j = to_json(HilbertOperator::diagonal({1, 0.5}, TailRule::geometric(2, 0.25)));
  CHECK(j.dump() ==
        R"({"space":"l2","model":"diagonal","explicit":[1.0,0.5],"tail":{"kind":"geometric","limit":2.0,"ratio":0.25}})");
  const auto m = to_json(HilbertOperator::finite_matrix(Matrix{{1, 2}, {3, 4}}));
  CHECK(m.dump() == R"({"space":"l2","model":"matrix","matrix":[[1.0,2.0],[3.0,4.0]]})");
}

TEST_CASE("property: parse(print(model)) is exact") {
  InstanceGenerator gen(51);
  for (int trial = 0; trial < 300; ++trial) {
    const Operator h = gen.hilbert().scaled(gen.uniform(-1e3, 1e3) / 7.0);
    CHECK(std::get<HilbertOperator>(parse_operator(to_json(h).dump())) == std::get<HilbertOperator>(h));
    const Operator l = gen.l1().scaled(1.0 / 3.0);
    CHECK(std::get<L1Operator>(parse_operator(to_json(l).dump())) == std::get<L1Operator>(l));
  }
}
