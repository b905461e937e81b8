#include <doctest.h>

#include "ordcalc/invariants.hpp"
#include "ordcalc/parser.hpp"
#include "ordcalc/render.hpp"

using namespace ordcalc;

namespace {

Ordinal O(const char* text) { return parse_ordinal(text); }

}  // namespace

TEST_SUITE_BEGIN("render");

TEST_CASE("ordinal JSON encoding") {
  CHECK(ordinal_to_json(Ordinal()) == nlohmann::json::array());

  nlohmann::json jw = ordinal_to_json(omega());
  REQUIRE(jw.is_array());
  REQUIRE(jw.size() == 1);
  CHECK(jw[0]["coeff"] == 1);
  CHECK(jw[0]["exp"] == nlohmann::json::parse(R"([{"exp": [], "coeff": 1}])"));

  nlohmann::json j = ordinal_to_json(O("w^w*3 + w^2 + 5"));
  REQUIRE(j.size() == 3);
  CHECK(j[0]["coeff"] == 3);
  CHECK(j[1]["coeff"] == 1);
  CHECK(j[2]["coeff"] == 5);
  CHECK(j[2]["exp"] == nlohmann::json::array());
  CHECK(j[1]["exp"] == nlohmann::json::parse(R"([{"exp": [], "coeff": 2}])"));

  // coefficients beyond 64 bits are decimal strings
  nlohmann::json big = ordinal_to_json(O("w*123456789012345678901234567890"));
  CHECK(big[0]["coeff"] == "123456789012345678901234567890");
}

TEST_CASE("ordinal LaTeX encoding") {
  CHECK(ordinal_to_latex(Ordinal()) == "0");
  CHECK(ordinal_to_latex(Ordinal(42)) == "42");
  CHECK(ordinal_to_latex(omega()) == "\\omega");
  CHECK(ordinal_to_latex(O("w^w*3 + w^2 + 5")) ==
        "\\omega^{\\omega} \\cdot 3 + \\omega^{2} + 5");
  CHECK(ordinal_to_latex(O("w^(w*2)")) == "\\omega^{\\omega \\cdot 2}");
}

TEST_CASE("expression rendering") {
  CHECK(render_expr(parse_expr("star(G2) x w x w")) == "star(G2) x w x w");
  CHECK(render_expr(parse_expr("w x (G2 ++ w^2)")) == "w x (G2 ++ w^2)");
  CHECK(render_expr(parse_expr("(w x w) x w")) == "(w x w) x w");
  CHECK(render_expr(parse_expr("w ++ w x w")) == "w ++ w x w");
}

TEST_CASE("derivation trace JSON schema") {
  InvariantResult r = width(parse_expr("(w^w + w) x w*3"));
  REQUIRE(r.is_known());
  nlohmann::json j = trace_to_json(r.derivation());
  REQUIRE(j.is_array());
  REQUIRE_FALSE(j.empty());
  for (const auto& step : j) {
    CHECK(step.size() == 4);
    CHECK(step.contains("rule"));
    CHECK(step.contains("anchor"));
    CHECK(step.contains("inputs"));
    CHECK(step.contains("output"));
    CHECK(step["inputs"].is_array());
    CHECK(step["output"].is_string());
  }
  // the grounded-slice table appears as one step per slice
  int slice_steps = 0;
  for (const auto& step : j) {
    if (step["anchor"] == "width.developed-slice") ++slice_steps;
  }
  CHECK(slice_steps == 2);
}

TEST_SUITE_END();
