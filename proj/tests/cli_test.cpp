#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef ORDCALC_BIN
#error "ORDCALC_BIN must point at the ordcalc executable"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(ORDCALC_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("width verb") {
  RunResult r = run("width \"w x w x w\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "w^2\n");

  r = run("width \"(w^w + w) x w*3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "w^w*3 + w\n");
}

TEST_CASE("unknown results exit with 2") {
  RunResult r = run("width \"star(G2) x w^2\"");
  CHECK(r.exit_code == 2);
  CHECK(r.out.substr(0, 8) == "unknown:");

  CHECK(run("height \"star(G1)\"").exit_code == 2);
}

TEST_CASE("parse errors exit with 1") {
  RunResult r = run("width \"w +\"");
  CHECK(r.exit_code == 1);
  CHECK(r.out.empty());
  CHECK(run("width \"0\"").exit_code == 1);
  CHECK(run("oracle \"w x 2\"").exit_code == 1);
}

TEST_CASE("resource limits exit with 3") {
  CHECK(run("width \"(w^w + w) x (w + 1)\" --slice-budget 1").exit_code == 3);
  CHECK(run("oracle \"100 x 100 x 100\"").exit_code == 3);
  CHECK(run("oracle \"30 x 30\" --poset-budget 100").exit_code == 3);
  CHECK(run("oracle \"30 x 30\"").exit_code == 0);
}

TEST_CASE("height and otype verbs") {
  CHECK(run("otype \"star(G1)\"").out == "w\n");
  CHECK(run("height \"w x w\"").out == "w\n");
  CHECK(run("otype \"w^w x w^w\"").out == "w^(w*2)\n");
}

TEST_CASE("inv prints all three invariants") {
  RunResult r = run("inv \"star(G2) x w x w\"");
  CHECK(r.exit_code == 2);  // the height is a declared gap
  CHECK(r.out.find("width: w^(w + 2)") != std::string::npos);
  CHECK(r.out.find("height: unknown:") != std::string::npos);
  CHECK(r.out.find("otype: w^(w + 2)") != std::string::npos);

  CHECK(run("inv \"w x w\"").exit_code == 0);
}

TEST_CASE("json output") {
  RunResult r = run("width \"w x w x w\" --format json");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["verb"] == "width");
  CHECK(j["input"] == "w x w x w");
  CHECK(j["result"]["text"] == "w^2");
  CHECK(j["result"]["ordinal"] == nlohmann::json::parse(R"([{"exp": [{"exp": [], "coeff": 2}], "coeff": 1}])"));

  nlohmann::json inv = nlohmann::json::parse(run("inv \"w x w\" --format json").out);
  CHECK(inv["width"]["text"] == "w");
  CHECK(inv["height"]["text"] == "w");
  CHECK(inv["otype"]["text"] == "w^2");

  nlohmann::json h = nlohmann::json::parse(run("height \"3 x 4\" --format json").out);
  CHECK(h["verb"] == "height");
  CHECK(h["result"]["text"] == "6");
  nlohmann::json o = nlohmann::json::parse(run("otype \"star(G1)\" --format json").out);
  CHECK(o["verb"] == "otype");
  CHECK(o["result"]["text"] == "w");

  nlohmann::json unk = nlohmann::json::parse(run("width \"star(G2) x w^2\" --format json").out);
  CHECK(unk["result"].contains("unknown"));
}

TEST_CASE("latex output") {
  CHECK(run("width \"w x w x w\" --format latex").out == "\\omega^{2}\n");
}

TEST_CASE("explain shows the derivations") {
  RunResult r = run("explain \"(w^w + w) x w*3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("width: w^w*3 + w") != std::string::npos);
  CHECK(r.out.find("derivation (width):") != std::string::npos);
  CHECK(r.out.find("derivation (otype):") != std::string::npos);
  CHECK(r.out.find("width.developed-slice") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(run("explain \"w x w\" --format json").out);
  REQUIRE(j["width"].contains("derivation"));
  REQUIRE(j["width"]["derivation"].is_array());
  for (const auto& step : j["width"]["derivation"]) {
    CHECK(step.contains("rule"));
    CHECK(step.contains("anchor"));
    CHECK(step.contains("inputs"));
    CHECK(step.contains("output"));
  }
  CHECK(j["height"].contains("derivation"));
  CHECK(j["otype"].contains("derivation"));
}

TEST_CASE("oracle verb") {
  RunResult r = run("oracle \"2 x 2 x 2\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("antichain: oracle 3, formula 3") != std::string::npos);
  CHECK(r.out.find("chain: oracle 4, formula 4") != std::string::npos);
  CHECK(r.out.find("bad: oracle 8, formula 8") != std::string::npos);
  CHECK(r.out.find("ok") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(run("oracle \"3 x 4\" --format json").out);
  CHECK(j["ok"] == true);
  CHECK(j["antichain"]["oracle"] == 3);
  CHECK(j["chain"]["oracle"] == 6);
}

TEST_CASE("selftest reports every criterion as passing") {
  RunResult r = run("selftest");
  CHECK(r.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == true);
  REQUIRE(j["criteria"].is_array());
  CHECK(j["criteria"].size() == 8);
  for (const auto& c : j["criteria"]) {
    CHECK(c["status"] == "pass");
  }
}

TEST_SUITE_END();
