#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordcalc/errors.hpp"
#include "ordcalc/invariants.hpp"
#include "ordcalc/parser.hpp"
#include "ordcalc/poset.hpp"
#include "ordcalc/render.hpp"
#include "ordcalc/selftest.hpp"

namespace {

using namespace ordcalc;

// Exit codes: 0 ok, 1 parse error, 2 unknown invariant, 3 resource limit,
// 4 selftest/oracle mismatch.
enum ExitCode { kOk = 0, kParseError = 1, kUnknown = 2, kResourceLimit = 3, kMismatch = 4 };

struct Options {
  std::string expr;
  std::string format = "text";
  std::size_t slice_budget = kDefaultSliceBudget;
  std::size_t poset_budget = kDefaultPosetBudget;
};

nlohmann::json result_json(const InvariantResult& r) {
  if (!r.is_known()) return nlohmann::json{{"unknown", r.reason()}};
  return nlohmann::json{{"ordinal", ordinal_to_json(r.value())}, {"text", r.value().to_string()}};
}

std::string result_text(const InvariantResult& r, const std::string& format) {
  if (!r.is_known()) return "unknown: " + r.reason();
  return format == "latex" ? ordinal_to_latex(r.value()) : r.value().to_string();
}

int run_invariant(const char* verb, const Options& opt) {
  WqoExprPtr e = parse_expr(opt.expr);
  WidthConfig config;
  config.slice_budget = opt.slice_budget;
  InvariantResult r = std::string(verb) == "width"    ? width(e, config)
                      : std::string(verb) == "height" ? height(e)
                                                      : otype(e);
  if (opt.format == "json") {
    nlohmann::json j{{"verb", verb}, {"input", render_expr(e)}, {"result", result_json(r)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << result_text(r, opt.format) << '\n';
  }
  return r.is_known() ? kOk : kUnknown;
}

void print_derivation(const char* label, const Trace& trace) {
  std::cout << "derivation (" << label << "):\n";
  for (const TraceStep& s : trace) {
    std::cout << "  [" << s.anchor << "] " << s.rule << ": ";
    for (std::size_t i = 0; i < s.inputs.size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << s.inputs[i];
    }
    std::cout << " -> " << s.output << '\n';
  }
}

// inv prints the three invariants; explain adds each derivation trace
// (including the grounded-slice table behind the width).
int run_inv(const Options& opt, bool with_derivation) {
  WqoExprPtr e = parse_expr(opt.expr);
  WidthConfig config;
  config.slice_budget = opt.slice_budget;
  InvariantResult w = width(e, config);
  InvariantResult h = height(e);
  InvariantResult o = otype(e);
  if (opt.format == "json") {
    nlohmann::json jw = result_json(w), jh = result_json(h), jo = result_json(o);
    if (with_derivation) {
      jw["derivation"] = trace_to_json(w.derivation());
      jh["derivation"] = trace_to_json(h.derivation());
      jo["derivation"] = trace_to_json(o.derivation());
    }
    nlohmann::json j{{"verb", with_derivation ? "explain" : "inv"},
                     {"input", render_expr(e)},
                     {"width", jw},
                     {"height", jh},
                     {"otype", jo}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "width: " << result_text(w, opt.format) << '\n';
    std::cout << "height: " << result_text(h, opt.format) << '\n';
    std::cout << "otype: " << result_text(o, opt.format) << '\n';
    if (with_derivation) {
      print_derivation("width", w.derivation());
      print_derivation("height", h.derivation());
      print_derivation("otype", o.derivation());
    }
  }
  return (w.is_known() && h.is_known() && o.is_known()) ? kOk : kUnknown;
}

// The oracle verb takes a product of finite chains, e.g. "2 x 2 x 2".
std::vector<int> finite_sides(const WqoExprPtr& e) {
  std::vector<WqoExprPtr> leaves;
  if (e->kind() == WqoExpr::Kind::Product) {
    leaves = e->children();
  } else {
    leaves.push_back(e);
  }
  std::vector<int> ks;
  for (const auto& leaf : leaves) {
    if (leaf->kind() != WqoExpr::Kind::Ordinal || !leaf->ordinal_value().is_finite())
      throw ParseError("the oracle verb requires a product of finite chains", 0);
    BigInt v = leaf->ordinal_value().finite_value();
    if (v > 1'000'000) throw ResourceLimitError("oracle: side too large");
    ks.push_back(v.convert_to<int>());
  }
  return ks;
}

int run_oracle(const Options& opt) {
  std::vector<int> ks = finite_sides(parse_expr(opt.expr));
  OracleReport r = check_against_formulas(ks, opt.poset_budget);
  if (opt.format == "json") {
    std::cout << r.to_json().dump(2) << '\n';
  } else {
    std::cout << "grid:";
    for (int k : r.input) std::cout << ' ' << k;
    std::cout << '\n';
    std::cout << "antichain: oracle " << r.antichain_oracle << ", formula "
              << r.antichain_formula << '\n';
    std::cout << "chain: oracle " << r.chain_oracle << ", formula " << r.chain_formula << '\n';
    if (r.bad_oracle)
      std::cout << "bad: oracle " << *r.bad_oracle << ", formula " << *r.bad_formula << '\n';
    std::cout << (r.ok ? "ok" : "MISMATCH") << '\n';
  }
  return r.ok ? kOk : kMismatch;
}

int run_selftest_verb() {
  SelfTestReport report = run_selftest();
  std::cout << report.to_json().dump(2) << '\n';
  return report.ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal invariant calculator: width, height and maximal order type\n"
               "of cartesian products of ordinals and elementary wqos"};
  app.require_subcommand(1);

  Options opt;
  std::function<int()> action;

  auto add_common = [&](CLI::App* sub, bool needs_expr) {
    if (needs_expr)
      sub->add_option("expr", opt.expr, "expression, e.g. \"w^w*3 + w^2 + 5\" or \"star(G2) x w\"")
          ->required();
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();
    sub->add_option("--slice-budget", opt.slice_budget, "max grounded slices to enumerate")
        ->capture_default_str();
    sub->add_option("--poset-budget", opt.poset_budget, "max finite poset elements")
        ->capture_default_str();
  };

  for (const char* verb : {"width", "height", "otype"}) {
    CLI::App* sub = app.add_subcommand(verb, std::string("compute the ") + verb +
                                                 " of an expression");
    add_common(sub, true);
    sub->callback([&, verb] { action = [&, verb] { return run_invariant(verb, opt); }; });
  }
  {
    CLI::App* sub = app.add_subcommand("inv", "compute width, height and otype");
    add_common(sub, true);
    sub->callback([&] { action = [&] { return run_inv(opt, false); }; });
  }
  {
    CLI::App* sub = app.add_subcommand("explain", "compute all invariants with derivations");
    add_common(sub, true);
    sub->callback([&] { action = [&] { return run_inv(opt, true); }; });
  }
  {
    CLI::App* sub = app.add_subcommand("oracle", "compare grid oracles with the closed forms");
    add_common(sub, true);
    sub->callback([&] { action = [&] { return run_oracle(opt); }; });
  }
  {
    CLI::App* sub = app.add_subcommand("selftest", "run the embedded regression suite");
    add_common(sub, false);
    sub->callback([&] { action = [&] { return run_selftest_verb(); }; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << '\n';
    return kParseError;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const OrdinalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 70;
  }
}
