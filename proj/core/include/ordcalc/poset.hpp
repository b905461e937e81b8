#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "ordcalc/ordinal.hpp"

namespace ordcalc {

inline constexpr std::size_t kDefaultPosetBudget = 20'000;
inline constexpr std::size_t kDefaultBadSequenceBudget = 12;

// An explicit finite poset of integer tuples ordered componentwise.
class FinitePoset {
 public:
  // Checks reflexivity/antisymmetry/transitivity of the componentwise order
  // on construction for small element counts.
  explicit FinitePoset(std::vector<std::vector<int>> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::vector<int>>& elements() const { return elements_; }
  bool leq(std::size_t i, std::size_t j) const;

 private:
  std::vector<std::vector<int>> elements_;
};

// The componentwise-ordered product k_1 x ... x k_n with coordinates
// 0..k_i-1. Throws ResourceLimitError when the element count exceeds the
// budget.
FinitePoset grid_poset(const std::vector<int>& ks,
                       std::size_t element_budget = kDefaultPosetBudget);

// Exact maximum antichain size via minimum chain cover (bipartite matching),
// independent of the grid polynomial formula.
std::size_t max_antichain(const FinitePoset& p);

// Exact maximum antichain by exhaustive subset search; for <= ~16 elements.
std::size_t max_antichain_exhaustive(const FinitePoset& p);

// Exact longest chain length (longest path in the strict-order DAG).
std::size_t longest_chain(const FinitePoset& p);

// Exact longest bad sequence (no earlier element <= a later one), by
// subset reachability. Throws ResourceLimitError above max_elements.
std::size_t longest_bad_sequence(const FinitePoset& p,
                                 std::size_t max_elements = kDefaultBadSequenceBudget);

// Oracle-vs-formula agreement report for one finite grid.
struct OracleReport {
  std::vector<int> input;
  std::size_t antichain_oracle = 0;
  BigInt antichain_formula;
  std::size_t chain_oracle = 0;
  BigInt chain_formula;
  std::optional<std::size_t> bad_oracle;  // computed when the grid is small enough
  std::optional<BigInt> bad_formula;
  bool ok = false;

  nlohmann::json to_json() const;
};

// Runs the three oracles on the grid and the matching closed forms
// (grid-polynomial width, folded pairwise height, product order type).
// The bad-sequence pair is included up to bad_budget elements.
OracleReport check_against_formulas(const std::vector<int>& ks,
                                    std::size_t element_budget = kDefaultPosetBudget,
                                    std::size_t bad_budget = 25);

}  // namespace ordcalc
