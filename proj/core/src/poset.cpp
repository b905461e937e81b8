#include "ordcalc/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "ordcalc/errors.hpp"
#include "ordcalc/width.hpp"

namespace ordcalc {

namespace {

constexpr std::size_t kRelationCheckCap = 128;

bool tuple_leq(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

FinitePoset::FinitePoset(std::vector<std::vector<int>> elements)
    : elements_(std::move(elements)) {
  for (const auto& e : elements_) {
    if (e.size() != elements_[0].size())
      throw std::invalid_argument("poset elements must have equal arity");
  }
  if (size() <= kRelationCheckCap) {
    for (std::size_t i = 0; i < size(); ++i) {
      if (!leq(i, i)) throw std::logic_error("poset order not reflexive");
      for (std::size_t j = 0; j < size(); ++j) {
        if (i != j && leq(i, j) && leq(j, i))
          throw std::invalid_argument("poset contains duplicate elements");
        for (std::size_t k = 0; k < size(); ++k) {
          if (leq(i, j) && leq(j, k) && !leq(i, k))
            throw std::logic_error("poset order not transitive");
        }
      }
    }
  }
}

bool FinitePoset::leq(std::size_t i, std::size_t j) const {
  return tuple_leq(elements_[i], elements_[j]);
}

FinitePoset grid_poset(const std::vector<int>& ks, std::size_t element_budget) {
  if (ks.empty()) throw std::invalid_argument("grid_poset: empty shape");
  BigInt count = 1;
  for (int k : ks) {
    if (k < 1) throw std::invalid_argument("grid_poset: sides must be >= 1");
    count *= k;
    if (count > element_budget)
      throw ResourceLimitError("grid_poset: " + count.str() + " elements exceed the budget of " +
                               std::to_string(element_budget));
  }
  std::vector<std::vector<int>> elems;
  elems.reserve(count.convert_to<std::size_t>());
  std::vector<int> cur(ks.size(), 0);
  while (true) {
    elems.push_back(cur);
    std::size_t i = 0;
    for (; i < ks.size(); ++i) {
      if (++cur[i] < ks[i]) break;
      cur[i] = 0;
    }
    if (i == ks.size()) break;
  }
  return FinitePoset(std::move(elems));
}

namespace {

// Hopcroft-Karp maximum matching on the bipartite graph with an edge
// (u, v) whenever u < v in the poset. By Dilworth duality the minimum
// chain cover is |P| - matching, and that equals the maximum antichain.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t n, std::vector<std::vector<int>> adj)
      : n_(n), adj_(std::move(adj)), match_left_(n, -1), match_right_(n, -1), dist_(n) {}

  std::size_t max_matching() {
    std::size_t result = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < n_; ++u) {
        if (match_left_[u] == -1 && dfs(u)) ++result;
      }
    }
    return result;
  }

 private:
  bool bfs() {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < n_; ++u) {
      if (match_left_[u] == -1) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = -1;
      }
    }
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (int v : adj_[u]) {
        int w = match_right_[v];
        if (w == -1) {
          found = true;
        } else if (dist_[w] == -1) {
          dist_[w] = dist_[u] + 1;
          q.push(static_cast<std::size_t>(w));
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (int v : adj_[u]) {
      int w = match_right_[v];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(static_cast<std::size_t>(w)))) {
        match_left_[u] = v;
        match_right_[v] = static_cast<int>(u);
        return true;
      }
    }
    dist_[u] = -1;
    return false;
  }

  std::size_t n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_, match_right_;
  std::vector<int> dist_;
};

}  // namespace

std::size_t max_antichain(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.leq(i, j)) adj[i].push_back(static_cast<int>(j));
    }
  }
  BipartiteMatcher matcher(n, std::move(adj));
  return n - matcher.max_matching();
}

std::size_t max_antichain_exhaustive(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n > 20) throw ResourceLimitError("max_antichain_exhaustive: too many elements");
  std::vector<std::uint32_t> comparable(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (p.leq(i, j) || p.leq(j, i))) comparable[i] |= std::uint32_t{1} << j;
    }
  }
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool antichain = true;
    for (std::size_t i = 0; i < n && antichain; ++i) {
      if ((mask & (std::uint32_t{1} << i)) && (mask & comparable[i])) antichain = false;
    }
    if (antichain) best = std::max<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

std::size_t longest_chain(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n == 0) return 0;
  // Coordinate sums give a topological order of the strict order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<long> sums(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int c : p.elements()[i]) sums[i] += c;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sums[a] < sums[b]; });
  std::vector<std::size_t> dp(n, 1);
  std::size_t best = 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      std::size_t u = order[b], v = order[a];
      if (u != v && p.leq(u, v) && !p.leq(v, u)) dp[v] = std::max(dp[v], dp[u] + 1);
    }
    best = std::max(best, dp[order[a]]);
  }
  return best;
}

std::size_t longest_bad_sequence(const FinitePoset& p, std::size_t max_elements) {
  const std::size_t n = p.size();
  if (n > max_elements || n > 25) {
    throw ResourceLimitError("longest_bad_sequence: " + std::to_string(n) +
                             " elements exceed the exhaustive-search budget");
  }
  // Whether y may extend a bad sequence depends only on the set of earlier
  // elements: none of them may be <= y. Reachability over subsets is
  // therefore exhaustive over all bad sequences.
  std::vector<std::uint32_t> blockers(n, 0);  // x != y with x <= y
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x != y && p.leq(x, y)) blockers[y] |= std::uint32_t{1} << x;
    }
  }
  const std::size_t total = std::size_t{1} << n;
  std::vector<char> reachable(total, 0);
  reachable[0] = 1;
  std::size_t best = 0;
  for (std::size_t s = 0; s < total; ++s) {
    if (!reachable[s]) continue;
    best = std::max<std::size_t>(best, __builtin_popcountll(s));
    for (std::size_t y = 0; y < n; ++y) {
      if (s & (std::size_t{1} << y)) continue;
      if ((s & blockers[y]) == 0) reachable[s | (std::size_t{1} << y)] = 1;
    }
  }
  return best;
}

nlohmann::json OracleReport::to_json() const {
  nlohmann::json j;
  j["input"] = input;
  j["antichain"] = {{"oracle", antichain_oracle},
                    {"formula", antichain_formula.str()}};
  j["chain"] = {{"oracle", chain_oracle}, {"formula", chain_formula.str()}};
  if (bad_oracle) {
    j["bad"] = {{"oracle", *bad_oracle}, {"formula", bad_formula->str()}};
  }
  j["ok"] = ok;
  return j;
}

OracleReport check_against_formulas(const std::vector<int>& ks, std::size_t element_budget,
                                    std::size_t bad_budget) {
  OracleReport r;
  r.input = ks;
  FinitePoset p = grid_poset(ks, element_budget);

  r.antichain_oracle = max_antichain(p);
  std::vector<BigInt> kbig(ks.begin(), ks.end());
  r.antichain_formula = width_finite_product(kbig).finite_value();

  r.chain_oracle = longest_chain(p);
  Ordinal h(static_cast<unsigned long long>(ks[0]));
  for (std::size_t i = 1; i < ks.size(); ++i) {
    h = sup_plus_one(h, Ordinal(static_cast<unsigned long long>(ks[i])));
  }
  r.chain_formula = h.finite_value();

  if (p.size() <= bad_budget) {
    r.bad_oracle = longest_bad_sequence(p, bad_budget);
    BigInt prod = 1;
    for (int k : ks) prod *= k;
    r.bad_formula = prod;
  }

  r.ok = BigInt(r.antichain_oracle) == r.antichain_formula &&
         BigInt(r.chain_oracle) == r.chain_formula &&
         (!r.bad_oracle || BigInt(*r.bad_oracle) == *r.bad_formula);
  return r;
}

}  // namespace ordcalc
