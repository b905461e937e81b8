#include "ordcalc/slices.hpp"

#include <algorithm>

#include "ordcalc/errors.hpp"

namespace ordcalc {

namespace {

void require_all_infinite(const std::vector<CnfViews>& views) {
  if (views.empty()) throw NotAllInfiniteError("slice enumeration needs at least one factor");
  for (const auto& v : views) {
    if (v.leading_exponent.is_zero())
      throw NotAllInfiniteError("slice enumeration requires every factor to be infinite");
  }
}

void check_budget(const BigInt& count, std::size_t budget, const char* what) {
  if (count > budget) {
    throw ResourceLimitError(std::string(what) + ": " + count.str() +
                             " slices exceed the budget of " + std::to_string(budget));
  }
}

// Enumerates grounded index tuples over per-factor lengths `lens` by exact
// zero set: positions with lens[i] == 1 are always zero; every other
// position is either pinned to zero or ranges over [1, lens[i]).
template <typename Emit>
void for_each_grounded(const std::vector<std::size_t>& lens, const Emit& emit) {
  const std::size_t n = lens.size();
  std::vector<std::size_t> free_pos;
  for (std::size_t i = 0; i < n; ++i) {
    if (lens[i] > 1) free_pos.push_back(i);
  }
  const bool has_forced_zero = free_pos.size() < n;
  const std::size_t f = free_pos.size();
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t mask = 0; mask < (std::size_t{1} << f); ++mask) {
    // mask bit set => that free position is pinned to zero
    if (!has_forced_zero && mask == 0) continue;  // zero set would be empty
    std::vector<std::size_t> moving;
    for (std::size_t b = 0; b < f; ++b) {
      if (mask & (std::size_t{1} << b)) {
        idx[free_pos[b]] = 0;
      } else {
        moving.push_back(free_pos[b]);
        idx[free_pos[b]] = 1;
      }
    }
    // odometer over moving positions, each in [1, lens[i])
    while (true) {
      emit(idx);
      std::size_t k = 0;
      for (; k < moving.size(); ++k) {
        std::size_t p = moving[k];
        if (++idx[p] < lens[p]) break;
        idx[p] = 1;
      }
      if (k == moving.size()) break;
    }
  }
}

std::vector<BigInt> plain_lens(const std::vector<CnfViews>& views) {
  std::vector<BigInt> lens;
  lens.reserve(views.size());
  for (const auto& v : views) lens.push_back(v.plain_length());
  return lens;
}

std::vector<BigInt> developed_lens(const std::vector<CnfViews>& views) {
  std::vector<BigInt> lens;
  lens.reserve(views.size());
  for (const auto& v : views) lens.push_back(BigInt(v.developed.size()));
  return lens;
}

}  // namespace

BigInt grounded_count(const std::vector<BigInt>& lens) {
  BigInt all = 1, inner = 1;
  for (const auto& l : lens) {
    all *= l;
    inner *= l - 1;
  }
  return all - inner;
}

std::vector<Slice> grounded_plain_slices(const std::vector<CnfViews>& views, std::size_t budget) {
  require_all_infinite(views);
  check_budget(grounded_count(plain_lens(views)), budget, "plain slices");
  std::vector<std::size_t> lens;
  for (const auto& v : views) {
    if (v.plain_truncated)
      throw ResourceLimitError("plain slices: a factor's plain view exceeds the expansion cap");
    lens.push_back(v.plain.size());
  }
  std::vector<Slice> out;
  for_each_grounded(lens, [&](const std::vector<std::size_t>& idx) {
    out.push_back(Slice{idx, true});
  });
  return out;
}

std::vector<DevelopedSlice> grounded_developed_slices(const std::vector<CnfViews>& views,
                                                      std::size_t budget) {
  require_all_infinite(views);
  check_budget(grounded_count(developed_lens(views)), budget, "developed slices");
  std::vector<std::size_t> lens;
  for (const auto& v : views) lens.push_back(v.developed.size());
  std::vector<DevelopedSlice> out;
  for_each_grounded(lens, [&](const std::vector<std::size_t>& idx) {
    BigInt zero_all = 1, zero_dec = 1, moving = 1;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const BigInt& a = views[i].developed[idx[i]].multiplicity;
      if (idx[i] == 0) {
        zero_all *= a;
        zero_dec *= a - 1;
      } else {
        moving *= a;
      }
    }
    out.push_back(DevelopedSlice{idx, (zero_all - zero_dec) * moving});
  });
  return out;
}

std::vector<MetaSlice> grounded_meta_slices(const std::vector<CnfViews>& views,
                                            std::size_t budget) {
  require_all_infinite(views);
  const std::size_t n = views.size();
  if (n >= 8 * sizeof(std::size_t) - 1 ||
      BigInt((BigInt(1) << n) - 1) > budget) {
    throw ResourceLimitError("meta slices: 2^n - 1 subsets exceed the budget");
  }
  std::vector<MetaSlice> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    MetaSlice m;
    BigInt all = 1, dec = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        m.positions.push_back(i);
        all *= views[i].leading_multiplicity;
        dec *= views[i].leading_multiplicity - 1;
      }
    }
    m.coefficient = all - dec;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace ordcalc
