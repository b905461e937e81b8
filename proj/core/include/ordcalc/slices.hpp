#pragma once

#include <cstddef>
#include <vector>

#include "ordcalc/cnf_views.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

// A choice of one plain-view CNF term per factor of a product of infinite
// ordinals; grounded when some coordinate picks the leading term.
struct Slice {
  std::vector<std::size_t> indices;
  bool grounded = false;
};

// Same over developed views, carrying the number of plain grounded slices
// it stands for.
struct DevelopedSlice {
  std::vector<std::size_t> indices;
  BigInt multiplicity;
};

// A nonempty set I of factor positions (those sliced at their leading term),
// with coefficient L_I = prod a_i - prod (a_i - 1) over the leading
// multiplicities of the positions in I.
struct MetaSlice {
  std::vector<std::size_t> positions;
  BigInt coefficient;
};

enum class SliceForm { Plain, Developed, Meta };

inline constexpr std::size_t kDefaultSliceBudget = 1'000'000;

// Number of grounded slices: prod l_i - prod (l_i - 1).
BigInt grounded_count(const std::vector<BigInt>& lens);

// All grounded slices of the given form. Preconditions: every factor is
// infinite (NotAllInfiniteError otherwise); the count fits the budget
// (ResourceLimitError otherwise; Plain additionally requires the plain
// views to be materialized).
std::vector<Slice> grounded_plain_slices(const std::vector<CnfViews>& views,
                                         std::size_t budget = kDefaultSliceBudget);
std::vector<DevelopedSlice> grounded_developed_slices(const std::vector<CnfViews>& views,
                                                      std::size_t budget = kDefaultSliceBudget);
std::vector<MetaSlice> grounded_meta_slices(const std::vector<CnfViews>& views,
                                            std::size_t budget = kDefaultSliceBudget);

}  // namespace ordcalc
