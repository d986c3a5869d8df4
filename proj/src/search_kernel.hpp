#pragma once

// Pieces shared by the parallel and serial search drivers.

#include <cstdint>
#include <vector>

#include "cubicdio/solver.hpp"

namespace cubicdio::detail {

struct PartialResult {
  std::vector<Solution> solutions;
  std::vector<BudgetWarning> warnings;
  std::uint64_t tested = 0;
  std::uint64_t filter_pass = 0;

  void merge(PartialResult&& other);
};

/// Validates the config and the family's hypotheses; throws InvalidBound or,
/// under strict_hypotheses, HypothesisViolation.
SearchReport begin_search(const CubicFamily& fam, const SearchConfig& cfg);

/// Processes one y0 into `out`.
void scan_y(const CubicFamily& fam, const Integer& y0, const SearchConfig& cfg, PartialResult& out);

/// Sorts, counts and derives statistics.
void finish_search(SearchReport& report, PartialResult&& all);

}  // namespace cubicdio::detail
