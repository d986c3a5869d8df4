#pragma once

// Search driver: hypothesis checks and the bounded scan over y0.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicdio/cubic.hpp"

namespace cubicdio {

enum class SearchMode { Filtered, Exhaustive };

const char* to_string(SearchMode mode) noexcept;

struct SearchConfig {
  /// Search |y0| <= bound. Completeness only holds relative to this bound.
  std::int64_t bound = 1;
  SearchMode mode = SearchMode::Filtered;
  DivisorBudget divisor_budget{};
  bool strict_hypotheses = false;
  int worker_count = 1;
  /// Residual tolerance for the Cardano cross-check attached to solutions.
  double cardano_tol = 1e-12;
};

struct HypothesisReport {
  Mod3Class mod3;
  std::size_t simple_root_count = 0;
  /// y0 whose specialization is irreducible over Q; empty means Unknown.
  std::optional<Integer> irreducibility_witness;
  /// p(y0) is never 0 mod 3, so -3 D(y0) is never a square.
  bool obstruction = false;

  /// Human-readable hypothesis failures; empty when every hypothesis holds.
  std::vector<std::string> violations() const;
  /// Advisory notes that never fail a strict run (mixed mod-3 behaviour).
  std::vector<std::string> warnings() const;
  bool passed() const { return violations().empty(); }
};

HypothesisReport validate_hypotheses(const CubicFamily& fam, const DivisorBudget& budget = {});

struct Solution {
  Integer y0;
  Integer x0;
  std::optional<Integer> w0;
  RootClass classification;
  std::optional<CofactorReport> cofactor;
  /// Cardano's real root of the specialization when D(y0) <= 0.
  std::optional<double> cardano;
};

struct BudgetWarning {
  enum class Stage { Roots, Cofactor };
  Integer y0;
  Stage stage;
  std::string message;
};

struct SearchReport {
  SearchMode mode = SearchMode::Filtered;
  std::int64_t bound = 0;
  std::vector<Solution> solutions;  // sorted by (y0, x0)
  std::uint64_t tested_count = 0;
  std::uint64_t filter_pass_count = 0;
  std::uint64_t solution_count = 0;
  /// Exhaustive mode only: share of solutions with -3 D(y0) a perfect square.
  std::optional<double> rational_w_fraction;
  HypothesisReport hypotheses;
  std::vector<BudgetWarning> budget_warnings;  // sorted by y0

  /// True when a budget failure hid root candidates for some y0.
  bool suppressed_candidates() const;
};

/// y value visited at position k of the order 0, 1, -1, 2, -2, ...
std::int64_t y_at_index(std::int64_t k) noexcept;

/// OpenMP scan with cfg.worker_count threads; the result does not depend on
/// the worker count.
SearchReport run_search(const CubicFamily& fam, const SearchConfig& cfg);

/// Single-threaded reference scan.
SearchReport run_search_serial(const CubicFamily& fam, const SearchConfig& cfg);

}  // namespace cubicdio
