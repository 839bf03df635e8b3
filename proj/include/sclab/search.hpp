#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "sclab/automaton.hpp"
#include "sclab/constructions.hpp"
#include "sclab/oracle.hpp"

namespace sclab {

enum class SearchMode { Exhaustive, Sampled };

std::string_view to_string(SearchMode mode);

/// Environment variable overriding the exhaustive pair budget.
inline constexpr const char* kPairBudgetEnv = "SCLAB_PAIR_BUDGET";

/// kDefaultEnumerationBudget unless SCLAB_PAIR_BUDGET holds a positive integer.
std::uint64_t pair_budget_from_env();

struct SearchOptions {
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t samples = 0;  // sampled mode only
  std::uint64_t seed = 0;     // sampled mode only
  std::uint64_t pair_budget = kDefaultEnumerationBudget;
  unsigned threads = 0;       // 0 = hardware concurrency
  /// Also minimize every product with the table-filling oracle and count
  /// structural disagreements.
  bool cross_check = false;
};

struct SearchReport {
  CombinedOp op{};
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t sigma = 0;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t observed_max = 0;
  Dfa achieving_m;
  Dfa achieving_n;
  std::uint64_t machines_examined = 0;  // (M, N) pairs measured
  std::uint64_t predicted_bound = 0;
  std::uint64_t bound_violations = 0;      // pairs above applicable_bound
  std::uint64_t oracle_disagreements = 0;  // only counted with cross_check
};

/// Maximizes state_complexity over all pairs (exhaustive; start fixed at 0)
/// or over seeded random pairs. The achieving pair is the first maximum in
/// enumeration order, so the report does not depend on the thread count.
/// Sample i uses M = random_dfa(m, seed_M) and N = random_dfa(n, seed_N)
/// with seed_M, seed_N the next two outputs of SplitMix64(seed).
///
/// Throws DomainError for m or n below 2 and BudgetExceeded when the
/// exhaustive pair count is above options.pair_budget.
SearchReport search_max(CombinedOp op, std::size_t m, std::size_t n, const Alphabet& alphabet,
                        const SearchOptions& options);

}  // namespace sclab
