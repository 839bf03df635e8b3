#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "sclab/automaton.hpp"

namespace sclab {

/// Minimal DFA by pairwise marking over the reachable states (table filling),
/// canonically relabelled. Independent of the partition-refinement minimizer
/// and expected to produce the identical record.
Dfa table_filling_minimize(const Dfa& d);

/// True iff both machines agree on every word of length <= maxlen. Walks the
/// pair automaton layer by layer instead of materializing words.
bool bounded_language_equal(const Dfa& lhs, const Dfa& rhs, std::size_t maxlen);

/// w in L(d)*: w is empty or splits into non-empty factors of L(d)
/// (dynamic programming over cut positions).
bool star_membership_oracle(const Dfa& d, std::span<const Symbol> w);

/// w in L(d)^R, i.e. d accepts w read backwards.
bool reverse_membership_oracle(const Dfa& d, std::span<const Symbol> w);

/// SplitMix64 (Steele, Lea & Flood): state += 0x9E3779B97F4A7C15, then the
/// standard xor-shift-multiply finalizer. Reproducible across languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Random complete DFA with start 0. Draws from SplitMix64(seed): first one
/// value per transition in (state, symbol) row-major order, target =
/// value % states; then one value per state, final iff its top bit is set.
Dfa random_dfa(std::size_t states, const Alphabet& alphabet, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 21;

/// states^(states * sigma) * 2^states, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> dfa_count(std::size_t states, std::size_t sigma);

/// Calls `consumer` on every complete DFA with the given state count and start
/// state 0. Transition tables are visited in lexicographic order of the
/// row-major table; for each table, final sets by ascending bit mask.
/// Throws BudgetExceeded (carrying the count) when the total exceeds budget.
std::uint64_t enumerate_dfas(std::size_t states, const Alphabet& alphabet,
                             const std::function<void(const Dfa&)>& consumer,
                             std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace sclab
