#pragma once

#include <cstdint>
#include <string_view>

#include "sclab/automaton.hpp"
#include "sclab/constructions.hpp"

namespace sclab {

// Witness families over fixed alphabets: {a, b, c} for the star pair and
// {a, b, c, d} for the reversal pair. All throw DomainError for size < 2.

/// a: i -> i+1 mod m; b: 0 -> 0, i -> i+1 mod m for i >= 1; c: identity.
/// Start 0, finals {m-1}.
Dfa star_witness_m(std::size_t m);

/// a, b: identity; c: i -> i+1 mod n. Start 0, finals {n-1}.
Dfa star_witness_n(std::size_t n);

/// star_witness_n with finals {0} instead of {n-1}. With N's start final,
/// the fresh start pair <s_M', 0> is no longer equivalent to <{0}, 0> under
/// intersection, so this pair attains 3 * 2^(m-2) * n - n + 1 for L(M)* cap L(N),
/// which the {n-1} variant misses by one.
Dfa star_witness_n_start_final(std::size_t n);

/// a: 0 -> m-1, i -> i-1; b: 0 -> 1, i -> i; c: swaps 0 and 1, fixes the
/// rest; d: identity. Start 0, finals {0}.
Dfa reversal_witness_m(std::size_t m);

/// a, b, c: identity; d: i -> i+1 mod n. Start 0, finals {0}.
Dfa reversal_witness_n(std::size_t n);

/// The pair of witnesses matching the family of op, sized m and n.
std::pair<Dfa, Dfa> witness_pair(CombinedOp op, std::size_t m, std::size_t n);

enum class BoundKind {
  StarCombinedTight,      // 3 * 2^(m-2) * n - n + 1
  StarCombinedUpperK,     // (2^(m-1) + 2^(m-k-1)) * n - n + 1
  ReversalCombinedTight,  // 2^m * n - n + 1
  IndividualStar,         // 3 * 2^(m-2)
  IndividualReversal,     // 2^m
  IndividualBoolean,      // m * n
};

/// Largest m accepted by bound_value; keeps every formula inside 64 bits.
inline constexpr std::uint64_t kMaxBoundStates = 40;

/// Exact value of the closed-form bound. Throws DomainError outside the
/// formula's range (m >= 2; n >= 2 for the tight kinds, n >= 1 for UpperK and
/// the Boolean kind; 1 <= k <= m - 1 for UpperK). n and k are ignored where
/// the formula does not mention them.
std::uint64_t bound_value(BoundKind kind, std::uint64_t m, std::uint64_t n = 0, std::uint64_t k = 0);

/// Upper bound that holds for op on these particular machines: the k-aware
/// star bound when M has a non-start final, m * n when k = 0 and the start is
/// final (L* = L), n + 1 when M accepts nothing (L* = {epsilon}) if that
/// exceeds m * n, and 2^m * n - n + 1 for the reversal operations.
std::uint64_t applicable_bound(CombinedOp op, const Dfa& dM, const Dfa& dN);

/// Tight bound predicted for the witness family of op.
std::uint64_t predicted_bound(CombinedOp op, std::uint64_t m, std::uint64_t n);

}  // namespace sclab
