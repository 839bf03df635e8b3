#pragma once

#include <optional>
#include <vector>

#include "sclab/automaton.hpp"
#include "sclab/constructions.hpp"

namespace sclab {

/// Equivalence classes of the reachable states. block_of[q] is kNoState for
/// unreachable q; finals and non-finals never share a block.
struct Partition {
  std::vector<State> block_of;
  std::size_t block_count = 0;
};

/// Myhill-Nerode partition of the reachable part of d (Hopcroft refinement).
Partition coarsest_partition(const Dfa& d);

struct Minimized {
  Dfa dfa;                      // canonical minimal machine
  std::vector<State> image_of;  // state of `dfa` each input state maps to; kNoState if unreachable
};

Minimized minimize_with_map(const Dfa& d);

/// Trim, quotient by the coarsest partition, canonical relabel. Idempotent.
Dfa minimize(const Dfa& d);

/// L(lhs) == L(rhs), decided by searching the product for a pair on which
/// exactly one side accepts.
bool equivalent(const Dfa& lhs, const Dfa& rhs);

/// Shortest word accepted from exactly one of p and q; ties broken by symbol
/// index. Empty optional iff p and q are equivalent.
std::optional<Word> distinguishing_word(const Dfa& d, State p, State q);

/// Size of the minimal DFA of op(L(dM), L(dN)).
std::size_t state_complexity(const Dfa& dM, const Dfa& dN, CombinedOp op);

}  // namespace sclab
