#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sclab/state_set.hpp"

namespace sclab {

using Symbol = std::uint32_t;

/// Sequence of symbol indices; the empty word is epsilon.
using Word = std::vector<Symbol>;

inline constexpr State kNoState = static_cast<State>(-1);

/// Ordered set of distinct symbol names. The index of a symbol is its identity.
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws InvalidInput on an empty list, duplicates, or names that are empty
  /// or contain whitespace.
  explicit Alphabet(std::vector<std::string> symbols);
  Alphabet(std::initializer_list<std::string> symbols)
      : Alphabet(std::vector<std::string>(symbols)) {}

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& name(Symbol a) const { return symbols_.at(a); }
  const std::vector<std::string>& names() const noexcept { return symbols_; }
  std::optional<Symbol> index_of(std::string_view name) const;

  /// Parses a word written as concatenated one-character symbol names ("abca").
  Word word(std::string_view text) const;
  std::string format(const Word& w) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
};

/// Complete DFA with dense state indices. The transition table is row-major:
/// delta[q * alphabet.size() + a]. Finals are kept sorted and unique.
///
/// This is a plain record; `validate_dfa` reports any broken invariant, and
/// every constructor in the library produces valid machines.
struct Dfa {
  Alphabet alphabet;
  std::size_t state_count = 0;
  State start = 0;
  std::vector<State> finals;
  std::vector<State> delta;

  std::size_t sigma() const noexcept { return alphabet.size(); }
  State next(State q, Symbol a) const { return delta[static_cast<std::size_t>(q) * sigma() + a]; }
  bool is_final(State q) const;
  /// One flag per state, for hot loops.
  std::vector<char> final_flags() const;

  bool operator==(const Dfa&) const = default;
};

/// DFA whose table may have holes; input to `complete_dfa`.
struct PartialDfa {
  Alphabet alphabet;
  std::size_t state_count = 0;
  State start = 0;
  std::vector<State> finals;
  std::vector<std::optional<State>> delta;
};

/// NFA with a set of initial states and no epsilon moves.
/// delta[q * sigma + a] is a sorted list of successors.
struct Nfa {
  Alphabet alphabet;
  std::size_t state_count = 0;
  std::vector<State> starts;
  std::vector<State> finals;
  std::vector<std::vector<State>> delta;

  std::size_t sigma() const noexcept { return alphabet.size(); }
  const std::vector<State>& successors(State q, Symbol a) const {
    return delta[static_cast<std::size_t>(q) * sigma() + a];
  }

  bool operator==(const Nfa&) const = default;
};

/// One human-readable message per violated invariant; empty iff valid.
std::vector<std::string> validate_dfa(const Dfa& d);

/// Throws InvalidInput carrying the first diagnostic if `d` is not valid.
void require_valid(const Dfa& d);

/// Routes every missing transition to one fresh non-final sink. Returns the
/// machine unchanged (as a Dfa) when nothing is missing.
Dfa complete_dfa(const PartialDfa& partial);

bool dfa_accepts(const Dfa& d, std::span<const Symbol> w);
bool nfa_accepts(const Nfa& nf, std::span<const Symbol> w);

/// Renumbers states in breadth-first discovery order from the start state,
/// exploring symbols by index, and drops unreachable states.
Dfa relabel_canonical(const Dfa& d);

/// States reachable from the start, in breadth-first order.
std::vector<State> reachable_states(const Dfa& d);

/// Throws InvalidInput unless both machines share the same alphabet.
void require_same_alphabet(const Alphabet& lhs, const Alphabet& rhs);

}  // namespace sclab
