#include "sclab/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "sclab/errors.hpp"

namespace sclab {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidInput("alphabet must contain at least one symbol");
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw InvalidInput("alphabet symbol names must be non-empty");
    if (std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; })) {
      throw InvalidInput("alphabet symbol '" + s + "' contains whitespace");
    }
    if (!seen.insert(s).second) throw InvalidInput("duplicate alphabet symbol '" + s + "'");
  }
}

std::optional<Symbol> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == name) return static_cast<Symbol>(i);
  }
  return std::nullopt;
}

Word Alphabet::word(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    auto idx = index_of(std::string_view(&c, 1));
    if (!idx) throw InvalidInput(std::string("symbol '") + c + "' is not in the alphabet");
    w.push_back(*idx);
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (Symbol a : w) out += name(a);
  return out;
}

bool Dfa::is_final(State q) const { return std::binary_search(finals.begin(), finals.end(), q); }

std::vector<char> Dfa::final_flags() const {
  std::vector<char> flags(state_count, 0);
  for (State f : finals) {
    if (f < state_count) flags[f] = 1;
  }
  return flags;
}

std::vector<std::string> validate_dfa(const Dfa& d) {
  std::vector<std::string> out;
  const std::size_t sigma = d.sigma();
  if (sigma == 0) out.emplace_back("alphabet is empty");
  if (d.state_count == 0) out.emplace_back("machine has no states");
  if (d.start >= d.state_count) {
    out.emplace_back("start state " + std::to_string(d.start) + " is out of range [0, " +
                     std::to_string(d.state_count) + ")");
  }
  std::vector<State> seen_finals;
  for (State f : d.finals) {
    if (f >= d.state_count) {
      out.emplace_back("final state " + std::to_string(f) + " is out of range");
    } else if (std::find(seen_finals.begin(), seen_finals.end(), f) != seen_finals.end()) {
      out.emplace_back("final state " + std::to_string(f) + " is listed more than once");
    } else {
      seen_finals.push_back(f);
    }
  }
  if (!std::is_sorted(d.finals.begin(), d.finals.end())) out.emplace_back("final states are not sorted");
  if (d.delta.size() != d.state_count * sigma) {
    out.emplace_back("transition table has " + std::to_string(d.delta.size()) + " entries, expected " +
                     std::to_string(d.state_count * sigma));
    return out;
  }
  for (std::size_t q = 0; q < d.state_count; ++q) {
    for (std::size_t a = 0; a < sigma; ++a) {
      const State t = d.delta[q * sigma + a];
      if (t == kNoState) {
        out.emplace_back("missing transition from state " + std::to_string(q) + " on symbol " +
                         d.alphabet.name(static_cast<Symbol>(a)));
      } else if (t >= d.state_count) {
        out.emplace_back("transition from state " + std::to_string(q) + " on symbol " +
                         d.alphabet.name(static_cast<Symbol>(a)) + " targets invalid state " +
                         std::to_string(t));
      }
    }
  }
  return out;
}

void require_valid(const Dfa& d) {
  auto diags = validate_dfa(d);
  if (!diags.empty()) throw InvalidInput("invalid DFA: " + diags.front());
}

void require_same_alphabet(const Alphabet& lhs, const Alphabet& rhs) {
  if (!(lhs == rhs)) throw InvalidInput("alphabet mismatch between the two machines");
}

Dfa complete_dfa(const PartialDfa& partial) {
  const std::size_t sigma = partial.alphabet.size();
  const std::size_t m = partial.state_count;
  if (m == 0 || sigma == 0) throw InvalidInput("partial DFA needs at least one state and one symbol");
  if (partial.start >= m) throw InvalidInput("start state out of range");
  if (partial.delta.size() != m * sigma) throw InvalidInput("transition table has wrong size");
  for (State f : partial.finals) {
    if (f >= m) throw InvalidInput("final state out of range");
  }
  bool missing = false;
  for (const auto& t : partial.delta) {
    if (!t) {
      missing = true;
    } else if (*t >= m) {
      throw InvalidInput("transition target out of range");
    }
  }

  Dfa d;
  d.alphabet = partial.alphabet;
  d.start = partial.start;
  d.finals = partial.finals;
  std::sort(d.finals.begin(), d.finals.end());
  d.finals.erase(std::unique(d.finals.begin(), d.finals.end()), d.finals.end());
  d.state_count = missing ? m + 1 : m;
  const State sink = static_cast<State>(m);
  d.delta.reserve(d.state_count * sigma);
  for (const auto& t : partial.delta) d.delta.push_back(t ? *t : sink);
  if (missing) {
    for (std::size_t a = 0; a < sigma; ++a) d.delta.push_back(sink);
  }
  return d;
}

namespace {

void check_word(std::size_t sigma, std::span<const Symbol> w) {
  for (Symbol a : w) {
    if (a >= sigma) throw InvalidInput("word symbol index " + std::to_string(a) + " out of range");
  }
}

}  // namespace

bool dfa_accepts(const Dfa& d, std::span<const Symbol> w) {
  check_word(d.sigma(), w);
  State q = d.start;
  for (Symbol a : w) q = d.next(q, a);
  return d.is_final(q);
}

bool nfa_accepts(const Nfa& nf, std::span<const Symbol> w) {
  check_word(nf.sigma(), w);
  StateSet current(nf.state_count);
  for (State s : nf.starts) current.insert(s);
  for (Symbol a : w) {
    StateSet next(nf.state_count);
    current.for_each([&](State q) {
      for (State t : nf.successors(q, a)) next.insert(t);
    });
    current = std::move(next);
  }
  for (State f : nf.finals) {
    if (current.contains(f)) return true;
  }
  return false;
}

std::vector<State> reachable_states(const Dfa& d) {
  std::vector<char> seen(d.state_count, 0);
  std::vector<State> order;
  order.reserve(d.state_count);
  order.push_back(d.start);
  seen[d.start] = 1;
  const std::size_t sigma = d.sigma();
  for (std::size_t head = 0; head < order.size(); ++head) {
    const State q = order[head];
    for (std::size_t a = 0; a < sigma; ++a) {
      const State t = d.delta[q * sigma + a];
      if (!seen[t]) {
        seen[t] = 1;
        order.push_back(t);
      }
    }
  }
  return order;
}

Dfa relabel_canonical(const Dfa& d) {
  const auto order = reachable_states(d);
  std::vector<State> rename(d.state_count, kNoState);
  for (std::size_t i = 0; i < order.size(); ++i) rename[order[i]] = static_cast<State>(i);

  const std::size_t sigma = d.sigma();
  Dfa out;
  out.alphabet = d.alphabet;
  out.state_count = order.size();
  out.start = 0;
  out.delta.resize(order.size() * sigma);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < sigma; ++a) {
      out.delta[i * sigma + a] = rename[d.delta[order[i] * sigma + a]];
    }
  }
  for (State f : d.finals) {
    if (rename[f] != kNoState) out.finals.push_back(rename[f]);
  }
  std::sort(out.finals.begin(), out.finals.end());
  return out;
}

}  // namespace sclab
