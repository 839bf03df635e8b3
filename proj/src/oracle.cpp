#include "sclab/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "sclab/errors.hpp"

namespace sclab {
namespace {

// Pair (i, j) with i < j stored at j*(j-1)/2 + i.
std::uint64_t tri_index(std::uint64_t i, std::uint64_t j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

std::pair<std::uint32_t, std::uint32_t> tri_decode(std::uint64_t idx) {
  auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
  while (j * (j - 1) / 2 > idx) --j;
  while ((j + 1) * j / 2 <= idx) ++j;
  return {static_cast<std::uint32_t>(idx - j * (j - 1) / 2), static_cast<std::uint32_t>(j)};
}

}  // namespace

Dfa table_filling_minimize(const Dfa& d) {
  // Work on the reachable part, states numbered in discovery order.
  const Dfa trim = relabel_canonical(d);
  const std::size_t n = trim.state_count;
  const std::size_t sigma = trim.sigma();
  const auto fin = trim.final_flags();

  std::vector<std::vector<std::vector<State>>> preds(sigma, std::vector<std::vector<State>>(n));
  for (State q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < sigma; ++a) preds[a][trim.next(q, static_cast<Symbol>(a))].push_back(q);
  }

  std::vector<char> marked(n < 2 ? 0 : n * (n - 1) / 2, 0);
  std::vector<std::uint32_t> queue;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      if (fin[i] != fin[j]) {
        const auto idx = tri_index(i, j);
        marked[idx] = 1;
        queue.push_back(static_cast<std::uint32_t>(idx));
      }
    }
  }
  // A pair is distinguishable iff some symbol leads it to a marked pair.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [p, q] = tri_decode(queue[head]);
    for (std::size_t a = 0; a < sigma; ++a) {
      for (State pp : preds[a][p]) {
        for (State qq : preds[a][q]) {
          if (pp == qq) continue;
          const auto idx = tri_index(pp, qq);
          if (!marked[idx]) {
            marked[idx] = 1;
            queue.push_back(static_cast<std::uint32_t>(idx));
          }
        }
      }
    }
  }

  // Representative = smallest equivalent state.
  std::vector<State> rep(n);
  for (State j = 0; j < n; ++j) {
    rep[j] = j;
    for (State i = 0; i < j; ++i) {
      if (!marked[tri_index(i, j)]) {
        rep[j] = rep[i];
        break;
      }
    }
  }
  Dfa quotient;
  quotient.alphabet = trim.alphabet;
  quotient.state_count = n;
  quotient.start = rep[trim.start];
  quotient.delta.resize(n * sigma);
  for (State q = 0; q < n; ++q) {
    for (std::size_t a = 0; a < sigma; ++a) {
      quotient.delta[q * sigma + a] = rep[trim.next(rep[q], static_cast<Symbol>(a))];
    }
    if (fin[q] && rep[q] == q) quotient.finals.push_back(q);
  }
  // Non-representatives are unreachable in the quotient and vanish here.
  return relabel_canonical(quotient);
}

bool bounded_language_equal(const Dfa& lhs, const Dfa& rhs, std::size_t maxlen) {
  require_same_alphabet(lhs.alphabet, rhs.alphabet);
  require_valid(lhs);
  require_valid(rhs);
  const std::size_t sigma = lhs.sigma();
  const std::size_t n = rhs.state_count;
  const auto lf = lhs.final_flags();
  const auto rf = rhs.final_flags();
  std::vector<char> seen(lhs.state_count * n, 0);
  std::vector<std::pair<State, State>> layer{{lhs.start, rhs.start}};
  seen[static_cast<std::size_t>(lhs.start) * n + rhs.start] = 1;
  for (std::size_t depth = 0; !layer.empty(); ++depth) {
    std::vector<std::pair<State, State>> next;
    for (const auto& [i, j] : layer) {
      if (lf[i] != rf[j]) return false;
      if (depth == maxlen) continue;
      for (std::size_t a = 0; a < sigma; ++a) {
        const State ti = lhs.delta[i * sigma + a];
        const State tj = rhs.delta[j * sigma + a];
        char& s = seen[static_cast<std::size_t>(ti) * n + tj];
        if (!s) {
          s = 1;
          next.emplace_back(ti, tj);
        }
      }
    }
    if (depth == maxlen) break;
    layer = std::move(next);
  }
  return true;
}

bool star_membership_oracle(const Dfa& d, std::span<const Symbol> w) {
  std::vector<char> boundary(w.size() + 1, 0);
  boundary[0] = 1;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    for (std::size_t j = 0; j < i && !boundary[i]; ++j) {
      if (boundary[j] && dfa_accepts(d, w.subspan(j, i - j))) boundary[i] = 1;
    }
  }
  return boundary[w.size()] != 0;
}

bool reverse_membership_oracle(const Dfa& d, std::span<const Symbol> w) {
  Word reversed(w.rbegin(), w.rend());
  return dfa_accepts(d, reversed);
}

Dfa random_dfa(std::size_t states, const Alphabet& alphabet, std::uint64_t seed) {
  if (states == 0) throw DomainError("random DFA needs at least one state");
  SplitMix64 rng(seed);
  Dfa d;
  d.alphabet = alphabet;
  d.state_count = states;
  d.start = 0;
  d.delta.resize(states * alphabet.size());
  for (auto& t : d.delta) t = static_cast<State>(rng.next() % states);
  for (State q = 0; q < states; ++q) {
    if ((rng.next() >> 63) != 0) d.finals.push_back(q);
  }
  return d;
}

std::optional<std::uint64_t> dfa_count(std::size_t states, std::size_t sigma) {
  if (states == 0 || states >= 64) return std::nullopt;
  std::uint64_t count = std::uint64_t{1} << states;
  for (std::size_t i = 0; i < states * sigma; ++i) {
    if (count > UINT64_MAX / states) return std::nullopt;
    count *= states;
  }
  return count;
}

std::uint64_t enumerate_dfas(std::size_t states, const Alphabet& alphabet,
                             const std::function<void(const Dfa&)>& consumer, std::uint64_t budget) {
  if (states == 0) throw DomainError("enumeration needs at least one state");
  const std::size_t sigma = alphabet.size();
  const auto count = dfa_count(states, sigma);
  if (!count) throw BudgetExceeded(UINT64_MAX, budget);
  if (*count > budget) throw BudgetExceeded(*count, budget);

  Dfa d;
  d.alphabet = alphabet;
  d.state_count = states;
  d.start = 0;
  d.delta.assign(states * sigma, 0);
  const std::uint64_t final_sets = std::uint64_t{1} << states;
  std::uint64_t emitted = 0;
  while (true) {
    for (std::uint64_t mask = 0; mask < final_sets; ++mask) {
      d.finals.clear();
      for (State q = 0; q < states; ++q) {
        if ((mask >> q) & 1U) d.finals.push_back(q);
      }
      consumer(d);
      ++emitted;
    }
    // Odometer with the last table entry as the fastest digit.
    std::size_t pos = d.delta.size();
    while (pos > 0) {
      --pos;
      if (++d.delta[pos] < states) break;
      d.delta[pos] = 0;
      if (pos == 0) return emitted;
    }
    if (d.delta.empty()) return emitted;
  }
}

}  // namespace sclab
