#pragma once

// Test-only helpers: brute-force word enumeration and state permutations.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "sclab/automaton.hpp"
#include "sclab/witnesses.hpp"

namespace sclab::testing {

/// Every word over [0, sigma) of length <= maxlen, shortest first.
inline std::vector<Word> all_words(std::size_t sigma, std::size_t maxlen) {
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Symbol a = 0; a < sigma; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

/// Same machine with state q renamed to perm[q].
inline Dfa permute_states(const Dfa& d, const std::vector<State>& perm) {
  Dfa out = d;
  const std::size_t sigma = d.sigma();
  for (std::size_t q = 0; q < d.state_count; ++q) {
    for (std::size_t a = 0; a < sigma; ++a) {
      out.delta[perm[q] * sigma + a] = perm[d.delta[q * sigma + a]];
    }
  }
  out.start = perm[d.start];
  out.finals.clear();
  for (State f : d.finals) out.finals.push_back(perm[f]);
  std::sort(out.finals.begin(), out.finals.end());
  return out;
}

inline std::vector<State> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<State> perm(n);
  std::iota(perm.begin(), perm.end(), State{0});
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// All witness machines of both families for sizes lo..hi.
inline std::vector<Dfa> witness_machines(std::size_t lo, std::size_t hi) {
  std::vector<Dfa> out;
  for (std::size_t s = lo; s <= hi; ++s) {
    out.push_back(star_witness_m(s));
    out.push_back(star_witness_n(s));
    out.push_back(reversal_witness_m(s));
    out.push_back(reversal_witness_n(s));
  }
  return out;
}

}  // namespace sclab::testing
