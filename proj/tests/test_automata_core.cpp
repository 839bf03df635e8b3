#include <doctest.h>

#include "sclab/automaton.hpp"
#include "sclab/errors.hpp"
#include "sclab/oracle.hpp"
#include "sclab/witnesses.hpp"
#include "support.hpp"

using namespace sclab;

namespace {

Dfa one_state_loop(const Alphabet& alphabet, bool final) {
  Dfa d;
  d.alphabet = alphabet;
  d.state_count = 1;
  d.start = 0;
  if (final) d.finals = {0};
  d.delta.assign(alphabet.size(), 0);
  return d;
}

}  // namespace

TEST_CASE("alphabet rejects malformed symbol lists") {
  CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), InvalidInput);
  CHECK_THROWS_AS((Alphabet{"a", "a"}), InvalidInput);
  CHECK_THROWS_AS((Alphabet{"a", ""}), InvalidInput);
  CHECK_THROWS_AS((Alphabet{"a b"}), InvalidInput);
  const Alphabet ab{"a", "b"};
  CHECK(ab.index_of("b") == Symbol{1});
  CHECK_FALSE(ab.index_of("c").has_value());
  CHECK(ab.word("abba") == Word{0, 1, 1, 0});
  CHECK(ab.format(Word{1, 0}) == "ba");
}

TEST_CASE("validate_dfa") {
  const Alphabet ab{"a", "b"};

  SUBCASE("minimal well-formed machine") { CHECK(validate_dfa(one_state_loop(ab, true)).empty()); }

  SUBCASE("missing transition names the state and symbol") {
    Dfa d = one_state_loop(ab, true);
    d.delta[1] = kNoState;
    const auto diags = validate_dfa(d);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("missing transition") != std::string::npos);
    CHECK(diags[0].find("state 0") != std::string::npos);
    CHECK(diags[0].find("symbol b") != std::string::npos);
  }

  SUBCASE("bad start index") {
    Dfa d = one_state_loop(ab, false);
    d.start = 1;
    const auto diags = validate_dfa(d);
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].find("start state") != std::string::npos);
  }

  SUBCASE("duplicate final and bad target") {
    Dfa d = one_state_loop(ab, true);
    d.finals = {0, 0};
    d.delta[0] = 7;
    CHECK(validate_dfa(d).size() == 2);
  }

  SUBCASE("every generator in the library is valid") {
    for (const auto& w : testing::witness_machines(2, 7)) CHECK(validate_dfa(w).empty());
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      CHECK(validate_dfa(random_dfa(1 + seed % 5, ab, seed)).empty());
    }
  }
}

TEST_CASE("complete_dfa") {
  const Alphabet ab{"a", "b"};

  SUBCASE("already complete input is unchanged") {
    const Dfa w = star_witness_m(3);
    PartialDfa p{w.alphabet, w.state_count, w.start, w.finals, {}};
    for (State t : w.delta) p.delta.emplace_back(t);
    CHECK(complete_dfa(p) == w);
  }

  SUBCASE("one missing edge adds a self-looping sink") {
    PartialDfa p{ab, 1, 0, {0}, {std::nullopt, State{0}}};
    const Dfa d = complete_dfa(p);
    CHECK(d.state_count == 2);
    CHECK(d.next(0, 0) == 1);
    CHECK(d.next(1, 0) == 1);
    CHECK(d.next(1, 1) == 1);
    CHECK_FALSE(d.is_final(1));
  }

  SUBCASE("two missing edges share one sink") {
    PartialDfa p{ab, 2, 0, {1}, {State{1}, std::nullopt, std::nullopt, State{0}}};
    const Dfa d = complete_dfa(p);
    CHECK(d.state_count == 3);
    CHECK(d.next(0, 1) == 2);
    CHECK(d.next(1, 0) == 2);
  }

  SUBCASE("invalid indices are rejected") {
    PartialDfa p{ab, 1, 0, {0}, {State{3}, State{0}}};
    CHECK_THROWS_AS(complete_dfa(p), InvalidInput);
    PartialDfa q{ab, 1, 2, {}, {State{0}, State{0}}};
    CHECK_THROWS_AS(complete_dfa(q), InvalidInput);
  }

  SUBCASE("completion preserves acceptance on all words up to length 8") {
    PartialDfa p{ab, 3, 0, {2}, {State{1}, std::nullopt, State{2}, State{0}, std::nullopt, State{2}}};
    const Dfa d = complete_dfa(p);
    for (const auto& w : testing::all_words(2, 8)) {
      // Direct partial simulation: falling off a missing edge rejects.
      std::optional<State> q = p.start;
      for (Symbol a : w) {
        if (!q) break;
        q = p.delta[*q * 2 + a];
      }
      const bool expected = q && std::find(p.finals.begin(), p.finals.end(), *q) != p.finals.end();
      CHECK(dfa_accepts(d, w) == expected);
    }
  }
}

TEST_CASE("dfa_accepts") {
  const Alphabet abc{"a", "b", "c"};
  CHECK(dfa_accepts(star_witness_n(3), abc.word("cc")));
  CHECK_FALSE(dfa_accepts(star_witness_n(3), abc.word("c")));
  CHECK(dfa_accepts(one_state_loop(abc, true), Word{}));

  const Dfa rm = reversal_witness_m(2);
  CHECK_FALSE(dfa_accepts(rm, rm.alphabet.word("a")));
  CHECK(dfa_accepts(rm, rm.alphabet.word("aa")));

  CHECK_THROWS_AS(dfa_accepts(star_witness_n(2), Word{3}), InvalidInput);
}

TEST_CASE("nfa_accepts") {
  const Alphabet ab{"a", "b"};
  Nfa empty{ab, 2, {0}, {1}, std::vector<std::vector<State>>(4)};
  CHECK_FALSE(nfa_accepts(empty, Word{}));
  CHECK_FALSE(nfa_accepts(empty, Word{0}));
  CHECK_FALSE(nfa_accepts(empty, Word{1, 0}));

  Nfa two_starts{ab, 3, {0, 1}, {2}, {{}, {}, {2}, {}, {}, {}}};
  CHECK(nfa_accepts(two_starts, Word{0}));
  CHECK_FALSE(nfa_accepts(two_starts, Word{1}));
  CHECK_THROWS_AS(nfa_accepts(two_starts, Word{2}), InvalidInput);
}

TEST_CASE("relabel_canonical") {
  const Alphabet ab{"a", "b"};

  SUBCASE("idempotent and invariant under state permutation") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Dfa d = random_dfa(2 + seed % 5, ab, seed);
      const Dfa c = relabel_canonical(d);
      CHECK(relabel_canonical(c) == c);
      const Dfa shuffled = testing::permute_states(d, testing::random_permutation(d.state_count, seed * 7 + 1));
      CHECK(relabel_canonical(shuffled) == c);
    }
  }

  SUBCASE("drops unreachable states") {
    // State 2 has no incoming edges.
    Dfa d{ab, 3, 0, {1}, {1, 0, 0, 1, 0, 1}};
    CHECK(relabel_canonical(d).state_count == 2);
  }

  SUBCASE("acceptance is preserved on all words up to length 8") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Dfa d = testing::permute_states(random_dfa(4, ab, seed), testing::random_permutation(4, seed));
      const Dfa c = relabel_canonical(d);
      for (const auto& w : testing::all_words(2, 8)) CHECK(dfa_accepts(c, w) == dfa_accepts(d, w));
    }
  }
}

TEST_CASE("state sets") {
  StateSet s(70);
  CHECK(s.empty());
  s.insert(0);
  s.insert(65);
  CHECK(s.size() == 2);
  CHECK(s.contains(65));
  CHECK_FALSE(s.contains(64));
  CHECK(s.elements() == std::vector<State>{0, 65});
  CHECK(StateSet::full(70).is_full());
  CHECK(s.is_subset_of(StateSet::full(70)));
  CHECK(s.intersects(StateSet::of(70, {65})));
  CHECK_FALSE(s.intersects(StateSet::of(70, {1, 2})));
  s.erase(0);
  CHECK(s == StateSet::of(70, {65}));
}
