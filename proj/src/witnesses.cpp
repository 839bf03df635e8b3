#include "sclab/witnesses.hpp"

#include "sclab/errors.hpp"

namespace sclab {
namespace {

void require_size(std::size_t size, const char* family) {
  if (size < 2) throw DomainError(std::string(family) + " witness needs at least 2 states");
}

Dfa machine(Alphabet alphabet, std::size_t states, std::vector<State> finals) {
  Dfa d;
  d.alphabet = std::move(alphabet);
  d.state_count = states;
  d.start = 0;
  d.finals = std::move(finals);
  d.delta.assign(states * d.sigma(), 0);
  return d;
}

void set(Dfa& d, std::size_t q, Symbol a, std::size_t target) {
  d.delta[q * d.sigma() + a] = static_cast<State>(target);
}

const Alphabet& star_alphabet() {
  static const Alphabet abc{"a", "b", "c"};
  return abc;
}

const Alphabet& reversal_alphabet() {
  static const Alphabet abcd{"a", "b", "c", "d"};
  return abcd;
}

}  // namespace

Dfa star_witness_m(std::size_t m) {
  require_size(m, "star-m");
  Dfa d = machine(star_alphabet(), m, {static_cast<State>(m - 1)});
  for (std::size_t i = 0; i < m; ++i) {
    set(d, i, 0, (i + 1) % m);
    set(d, i, 1, i == 0 ? 0 : (i + 1) % m);
    set(d, i, 2, i);
  }
  return d;
}

Dfa star_witness_n(std::size_t n) {
  require_size(n, "star-n");
  Dfa d = machine(star_alphabet(), n, {static_cast<State>(n - 1)});
  for (std::size_t i = 0; i < n; ++i) {
    set(d, i, 0, i);
    set(d, i, 1, i);
    set(d, i, 2, (i + 1) % n);
  }
  return d;
}

Dfa star_witness_n_start_final(std::size_t n) {
  Dfa d = star_witness_n(n);
  d.finals = {0};
  return d;
}

Dfa reversal_witness_m(std::size_t m) {
  require_size(m, "reversal-m");
  Dfa d = machine(reversal_alphabet(), m, {0});
  for (std::size_t i = 0; i < m; ++i) {
    set(d, i, 0, i == 0 ? m - 1 : i - 1);
    set(d, i, 1, i == 0 ? 1 : i);
    set(d, i, 2, i == 0 ? 1 : (i == 1 ? 0 : i));
    set(d, i, 3, i);
  }
  return d;
}

Dfa reversal_witness_n(std::size_t n) {
  require_size(n, "reversal-n");
  Dfa d = machine(reversal_alphabet(), n, {0});
  for (std::size_t i = 0; i < n; ++i) {
    set(d, i, 0, i);
    set(d, i, 1, i);
    set(d, i, 2, i);
    set(d, i, 3, (i + 1) % n);
  }
  return d;
}

std::pair<Dfa, Dfa> witness_pair(CombinedOp op, std::size_t m, std::size_t n) {
  if (is_star_op(op)) return {star_witness_m(m), star_witness_n(n)};
  return {reversal_witness_m(m), reversal_witness_n(n)};
}

std::uint64_t bound_value(BoundKind kind, std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  if (m < 2) throw DomainError("bound formulas need m >= 2");
  if (m > kMaxBoundStates) throw DomainError("m too large for 64-bit bound evaluation");
  auto need_n = [&](std::uint64_t lo) {
    if (n < lo) throw DomainError("bound formula needs n >= " + std::to_string(lo));
    if (n > (std::uint64_t{1} << 20)) throw DomainError("n too large for 64-bit bound evaluation");
  };
  const std::uint64_t two_m = std::uint64_t{1} << m;
  switch (kind) {
    case BoundKind::StarCombinedTight:
      need_n(2);
      return 3 * (two_m >> 2) * n - n + 1;
    case BoundKind::StarCombinedUpperK: {
      need_n(1);
      if (k < 1 || k > m - 1) throw DomainError("k must lie in [1, m-1]");
      const std::uint64_t star_states = (two_m >> 1) + (two_m >> (k + 1));
      return star_states * n - n + 1;
    }
    case BoundKind::ReversalCombinedTight:
      need_n(2);
      return two_m * n - n + 1;
    case BoundKind::IndividualStar:
      return 3 * (two_m >> 2);
    case BoundKind::IndividualReversal:
      return two_m;
    case BoundKind::IndividualBoolean:
      need_n(1);
      return m * n;
  }
  throw DomainError("unknown bound kind");
}

std::uint64_t applicable_bound(CombinedOp op, const Dfa& dM, const Dfa& dN) {
  const std::uint64_t m = dM.state_count;
  const std::uint64_t n = dN.state_count;
  if (!is_star_op(op)) {
    if (m > kMaxBoundStates) throw DomainError("m too large for 64-bit bound evaluation");
    return (std::uint64_t{1} << m) * n - n + 1;
  }
  const std::uint64_t k = nonstart_final_count(dM);
  if (k >= 1) return bound_value(BoundKind::StarCombinedUpperK, m, n, k);
  if (dM.is_final(dM.start)) return m * n;
  return std::max(m * n, n + 1);
}

std::uint64_t predicted_bound(CombinedOp op, std::uint64_t m, std::uint64_t n) {
  return bound_value(is_star_op(op) ? BoundKind::StarCombinedTight : BoundKind::ReversalCombinedTight, m, n);
}

}  // namespace sclab
