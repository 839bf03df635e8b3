#include "sclab/constructions.hpp"

#include <algorithm>
#include <unordered_map>

#include "sclab/errors.hpp"

namespace sclab {

std::string_view to_string(CombinedOp op) {
  switch (op) {
    case CombinedOp::StarUnion: return "star-union";
    case CombinedOp::StarIntersection: return "star-intersection";
    case CombinedOp::ReversalUnion: return "reversal-union";
    case CombinedOp::ReversalIntersection: return "reversal-intersection";
  }
  return "unknown";
}

std::optional<CombinedOp> parse_combined_op(std::string_view name) {
  for (CombinedOp op : kAllCombinedOps) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

std::size_t nonstart_final_count(const Dfa& d) {
  return static_cast<std::size_t>(
      std::count_if(d.finals.begin(), d.finals.end(), [&](State f) { return f != d.start; }));
}

Nfa reverse_to_nfa(const Dfa& d) {
  require_valid(d);
  const std::size_t sigma = d.sigma();
  Nfa nf;
  nf.alphabet = d.alphabet;
  nf.state_count = d.state_count;
  nf.starts = d.finals;
  nf.finals = {d.start};
  nf.delta.assign(d.state_count * sigma, {});
  // Iterating sources in increasing order keeps every successor list sorted.
  for (std::size_t q = 0; q < d.state_count; ++q) {
    for (std::size_t a = 0; a < sigma; ++a) {
      const State p = d.delta[q * sigma + a];
      nf.delta[p * sigma + a].push_back(static_cast<State>(q));
    }
  }
  return nf;
}

SubsetDfa determinize(const Nfa& nf) {
  const std::size_t sigma = nf.sigma();
  const std::size_t m = nf.state_count;
  StateSet accepting(m);
  for (State f : nf.finals) accepting.insert(f);

  SubsetDfa out;
  out.dfa.alphabet = nf.alphabet;
  out.dfa.start = 0;

  std::unordered_map<StateSet, State> index;
  auto intern = [&](StateSet s) -> State {
    auto [it, inserted] = index.try_emplace(s, static_cast<State>(out.labels.size()));
    if (inserted) out.labels.push_back(SubsetLabel{false, std::move(s)});
    return it->second;
  };

  StateSet initial(m);
  for (State s : nf.starts) initial.insert(s);
  intern(std::move(initial));

  for (std::size_t head = 0; head < out.labels.size(); ++head) {
    for (std::size_t a = 0; a < sigma; ++a) {
      StateSet image(m);
      out.labels[head].members.for_each([&](State q) {
        for (State t : nf.successors(q, static_cast<Symbol>(a))) image.insert(t);
      });
      const State target = intern(std::move(image));
      out.dfa.delta.push_back(target);
    }
  }
  out.dfa.state_count = out.labels.size();
  for (std::size_t q = 0; q < out.labels.size(); ++q) {
    if (out.labels[q].members.intersects(accepting)) out.dfa.finals.push_back(static_cast<State>(q));
  }
  return out;
}

SubsetDfa star_explicit(const Dfa& d) {
  require_valid(d);
  const std::size_t m = d.state_count;
  const std::size_t sigma = d.sigma();
  const std::size_t k = nonstart_final_count(d);
  if (k == 0) {
    throw PreconditionError(
        "explicit star construction needs a final state other than the start; "
        "with none, L* equals L (start final) or {epsilon} (no finals)");
  }
  if (m > kMaxExplicitStarStates) {
    throw DomainError("explicit star construction is limited to " +
                      std::to_string(kMaxExplicitStarStates) + " source states");
  }

  using Mask = std::uint32_t;
  const Mask start_bit = Mask{1} << d.start;
  Mask f0 = 0;
  Mask fm = 0;
  for (State f : d.finals) {
    fm |= Mask{1} << f;
    if (f != d.start) f0 |= Mask{1} << f;
  }

  const std::size_t universe = std::size_t{1} << m;
  std::vector<State> index_of(universe, kNoState);
  SubsetDfa out;
  out.labels.push_back(SubsetLabel{true, StateSet(m)});
  std::vector<Mask> masks{0};
  for (Mask s = 1; s < universe; ++s) {
    const bool avoids_f0 = (s & f0) == 0;
    const bool restart_form = (s & start_bit) != 0 && (s & f0) != 0;
    if (!avoids_f0 && !restart_form) continue;
    index_of[s] = static_cast<State>(out.labels.size());
    StateSet members(m);
    for (State q = 0; q < m; ++q) {
      if ((s >> q) & 1U) members.insert(q);
    }
    out.labels.push_back(SubsetLabel{false, std::move(members)});
    masks.push_back(s);
  }

  // image[a][s] = delta_M(s, a), built from the subset without its lowest bit.
  std::vector<std::vector<Mask>> image(sigma, std::vector<Mask>(universe, 0));
  for (std::size_t a = 0; a < sigma; ++a) {
    auto& row = image[a];
    for (Mask s = 1; s < universe; ++s) {
      const int low = __builtin_ctz(s);
      row[s] = row[s & (s - 1)] | (Mask{1} << d.next(static_cast<State>(low), static_cast<Symbol>(a)));
    }
  }
  auto step = [&](Mask s, std::size_t a) {
    Mask t = image[a][s];
    if ((t & f0) != 0) t |= start_bit;
    return index_of[t];
  };

  Dfa& dfa = out.dfa;
  dfa.alphabet = d.alphabet;
  dfa.state_count = out.labels.size();
  dfa.start = 0;
  dfa.delta.resize(dfa.state_count * sigma);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    // The fresh start moves like {s_M}.
    const Mask s = i == 0 ? start_bit : masks[i];
    for (std::size_t a = 0; a < sigma; ++a) dfa.delta[i * sigma + a] = step(s, a);
  }
  dfa.finals.push_back(0);
  for (std::size_t i = 1; i < masks.size(); ++i) {
    if ((masks[i] & fm) != 0) dfa.finals.push_back(static_cast<State>(i));
  }
  return out;
}

Nfa star_nfa(const Dfa& d) {
  require_valid(d);
  const std::size_t sigma = d.sigma();
  const std::size_t m = d.state_count;
  const State fresh = static_cast<State>(m);
  Nfa nf;
  nf.alphabet = d.alphabet;
  nf.state_count = m + 1;
  nf.starts = {fresh};
  nf.finals = d.finals;
  nf.finals.push_back(fresh);
  nf.delta.assign((m + 1) * sigma, {});
  auto moves_of = [&](State q, std::size_t a) {
    const State t = d.delta[q * sigma + a];
    std::vector<State> succ{t};
    if (d.is_final(t) && t != d.start) succ.push_back(d.start);
    std::sort(succ.begin(), succ.end());
    return succ;
  };
  for (State q = 0; q < m; ++q) {
    for (std::size_t a = 0; a < sigma; ++a) nf.delta[q * sigma + a] = moves_of(q, a);
  }
  for (std::size_t a = 0; a < sigma; ++a) nf.delta[fresh * sigma + a] = moves_of(d.start, a);
  return nf;
}

Dfa star_generic(const Dfa& d) { return determinize(star_nfa(d)).dfa; }

namespace {

SubsetDfa as_singletons(const Dfa& d) {
  SubsetDfa out;
  out.dfa = d;
  out.labels.reserve(d.state_count);
  for (State q = 0; q < d.state_count; ++q) {
    out.labels.push_back(SubsetLabel{false, StateSet::of(d.state_count, {q})});
  }
  return out;
}

SubsetDfa epsilon_only(const Dfa& d) {
  const std::size_t sigma = d.sigma();
  SubsetDfa out;
  out.dfa.alphabet = d.alphabet;
  out.dfa.state_count = 2;
  out.dfa.start = 0;
  out.dfa.finals = {0};
  out.dfa.delta.assign(2 * sigma, 1);
  out.labels = {SubsetLabel{true, StateSet(d.state_count)}, SubsetLabel{false, StateSet(d.state_count)}};
  return out;
}

}  // namespace

SubsetDfa star_for_pipeline(const Dfa& d) {
  if (nonstart_final_count(d) >= 1) return star_explicit(d);
  require_valid(d);
  if (d.is_final(d.start)) return as_singletons(d);
  return epsilon_only(d);
}

ProductDfa product(const Dfa& lhs, const Dfa& rhs, BooleanMode mode) {
  require_same_alphabet(lhs.alphabet, rhs.alphabet);
  require_valid(lhs);
  require_valid(rhs);
  const std::size_t sigma = lhs.sigma();
  const std::size_t n = rhs.state_count;
  const auto lhs_final = lhs.final_flags();
  const auto rhs_final = rhs.final_flags();

  ProductDfa out;
  std::vector<State> index(lhs.state_count * n, kNoState);
  auto intern = [&](State i, State j) {
    State& slot = index[static_cast<std::size_t>(i) * n + j];
    if (slot == kNoState) {
      slot = static_cast<State>(out.pairs.size());
      out.pairs.push_back({i, j});
    }
    return slot;
  };
  intern(lhs.start, rhs.start);
  for (std::size_t head = 0; head < out.pairs.size(); ++head) {
    const auto [i, j] = out.pairs[head];
    for (std::size_t a = 0; a < sigma; ++a) {
      out.dfa.delta.push_back(intern(lhs.delta[i * sigma + a], rhs.delta[j * sigma + a]));
    }
  }

  out.dfa.alphabet = lhs.alphabet;
  out.dfa.state_count = out.pairs.size();
  out.dfa.start = 0;
  for (std::size_t q = 0; q < out.pairs.size(); ++q) {
    const bool l = lhs_final[out.pairs[q].left] != 0;
    const bool r = rhs_final[out.pairs[q].right] != 0;
    if (mode == BooleanMode::Union ? (l || r) : (l && r)) out.dfa.finals.push_back(static_cast<State>(q));
  }
  return out;
}

CombinedDfa combined(const Dfa& dM, const Dfa& dN, CombinedOp op) {
  require_same_alphabet(dM.alphabet, dN.alphabet);
  CombinedDfa out;
  out.left = is_star_op(op) ? star_for_pipeline(dM) : determinize(reverse_to_nfa(dM));
  out.product = product(out.left.dfa, dN, boolean_mode(op));
  return out;
}

}  // namespace sclab
