#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sclab/automaton.hpp"

namespace sclab {

/// What a subset-construction state stands for: a set of source states, or
/// the fresh start state of the star construction.
struct SubsetLabel {
  bool fresh_start = false;
  StateSet members;

  bool operator==(const SubsetLabel&) const = default;
};

/// A DFA whose states remember the source subsets they were built from.
struct SubsetDfa {
  Dfa dfa;
  std::vector<SubsetLabel> labels;  // one per state of `dfa`
};

enum class BooleanMode { Union, Intersection };

struct PairLabel {
  State left;
  State right;

  bool operator==(const PairLabel&) const = default;
};

/// Reachable pair automaton; pairs[q] names the component states of q.
struct ProductDfa {
  Dfa dfa;
  std::vector<PairLabel> pairs;
};

enum class CombinedOp { StarUnion, StarIntersection, ReversalUnion, ReversalIntersection };

inline constexpr CombinedOp kAllCombinedOps[] = {CombinedOp::StarUnion, CombinedOp::StarIntersection,
                                                 CombinedOp::ReversalUnion,
                                                 CombinedOp::ReversalIntersection};

/// CLI spelling: star-union, star-intersection, reversal-union, reversal-intersection.
std::string_view to_string(CombinedOp op);
std::optional<CombinedOp> parse_combined_op(std::string_view name);

constexpr bool is_star_op(CombinedOp op) {
  return op == CombinedOp::StarUnion || op == CombinedOp::StarIntersection;
}
constexpr BooleanMode boolean_mode(CombinedOp op) {
  return op == CombinedOp::StarUnion || op == CombinedOp::ReversalUnion ? BooleanMode::Union
                                                                        : BooleanMode::Intersection;
}

/// Output of a combined pipeline: the star/reversal automaton built from M
/// (`left`) and its product with N. product.pairs[q].left indexes left.labels.
struct CombinedDfa {
  SubsetDfa left;
  ProductDfa product;
};

/// Number of final states other than the start state.
std::size_t nonstart_final_count(const Dfa& d);

/// Transposed machine: starts = finals of d, finals = {start of d}.
Nfa reverse_to_nfa(const Dfa& d);

/// Subset construction from the set of initial states, restricted to
/// reachable subsets. An empty image becomes a non-final sink.
SubsetDfa determinize(const Nfa& nf);

/// Largest source size accepted by star_explicit (its table has 2^m entries).
inline constexpr std::size_t kMaxExplicitStarStates = 20;

/// The explicit star DFA: a fresh accepting start, every non-empty subset
/// avoiding F0 = finals - {start}, and every subset that contains the start
/// and meets F0. The start is re-added whenever an image meets F0. All
/// 2^(m-1) + 2^(m-k-1) states are kept, reachable or not; state 0 is the
/// fresh start and the rest follow in increasing subset-mask order.
///
/// Throws PreconditionError when k = |F0| is zero.
SubsetDfa star_explicit(const Dfa& d);

/// Epsilon-free NFA for L(d)*: a fresh accepting start copying the start's
/// moves, plus a restart edge to the start wherever an edge enters a final.
Nfa star_nfa(const Dfa& d);

/// L(d)* by determinizing star_nfa; an independent route to star_explicit.
Dfa star_generic(const Dfa& d);

/// Star automaton used by the combined pipelines: star_explicit when k >= 1,
/// otherwise d itself when the start is final (L* = L), or the two-state
/// {epsilon} machine when d accepts nothing.
SubsetDfa star_for_pipeline(const Dfa& d);

ProductDfa product(const Dfa& lhs, const Dfa& rhs, BooleanMode mode);

/// Reachable, unminimized automaton for op(L(dM), L(dN)).
CombinedDfa combined(const Dfa& dM, const Dfa& dN, CombinedOp op);

}  // namespace sclab
