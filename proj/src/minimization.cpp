#include "sclab/minimization.hpp"

#include <algorithm>
#include <unordered_map>

#include "sclab/errors.hpp"

namespace sclab {
namespace {

// Refinable partition (Valmari & Lehtinen): elements of a block are stored
// contiguously, marked elements are swapped to the front of their block.
class RefinablePartition {
 public:
  explicit RefinablePartition(std::size_t n) : elems_(n), loc_(n), set_of_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) {
      elems_[i] = static_cast<State>(i);
      loc_[i] = i;
    }
    first_.push_back(0);
    end_.push_back(n);
    mid_.push_back(0);
  }

  std::size_t set_count() const { return first_.size(); }
  std::size_t set_of(State e) const { return set_of_[e]; }
  std::size_t size(std::size_t s) const { return end_[s] - first_[s]; }
  std::span<const State> members(std::size_t s) const {
    return {elems_.data() + first_[s], end_[s] - first_[s]};
  }

  /// Returns true if this is the first mark in its block.
  bool mark(State e) {
    const std::size_t s = set_of_[e];
    const std::size_t i = loc_[e];
    const std::size_t j = mid_[s];
    if (i < j) return false;
    const bool first_mark = j == first_[s];
    std::swap(elems_[i], elems_[j]);
    loc_[elems_[i]] = i;
    loc_[elems_[j]] = j;
    ++mid_[s];
    return first_mark;
  }

  /// Splits off the marked part of s as a new block, unless all or none are
  /// marked. Returns the new block id, or nullopt when no split happened.
  std::optional<std::size_t> split(std::size_t s) {
    if (mid_[s] == end_[s]) {
      mid_[s] = first_[s];
      return std::nullopt;
    }
    if (mid_[s] == first_[s]) return std::nullopt;
    const std::size_t t = first_.size();
    first_.push_back(first_[s]);
    end_.push_back(mid_[s]);
    mid_.push_back(first_[s]);
    first_[s] = mid_[s];
    for (std::size_t i = first_[t]; i < end_[t]; ++i) set_of_[elems_[i]] = t;
    return t;
  }

 private:
  std::vector<State> elems_;
  std::vector<std::size_t> loc_;
  std::vector<std::size_t> set_of_;
  std::vector<std::size_t> first_, end_, mid_;
};

}  // namespace

Partition coarsest_partition(const Dfa& d) {
  require_valid(d);
  const std::size_t sigma = d.sigma();
  const auto order = reachable_states(d);
  const std::size_t n = order.size();
  std::vector<State> local(d.state_count, kNoState);
  for (std::size_t i = 0; i < n; ++i) local[order[i]] = static_cast<State>(i);
  const auto is_final = d.final_flags();

  // Predecessor lists per symbol in CSR form, over local indices.
  std::vector<std::size_t> pred_start(sigma * n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < sigma; ++a) ++pred_start[a * n + local[d.next(order[i], static_cast<Symbol>(a))] + 1];
  }
  for (std::size_t i = 1; i < pred_start.size(); ++i) pred_start[i] += pred_start[i - 1];
  std::vector<State> preds(pred_start.back());
  {
    auto fill = pred_start;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < sigma; ++a) {
        preds[fill[a * n + local[d.next(order[i], static_cast<Symbol>(a))]]++] = static_cast<State>(i);
      }
    }
  }

  RefinablePartition part(n);
  std::vector<std::size_t> worklist;
  std::vector<char> in_worklist;
  auto push = [&](std::size_t s) {
    if (in_worklist.size() <= s) in_worklist.resize(s + 1, 0);
    if (!in_worklist[s]) {
      in_worklist[s] = 1;
      worklist.push_back(s);
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (is_final[order[i]]) part.mark(static_cast<State>(i));
  }
  if (auto t = part.split(0)) push(part.size(*t) <= part.size(0) ? *t : 0);

  std::vector<std::size_t> touched;
  std::vector<State> splitter;
  while (!worklist.empty()) {
    const std::size_t b = worklist.back();
    worklist.pop_back();
    in_worklist[b] = 0;
    const auto members = part.members(b);
    splitter.assign(members.begin(), members.end());
    for (std::size_t a = 0; a < sigma; ++a) {
      touched.clear();
      for (State q : splitter) {
        const std::size_t base = a * n + q;
        for (std::size_t k = pred_start[base]; k < pred_start[base + 1]; ++k) {
          const State p = preds[k];
          if (part.mark(p)) touched.push_back(part.set_of(p));
        }
      }
      for (std::size_t s : touched) {
        auto t = part.split(s);
        if (!t) continue;
        const bool pending = s < in_worklist.size() && in_worklist[s];
        if (pending) {
          push(*t);
        } else {
          push(part.size(*t) <= part.size(s) ? *t : s);
        }
      }
    }
  }

  Partition out;
  out.block_count = part.set_count();
  out.block_of.assign(d.state_count, kNoState);
  for (std::size_t i = 0; i < n; ++i) out.block_of[order[i]] = static_cast<State>(part.set_of(static_cast<State>(i)));
  return out;
}

Minimized minimize_with_map(const Dfa& d) {
  const Partition p = coarsest_partition(d);
  const std::size_t sigma = d.sigma();

  // Quotient machine over block ids, then canonical relabel.
  Dfa quotient;
  quotient.alphabet = d.alphabet;
  quotient.state_count = p.block_count;
  quotient.start = p.block_of[d.start];
  quotient.delta.assign(p.block_count * sigma, kNoState);
  std::vector<char> final_block(p.block_count, 0);
  for (State q = 0; q < d.state_count; ++q) {
    const State b = p.block_of[q];
    if (b == kNoState) continue;
    for (std::size_t a = 0; a < sigma; ++a) {
      quotient.delta[b * sigma + a] = p.block_of[d.next(q, static_cast<Symbol>(a))];
    }
    if (d.is_final(q)) final_block[b] = 1;
  }
  for (State b = 0; b < p.block_count; ++b) {
    if (final_block[b]) quotient.finals.push_back(b);
  }

  const auto order = reachable_states(quotient);
  std::vector<State> rename(p.block_count, kNoState);
  for (std::size_t i = 0; i < order.size(); ++i) rename[order[i]] = static_cast<State>(i);

  Minimized out;
  out.dfa = relabel_canonical(quotient);
  out.image_of.assign(d.state_count, kNoState);
  for (State q = 0; q < d.state_count; ++q) {
    if (p.block_of[q] != kNoState) out.image_of[q] = rename[p.block_of[q]];
  }
  return out;
}

Dfa minimize(const Dfa& d) { return minimize_with_map(d).dfa; }

bool equivalent(const Dfa& lhs, const Dfa& rhs) {
  require_same_alphabet(lhs.alphabet, rhs.alphabet);
  require_valid(lhs);
  require_valid(rhs);
  const std::size_t sigma = lhs.sigma();
  const std::size_t n = rhs.state_count;
  const auto lf = lhs.final_flags();
  const auto rf = rhs.final_flags();
  std::vector<char> seen(lhs.state_count * n, 0);
  std::vector<PairLabel> queue{{lhs.start, rhs.start}};
  seen[static_cast<std::size_t>(lhs.start) * n + rhs.start] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [i, j] = queue[head];
    if (lf[i] != rf[j]) return false;
    for (std::size_t a = 0; a < sigma; ++a) {
      const State ti = lhs.delta[i * sigma + a];
      const State tj = rhs.delta[j * sigma + a];
      char& s = seen[static_cast<std::size_t>(ti) * n + tj];
      if (!s) {
        s = 1;
        queue.push_back({ti, tj});
      }
    }
  }
  return true;
}

std::optional<Word> distinguishing_word(const Dfa& d, State p, State q) {
  require_valid(d);
  if (p >= d.state_count || q >= d.state_count) throw InvalidInput("state index out of range");
  const std::size_t m = d.state_count;
  const std::size_t sigma = d.sigma();
  const auto fin = d.final_flags();

  struct Back {
    std::size_t parent;
    Symbol symbol;
  };
  constexpr std::size_t kRoot = static_cast<std::size_t>(-1);
  std::unordered_map<std::uint64_t, std::size_t> slot;
  auto key = [m](State i, State j) { return static_cast<std::uint64_t>(i) * m + j; };
  std::vector<PairLabel> queue{{p, q}};
  std::vector<Back> back{{kRoot, 0}};
  slot.emplace(key(p, q), 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [i, j] = queue[head];
    if (fin[i] != fin[j]) {
      Word w;
      for (std::size_t cur = head; back[cur].parent != kRoot; cur = back[cur].parent) w.push_back(back[cur].symbol);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (std::size_t a = 0; a < sigma; ++a) {
      const State ti = d.delta[i * sigma + a];
      const State tj = d.delta[j * sigma + a];
      if (slot.try_emplace(key(ti, tj), queue.size()).second) {
        queue.push_back({ti, tj});
        back.push_back({head, static_cast<Symbol>(a)});
      }
    }
  }
  return std::nullopt;
}

std::size_t state_complexity(const Dfa& dM, const Dfa& dN, CombinedOp op) {
  return minimize(combined(dM, dN, op).product.dfa).state_count;
}

}  // namespace sclab
