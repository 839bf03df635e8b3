#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace sclab {

using State = std::uint32_t;

/// Fixed-universe bit set over state indices [0, universe).
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe);

  static StateSet full(std::size_t universe);
  static StateSet of(std::size_t universe, std::initializer_list<State> members);

  std::size_t universe() const noexcept { return universe_; }

  void insert(State q) noexcept { words_[q >> 6] |= std::uint64_t{1} << (q & 63); }
  void erase(State q) noexcept { words_[q >> 6] &= ~(std::uint64_t{1} << (q & 63)); }
  bool contains(State q) const noexcept {
    return q < universe_ && ((words_[q >> 6] >> (q & 63)) & 1U) != 0;
  }

  bool empty() const noexcept;
  std::size_t size() const noexcept;
  bool is_full() const noexcept { return size() == universe_; }
  bool intersects(const StateSet& other) const noexcept;
  bool is_subset_of(const StateSet& other) const noexcept;

  StateSet& operator|=(const StateSet& other) noexcept;

  /// Members in increasing order.
  std::vector<State> elements() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<State>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const noexcept;

  bool operator==(const StateSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sclab

template <>
struct std::hash<sclab::StateSet> {
  std::size_t operator()(const sclab::StateSet& s) const noexcept { return s.hash(); }
};
