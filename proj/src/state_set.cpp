#include "sclab/state_set.hpp"

#include <algorithm>
#include <bit>

namespace sclab {

StateSet::StateSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  for (State q = 0; q < universe; ++q) s.insert(q);
  return s;
}

StateSet StateSet::of(std::size_t universe, std::initializer_list<State> members) {
  StateSet s(universe);
  for (State q : members) s.insert(q);
  return s;
}

bool StateSet::empty() const noexcept {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t StateSet::size() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool StateSet::intersects(const StateSet& other) const noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool StateSet::is_subset_of(const StateSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~theirs) != 0) return false;
  }
  return true;
}

StateSet& StateSet::operator|=(const StateSet& other) noexcept {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<State> StateSet::elements() const {
  std::vector<State> out;
  out.reserve(size());
  for_each([&](State q) { out.push_back(q); });
  return out;
}

std::size_t StateSet::hash() const noexcept {
  // FNV-style mix over the words.
  std::uint64_t h = 0xcbf29ce484222325ULL ^ universe_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace sclab
