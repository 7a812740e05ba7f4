#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gdecomp/error.hpp"

namespace gdecomp {

/// Hard cap on the order for operations that enumerate all 2^m subsets.
inline constexpr std::size_t kDefaultExhaustiveCap = 20;

/// A subset of {0, ..., universe-1}. Indices are 0-based in the API; the I/O
/// layer converts to the 1-based convention of the file formats.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : IndexSet(universe) {
    for (std::size_t i : members) insert(i);
  }

  static IndexSet from_members(std::size_t universe,
                               const std::vector<std::size_t>& members) {
    IndexSet s(universe);
    for (std::size_t i : members) s.insert(i);
    return s;
  }

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  /// Bit k of `mask` selects index k. Requires universe <= 64.
  static IndexSet from_mask(std::size_t universe, std::uint64_t mask) {
    require_mask_width(universe);
    IndexSet s(universe);
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  std::uint64_t mask() const {
    require_mask_width(universe_);
    return words_.empty() ? 0 : words_[0];
  }

  std::size_t universe() const noexcept { return universe_; }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }

  bool contains(std::size_t i) const noexcept {
    return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1U) != 0;
  }

  void insert(std::size_t i) {
    check_index(i);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void erase(std::size_t i) {
    check_index(i);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < universe_; ++i) {
      if (contains(i)) out.push_back(i);
    }
    return out;
  }

  std::vector<std::size_t> one_based() const {
    auto out = members();
    for (auto& i : out) ++i;
    return out;
  }

  IndexSet complement() const {
    IndexSet s(universe_);
    for (std::size_t i = 0; i < universe_; ++i) {
      if (!contains(i)) s.insert(i);
    }
    return s;
  }

  bool is_subset_of(const IndexSet& other) const {
    same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
  }

  friend IndexSet operator|(const IndexSet& a, const IndexSet& b) {
    a.same_universe(b);
    IndexSet s = a;
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] |= b.words_[w];
    return s;
  }

  friend IndexSet operator&(const IndexSet& a, const IndexSet& b) {
    a.same_universe(b);
    IndexSet s = a;
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] &= b.words_[w];
    return s;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  /// "{1,3}" (1-based).
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : one_based()) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

 private:
  static void require_mask_width(std::size_t universe) {
    if (universe > 64) {
      throw Error(ErrorCode::CapExceeded,
                  "bitmask view needs universe <= 64, got " +
                      std::to_string(universe));
    }
  }

  void check_index(std::size_t i) const {
    if (i >= universe_) {
      throw Error(ErrorCode::InvalidIndexSet,
                  "index " + std::to_string(i + 1) + " outside {1.." +
                      std::to_string(universe_) + "}");
    }
  }

  void same_universe(const IndexSet& other) const {
    if (universe_ != other.universe_) {
      throw Error(ErrorCode::InvalidIndexSet, "index sets over different universes");
    }
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Ordering used for every published list of subsets: cardinality first, then
/// lexicographic on the sorted member lists (smallest index first).
inline bool size_then_lex_less(const IndexSet& a, const IndexSet& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  return a.members() < b.members();
}

/// Mask form of size_then_lex_less.
inline bool mask_size_then_lex_less(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  const std::uint64_t low = diff & (~diff + 1);
  return (a & low) != 0;
}

}  // namespace gdecomp
