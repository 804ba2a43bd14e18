#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ratweyl {

/// Fixed-width set of positive-root indices. Capacity covers E8 (120 roots).
class RootSet {
 public:
  static constexpr std::size_t kCapacity = 128;

  constexpr RootSet() = default;

  static RootSet from_indices(const std::vector<std::size_t>& indices) {
    RootSet s;
    for (auto i : indices) s.set(i);
    return s;
  }

  /// The set {0, ..., n-1}.
  static constexpr RootSet first_n(std::size_t n) {
    RootSet s;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  constexpr void set(std::size_t i) { words_[i >> 6] |= bit(i); }
  constexpr void reset(std::size_t i) { words_[i >> 6] &= ~bit(i); }
  constexpr bool test(std::size_t i) const { return (words_[i >> 6] & bit(i)) != 0; }

  constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }
  constexpr std::size_t count() const {
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
  }
  constexpr bool intersects(const RootSet& o) const {
    return ((words_[0] & o.words_[0]) | (words_[1] & o.words_[1])) != 0;
  }
  constexpr bool is_subset_of(const RootSet& o) const {
    return ((words_[0] & ~o.words_[0]) | (words_[1] & ~o.words_[1])) == 0;
  }

  constexpr RootSet& operator|=(const RootSet& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  constexpr RootSet& operator&=(const RootSet& o) {
    words_[0] &= o.words_[0];
    words_[1] &= o.words_[1];
    return *this;
  }
  friend constexpr RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
  friend constexpr RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
  friend constexpr bool operator==(const RootSet&, const RootSet&) = default;
  friend constexpr auto operator<=>(const RootSet&, const RootSet&) = default;

  /// Calls `fn(i)` for every member in increasing order.
  template <class Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  static constexpr std::size_t kWords = kCapacity / 64;
  static constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << (i & 63); }

  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace ratweyl
