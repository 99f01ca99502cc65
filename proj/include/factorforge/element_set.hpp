#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace factorforge {

/// Fixed-width bitset over group element indices.
///
/// The width is a compile-time constant so set algebra compiles down to a
/// handful of word operations. The search core instantiates narrow widths
/// for small groups; everything else uses ElementSet.
template <std::size_t Words>
class BasicBitset {
 public:
  static constexpr std::size_t kWords = Words;
  static constexpr int kCapacity = static_cast<int>(Words * 64);

  constexpr BasicBitset() = default;

  static BasicBitset single(int i) {
    BasicBitset s;
    s.set(i);
    return s;
  }

  /// The set {0, 1, ..., n-1}.
  static BasicBitset prefix(int n) {
    BasicBitset s;
    for (std::size_t w = 0; w < Words; ++w) {
      const int lo = static_cast<int>(w * 64);
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { words_.fill(0); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  bool intersects(const BasicBitset& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  bool is_subset_of(const BasicBitset& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  int first() const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    return -1;
  }
  /// Smallest member strictly greater than i, or -1.
  int next(int i) const {
    ++i;
    if (i >= kCapacity) return -1;
    std::size_t w = static_cast<std::size_t>(i) >> 6;
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return static_cast<int>(w * 64) + std::countr_zero(cur);
      if (++w == Words) return -1;
      cur = words_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < Words; ++w) {
      std::uint64_t cur = words_[w];
      while (cur) {
        f(static_cast<int>(w * 64) + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  BasicBitset& operator|=(const BasicBitset& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  BasicBitset& operator&=(const BasicBitset& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  BasicBitset& operator-=(const BasicBitset& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend BasicBitset operator|(BasicBitset a, const BasicBitset& b) { return a |= b; }
  friend BasicBitset operator&(BasicBitset a, const BasicBitset& b) { return a &= b; }
  friend BasicBitset operator-(BasicBitset a, const BasicBitset& b) { return a -= b; }

  friend bool operator==(const BasicBitset&, const BasicBitset&) = default;

  /// Lexicographic order on sorted element lists: the set holding the
  /// smallest element of the symmetric difference sorts first.
  friend bool lex_less(const BasicBitset& a, const BasicBitset& b) {
    for (std::size_t w = 0; w < Words; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff) return (a.words_[w] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  std::uint64_t word(std::size_t w) const { return words_[w]; }
  std::uint64_t& word(std::size_t w) { return words_[w]; }

  template <std::size_t Other>
  BasicBitset<Other> resized() const {
    BasicBitset<Other> out;
    for (std::size_t w = 0; w < Words && w < Other; ++w) out.word(w) = words_[w];
    return out;
  }

 private:
  std::array<std::uint64_t, Words> words_{};
};

/// A subset of a group's elements (groups up to 1024 elements).
using ElementSet = BasicBitset<16>;

template <std::size_t W>
struct BitsetHash {
  std::size_t operator()(const BasicBitset<W>& s) const { return s.hash(); }
};

}  // namespace factorforge
