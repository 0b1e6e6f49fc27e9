#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mlat {

using Element = std::uint32_t;

/// Bitset over the elements 0..universe-1 of a finite loop.
///
/// Universes of up to 128 elements live in two inline words; larger ones
/// spill to the heap. Both layouts expose the same word span, so the rest of
/// the code never cares which one is in use.
class ElementSet {
public:
  static constexpr std::size_t kInlineBits = 128;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe) {
    if (universe_ > kInlineBits)
      heap_.assign((universe_ + 63) / 64, 0);
  }

  std::size_t universe() const { return universe_; }

  std::span<std::uint64_t> words() {
    return universe_ > kInlineBits ? std::span<std::uint64_t>(heap_) : std::span<std::uint64_t>(inline_);
  }
  std::span<const std::uint64_t> words() const {
    return universe_ > kInlineBits ? std::span<const std::uint64_t>(heap_)
                                   : std::span<const std::uint64_t>(inline_);
  }

  bool contains(Element x) const { return (words()[x >> 6] >> (x & 63)) & 1u; }

  /// Returns true if x was not yet present.
  bool insert(Element x) {
    std::uint64_t& w = words()[x >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (w & bit)
      return false;
    w |= bit;
    ++count_;
    return true;
  }

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool is_subset_of(const ElementSet& o) const {
    auto a = words(), b = o.words();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] & ~b[i])
        return false;
    return true;
  }

  ElementSet intersect(const ElementSet& o) const {
    ElementSet r(universe_);
    auto a = words(), b = o.words();
    auto w = r.words();
    for (std::size_t i = 0; i < a.size(); ++i) {
      w[i] = a[i] & b[i];
      r.count_ += static_cast<std::size_t>(std::popcount(w[i]));
    }
    return r;
  }

  template <class F>
  void for_each(F&& f) const {
    auto w = words();
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t bits = w[i];
      while (bits) {
        const int t = std::countr_zero(bits);
        f(static_cast<Element>(i * 64 + static_cast<std::size_t>(t)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(count_);
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  /// Smallest member; universe() if empty.
  Element first() const {
    auto w = words();
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i])
        return static_cast<Element>(i * 64 + static_cast<std::size_t>(std::countr_zero(w[i])));
    return static_cast<Element>(universe_);
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (std::uint64_t w : words())
      h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ull;
    return h;
  }

  friend bool operator==(const ElementSet& x, const ElementSet& y) {
    if (x.universe_ != y.universe_ || x.count_ != y.count_)
      return false;
    auto a = x.words(), b = y.words();
    return std::equal(a.begin(), a.end(), b.begin());
  }

  /// Lexicographic order on the sorted member lists.
  friend bool lex_less(const ElementSet& x, const ElementSet& y) {
    auto a = x.words(), b = y.words();
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == b[i])
        continue;
      // d is the smallest element in exactly one of the two sets. The set
      // lacking d is smaller iff it has nothing above d (it is a prefix).
      const std::uint64_t diff = a[i] ^ b[i];
      const std::uint64_t low = diff & (~diff + 1);
      const std::uint64_t above = ~((low << 1) - 1);
      auto has_above = [&](std::span<const std::uint64_t> w) {
        if (w[i] & above)
          return true;
        return std::any_of(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(),
                           [](std::uint64_t v) { return v != 0; });
      };
      if (a[i] & low)
        return has_above(b);
      return !has_above(a);
    }
    return false;
  }

private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::array<std::uint64_t, 2> inline_{};
  std::vector<std::uint64_t> heap_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

} // namespace mlat
