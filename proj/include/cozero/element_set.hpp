#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cozero {

using Index = std::uint32_t;

/// Fixed-universe bitset over element indices [0, universe).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Index> members)
      : ElementSet(universe) {
    for (Index m : members) insert(m);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (Index i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  template <typename Range>
  static ElementSet from_range(std::size_t universe, const Range& r) {
    ElementSet s(universe);
    for (auto m : r) s.insert(static_cast<Index>(m));
    return s;
  }

  std::size_t universe() const { return universe_; }

  void insert(Index i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(Index i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(Index i) const {
    return i < universe_ && ((words_[i >> 6] >> (i & 63)) & 1u) != 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  std::vector<Index> to_vector() const {
    std::vector<Index> out;
    for_each([&](Index i) { out.push_back(i); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        auto b = static_cast<Index>(std::countr_zero(bits));
        f(static_cast<Index>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  // Storage order; only meant for ordered containers.
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cozero
