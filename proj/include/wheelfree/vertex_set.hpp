#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace wheelfree {

/// Bit set over the vertex range {0, ..., n-1}.
///
/// All binary operations require both operands to share the same universe
/// size. Iteration visits members in ascending order.
class VertexSet {
 public:
  using word_type = std::uint64_t;
  static constexpr int word_bits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  template <typename Range>
  static VertexSet of(int universe, const Range& members) {
    VertexSet s(universe);
    for (int v : members) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) / word_bits] >> (v % word_bits)) & 1u;
  }
  void insert(int v) { words_[static_cast<std::size_t>(v) / word_bits] |= word_type{1} << (v % word_bits); }
  void erase(int v) { words_[static_cast<std::size_t>(v) / word_bits] &= ~(word_type{1} << (v % word_bits)); }

  int size() const {
    int c = 0;
    for (word_type w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
  }

  /// Smallest member, or -1 when empty.
  int first() const { return next(0); }

  /// Smallest member >= from, or -1.
  int next(int from) const {
    if (from >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) / word_bits;
    word_type w = words_[wi] & (~word_type{0} << (from % word_bits));
    while (true) {
      if (w != 0) return static_cast<int>(wi * word_bits) + std::countr_zero(w);
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the universe.
  VertexSet complement() const {
    VertexSet c = full(universe_);
    return c -= *this;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Orders by sorted member list (lexicographic), then by universe.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return a.to_vector() < b.to_vector();
  }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    const_iterator() = default;
    const_iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

 private:
  static std::size_t word_count(int universe) {
    return (static_cast<std::size_t>(universe) + word_bits - 1) / word_bits;
  }

  int universe_ = 0;
  std::vector<word_type> words_;
};

}  // namespace wheelfree
