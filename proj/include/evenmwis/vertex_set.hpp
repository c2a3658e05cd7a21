#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "evenmwis/error.hpp"

namespace evenmwis {

using Vertex = int;

/// Membership bitset over the universe 0..n-1.
///
/// Binary set operations require both operands to share the same universe
/// size; mixing universes is a programming error and throws.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

    Vertex operator*() const { return static_cast<Vertex>(pos_); }
    const_iterator& operator++() {
      pos_ = set_->next_from(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  template <typename Range>
  static VertexSet of(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < universe_ &&
           ((words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U) != 0;
  }

  void insert(Vertex v) {
    check_member(v);
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(Vertex v) {
    check_member(v);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  /// Smallest member, or -1 when empty.
  Vertex first() const {
    auto p = next_from(0);
    return p == universe_ ? -1 : static_cast<Vertex>(p);
  }

  const_iterator begin() const { return {this, next_from(0)}; }
  const_iterator end() const { return {this, universe_}; }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  bool intersects(const VertexSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  bool is_subset_of(const VertexSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) { return apply(o, [](auto a, auto b) { return a | b; }); }
  VertexSet& operator&=(const VertexSet& o) { return apply(o, [](auto a, auto b) { return a & b; }); }
  VertexSet& operator-=(const VertexSet& o) { return apply(o, [](auto a, auto b) { return a & ~b; }); }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Orders sets by their sorted member lists, lexicographically.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
      if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t next_from(std::size_t pos) const {
    if (pos >= universe_) return universe_;
    std::size_t wi = pos >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (pos & 63));
    while (true) {
      if (w != 0) {
        std::size_t p = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return p < universe_ ? p : universe_;
      }
      if (++wi >= words_.size()) return universe_;
      w = words_[wi];
    }
  }

  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }
  }

  void check_member(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_) {
      throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " outside universe");
    }
  }

  void check_same(const VertexSet& o) const {
    if (o.universe_ != universe_) throw Error(ErrorKind::InvalidArgument, "vertex set universe mismatch");
  }

  template <typename Op>
  VertexSet& apply(const VertexSet& o, Op op) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = op(words_[i], o.words_[i]);
    return *this;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace evenmwis
