#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "evenmwis/error.hpp"
#include "evenmwis/vertex_set.hpp"

namespace evenmwis {

using Fraction = boost::rational<std::int64_t>;

inline std::string to_string(const Fraction& f) {
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

/// Parses "num/den" or a bare integer.
inline Fraction parse_fraction(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty number in fraction '" + std::string(text) + "'");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(std::string(s), &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad fraction '" + std::string(text) + "'");
    }
    if (used != s.size()) throw Error(ErrorKind::ParseError, "bad fraction '" + std::string(text) + "'");
    return static_cast<std::int64_t>(v);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text));
  auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Fraction(parse_int(text.substr(0, slash)), den);
}

/// Exact nonnegative per-vertex weights stored as integer numerators over a
/// single shared denominator. Sums and threshold tests never round.
class Weights {
 public:
  Weights() = default;

  Weights(std::vector<std::int64_t> numerators, std::int64_t denominator)
      : num_(std::move(numerators)), den_(denominator) {
    if (den_ <= 0) throw Error(ErrorKind::InvalidWeights, "denominator must be positive");
    for (auto x : num_) {
      if (x < 0) throw Error(ErrorKind::InvalidWeights, "negative weight");
      total_ += x;
    }
  }

  /// 1/n on every vertex.
  static Weights uniform(std::size_t n) {
    return Weights(std::vector<std::int64_t>(n, 1), static_cast<std::int64_t>(std::max<std::size_t>(n, 1)));
  }

  /// 1/|support| on the support, 0 elsewhere.
  static Weights uniform_on(const VertexSet& support) {
    std::vector<std::int64_t> num(support.universe(), 0);
    for (Vertex v : support) num[static_cast<std::size_t>(v)] = 1;
    return Weights(std::move(num), static_cast<std::int64_t>(std::max<std::size_t>(support.count(), 1)));
  }

  std::size_t size() const { return num_.size(); }
  std::int64_t denominator() const { return den_; }
  std::int64_t numerator(Vertex v) const { return num_[static_cast<std::size_t>(v)]; }
  const std::vector<std::int64_t>& numerators() const { return num_; }

  Fraction value(Vertex v) const { return Fraction(numerator(v), den_); }
  Fraction total() const { return Fraction(total_, den_); }
  std::int64_t total_numerator() const { return total_; }

  std::int64_t sum_numerators(const VertexSet& s) const {
    std::int64_t acc = 0;
    for (Vertex v : s) acc += num_[static_cast<std::size_t>(v)];
    return acc;
  }
  Fraction sum(const VertexSet& s) const { return Fraction(sum_numerators(s), den_); }

  /// numerator_sum / den <= bound, by cross-multiplication.
  bool at_most(std::int64_t numerator_sum, const Fraction& bound) const {
    return static_cast<__int128>(numerator_sum) * bound.denominator() <=
           static_cast<__int128>(bound.numerator()) * den_;
  }
  bool sum_at_most(const VertexSet& s, const Fraction& bound) const { return at_most(sum_numerators(s), bound); }

  Fraction max_value() const {
    std::int64_t m = 0;
    for (auto x : num_) m = std::max(m, x);
    return Fraction(m, den_);
  }

  /// True when every nonzero entry is equal and the total is exactly 1.
  bool is_uniform() const {
    std::int64_t common = 0;
    std::size_t support = 0;
    for (auto x : num_) {
      if (x == 0) continue;
      if (common == 0) common = x;
      if (x != common) return false;
      ++support;
    }
    return support > 0 && total() == Fraction(1);
  }

  /// Moves `amount` numerator units onto vertex v (used by anchors).
  void add(Vertex v, std::int64_t amount) {
    num_[static_cast<std::size_t>(v)] += amount;
    total_ += amount;
  }
  void set(Vertex v, std::int64_t value) {
    total_ += value - num_[static_cast<std::size_t>(v)];
    num_[static_cast<std::size_t>(v)] = value;
  }

  friend bool operator==(const Weights& a, const Weights& b) {
    if (a.num_.size() != b.num_.size()) return false;
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      if (Fraction(a.num_[i], a.den_) != Fraction(b.num_[i], b.den_)) return false;
    }
    return true;
  }

 private:
  std::vector<std::int64_t> num_;
  std::int64_t den_ = 1;
  std::int64_t total_ = 0;
};

}  // namespace evenmwis
