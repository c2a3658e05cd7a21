#pragma once

// Random submodular oracles shared by the SFM tests and the acceptance run.

#include <numeric>
#include <random>
#include <span>
#include <tuple>
#include <vector>

#include "evenmwis/evenmwis.hpp"
#include "oracles.hpp"

namespace sfm_family {

using namespace evenmwis;

inline std::vector<int> iota_ground(int m) {
  std::vector<int> g(static_cast<std::size_t>(m));
  std::iota(g.begin(), g.end(), 0);
  return g;
}

/// Weighted cut of a random graph on the ground plus a modular term.
inline SfmOracle random_cut(int m, std::mt19937_64& rng) {
  std::vector<std::tuple<int, int, std::int64_t>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (rng() % 3 == 0) edges.emplace_back(i, j, static_cast<std::int64_t>(rng() % 9) + 1);
    }
  }
  std::vector<std::int64_t> mod(static_cast<std::size_t>(m));
  for (auto& x : mod) x = static_cast<std::int64_t>(rng() % 21) - 10;
  return SfmOracle(iota_ground(m), [edges, mod, m](std::span<const int> a) {
    std::vector<bool> in(static_cast<std::size_t>(m), false);
    std::int64_t s = 0;
    for (int e : a) {
      in[static_cast<std::size_t>(e)] = true;
      s += mod[static_cast<std::size_t>(e)];
    }
    for (auto [i, j, c] : edges) {
      if (in[static_cast<std::size_t>(i)] != in[static_cast<std::size_t>(j)]) s += c;
    }
    return s;
  });
}

/// k · rank of a random graphic matroid plus a modular term.
inline SfmOracle random_matroid(int m, std::mt19937_64& rng) {
  const int nv = 2 + static_cast<int>(rng() % 6);
  std::vector<std::pair<int, int>> ends;
  for (int e = 0; e < m; ++e) ends.emplace_back(static_cast<int>(rng() % nv), static_cast<int>(rng() % nv));
  const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 5);
  std::vector<std::int64_t> mod(static_cast<std::size_t>(m));
  for (auto& x : mod) x = -static_cast<std::int64_t>(rng() % (2 * static_cast<std::uint64_t>(k) + 2));
  return SfmOracle(iota_ground(m), [ends, mod, k, nv](std::span<const int> a) {
    std::vector<int> parent(static_cast<std::size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    std::int64_t rank = 0;
    std::int64_t s = 0;
    for (int e : a) {
      s += mod[static_cast<std::size_t>(e)];
      int x = find(ends[static_cast<std::size_t>(e)].first);
      int y = find(ends[static_cast<std::size_t>(e)].second);
      if (x != y) {
        parent[static_cast<std::size_t>(x)] = y;
        ++rank;
      }
    }
    return k * rank + s;
  });
}

/// f(A) = -(w(A) + α(G ∖ (S ∪ N(A)))) on the ground S, by bitmask
/// enumeration (n ≤ 64). g and w must outlive the oracle.
inline SfmOracle negated_extension(const Graph& g, const std::vector<std::int64_t>& w, std::vector<Vertex> s) {
  return SfmOracle(s, [&g, &w, s](std::span<const int> a) {
    std::uint64_t alive = g.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.size()) - 1;
    std::int64_t wa = 0;
    for (Vertex x : s) alive &= ~(std::uint64_t{1} << x);
    for (int x : a) {
      wa += w[static_cast<std::size_t>(x)];
      for (Vertex y : g.neighbors(x)) alive &= ~(std::uint64_t{1} << y);
    }
    return -(wa + oracle::mwis(g, w, alive).first);
  });
}

}  // namespace sfm_family
