#pragma once

// Exhaustive reference implementations used to cross-check the library.
// They only read adjacency from Graph and share no code with the detectors,
// the solver or the minimizers.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "evenmwis/graph.hpp"

namespace oracle {

using evenmwis::Graph;
using evenmwis::Vertex;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<evenmwis::Edge> e;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng) < p) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(n, e);
}

inline std::vector<Vertex> members(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

/// Degrees inside the induced subgraph on `verts`.
inline std::vector<int> induced_degrees(const Graph& g, const std::vector<Vertex>& verts) {
  std::vector<int> deg(verts.size(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (g.adjacent(verts[i], verts[j])) {
        ++deg[i];
        ++deg[j];
      }
    }
  }
  return deg;
}

inline bool induced_connected(const Graph& g, const std::vector<Vertex>& verts) {
  if (verts.empty()) return true;
  std::vector<bool> seen(verts.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (!seen[j] && g.adjacent(verts[i], verts[j])) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == verts.size();
}

/// 4-subsets inducing a 4-cycle: every induced degree equals 2.
inline std::set<std::vector<Vertex>> induced_c4_sets(const Graph& g) {
  std::set<std::vector<Vertex>> out;
  const int n = static_cast<int>(g.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          std::vector<Vertex> s{a, b, c, d};
          auto deg = induced_degrees(g, s);
          if (std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; })) out.insert(s);
        }
  return out;
}

/// 4-subsets inducing a paw: sorted induced degrees (1, 2, 2, 3).
inline std::set<std::vector<Vertex>> induced_paw_sets(const Graph& g) {
  std::set<std::vector<Vertex>> out;
  const int n = static_cast<int>(g.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          std::vector<Vertex> s{a, b, c, d};
          auto deg = induced_degrees(g, s);
          std::sort(deg.begin(), deg.end());
          if (deg == std::vector<int>{1, 2, 2, 3}) out.insert(s);
        }
  return out;
}

/// Lexicographically first cyclic 4-tuple over all induced C4 vertex sets.
inline std::vector<Vertex> first_c4_tuple(const Graph& g, const std::set<std::vector<Vertex>>& sets) {
  std::vector<Vertex> best;
  for (const auto& s : sets) {
    Vertex a = s[0];
    std::vector<Vertex> nb;
    Vertex opp = -1;
    for (std::size_t i = 1; i < 4; ++i) {
      if (g.adjacent(a, s[i])) {
        nb.push_back(s[i]);
      } else {
        opp = s[i];
      }
    }
    std::vector<Vertex> t{a, nb[0], opp, nb[1]};
    if (best.empty() || t < best) best = t;
  }
  return best;
}

/// Whether G[verts] is a prism: six degree-3 vertices splitting into two
/// triangles, every other vertex of degree 2, and after deleting the six
/// triangle edges the rest is three disjoint paths each joining the two
/// triangles.
inline bool induces_prism(const Graph& g, const std::vector<Vertex>& verts) {
  const std::size_t k = verts.size();
  if (k < 6) return false;
  auto deg = induced_degrees(g, verts);
  std::vector<std::size_t> cubic;
  for (std::size_t i = 0; i < k; ++i) {
    if (deg[i] == 3) {
      cubic.push_back(i);
    } else if (deg[i] != 2) {
      return false;
    }
  }
  if (cubic.size() != 6 || !induced_connected(g, verts)) return false;
  auto adj = [&](std::size_t i, std::size_t j) { return g.adjacent(verts[i], verts[j]); };
  // cubic[0] is in the first triangle; pick its two mates
  for (std::size_t p = 1; p < 6; ++p) {
    for (std::size_t q = p + 1; q < 6; ++q) {
      std::array<std::size_t, 3> t1{cubic[0], cubic[p], cubic[q]};
      std::vector<std::size_t> t2;
      for (std::size_t r = 1; r < 6; ++r) {
        if (r != p && r != q) t2.push_back(cubic[r]);
      }
      if (!(adj(t1[0], t1[1]) && adj(t1[0], t1[2]) && adj(t1[1], t1[2]))) continue;
      if (!(adj(t2[0], t2[1]) && adj(t2[0], t2[2]) && adj(t2[1], t2[2]))) continue;
      auto tri_edge = [&](std::size_t i, std::size_t j) {
        bool i1 = std::find(t1.begin(), t1.end(), i) != t1.end();
        bool j1 = std::find(t1.begin(), t1.end(), j) != t1.end();
        bool i2 = std::find(t2.begin(), t2.end(), i) != t2.end();
        bool j2 = std::find(t2.begin(), t2.end(), j) != t2.end();
        return (i1 && j1) || (i2 && j2);
      };
      // walk the path leaving each vertex of t1
      std::vector<bool> used(k, false);
      std::size_t covered = 0;
      bool ok = true;
      std::set<std::size_t> ends;
      for (std::size_t s : t1) {
        std::size_t prev = s;
        std::size_t cur = k;
        for (std::size_t j = 0; j < k; ++j) {
          if (j != s && adj(s, j) && !tri_edge(s, j)) cur = j;
        }
        used[s] = true;
        ++covered;
        while (ok && cur < k && std::find(t2.begin(), t2.end(), cur) == t2.end()) {
          if (used[cur] || std::find(t1.begin(), t1.end(), cur) != t1.end()) {
            ok = false;
            break;
          }
          used[cur] = true;
          ++covered;
          std::size_t next = k;
          for (std::size_t j = 0; j < k; ++j) {
            if (j != prev && j != cur && adj(cur, j)) next = j;
          }
          prev = cur;
          cur = next;
        }
        if (!ok || cur == k || used[cur]) {
          ok = false;
          break;
        }
        used[cur] = true;
        ++covered;
        ends.insert(cur);
      }
      if (ok && covered == k && ends.size() == 3) return true;
    }
  }
  return false;
}

inline bool has_induced_prism(const Graph& g) {
  const std::size_t n = g.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 6) continue;
    if (induces_prism(g, members(mask))) return true;
  }
  return false;
}

/// Odd hole (length ≥ 5) by subset enumeration: connected, all degrees 2.
inline bool has_odd_hole(const Graph& g) {
  const std::size_t n = g.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int k = std::popcount(mask);
    if (k < 5 || k % 2 == 0) continue;
    auto s = members(mask);
    auto deg = induced_degrees(g, s);
    if (std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; }) && induced_connected(g, s)) return true;
  }
  return false;
}

/// Parities of all induced u–v paths inside `alive` (mask), by enumerating
/// vertex subsets: a subset is an induced u–v path iff it is connected, u
/// and v have degree 1 and every other vertex degree 2.
inline std::pair<bool, bool> path_parities(const Graph& g, Vertex u, Vertex v, std::uint64_t alive) {
  bool even = false;
  bool odd = false;
  std::uint64_t rest = alive & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v);
  // iterate subsets of rest
  for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
    std::uint64_t mask = sub | (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    auto s = members(mask);
    auto deg = induced_degrees(g, s);
    bool path = true;
    for (std::size_t i = 0; i < s.size() && path; ++i) {
      int want = (s[i] == u || s[i] == v) ? 1 : 2;
      if (deg[i] != want) path = false;
    }
    if (path && induced_connected(g, s)) {
      if ((s.size() - 1) % 2 == 0) {
        even = true;
      } else {
        odd = true;
      }
    }
    if (sub == 0) break;
  }
  return {even, odd};
}

/// Even pair: no odd induced u–v path inside `alive` (and u, v
/// non-adjacent, which the single-edge path already covers).
inline bool even_pair(const Graph& g, Vertex u, Vertex v, std::uint64_t alive) {
  return !path_parities(g, u, v, alive).second;
}

/// Whether G[alive] has an odd induced u-v path, by depth-first extension:
/// each new vertex sees the current end and nothing earlier on the path.
inline bool has_odd_induced_path(const Graph& g, Vertex u, Vertex v, std::uint64_t alive) {
  std::vector<std::uint64_t> closed(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    closed[x] = std::uint64_t{1} << x;
    for (Vertex y : g.neighbors(static_cast<Vertex>(x))) closed[x] |= std::uint64_t{1} << y;
  }
  std::function<bool(Vertex, std::uint64_t, std::size_t)> extend = [&](Vertex end, std::uint64_t blocked,
                                                                    std::size_t len) {
    for (Vertex x : g.neighbors(end)) {
      std::uint64_t bit = std::uint64_t{1} << x;
      if (!(alive & bit) || (blocked & bit)) continue;
      if (x == v) {
        if ((len + 1) % 2 == 1) return true;
        continue;
      }
      if (extend(x, blocked | closed[static_cast<std::size_t>(end)], len + 1)) return true;
    }
    return false;
  };
  return extend(u, std::uint64_t{1} << u, 0);
}

/// Maximum weight independent set by enumerating all subsets; ties go to
/// the lexicographically smallest sorted vertex list.
inline std::pair<std::int64_t, std::vector<Vertex>> mwis(const Graph& g, const std::vector<std::int64_t>& w,
                                                         std::uint64_t alive = ~std::uint64_t{0}) {
  const std::size_t n = g.size();
  if (n < 64) alive &= (std::uint64_t{1} << n) - 1;
  std::int64_t best = -1;
  std::vector<Vertex> best_set;
  for (std::uint64_t sub = alive;; sub = (sub - 1) & alive) {
    auto s = members(sub);
    bool indep = true;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < s.size() && indep; ++i) {
      total += w[static_cast<std::size_t>(s[i])];
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (g.adjacent(s[i], s[j])) {
          indep = false;
          break;
        }
      }
    }
    if (indep && (total > best || (total == best && s < best_set))) {
      best = total;
      best_set = s;
    }
    if (sub == 0) break;
  }
  return {best, best_set};
}

/// Minimum of a set function over all subsets of {0..m-1} (bitmask input).
inline std::int64_t min_over_subsets(std::size_t m, const std::function<std::int64_t(std::uint64_t)>& f) {
  std::int64_t best = f(0);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) best = std::min(best, f(s));
  return best;
}

}  // namespace oracle
