#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evenmwis/error.hpp"
#include "evenmwis/graph.hpp"

namespace evenmwis {

enum class StructureKind { C4, Prism, Paw, OddHole, OddAntihole };

constexpr std::string_view to_string(StructureKind k) {
  switch (k) {
    case StructureKind::C4: return "C4";
    case StructureKind::Prism: return "Prism";
    case StructureKind::Paw: return "Paw";
    case StructureKind::OddHole: return "OddHole";
    case StructureKind::OddAntihole: return "OddAntihole";
  }
  return "?";
}

/// Vertex layout per kind:
///   C4, OddHole      cycle order
///   OddAntihole      cycle order of the hole in the complement
///   Paw              (a, c, b1, b2): triangle a-b1-b2, pendant edge a-c
///   Prism            path a1..b1, then a2..b2, then a3..b3; `parts` holds
///                    the three path vertex counts
struct StructureWitness {
  StructureKind kind;
  std::vector<Vertex> vertices;
  std::vector<std::size_t> parts;
};

namespace detail {

inline bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cyc) {
  const std::size_t k = cyc.size();
  if (k < 3) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (cyc[i] == cyc[j]) return false;
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cyc[i], cyc[j]) != consecutive) return false;
    }
  }
  return true;
}

inline bool is_induced_path(const Graph& g, std::span<const Vertex> p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return false;
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

/// First induced cycle of odd length >= 5 found by a DFS rooted at each
/// vertex s over vertices larger than s.
inline std::optional<std::vector<Vertex>> find_odd_hole(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<int> touched(n, 0);
  std::vector<Vertex> path;
  std::optional<std::vector<Vertex>> found;

  auto mark = [&](Vertex x, int d) {
    touched[static_cast<std::size_t>(x)] += d;
    for (Vertex y : g.neighbors(x)) touched[static_cast<std::size_t>(y)] += d;
  };

  for (Vertex s = 0; s < static_cast<Vertex>(n) && !found; ++s) {
    // touched excludes s itself: a vertex adjacent to s closes the cycle.
    auto dfs = [&](auto&& self) -> void {
      Vertex end = path.back();
      for (Vertex x : g.neighbors(end)) {
        if (found) return;
        if (x <= s) continue;
        if (path.size() == 1) {
          path.push_back(x);
          mark(x, 1);
          self(self);
          mark(x, -1);
          path.pop_back();
          continue;
        }
        if (touched[static_cast<std::size_t>(x)] != 1) continue;
        if (std::find(path.begin(), path.end(), x) != path.end()) continue;
        if (g.adjacent(x, s)) {
          std::size_t len = path.size() + 1;
          if (len >= 5 && len % 2 == 1 && path[1] < x) {
            found = path;
            found->push_back(x);
          }
          continue;
        }
        path.push_back(x);
        mark(x, 1);
        self(self);
        mark(x, -1);
        path.pop_back();
      }
    };
    path.assign(1, s);
    dfs(dfs);
  }
  return found;
}

}  // namespace detail

/// Re-checks a witness against the adjacency of g.
inline bool validates(const Graph& g, const StructureWitness& w) {
  const auto& v = w.vertices;
  for (Vertex x : v) {
    if (x < 0 || static_cast<std::size_t>(x) >= g.size()) return false;
  }
  switch (w.kind) {
    case StructureKind::C4:
      return v.size() == 4 && detail::is_induced_cycle(g, v);
    case StructureKind::OddHole:
      return v.size() >= 5 && v.size() % 2 == 1 && detail::is_induced_cycle(g, v);
    case StructureKind::OddAntihole:
      return v.size() >= 5 && v.size() % 2 == 1 && detail::is_induced_cycle(g.complement(), v);
    case StructureKind::Paw: {
      if (v.size() != 4) return false;
      Vertex a = v[0], c = v[1], b1 = v[2], b2 = v[3];
      std::array<Vertex, 4> all{a, c, b1, b2};
      std::sort(all.begin(), all.end());
      if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
      return g.adjacent(a, b1) && g.adjacent(a, b2) && g.adjacent(b1, b2) && g.adjacent(a, c) &&
             !g.adjacent(c, b1) && !g.adjacent(c, b2);
    }
    case StructureKind::Prism: {
      if (w.parts.size() != 3) return false;
      std::size_t total = w.parts[0] + w.parts[1] + w.parts[2];
      if (total != v.size()) return false;
      std::array<std::span<const Vertex>, 3> p;
      std::size_t off = 0;
      for (int i = 0; i < 3; ++i) {
        if (w.parts[static_cast<std::size_t>(i)] < 2) return false;
        p[static_cast<std::size_t>(i)] = std::span<const Vertex>(v).subspan(off, w.parts[static_cast<std::size_t>(i)]);
        off += w.parts[static_cast<std::size_t>(i)];
      }
      std::vector<Vertex> sorted = v;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
      for (int i = 0; i < 3; ++i) {
        if (!detail::is_induced_path(g, p[static_cast<std::size_t>(i)])) return false;
      }
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          const auto& pi = p[static_cast<std::size_t>(i)];
          const auto& pj = p[static_cast<std::size_t>(j)];
          for (std::size_t x = 0; x < pi.size(); ++x) {
            for (std::size_t y = 0; y < pj.size(); ++y) {
              bool allowed = (x == 0 && y == 0) || (x + 1 == pi.size() && y + 1 == pj.size());
              if (g.adjacent(pi[x], pj[y]) != allowed) return false;
            }
          }
        }
      }
      return true;
    }
  }
  return false;
}

/// Lexicographically first (a, b, c, d) with a the smallest vertex, b < d,
/// inducing the 4-cycle a-b-c-d-a.
inline std::optional<StructureWitness> find_c4(const Graph& g) {
  for (Vertex a = 0; a < static_cast<Vertex>(g.size()); ++a) {
    auto na = g.neighbors(a);
    for (Vertex b : na) {
      if (b < a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= a || g.adjacent(a, c)) continue;
        for (Vertex d : na) {
          if (d <= b || g.adjacent(b, d) || !g.adjacent(c, d)) continue;
          return StructureWitness{StructureKind::C4, {a, b, c, d}, {}};
        }
      }
    }
  }
  return std::nullopt;
}

inline constexpr std::size_t kDefaultPrismBudget = 50'000'000;

/// Enumerates vertex-disjoint triangle pairs and every matching between
/// them, then searches for three induced connecting paths with no edges
/// between paths other than the triangle edges. Throws InstanceTooLarge
/// when more than `budget` candidate paths are examined.
inline std::optional<StructureWitness> find_prism(const Graph& g, std::size_t budget = kDefaultPrismBudget) {
  const std::size_t n = g.size();
  std::vector<std::array<Vertex, 3>> triangles;
  for (Vertex a = 0; a < static_cast<Vertex>(n); ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= b || !g.adjacent(a, c)) continue;
        triangles.push_back({a, b, c});
      }
    }
  }
  std::size_t spent = 0;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    for (std::size_t j = i + 1; j < triangles.size(); ++j) {
      const auto& ta = triangles[i];
      std::array<Vertex, 3> tb = triangles[j];
      bool disjoint = true;
      for (Vertex x : ta) {
        if (std::find(tb.begin(), tb.end(), x) != tb.end()) disjoint = false;
      }
      if (!disjoint) continue;
      std::sort(tb.begin(), tb.end());
      do {
        bool ok = true;
        for (int k = 0; k < 3 && ok; ++k) {
          for (int l = 0; l < 3 && ok; ++l) {
            if (k != l && g.adjacent(ta[static_cast<std::size_t>(k)], tb[static_cast<std::size_t>(l)])) ok = false;
          }
        }
        if (!ok) continue;

        VertexSet triangle_vertices(n, {ta[0], ta[1], ta[2], tb[0], tb[1], tb[2]});
        std::array<std::vector<Vertex>, 3> chosen;
        bool done = false;
        auto build = [&](auto&& self, int k) -> void {
          if (k == 3) {
            done = true;
            return;
          }
          VertexSet blocked = triangle_vertices;
          for (int l = 0; l < 3; ++l) {
            if (l == k) continue;
            blocked |= closed_neighborhood(g, ta[static_cast<std::size_t>(l)]);
            blocked |= closed_neighborhood(g, tb[static_cast<std::size_t>(l)]);
          }
          for (int l = 0; l < k; ++l) {
            for (Vertex x : chosen[static_cast<std::size_t>(l)]) blocked |= closed_neighborhood(g, x);
          }
          VertexSet alive = g.all() - blocked;
          alive.insert(ta[static_cast<std::size_t>(k)]);
          alive.insert(tb[static_cast<std::size_t>(k)]);
          for_each_induced_path(g, ta[static_cast<std::size_t>(k)], tb[static_cast<std::size_t>(k)], &alive,
                                [&](const std::vector<Vertex>& p) {
                                  if (++spent > budget) {
                                    throw Error(ErrorKind::InstanceTooLarge, "prism search budget exhausted");
                                  }
                                  chosen[static_cast<std::size_t>(k)] = p;
                                  self(self, k + 1);
                                  return !done;
                                });
        };
        build(build, 0);
        if (done) {
          StructureWitness w{StructureKind::Prism, {}, {}};
          for (const auto& p : chosen) {
            w.vertices.insert(w.vertices.end(), p.begin(), p.end());
            w.parts.push_back(p.size());
          }
          return w;
        }
      } while (std::next_permutation(tb.begin(), tb.end()));
    }
  }
  return std::nullopt;
}

/// All induced paws as (a, c, b1, b2) with b1 < b2, sorted by that tuple.
inline std::vector<StructureWitness> find_paws(const Graph& g) {
  std::vector<StructureWitness> out;
  for (Vertex a = 0; a < static_cast<Vertex>(g.size()); ++a) {
    auto na = g.neighbors(a);
    for (Vertex c : na) {
      for (Vertex b1 : na) {
        if (b1 == c || g.adjacent(b1, c)) continue;
        for (Vertex b2 : na) {
          if (b2 <= b1 || b2 == c || g.adjacent(b2, c) || !g.adjacent(b1, b2)) continue;
          out.push_back(StructureWitness{StructureKind::Paw, {a, c, b1, b2}, {}});
        }
      }
    }
  }
  return out;
}

inline constexpr std::size_t kDefaultBergeCap = 64;

struct BergeResult {
  bool berge = true;
  std::optional<StructureWitness> witness;
};

/// Brute-force odd hole / odd antihole search (holes of G and of its
/// complement). Throws InstanceTooLarge above `cap` vertices.
inline BergeResult is_berge(const Graph& g, std::size_t cap = kDefaultBergeCap) {
  if (g.size() > cap) {
    throw Error(ErrorKind::InstanceTooLarge,
                "Berge check limited to " + std::to_string(cap) + " vertices, got " + std::to_string(g.size()));
  }
  if (auto hole = detail::find_odd_hole(g)) {
    return {false, StructureWitness{StructureKind::OddHole, *hole, {}}};
  }
  // C5 is self-complementary and already caught above.
  if (auto anti = detail::find_odd_hole(g.complement())) {
    return {false, StructureWitness{StructureKind::OddAntihole, *anti, {}}};
  }
  return {};
}

/// True iff every chordless u–v path in G[alive] is even. Adjacent pairs are
/// never even pairs. Throws Truncated when `cap` paths were inspected
/// without meeting an odd one.
inline bool is_even_pair(const Graph& g, Vertex u, Vertex v, std::size_t cap = kDefaultPathCap,
                         const VertexSet* alive = nullptr) {
  if (u == v) throw Error(ErrorKind::InvalidArgument, "even pair needs two distinct vertices");
  if (g.adjacent(u, v)) return false;
  std::size_t seen = 0;
  bool odd = false;
  bool truncated = false;
  for_each_induced_path(g, u, v, alive, [&](const std::vector<Vertex>& p) {
    if ((p.size() - 1) % 2 == 1) {
      odd = true;
      return false;
    }
    if (++seen >= cap) {
      truncated = true;
      return false;
    }
    return true;
  });
  if (odd) return false;
  if (truncated) throw Error(ErrorKind::Truncated, "even-pair check hit the path cap");
  return true;
}

/// v breaks x when no component D of G∖N[v] has x ⊆ N[D].
inline bool breaks(const Graph& g, Vertex v, const VertexSet& x) {
  if (x.contains(v)) throw Error(ErrorKind::InvalidArgument, "breaking vertex must lie outside the set");
  VertexSet rest = g.all() - closed_neighborhood(g, v);
  for (const auto& d : components(g, rest)) {
    if (x.is_subset_of(closed_neighborhood(g, d))) return false;
  }
  return true;
}

enum class Tristate { Yes, No, Unchecked };

constexpr std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    case Tristate::Unchecked: return "unchecked";
  }
  return "?";
}

struct PreconditionReport {
  bool connected = false;
  std::optional<StructureWitness> c4;
  std::optional<StructureWitness> prism;
  Tristate berge = Tristate::Unchecked;
  std::optional<StructureWitness> berge_witness;
  int max_degree = 0;

  bool c4_free() const { return !c4; }
  bool prism_free() const { return !prism; }
  /// C4-free, prism-free and not shown non-Berge: sufficient evidence of
  /// paw-friendliness as far as we can check.
  bool in_class() const { return c4_free() && prism_free() && berge != Tristate::No; }
};

inline PreconditionReport check_preconditions(const Graph& g, std::size_t berge_cap = kDefaultBergeCap) {
  PreconditionReport r;
  r.connected = is_connected(g);
  r.c4 = find_c4(g);
  r.prism = find_prism(g);
  r.max_degree = g.max_degree();
  if (g.size() <= berge_cap) {
    auto b = is_berge(g, berge_cap);
    r.berge = b.berge ? Tristate::Yes : Tristate::No;
    r.berge_witness = b.witness;
  }
  return r;
}

}  // namespace evenmwis
