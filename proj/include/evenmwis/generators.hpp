#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "evenmwis/error.hpp"
#include "evenmwis/graph.hpp"
#include "evenmwis/recognition.hpp"

namespace evenmwis {

/// Generated instance plus a one-line note on why it lies in the class.
struct Generated {
  Graph graph;
  std::string note;
};

namespace detail {

// std distributions are implementation-defined; plain modulo keeps output
// identical across standard libraries.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

inline bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
}

}  // namespace detail

inline Graph cycle_graph(std::size_t len) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < len; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % len));
  return Graph(len, e);
}

inline Graph path_graph(std::size_t len) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < len; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(len, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(n, e);
}

/// Each edge uv becomes u–s–v. Original vertices keep their ids; the
/// subdivision vertex of the i-th edge (in sorted edge order) is n + i.
inline Graph subdivide(const Graph& base) {
  auto be = base.edges();
  std::vector<Edge> e;
  for (std::size_t i = 0; i < be.size(); ++i) {
    Vertex s = static_cast<Vertex>(base.size() + i);
    e.emplace_back(be[i].first, s);
    e.emplace_back(s, be[i].second);
  }
  return Graph(base.size() + be.size(), e);
}

/// Uniform-ish random simple connected d-regular graph by repeated random
/// pairing of half-edges.
inline Graph random_regular(std::size_t n, int d, std::mt19937_64& rng, std::size_t attempts = 100000) {
  if (d < 1 || n < static_cast<std::size_t>(d) + 1 || (n * static_cast<std::size_t>(d)) % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "no simple " + std::to_string(d) + "-regular graph on " +
                                                std::to_string(n) + " vertices");
  }
  std::vector<Vertex> stubs;
  for (std::size_t v = 0; v < n; ++v) {
    for (int i = 0; i < d; ++i) stubs.push_back(static_cast<Vertex>(v));
  }
  for (std::size_t a = 0; a < attempts; ++a) {
    detail::shuffle(stubs, rng);
    std::vector<Edge> e;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      Vertex u = std::min(stubs[i], stubs[i + 1]);
      Vertex v = std::max(stubs[i], stubs[i + 1]);
      if (u == v) {
        simple = false;
        break;
      }
      e.emplace_back(u, v);
    }
    if (!simple) continue;
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) continue;
    Graph g(n, e);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorKind::RejectionBudgetExceeded, "random regular pairing kept failing");
}

inline Generated generate_cycle(std::size_t len) {
  if (len < 6 || len % 2 != 0) throw Error(ErrorKind::InvalidArgument, "cycle length must be even and at least 6");
  return {cycle_graph(len), "even cycle C" + std::to_string(len) + ": bipartite, girth " + std::to_string(len)};
}

inline Generated generate_path(std::size_t len) {
  if (len < 1) throw Error(ErrorKind::InvalidArgument, "path needs at least one vertex");
  return {path_graph(len), "path on " + std::to_string(len) + " vertices: a tree"};
}

/// 1-subdivision of a random connected d-regular graph on base_n vertices.
inline Generated generate_subdivided(std::size_t base_n, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph base = random_regular(base_n, d, rng);
  Graph g = subdivide(base);
  return {g, "1-subdivision of a simple " + std::to_string(d) + "-regular graph: bipartite, triangle-free, C4-free"};
}

inline Generated generate_subdivided_k4() {
  return {subdivide(complete_graph(4)), "1-subdivision of K4: bipartite, triangle-free, C4-free"};
}

/// G(n, p) samples kept only when C4-free, prism-free and Berge (and
/// connected when asked).
inline Generated generate_filtered_random(std::size_t n, double p, std::uint64_t seed, bool connected = true,
                                          std::size_t budget = 200000) {
  if (n > kDefaultBergeCap) throw Error(ErrorKind::InvalidArgument, "filtered-random is limited by the Berge cap");
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (detail::coin(rng, p)) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
    Graph g(n, e);
    if (connected && !is_connected(g)) continue;
    if (find_c4(g) || find_prism(g) || !is_berge(g).berge) continue;
    return {g, "G(" + std::to_string(n) + ", p) sample certified C4-free, prism-free and Berge after " +
                   std::to_string(attempt + 1) + " draws"};
  }
  throw Error(ErrorKind::RejectionBudgetExceeded, "no class member within " + std::to_string(budget) + " draws");
}

/// Even cycle with gadgets hung on random cycle vertices: a leaf, a pendant
/// path of two vertices, or a pendant triangle. Every block is an even
/// cycle, an edge or a triangle.
inline Generated generate_decorated_cycle(std::size_t len, std::size_t gadgets, std::uint64_t seed) {
  if (len < 6 || len % 2 != 0) throw Error(ErrorKind::InvalidArgument, "cycle length must be even and at least 6");
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < len; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % len));
  Vertex next = static_cast<Vertex>(len);
  for (std::size_t i = 0; i < gadgets; ++i) {
    Vertex at = static_cast<Vertex>(detail::below(rng, len));
    switch (detail::below(rng, 3)) {
      case 0:
        e.emplace_back(at, next++);
        break;
      case 1:
        e.emplace_back(at, next);
        e.emplace_back(next, next + 1);
        next += 2;
        break;
      default:
        e.emplace_back(at, next);
        e.emplace_back(at, next + 1);
        e.emplace_back(next, next + 1);
        next += 2;
        break;
    }
  }
  return {Graph(static_cast<std::size_t>(next), e),
          "C" + std::to_string(len) + " with " + std::to_string(gadgets) +
              " pendant gadgets: blocks are an even cycle, edges and triangles"};
}

}  // namespace evenmwis
