#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evenmwis/error.hpp"
#include "evenmwis/vertex_set.hpp"

namespace evenmwis {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1. Neighbor lists are
/// sorted; vertex ids double as the fixed vertex ordering used throughout.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
      }
      if (u == v) throw Error(ErrorKind::LoopOrMultiEdge, "self-loop at vertex " + std::to_string(u));
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto& a = adj_[v];
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
        throw Error(ErrorKind::LoopOrMultiEdge, "duplicate edge at vertex " + std::to_string(v));
      }
      max_degree_ = std::max(max_degree_, static_cast<int>(a.size()));
      edge_count_ += a.size();
    }
    edge_count_ /= 2;
  }

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  int max_degree() const { return max_degree_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
      }
    }
    return out;
  }

  VertexSet all() const { return VertexSet::full(size()); }
  VertexSet empty_set() const { return VertexSet(size()); }

  Graph complement() const {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t v = u + 1; v < size(); ++v) {
        if (!adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
          e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
      }
    }
    return Graph(size(), e);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
  int max_degree_ = 0;
};

/// G[keep] relabelled to 0..|keep|-1 in increasing original order;
/// `original[i]` is the id of new vertex i in the parent graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.original = keep.to_vector();
  std::vector<Vertex> index(g.size(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) index[static_cast<std::size_t>(out.original[i])] = static_cast<Vertex>(i);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (Vertex u : g.neighbors(out.original[i])) {
      Vertex j = index[static_cast<std::size_t>(u)];
      if (j > static_cast<Vertex>(i)) e.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  out.graph = Graph(out.original.size(), e);
  return out;
}

/// Connected components of G[alive] as sorted vertex lists, ordered by their
/// smallest member.
inline std::vector<std::vector<Vertex>> component_lists(const Graph& g, const VertexSet& alive) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> stack;
  for (Vertex s : alive) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp;
    seen[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (!seen[static_cast<std::size_t>(y)] && alive.contains(y)) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g, const VertexSet& alive) {
  std::vector<VertexSet> out;
  for (const auto& c : component_lists(g, alive)) out.push_back(VertexSet::of(g.size(), c));
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.size() == 0 || component_lists(g, g.all()).size() == 1;
}

/// All vertices at BFS distance at most `radius` from v.
inline VertexSet ball(const Graph& g, Vertex v, std::size_t radius) {
  VertexSet out(g.size());
  std::vector<std::size_t> dist(g.size(), SIZE_MAX);
  std::deque<Vertex> queue{v};
  dist[static_cast<std::size_t>(v)] = 0;
  out.insert(v);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (dist[static_cast<std::size_t>(x)] == radius) continue;
    for (Vertex y : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] == SIZE_MAX) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

/// N(X): vertices outside x with at least one neighbor in x.
inline VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out(g.size());
  for (Vertex v : x) {
    for (Vertex u : g.neighbors(v)) {
      if (!x.contains(u)) out.insert(u);
    }
  }
  return out;
}

/// N[X] = N(X) ∪ X.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) { return neighborhood(g, x) | x; }

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet out(g.size());
  out.insert(v);
  for (Vertex u : g.neighbors(v)) out.insert(u);
  return out;
}

inline bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    for (Vertex u : g.neighbors(v)) {
      if (s.contains(u)) return false;
    }
  }
  return true;
}

struct InducedPaths {
  std::vector<std::vector<Vertex>> paths;
  bool truncated = false;
};

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// Calls `visit(path)` for every chordless u–v path in G[alive] (all of G
/// when `alive` is null). `visit` returns false to stop early. Returns false
/// iff the walk was stopped.
template <typename Visitor>
bool for_each_induced_path(const Graph& g, Vertex u, Vertex v, const VertexSet* alive, Visitor&& visit) {
  if (u == v) throw Error(ErrorKind::InvalidArgument, "induced path endpoints must differ");
  if (alive != nullptr && (!alive->contains(u) || !alive->contains(v))) return true;

  // touched[x] counts path vertices p with x in N[p]; a candidate extends the
  // path only when it sees the current end and nothing else.
  std::vector<int> touched(g.size(), 0);
  std::vector<Vertex> path{u};
  auto mark = [&](Vertex x, int delta) {
    touched[static_cast<std::size_t>(x)] += delta;
    for (Vertex y : g.neighbors(x)) touched[static_cast<std::size_t>(y)] += delta;
  };

  struct Frame {
    Vertex end;
    std::size_t next;
  };
  std::vector<Frame> stack{{u, 0}};
  mark(u, 1);
  while (!stack.empty()) {
    auto& top = stack.back();
    auto nbrs = g.neighbors(top.end);
    if (top.next >= nbrs.size()) {
      mark(top.end, -1);
      path.pop_back();
      stack.pop_back();
      continue;
    }
    Vertex x;
    if (g.adjacent(top.end, v)) {
      // any other extension would give v a chord
      x = v;
      top.next = nbrs.size();
    } else {
      x = nbrs[top.next++];
    }
    if (alive != nullptr && !alive->contains(x)) continue;
    if (touched[static_cast<std::size_t>(x)] != 1) continue;
    if (x == v) {
      path.push_back(v);
      bool keep_going = visit(std::as_const(path));
      path.pop_back();
      if (!keep_going) return false;
      continue;
    }
    path.push_back(x);
    mark(x, 1);
    stack.push_back({x, 0});
  }
  return true;
}

/// Every chordless u–v path (vertex sequences from u to v; length is the edge
/// count, i.e. size()-1). Exponential; stops after `cap` paths and reports
/// truncation.
inline InducedPaths enumerate_induced_paths(const Graph& g, Vertex u, Vertex v, std::size_t cap = kDefaultPathCap,
                                            const VertexSet* alive = nullptr) {
  if (cap == 0) throw Error(ErrorKind::InvalidArgument, "path cap must be positive");
  InducedPaths out;
  for_each_induced_path(g, u, v, alive, [&](const std::vector<Vertex>& p) {
    out.paths.push_back(p);
    if (out.paths.size() >= cap) {
      out.truncated = true;
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace evenmwis
