#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "evenmwis/error.hpp"
#include "evenmwis/graph.hpp"
#include "evenmwis/weights.hpp"

namespace evenmwis {

/// (A, C, B) with A anticomplete to B.
struct Separation {
  VertexSet a;
  VertexSet c;
  VertexSet b;

  friend bool operator==(const Separation&, const Separation&) = default;
};

inline bool is_separation(const Graph& g, const Separation& s) {
  if (s.a.universe() != g.size() || s.c.universe() != g.size() || s.b.universe() != g.size()) return false;
  if (s.a.intersects(s.b) || s.a.intersects(s.c) || s.b.intersects(s.c)) return false;
  if ((s.a | s.b | s.c) != g.all()) return false;
  return !neighborhood(g, s.a).intersects(s.b);
}

/// (A ∩ H, C ∩ H, B ∩ H).
inline Separation restrict_to(const Separation& s, const VertexSet& h) { return {s.a & h, s.c & h, s.b & h}; }

struct StarSeparation {
  Separation sep;
  Vertex center = -1;
  Vertex anchor = -1;
};

/// B is the heaviest component of G∖N[v] (ties: the one holding the smallest
/// id), C is v together with its neighbors touching B, A is the rest.
inline StarSeparation canonical_star_separation(const Graph& g, const Weights& w, Vertex v) {
  VertexSet closed = closed_neighborhood(g, v);
  VertexSet rest = g.all() - closed;
  if (rest.empty()) return {{VertexSet(g.size()), std::move(closed), std::move(rest)}, v, v};
  VertexSet b(g.size());
  std::int64_t best = -1;
  for (const auto& comp : component_lists(g, rest)) {
    std::int64_t s = 0;
    for (Vertex x : comp) s += w.numerator(x);
    if (s > best) {
      best = s;
      b = VertexSet::of(g.size(), comp);
    }
  }
  VertexSet c(g.size());
  c.insert(v);
  for (Vertex u : g.neighbors(v)) {
    for (Vertex y : g.neighbors(u)) {
      if (b.contains(y)) {
        c.insert(u);
        break;
      }
    }
  }
  VertexSet a = g.all() - b - c;
  return {{std::move(a), std::move(c), std::move(b)}, v, v};
}

inline std::vector<StarSeparation> canonical_star_separations(const Graph& g, const Weights& w) {
  std::vector<StarSeparation> out;
  out.reserve(g.size());
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) out.push_back(canonical_star_separation(g, w, v));
  return out;
}

/// B_u = B_v, C_u∖{u} = C_v∖{v} and A_u∖{v} = A_v∖{u}.
inline bool are_star_twins(const StarSeparation& su, const StarSeparation& sv) {
  Vertex u = su.center;
  Vertex v = sv.center;
  if (u == v) throw Error(ErrorKind::InvalidArgument, "star twins need distinct centers");
  if (su.sep.b != sv.sep.b) return false;
  VertexSet cu = su.sep.c;
  cu.erase(u);
  VertexSet cv = sv.sep.c;
  cv.erase(v);
  if (cu != cv) return false;
  VertexSet au = su.sep.a;
  au.erase(v);
  VertexSet av = sv.sep.a;
  av.erase(u);
  return au == av;
}

inline bool is_loosely_noncrossing(const Separation& s1, const Separation& s2) {
  return !s1.a.intersects(s2.c) && !s2.a.intersects(s1.c);
}

/// The relation ≤_A as successor sets: successors[x] = {y : x ≤_A y}.
/// twins_of[x] lists the star twins of x in increasing order.
struct OrderRelation {
  std::vector<VertexSet> successors;
  std::vector<std::vector<Vertex>> twins_of;

  bool leq(Vertex x, Vertex y) const { return successors[static_cast<std::size_t>(x)].contains(y); }
  bool twins(Vertex x, Vertex y) const {
    const auto& t = twins_of[static_cast<std::size_t>(x)];
    return std::binary_search(t.begin(), t.end(), y);
  }
};

/// x ≤_A y iff x = y, or x and y are star twins with x < y, or they are not
/// twins and y ∈ A_x. Audits antisymmetry and transitivity; throws
/// OrderViolation with a witness when either fails.
inline OrderRelation build_order(const std::vector<StarSeparation>& seps) {
  const std::size_t n = seps.size();
  OrderRelation order;
  order.successors.reserve(n);
  order.twins_of.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& sx = seps[x];
    VertexSet succ = sx.sep.a;
    // a twin y has B_y = B_x and y ∉ B_y, so it lies in A_x ∪ C_x
    for (Vertex y : sx.sep.a | sx.sep.c) {
      if (static_cast<std::size_t>(y) == x || !are_star_twins(sx, seps[static_cast<std::size_t>(y)])) continue;
      order.twins_of[x].push_back(y);
      if (static_cast<std::size_t>(y) > x) {
        succ.insert(y);
      } else {
        succ.erase(y);
      }
    }
    succ.insert(static_cast<Vertex>(x));
    order.successors.push_back(std::move(succ));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (Vertex y : order.successors[x]) {
      if (static_cast<std::size_t>(y) == x) continue;
      const auto& sy = order.successors[static_cast<std::size_t>(y)];
      if (sy.contains(static_cast<Vertex>(x))) {
        throw Error(ErrorKind::OrderViolation, "antisymmetry fails: " + std::to_string(x) + " <= " +
                                                   std::to_string(y) + " <= " + std::to_string(x));
      }
      if (!sy.is_subset_of(order.successors[x])) {
        Vertex z = (sy - order.successors[x]).first();
        throw Error(ErrorKind::OrderViolation, "transitivity fails: " + std::to_string(x) + " <= " +
                                                   std::to_string(y) + " <= " + std::to_string(z));
      }
    }
  }
  return order;
}

inline OrderRelation build_order(const Graph& g, const Weights& w) {
  return build_order(canonical_star_separations(g, w));
}

/// ≤_A-minimal vertices.
inline VertexSet star_covering(const OrderRelation& order) {
  const std::size_t n = order.successors.size();
  VertexSet dominated(n);
  for (std::size_t x = 0; x < n; ++x) {
    VertexSet s = order.successors[x];
    s.erase(static_cast<Vertex>(x));
    dominated |= s;
  }
  return dominated.complement();
}

/// First pair (i, j) of positions with S_i, S_j crossing, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> find_crossing_pair(const std::vector<StarSeparation>& seq) {
  if (seq.empty()) return std::nullopt;
  VertexSet union_a(seq.front().sep.a.universe());
  for (const auto& s : seq) union_a |= s.sep.a;
  // A_i ∩ C_i = ∅ always, so C_i meeting ∪A means C_i meets some other A_j.
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq[i].sep.c.intersects(union_a)) continue;
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (j != i && seq[j].sep.a.intersects(seq[i].sep.c)) return std::pair{std::min(i, j), std::max(i, j)};
    }
  }
  return std::nullopt;
}

inline bool is_loosely_laminar(const std::vector<StarSeparation>& seq) { return !find_crossing_pair(seq); }

struct Bipartition {
  VertexSet x1;
  VertexSet x2;
  std::vector<StarSeparation> seq1;
  std::vector<StarSeparation> seq2;
};

/// BFS 2-coloring of G[x]; in every component the side holding the smallest
/// id is X1. Throws NotBipartite (odd cycle in the message) or
/// LaminarityViolation.
inline Bipartition bipartition_sequences(const Graph& g, const std::vector<StarSeparation>& seps, const VertexSet& x) {
  const std::size_t n = g.size();
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (Vertex s : x) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (!x.contains(v)) continue;
        auto& cv = color[static_cast<std::size_t>(v)];
        if (cv == -1) {
          cv = 1 - color[static_cast<std::size_t>(u)];
          parent[static_cast<std::size_t>(v)] = u;
          depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        } else if (cv == color[static_cast<std::size_t>(u)]) {
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{v};
          while (left.back() != right.back()) {
            if (depth[static_cast<std::size_t>(left.back())] >= depth[static_cast<std::size_t>(right.back())]) {
              left.push_back(parent[static_cast<std::size_t>(left.back())]);
            } else {
              right.push_back(parent[static_cast<std::size_t>(right.back())]);
            }
          }
          right.pop_back();
          std::string cyc;
          for (Vertex t : left) cyc += std::to_string(t) + " ";
          for (auto it = right.rbegin(); it != right.rend(); ++it) cyc += std::to_string(*it) + " ";
          cyc.pop_back();
          throw Error(ErrorKind::NotBipartite, "odd cycle: " + cyc);
        }
      }
    }
  }
  Bipartition out{VertexSet(n), VertexSet(n), {}, {}};
  for (Vertex v : x) {
    if (color[static_cast<std::size_t>(v)] == 0) {
      out.x1.insert(v);
      out.seq1.push_back(seps[static_cast<std::size_t>(v)]);
    } else {
      out.x2.insert(v);
      out.seq2.push_back(seps[static_cast<std::size_t>(v)]);
    }
  }
  for (const auto* seq : {&out.seq1, &out.seq2}) {
    if (auto p = find_crossing_pair(*seq)) {
      throw Error(ErrorKind::LaminarityViolation,
                  "separations centered at " + std::to_string((*seq)[p->first].center) + " and " +
                      std::to_string((*seq)[p->second].center) + " cross");
    }
  }
  return out;
}

}  // namespace evenmwis
