#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "evenmwis/bags.hpp"
#include "evenmwis/error.hpp"
#include "evenmwis/graph.hpp"
#include "evenmwis/recognition.hpp"
#include "evenmwis/star_separation.hpp"
#include "evenmwis/weights.hpp"

namespace evenmwis {

struct IteratedEvenSet {
  std::vector<VertexSet> layers;

  std::size_t size() const { return layers.size(); }
  VertexSet union_of(std::size_t universe) const {
    VertexSet u(universe);
    for (const auto& l : layers) u |= l;
    return u;
  }
};

struct SeparatorComponent {
  VertexSet vertices;
  VertexSet neighborhood;
};

enum class Branch { Ball = 1, NoBalanced = 2 };

struct EvenSetSeparator {
  IteratedEvenSet iterated;
  Fraction c{3, 5};
  std::size_t d = 0;
  Branch branch = Branch::NoBalanced;
  std::vector<SeparatorComponent> components;

  std::size_t k() const { return iterated.size(); }
};

/// Intermediate products of the no-balanced-separator pipeline, kept for
/// audits and dumps.
struct PipelineTrace {
  std::vector<StarSeparation> separations;
  OrderRelation order;
  VertexSet covering;
  Bipartition bipartition;
  BagTower tower;
  std::vector<Vertex> linear_extension;
  std::vector<VertexSet> representation;
};

/// Kahn topological sort of the ≤_A DAG, always taking the smallest
/// available id.
inline std::vector<Vertex> linear_extension(const OrderRelation& order) {
  const std::size_t n = order.successors.size();
  std::vector<std::size_t> indeg(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (Vertex y : order.successors[x]) {
      if (static_cast<std::size_t>(y) != x) ++indeg[static_cast<std::size_t>(y)];
    }
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push(static_cast<Vertex>(v));
  }
  std::vector<Vertex> out;
  out.reserve(n);
  while (!ready.empty()) {
    Vertex x = ready.top();
    ready.pop();
    out.push_back(x);
    for (Vertex y : order.successors[static_cast<std::size_t>(x)]) {
      if (y != x && --indeg[static_cast<std::size_t>(y)] == 0) ready.push(y);
    }
  }
  if (out.size() != n) throw Error(ErrorKind::OrderViolation, "≤_A contains a cycle");
  return out;
}

/// Layers over ℛ∖β: v goes to layer i (1-based) where i is the largest rank
/// of v, under ℓ, inside any D_x = A_x ∩ ℛ with x ∈ X1. Trailing empty
/// layers are dropped.
inline std::vector<VertexSet> even_set_representation(const Graph& g, const BagTower& tower,
                                                      const std::vector<StarSeparation>& seps,
                                                      const std::vector<Vertex>& ell, int delta) {
  const std::size_t n = g.size();
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t i = 0; i < ell.size(); ++i) pos[static_cast<std::size_t>(ell[i])] = i;
  const std::size_t cap = static_cast<std::size_t>(delta) * static_cast<std::size_t>(delta);
  std::vector<std::size_t> layer(n, 0);
  for (Vertex x : tower.x1) {
    std::vector<Vertex> d = (seps[static_cast<std::size_t>(x)].sep.a & tower.core).to_vector();
    if (d.size() > cap) {
      throw Error(ErrorKind::LayerOverflow, "A-part of " + std::to_string(x) + " meets the core bag in " +
                                                std::to_string(d.size()) + " > " + std::to_string(cap) + " vertices");
    }
    std::sort(d.begin(), d.end(), [&](Vertex a, Vertex b) { return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]; });
    for (std::size_t i = 0; i < d.size(); ++i) {
      auto& l = layer[static_cast<std::size_t>(d[i])];
      l = std::max(l, i + 1);
    }
  }
  std::size_t top = 0;
  for (std::size_t v = 0; v < n; ++v) top = std::max(top, layer[v]);
  std::vector<VertexSet> out(top, VertexSet(n));
  for (std::size_t v = 0; v < n; ++v) {
    if (layer[v] > 0) out[layer[v] - 1].insert(static_cast<Vertex>(v));
  }
  VertexSet covered(n);
  for (const auto& l : out) covered |= l;
  if (covered != tower.core - tower.beta) {
    throw Error(ErrorKind::CoreAudit, "layers do not cover the core bag minus the star-free bag");
  }
  return out;
}

inline std::vector<SeparatorComponent> separator_components(const Graph& g, const VertexSet& removed) {
  std::vector<SeparatorComponent> out;
  for (auto& d : components(g, g.all() - removed)) {
    VertexSet nb = neighborhood(g, d);
    out.push_back({std::move(d), std::move(nb)});
  }
  return out;
}

/// Separations → ≤_A → star covering → bipartition → bag tower → layers.
/// The layers are (X1, X2, L1, ...), empty ones omitted; d = δ+1.
inline EvenSetSeparator build_separator_no_balanced(const Graph& g, const Weights& w, const Fraction& c, int delta,
                                                    PipelineTrace* trace = nullptr) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "separator construction needs a connected graph");
  PipelineTrace local;
  PipelineTrace& t = trace != nullptr ? *trace : local;
  t.separations = canonical_star_separations(g, w);
  t.order = build_order(t.separations);
  t.covering = star_covering(t.order);
  t.bipartition = bipartition_sequences(g, t.separations, t.covering);
  t.tower = star_free_bag(g, w, t.bipartition);
  core_bag(g, t.tower, t.separations);
  t.linear_extension = linear_extension(t.order);
  t.representation = even_set_representation(g, t.tower, t.separations, t.linear_extension, delta);

  EvenSetSeparator sep;
  sep.branch = Branch::NoBalanced;
  sep.c = c;
  sep.d = static_cast<std::size_t>(delta) + 1;
  for (const auto* l : {&t.bipartition.x1, &t.bipartition.x2}) {
    if (!l->empty()) sep.iterated.layers.push_back(*l);
  }
  for (const auto& l : t.representation) sep.iterated.layers.push_back(l);
  sep.components = separator_components(g, sep.iterated.union_of(g.size()));
  return sep;
}

/// 1 + δ + ... + δ^(δ+3), saturating at SIZE_MAX.
inline std::size_t ball_size_bound(int delta) {
  std::size_t total = 0;
  std::size_t term = 1;
  const std::size_t dl = static_cast<std::size_t>(delta);
  for (int i = 0; i <= delta + 3; ++i) {
    if (total > std::numeric_limits<std::size_t>::max() - term) return std::numeric_limits<std::size_t>::max();
    total += term;
    if (dl != 0 && term > std::numeric_limits<std::size_t>::max() / dl) {
      term = std::numeric_limits<std::size_t>::max();
    } else {
      term *= dl;
    }
  }
  return total;
}

/// Smallest v whose radius-(δ+3) ball leaves only components of weight ≤ c.
inline std::optional<Vertex> find_balanced_ball(const Graph& g, const Weights& w, const Fraction& c, int delta) {
  for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
    VertexSet x = ball(g, v, static_cast<std::size_t>(delta) + 3);
    bool ok = true;
    for (const auto& comp : component_lists(g, g.all() - x)) {
      std::int64_t s = 0;
      for (Vertex u : comp) s += w.numerator(u);
      if (!w.at_most(s, c)) {
        ok = false;
        break;
      }
    }
    if (ok) return v;
  }
  return std::nullopt;
}

/// Branch 1: singleton layers over the first balanced radius-(δ+3) ball.
/// Branch 2: the no-balanced-separator pipeline.
inline EvenSetSeparator tame_separator(const Graph& g, const Weights& w, const Fraction& c, int delta,
                                       PipelineTrace* trace = nullptr) {
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "tame separator needs a connected graph");
  if (!w.is_uniform()) throw Error(ErrorKind::NotUniform, "tame separator needs a uniform weight function");
  if (c < Fraction(1, 2) || c >= Fraction(1)) throw Error(ErrorKind::InvalidArgument, "c must lie in [1/2, 1)");
  if (auto v = find_balanced_ball(g, w, c, delta)) {
    EvenSetSeparator sep;
    sep.branch = Branch::Ball;
    sep.c = c;
    sep.d = ball_size_bound(delta);
    VertexSet x = ball(g, *v, static_cast<std::size_t>(delta) + 3);
    for (Vertex u : x) sep.iterated.layers.push_back(VertexSet(g.size(), {u}));
    sep.components = separator_components(g, x);
    return sep;
  }
  return build_separator_no_balanced(g, w, c, delta, trace);
}

enum class ViolationKind { Overlap, NotIndependent, NeighborhoodTooLarge, ComponentTooHeavy, ComponentMismatch, OddPair, EvennessUnknown };

constexpr std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::NotIndependent: return "not-independent";
    case ViolationKind::NeighborhoodTooLarge: return "neighborhood-too-large";
    case ViolationKind::ComponentTooHeavy: return "component-too-heavy";
    case ViolationKind::ComponentMismatch: return "component-mismatch";
    case ViolationKind::OddPair: return "odd-pair";
    case ViolationKind::EvennessUnknown: return "evenness-unknown";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::size_t layer = 0;  // 1-based; 0 when not tied to a layer
  std::vector<Vertex> vertices;
};

struct SeparatorReport {
  std::vector<Violation> violations;
  std::size_t pairs_checked = 0;
  bool evenness_checked = false;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == k; });
  }
};

/// Polynomial audits (disjoint layers, each layer independent, component
/// bounds |N(D)| ≤ d and w(D) ≤ c, stored components match the residual)
/// plus, with `full_evenness`, the even-pair oracle on every pair of every
/// layer inside its residual graph.
inline SeparatorReport verify_separator(const Graph& g, const Weights& w, const EvenSetSeparator& sep,
                                        bool full_evenness = false, std::size_t path_cap = kDefaultPathCap) {
  SeparatorReport r;
  const std::size_t n = g.size();
  VertexSet used(n);
  for (std::size_t i = 0; i < sep.iterated.layers.size(); ++i) {
    const auto& l = sep.iterated.layers[i];
    if (l.universe() != n) throw Error(ErrorKind::InvalidArgument, "layer over the wrong vertex range");
    if (l.intersects(used)) r.violations.push_back({ViolationKind::Overlap, i + 1, (l & used).to_vector()});
    for (Vertex u : l) {
      for (Vertex v : g.neighbors(u)) {
        if (u < v && l.contains(v) && !used.contains(u) && !used.contains(v)) {
          r.violations.push_back({ViolationKind::NotIndependent, i + 1, {u, v}});
        }
      }
    }
    used |= l;
  }
  auto comps = separator_components(g, used);
  for (const auto& d : comps) {
    if (d.neighborhood.count() > sep.d) {
      r.violations.push_back({ViolationKind::NeighborhoodTooLarge, 0, d.vertices.to_vector()});
    }
    if (!w.sum_at_most(d.vertices, sep.c)) {
      r.violations.push_back({ViolationKind::ComponentTooHeavy, 0, d.vertices.to_vector()});
    }
  }
  bool same = comps.size() == sep.components.size();
  for (std::size_t i = 0; same && i < comps.size(); ++i) {
    same = comps[i].vertices == sep.components[i].vertices && comps[i].neighborhood == sep.components[i].neighborhood;
  }
  if (!same) r.violations.push_back({ViolationKind::ComponentMismatch, 0, {}});

  if (full_evenness) {
    r.evenness_checked = true;
    VertexSet residual = g.all();
    for (std::size_t i = 0; i < sep.iterated.layers.size(); ++i) {
      auto verts = sep.iterated.layers[i].to_vector();
      for (std::size_t a = 0; a < verts.size(); ++a) {
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
          if (!residual.contains(verts[a]) || !residual.contains(verts[b])) continue;
          ++r.pairs_checked;
          try {
            if (!is_even_pair(g, verts[a], verts[b], path_cap, &residual)) {
              r.violations.push_back({ViolationKind::OddPair, i + 1, {verts[a], verts[b]}});
            }
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::Truncated) throw;
            r.violations.push_back({ViolationKind::EvennessUnknown, i + 1, {verts[a], verts[b]}});
          }
        }
      }
      residual -= sep.iterated.layers[i];
    }
  }
  return r;
}

inline SeparatorReport verify_separator(const Graph& g, const EvenSetSeparator& sep, bool full_evenness = false,
                                        std::size_t path_cap = kDefaultPathCap) {
  return verify_separator(g, Weights::uniform(g.size()), sep, full_evenness, path_cap);
}

}  // namespace evenmwis
