#pragma once

#include <string>
#include <utility>
#include <vector>

#include "evenmwis/error.hpp"
#include "evenmwis/graph.hpp"
#include "evenmwis/star_separation.hpp"
#include "evenmwis/weights.hpp"

namespace evenmwis {

struct CentralBag {
  VertexSet vertices;
  /// Transferred weights over the full vertex range; zero outside the bag.
  Weights weights;
  /// (anchor, numerator units absorbed), in sequence order.
  std::vector<std::pair<Vertex, std::int64_t>> anchor_log;
  std::vector<StarSeparation> source;
  bool connected = true;
};

namespace detail {

inline bool induces_connected(const Graph& g, const VertexSet& s) { return component_lists(g, s).size() <= 1; }

}  // namespace detail

/// Central bag of a loosely laminar sequence inside `domain` (everything when
/// null): domain minus every A-part, with the weight of A_i ∖ ∪_{j<i} A_j
/// moved onto the anchor of S_i. Separations are used as given; pass them
/// already restricted to the domain.
inline CentralBag central_bag(const Graph& g, const Weights& w, const std::vector<StarSeparation>& seq,
                              const VertexSet* domain = nullptr) {
  const std::size_t n = g.size();
  VertexSet dom = domain != nullptr ? *domain : g.all();
  if (auto p = find_crossing_pair(seq)) {
    throw Error(ErrorKind::LaminarityViolation, "separations centered at " + std::to_string(seq[p->first].center) +
                                                    " and " + std::to_string(seq[p->second].center) + " cross");
  }
  CentralBag bag;
  bag.source = seq;
  VertexSet removed(n);
  for (const auto& s : seq) removed |= s.sep.a & dom;
  bag.vertices = dom - removed;

  std::vector<std::int64_t> num(n, 0);
  for (Vertex v : bag.vertices) num[static_cast<std::size_t>(v)] = w.numerator(v);
  VertexSet seen(n);
  VertexSet anchors(n);
  for (const auto& s : seq) {
    Vertex a = s.anchor;
    if (!bag.vertices.contains(a)) {
      throw Error(ErrorKind::AnchorOutsideBag, "anchor " + std::to_string(a) + " is not in the central bag");
    }
    if (anchors.contains(a)) {
      throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(a) + " anchors two separations");
    }
    anchors.insert(a);
    VertexSet fresh = (s.sep.a & dom) - seen;
    std::int64_t moved = w.sum_numerators(fresh);
    num[static_cast<std::size_t>(a)] += moved;
    bag.anchor_log.emplace_back(a, moved);
    seen |= fresh;
  }
  bag.weights = Weights(std::move(num), w.denominator());
  if (detail::induces_connected(g, dom)) bag.connected = detail::induces_connected(g, bag.vertices);
  return bag;
}

struct BagTower {
  VertexSet beta;
  VertexSet gamma;
  VertexSet core;
  VertexSet x1;
  VertexSet x2;
  Weights weights_gamma;
  Weights weights_beta;
  CentralBag gamma_bag;
  CentralBag beta_bag;
};

/// γ is the central bag of the X2 sequence under w; β is the central bag,
/// inside γ, of the X1 sequence restricted to γ under the γ weights.
/// Audits β = X (BagMismatch), bipartiteness of β, exact weight
/// conservation and connectivity.
inline BagTower star_free_bag(const Graph& g, const Weights& w, const Bipartition& bip) {
  BagTower t;
  t.x1 = bip.x1;
  t.x2 = bip.x2;
  t.gamma_bag = central_bag(g, w, bip.seq2);
  t.gamma = t.gamma_bag.vertices;
  t.weights_gamma = t.gamma_bag.weights;

  std::vector<StarSeparation> restricted;
  restricted.reserve(bip.seq1.size());
  for (const auto& s : bip.seq1) restricted.push_back({restrict_to(s.sep, t.gamma), s.center, s.anchor});
  t.beta_bag = central_bag(g, t.weights_gamma, restricted, &t.gamma);
  t.beta = t.beta_bag.vertices;
  t.weights_beta = t.beta_bag.weights;

  VertexSet x = bip.x1 | bip.x2;
  if (t.beta != x) {
    throw Error(ErrorKind::BagMismatch, "star-free bag has " + std::to_string(t.beta.count()) +
                                            " vertices but the star covering has " + std::to_string(x.count()));
  }
  for (Vertex u : t.x1) {
    for (Vertex v : g.neighbors(u)) {
      if (t.x1.contains(v)) throw Error(ErrorKind::NotBipartite, "edge inside X1 of the star-free bag");
    }
  }
  for (Vertex u : t.x2) {
    for (Vertex v : g.neighbors(u)) {
      if (t.x2.contains(v)) throw Error(ErrorKind::NotBipartite, "edge inside X2 of the star-free bag");
    }
  }
  if (t.weights_gamma.total() != w.total() || t.weights_beta.total() != w.total()) {
    throw Error(ErrorKind::BagMismatch, "transferred weight is not conserved");
  }
  if (!t.gamma_bag.connected || !t.beta_bag.connected) {
    throw Error(ErrorKind::BagMismatch, "central bag of a connected graph is disconnected");
  }
  t.core = t.beta;
  return t;
}

/// ℛ = β ∪ ⋃_{x2 ∈ X2} C_{x2}. Audits that every component D of G∖ℛ lies in
/// A_x for some x ∈ β and has |N(D)| ≤ δ+1; throws CoreAudit otherwise.
/// Also stores ℛ in the tower.
inline VertexSet core_bag(const Graph& g, BagTower& tower, const std::vector<StarSeparation>& seps) {
  VertexSet core = tower.beta;
  for (Vertex x : tower.x2) core |= seps[static_cast<std::size_t>(x)].sep.c;
  if (!core.is_subset_of(tower.gamma)) throw Error(ErrorKind::CoreAudit, "core bag is not inside the intermediate bag");

  std::vector<std::vector<Vertex>> containing(g.size());
  for (Vertex x : tower.beta) {
    for (Vertex u : seps[static_cast<std::size_t>(x)].sep.a) containing[static_cast<std::size_t>(u)].push_back(x);
  }
  const std::size_t limit = static_cast<std::size_t>(g.max_degree()) + 1;
  for (const auto& d : components(g, g.all() - core)) {
    Vertex u = d.first();
    bool inside = false;
    for (Vertex x : containing[static_cast<std::size_t>(u)]) {
      if (d.is_subset_of(seps[static_cast<std::size_t>(x)].sep.a)) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      throw Error(ErrorKind::CoreAudit,
                  "component containing " + std::to_string(u) + " lies in no A-part of a star-free bag vertex");
    }
    if (neighborhood(g, d).count() > limit) {
      throw Error(ErrorKind::CoreAudit, "component containing " + std::to_string(u) + " has more than " +
                                            std::to_string(limit) + " neighbors");
    }
  }
  tower.core = core;
  return core;
}

}  // namespace evenmwis
