#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "evenmwis/error.hpp"
#include "evenmwis/even_separator.hpp"
#include "evenmwis/graph.hpp"
#include "evenmwis/sfm.hpp"
#include "evenmwis/weights.hpp"

namespace evenmwis {

struct SolverConfig {
  Fraction c{3, 5};
  std::size_t base_threshold = 20;
  /// SFM grounds up to this size are minimized by enumeration, larger ones
  /// by the minimum-norm point algorithm.
  std::size_t brute_sfm_limit = 8;
  /// Component tables are filled eagerly when |N(D)| is at most this,
  /// on demand otherwise.
  std::size_t eager_table_limit = 16;
  /// Random submodularity spot checks per SFM call (0 disables).
  std::size_t spot_checks = 0;
  std::size_t memo_limit = 1U << 18;
  MnpOptions mnp;
};

struct SolverStats {
  int branch = 0;  // top-level separator branch; 0 when solved by brute force
  std::size_t depth = 0;
  std::size_t sfm_calls = 0;
  std::size_t oracle_calls = 0;
  std::size_t brute_force_calls = 0;
  std::size_t separators = 0;
  std::size_t table_entries = 0;
  std::size_t z = 0;  // reported only; drives nothing
};

struct SolverResult {
  std::int64_t weight = 0;
  VertexSet solution;
  SolverStats stats;
};

inline constexpr std::size_t kBruteForceLimit = 30;

namespace detail {

inline void check_weights(const Graph& g, const std::vector<std::int64_t>& w) {
  if (w.size() != g.size()) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(g.size()) + " weights, got " +
                                                std::to_string(w.size()));
  }
  for (auto x : w) {
    if (x < 0) throw Error(ErrorKind::InvalidWeights, "weights must be nonnegative");
  }
}

/// Branch and bound in lexicographic pre-order of vertex sets. The first
/// optimum met is the lexicographically smallest one; subtrees whose
/// clique-cover bound cannot beat it strictly are cut.
inline std::pair<std::int64_t, std::uint64_t> brute_mwis_masks(const Graph& g, const std::vector<std::int64_t>& w) {
  const std::size_t n = g.size();
  std::vector<std::uint64_t> nbr(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) nbr[v] |= std::uint64_t{1} << u;
  }
  auto bound = [&](std::uint64_t cand) {
    std::int64_t b = 0;
    while (cand != 0) {
      int v = std::countr_zero(cand);
      std::int64_t top = w[static_cast<std::size_t>(v)];
      std::uint64_t common = cand & nbr[static_cast<std::size_t>(v)];
      cand &= ~(std::uint64_t{1} << v);
      while (common != 0) {
        int u = std::countr_zero(common);
        top = std::max(top, w[static_cast<std::size_t>(u)]);
        cand &= ~(std::uint64_t{1} << u);
        common &= nbr[static_cast<std::size_t>(u)];
      }
      b += top;
    }
    return b;
  };
  std::int64_t best = -1;
  std::uint64_t best_mask = 0;
  auto dfs = [&](auto&& self, std::uint64_t chosen, std::int64_t weight, std::uint64_t cand) -> void {
    if (weight > best) {
      best = weight;
      best_mask = chosen;
    }
    while (cand != 0) {
      if (weight + bound(cand) <= best) return;
      int v = std::countr_zero(cand);
      cand &= ~(std::uint64_t{1} << v);
      self(self, chosen | (std::uint64_t{1} << v), weight + w[static_cast<std::size_t>(v)],
           cand & ~nbr[static_cast<std::size_t>(v)]);
    }
  };
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  dfs(dfs, 0, 0, all);
  return {best, best_mask};
}

inline std::size_t compute_z(const Fraction& c, std::size_t d) {
  // smallest z with c^((z-1)/(d+1)) <= 1/2
  long double need = static_cast<long double>(d + 1) * std::log(2.0L) /
                     std::log(static_cast<long double>(c.denominator()) / static_cast<long double>(c.numerator()));
  if (!(need < 1e15L)) return SIZE_MAX;
  return 1 + static_cast<std::size_t>(std::ceil(need - 1e-12L));
}

}  // namespace detail

/// Exact MWIS by branch and bound (n ≤ 30); the lexicographically smallest
/// optimal set is returned.
inline SolverResult brute_force_mwis(const Graph& g, const std::vector<std::int64_t>& w) {
  detail::check_weights(g, w);
  if (g.size() > kBruteForceLimit) {
    throw Error(ErrorKind::InstanceTooLarge, "brute-force MWIS limited to " + std::to_string(kBruteForceLimit) +
                                                 " vertices, got " + std::to_string(g.size()));
  }
  auto [best, mask] = detail::brute_mwis_masks(g, w);
  SolverResult r;
  r.weight = best;
  r.solution = VertexSet(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    if ((mask >> v) & 1U) r.solution.insert(static_cast<Vertex>(v));
  }
  r.stats.brute_force_calls = 1;
  return r;
}

inline bool verify_solution(const Graph& g, const std::vector<std::int64_t>& w, const SolverResult& r) {
  if (r.solution.universe() != g.size() || w.size() != g.size()) return false;
  if (!is_independent(g, r.solution)) return false;
  std::int64_t total = 0;
  for (Vertex v : r.solution) total += w[static_cast<std::size_t>(v)];
  return total == r.weight;
}

class Solver;

/// g_D(A) = α(D ∖ N(A)) for the components D of G∖L, keyed by the vertex
/// set D ∖ N(A) (distinct A with the same residual share one entry).
struct ComponentTable {
  struct Entry {
    std::int64_t value = 0;
    VertexSet witness;
  };
  VertexSet vertices;
  VertexSet neighborhood;
  std::unordered_map<VertexSet, Entry, VertexSetHash> entries;
};

/// Evaluates α(G[R]) for residual sets R reachable from the separator
/// recursion: R is split into pieces where the alive part of each component
/// D counts as one unit; a piece with layer vertices is resolved by SFM over
/// its first layer, a piece inside one D by the table.
class LayeredEvaluator {
 public:
  LayeredEvaluator(Solver& solver, const Graph& g, const std::vector<std::int64_t>& w, const EvenSetSeparator& sep,
                   std::size_t depth);

  std::int64_t value(const VertexSet& r);
  VertexSet witness(const VertexSet& r);

  /// f_i(A, B) = w(A) + α of the layers after L_{k−i} plus the components,
  /// minus N(A ∪ B). Layers are 1-based; A ⊆ L_{k−i} (A = ∅ allowed when
  /// i = k).
  std::int64_t f(std::size_t i, const VertexSet& a, const VertexSet& b);

  const std::vector<ComponentTable>& tables() const { return tables_; }
  const EvenSetSeparator& separator() const { return sep_; }

 private:
  struct Piece {
    VertexSet verts;
    std::vector<int> tables;
    bool has_layer = false;
  };
  struct Memo {
    std::int64_t value = 0;
    std::vector<Vertex> argmin;
  };

  std::vector<Piece> split(const VertexSet& r) const;
  void fill_table(std::size_t i);
  const ComponentTable::Entry& lookup(std::size_t i, const VertexSet& key);
  std::pair<std::int64_t, std::vector<Vertex>> resolve(const VertexSet& k);

  Solver& solver_;
  const Graph& g_;
  const std::vector<std::int64_t>& w_;
  EvenSetSeparator sep_;
  std::size_t depth_;
  std::vector<int> layer_of_;
  std::vector<int> comp_of_;
  std::vector<ComponentTable> tables_;
  std::unordered_map<VertexSet, Memo, VertexSetHash> memo_;
};

class Solver {
 public:
  explicit Solver(SolverConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.c <= Fraction(1, 2) || cfg_.c >= Fraction(1)) {
      throw Error(ErrorKind::InvalidArgument, "c must lie strictly between 1/2 and 1");
    }
  }

  const SolverConfig& config() const { return cfg_; }
  SolverStats& stats() { return stats_; }

  /// MWIS of g; returns (weight, solution in g's ids).
  std::pair<std::int64_t, VertexSet> solve_graph(const Graph& g, const std::vector<std::int64_t>& w, std::size_t depth) {
    stats_.depth = std::max(stats_.depth, depth);
    VertexSet sol(g.size());
    std::int64_t total = 0;
    auto comps = component_lists(g, g.all());
    if (comps.size() == 1) return solve_connected(g, w, depth);
    for (const auto& c : comps) {
      auto [val, part] = solve_subset(g, w, VertexSet::of(g.size(), c), depth);
      total += val;
      sol |= part;
    }
    return {total, sol};
  }

  /// MWIS of g[s], reported in g's ids.
  std::pair<std::int64_t, VertexSet> solve_subset(const Graph& g, const std::vector<std::int64_t>& w,
                                                  const VertexSet& s, std::size_t depth) {
    VertexSet out(g.size());
    if (s.empty()) return {0, out};
    if (s.count() == 1) {
      Vertex v = s.first();
      out.insert(v);
      return {w[static_cast<std::size_t>(v)], out};
    }
    auto sub = induced_subgraph(g, s);
    std::vector<std::int64_t> sw;
    sw.reserve(sub.original.size());
    for (Vertex v : sub.original) sw.push_back(w[static_cast<std::size_t>(v)]);
    auto [val, local] = solve_graph(sub.graph, sw, depth);
    for (Vertex v : local) out.insert(sub.original[static_cast<std::size_t>(v)]);
    return {val, out};
  }

  /// Separator with polynomial audits; anything off is reported as
  /// evidence that the input is outside the class.
  EvenSetSeparator separator_for(const Graph& g) {
    Weights uniform = Weights::uniform(g.size());
    EvenSetSeparator sep;
    try {
      sep = tame_separator(g, uniform, cfg_.c, g.max_degree());
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::OrderViolation:
        case ErrorKind::NotBipartite:
        case ErrorKind::LaminarityViolation:
        case ErrorKind::AnchorOutsideBag:
        case ErrorKind::BagMismatch:
        case ErrorKind::CoreAudit:
        case ErrorKind::LayerOverflow:
          throw Error(ErrorKind::NotPawFriendlyEvidence, std::string("separator construction failed: ") + e.what());
        default:
          throw;
      }
    }
    auto report = verify_separator(g, uniform, sep, false);
    if (!report.ok()) {
      throw Error(ErrorKind::NotPawFriendlyEvidence,
                  "separator failed its audit: " + std::string(to_string(report.violations.front().kind)));
    }
    for (const auto& d : sep.components) {
      if (d.vertices.count() >= g.size()) {
        throw Error(ErrorKind::NotPawFriendlyEvidence, "separator component does not shrink the instance");
      }
    }
    ++stats_.separators;
    if (stats_.branch == 0) {
      stats_.branch = static_cast<int>(sep.branch);
      stats_.z = detail::compute_z(cfg_.c, sep.d);
    }
    return sep;
  }

  SfmResult run_sfm(const SfmOracle& oracle) {
    ++stats_.sfm_calls;
    if (cfg_.spot_checks > 0 && oracle.size() >= 2) {
      auto rep = check_submodularity(oracle, SubmodularityMode::sampled(cfg_.spot_checks, stats_.sfm_calls));
      if (!rep.ok()) throw Error(ErrorKind::NotPawFriendlyEvidence, "inner set function is not submodular");
    }
    try {
      auto r = minimize(oracle, cfg_.brute_sfm_limit, cfg_.mnp);
      stats_.oracle_calls += r.oracle_calls;
      return r;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonConvergence) {
        throw Error(ErrorKind::NotPawFriendlyEvidence, std::string("SFM failed: ") + e.what());
      }
      throw;
    }
  }

 private:
  std::pair<std::int64_t, VertexSet> solve_connected(const Graph& g, const std::vector<std::int64_t>& w,
                                                     std::size_t depth) {
    if (g.size() <= cfg_.base_threshold || g.size() <= 1) {
      ++stats_.brute_force_calls;
      auto r = brute_force_mwis(g, w);
      return {r.weight, r.solution};
    }
    EvenSetSeparator sep = separator_for(g);
    LayeredEvaluator ev(*this, g, w, sep, depth);
    auto all = g.all();
    std::int64_t val = ev.value(all);
    VertexSet sol = ev.witness(all);
    return {val, sol};
  }

  SolverConfig cfg_;
  SolverStats stats_;
};

inline LayeredEvaluator::LayeredEvaluator(Solver& solver, const Graph& g, const std::vector<std::int64_t>& w,
                                          const EvenSetSeparator& sep, std::size_t depth)
    : solver_(solver), g_(g), w_(w), sep_(sep), depth_(depth), layer_of_(g.size(), -1), comp_of_(g.size(), -1) {
  for (std::size_t i = 0; i < sep_.iterated.layers.size(); ++i) {
    for (Vertex v : sep_.iterated.layers[i]) layer_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < sep_.components.size(); ++i) {
    const auto& d = sep_.components[i];
    if (d.neighborhood.count() > sep_.d) {
      throw Error(ErrorKind::NotPawFriendlyEvidence, "component neighborhood exceeds the separator bound");
    }
    for (Vertex v : d.vertices) comp_of_[static_cast<std::size_t>(v)] = static_cast<int>(i);
    tables_.push_back({d.vertices, d.neighborhood, {}});
  }
  for (std::size_t i = 0; i < tables_.size(); ++i) {
    if (tables_[i].neighborhood.count() <= solver_.config().eager_table_limit) fill_table(i);
  }
}

inline void LayeredEvaluator::fill_table(std::size_t i) {
  auto& t = tables_[i];
  std::vector<Vertex> nb = t.neighborhood.to_vector();
  VertexSet a(g_.size());
  // independent subsets only: two adjacent chosen vertices never occur
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == nb.size()) {
      VertexSet key = t.vertices - neighborhood(g_, a);
      lookup(i, key);
      return;
    }
    self(self, pos + 1);
    Vertex v = nb[pos];
    for (Vertex u : g_.neighbors(v)) {
      if (a.contains(u)) return;
    }
    a.insert(v);
    self(self, pos + 1);
    a.erase(v);
  };
  rec(rec, 0);
}

inline const ComponentTable::Entry& LayeredEvaluator::lookup(std::size_t i, const VertexSet& key) {
  auto& t = tables_[i];
  auto it = t.entries.find(key);
  if (it != t.entries.end()) return it->second;
  auto [val, wit] = solver_.solve_subset(g_, w_, key, depth_ + 1);
  ++solver_.stats().table_entries;
  return t.entries.emplace(key, ComponentTable::Entry{val, std::move(wit)}).first->second;
}

inline std::vector<LayeredEvaluator::Piece> LayeredEvaluator::split(const VertexSet& r) const {
  std::vector<Piece> out;
  VertexSet left = r;
  std::vector<Vertex> stack;
  while (!left.empty()) {
    Piece p{VertexSet(g_.size()), {}, false};
    auto take = [&](Vertex v) {
      left.erase(v);
      p.verts.insert(v);
      stack.push_back(v);
    };
    take(left.first());
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      int ci = comp_of_[static_cast<std::size_t>(v)];
      if (ci >= 0) {
        if (std::find(p.tables.begin(), p.tables.end(), ci) == p.tables.end()) {
          p.tables.push_back(ci);
          for (Vertex u : tables_[static_cast<std::size_t>(ci)].vertices & left) take(u);
        }
      } else {
        p.has_layer = true;
      }
      for (Vertex u : g_.neighbors(v)) {
        if (left.contains(u)) take(u);
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline std::pair<std::int64_t, std::vector<Vertex>> LayeredEvaluator::resolve(const VertexSet& k) {
  auto it = memo_.find(k);
  if (it != memo_.end()) return {it->second.value, it->second.argmin};
  int t = -1;
  for (Vertex v : k) {
    int l = layer_of_[static_cast<std::size_t>(v)];
    if (l >= 0 && (t < 0 || l < t)) t = l;
  }
  VertexSet ground = k & sep_.iterated.layers[static_cast<std::size_t>(t)];
  VertexSet rest = k - ground;
  std::vector<int> elems = ground.to_vector();
  SfmOracle oracle(elems, [&](std::span<const int> c) {
    VertexSet next = rest;
    std::int64_t wc = 0;
    for (int v : c) {
      wc += w_[static_cast<std::size_t>(v)];
      for (Vertex u : g_.neighbors(v)) {
        if (next.contains(u)) next.erase(u);
      }
    }
    return -(wc + value(next));
  });
  auto res = solver_.run_sfm(oracle);
  Memo m{-res.value, std::vector<Vertex>(res.minimizer.begin(), res.minimizer.end())};
  if (memo_.size() >= solver_.config().memo_limit) memo_.clear();
  memo_.emplace(k, m);
  return {m.value, m.argmin};
}

inline std::int64_t LayeredEvaluator::value(const VertexSet& r) {
  std::int64_t total = 0;
  for (const auto& p : split(r)) {
    if (!p.has_layer) {
      total += lookup(static_cast<std::size_t>(p.tables.front()), p.verts).value;
    } else if (p.verts.count() == 1) {
      total += w_[static_cast<std::size_t>(p.verts.first())];
    } else {
      total += resolve(p.verts).first;
    }
  }
  return total;
}

inline VertexSet LayeredEvaluator::witness(const VertexSet& r) {
  VertexSet out(g_.size());
  for (const auto& p : split(r)) {
    if (!p.has_layer) {
      out |= lookup(static_cast<std::size_t>(p.tables.front()), p.verts).witness;
    } else if (p.verts.count() == 1) {
      out.insert(p.verts.first());
    } else {
      auto c = resolve(p.verts).second;
      VertexSet next = p.verts;
      int first = -1;
      for (Vertex v : p.verts) {
        int l = layer_of_[static_cast<std::size_t>(v)];
        if (l >= 0 && (first < 0 || l < first)) first = l;
      }
      next -= sep_.iterated.layers[static_cast<std::size_t>(first)];
      for (Vertex v : c) {
        out.insert(v);
        for (Vertex u : g_.neighbors(v)) {
          if (next.contains(u)) next.erase(u);
        }
      }
      out |= witness(next);
    }
  }
  return out;
}

inline std::int64_t LayeredEvaluator::f(std::size_t i, const VertexSet& a, const VertexSet& b) {
  const std::size_t k = sep_.iterated.layers.size();
  if (i > k) throw Error(ErrorKind::InvalidArgument, "f index exceeds the layer count");
  VertexSet r(g_.size());
  for (std::size_t j = k - i; j < k; ++j) r |= sep_.iterated.layers[j];
  for (const auto& d : sep_.components) r |= d.vertices;
  VertexSet chosen = a | b;
  r -= closed_neighborhood(g_, chosen);
  std::int64_t wa = 0;
  for (Vertex v : a) wa += w_[static_cast<std::size_t>(v)];
  return wa + value(r);
}

/// Exact MWIS through the separator recursion.
inline SolverResult solve(const Graph& g, const std::vector<std::int64_t>& w, const SolverConfig& cfg = {}) {
  detail::check_weights(g, w);
  Solver s(cfg);
  auto [val, sol] = s.solve_graph(g, w, 0);
  SolverResult r;
  r.weight = val;
  r.solution = std::move(sol);
  r.stats = s.stats();
  return r;
}

/// Largest weight of an independent I with I ∩ S = A:
/// w(A) + MWIS(G ∖ (S ∪ N(A))).
inline std::pair<std::int64_t, VertexSet> alpha_extend(const Graph& g, const std::vector<std::int64_t>& w,
                                                       const VertexSet& s, const VertexSet& a,
                                                       const SolverConfig& cfg = {}) {
  detail::check_weights(g, w);
  if (!is_independent(g, s)) throw Error(ErrorKind::InvalidArgument, "S must be independent");
  if (!a.is_subset_of(s)) throw Error(ErrorKind::InvalidArgument, "A must be a subset of S");
  Solver solver(cfg);
  VertexSet rest = g.all() - s - neighborhood(g, a);
  auto [val, sol] = solver.solve_subset(g, w, rest, 0);
  std::int64_t wa = 0;
  for (Vertex v : a) wa += w[static_cast<std::size_t>(v)];
  return {wa + val, sol | a};
}

}  // namespace evenmwis
