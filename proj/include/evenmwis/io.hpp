#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "evenmwis/error.hpp"
#include "evenmwis/even_separator.hpp"
#include "evenmwis/graph.hpp"
#include "evenmwis/mwis.hpp"
#include "evenmwis/recognition.hpp"
#include "evenmwis/weights.hpp"

namespace evenmwis {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_count(std::string_view tok, std::size_t line_no) {
  long long v = 0;
  std::size_t used = 0;
  try {
    v = std::stoll(std::string(tok), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected an integer, got '" +
                                           std::string(tok) + "'");
  }
  return v;
}

}  // namespace detail

/// DIMACS edge format: "c" comment lines, one "p edge n m" header before any
/// edge, then m lines "e u v" with 1-based ids.
inline Graph parse_dimacs(std::string_view text) {
  std::size_t line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    auto fail = [&](const std::string& what) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
    };
    if (tok[0] == "p") {
      if (n >= 0) fail("second problem line");
      if (tok.size() != 4 || tok[1] != "edge") fail("expected 'p edge <n> <m>'");
      n = detail::parse_count(tok[2], line_no);
      m = detail::parse_count(tok[3], line_no);
      if (n < 0 || m < 0) fail("negative size in problem line");
    } else if (tok[0] == "e") {
      if (n < 0) fail("edge before the problem line");
      if (tok.size() != 3) fail("expected 'e <u> <v>'");
      long long u = detail::parse_count(tok[1], line_no);
      long long v = detail::parse_count(tok[2], line_no);
      if (u < 1 || v < 1 || u > n || v > n) fail("vertex id out of range 1.." + std::to_string(n));
      if (u == v) {
        throw Error(ErrorKind::LoopOrMultiEdge, "line " + std::to_string(line_no) + ": self-loop at " + std::to_string(u));
      }
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      fail("unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (n < 0) throw Error(ErrorKind::ParseError, "missing problem line");
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(ErrorKind::ParseError, "header announces " + std::to_string(m) + " edges, found " +
                                           std::to_string(edges.size()));
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

inline std::string render_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.size()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

/// One nonnegative integer per line; line i is the weight of vertex i.
/// Blank lines are skipped.
inline std::vector<std::int64_t> parse_weights(std::string_view text, std::size_t n) {
  std::vector<std::int64_t> w;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto tok = detail::split_ws(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (tok.empty()) continue;
    if (tok.size() != 1) throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": one weight per line");
    long long v = detail::parse_count(tok[0], line_no);
    if (v < 0) throw Error(ErrorKind::InvalidWeights, "line " + std::to_string(line_no) + ": negative weight");
    w.push_back(v);
  }
  if (w.size() != n) {
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(n) + " weights, found " + std::to_string(w.size()));
  }
  return w;
}

inline std::string render_weights(const std::vector<std::int64_t>& w) {
  std::string out;
  for (auto x : w) out += std::to_string(x) + "\n";
  return out;
}

inline nlohmann::json to_json(const VertexSet& s) { return s.to_vector(); }

inline VertexSet vertex_set_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "vertex list must be an array");
  VertexSet s(n);
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "vertex ids must be integers");
    auto id = v.get<long long>();
    if (id < 0 || static_cast<std::size_t>(id) >= n) throw Error(ErrorKind::ParseError, "vertex id out of range");
    s.insert(static_cast<Vertex>(id));
  }
  return s;
}

inline nlohmann::json to_json(const SeparatorReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"kind", std::string(to_string(x.kind))}, {"layer", x.layer}, {"vertices", x.vertices}});
  }
  return {{"ok", r.ok()}, {"evenness_checked", r.evenness_checked}, {"pairs_checked", r.pairs_checked},
          {"violations", v}};
}

/// SeparatorDump. `audits` is attached verbatim.
inline nlohmann::json to_json(const EvenSetSeparator& sep, const nlohmann::json& audits = nlohmann::json::object()) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& l : sep.iterated.layers) layers.push_back(to_json(l));
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& d : sep.components) {
    comps.push_back({{"vertices", to_json(d.vertices)}, {"neighborhood", to_json(d.neighborhood)}});
  }
  return {{"branch", static_cast<int>(sep.branch)},
          {"k", sep.k()},
          {"c", to_string(sep.c)},
          {"d", sep.d},
          {"layers", layers},
          {"components", comps},
          {"audits", audits}};
}

inline EvenSetSeparator separator_from_json(const nlohmann::json& j, std::size_t n) {
  try {
    EvenSetSeparator sep;
    int branch = j.at("branch").get<int>();
    if (branch != 1 && branch != 2) throw Error(ErrorKind::ParseError, "branch must be 1 or 2");
    sep.branch = static_cast<Branch>(branch);
    sep.c = parse_fraction(j.at("c").get<std::string>());
    sep.d = j.at("d").get<std::size_t>();
    for (const auto& l : j.at("layers")) sep.iterated.layers.push_back(vertex_set_from_json(l, n));
    if (j.at("k").get<std::size_t>() != sep.iterated.layers.size()) {
      throw Error(ErrorKind::ParseError, "k does not match the number of layers");
    }
    for (const auto& d : j.at("components")) {
      sep.components.push_back({vertex_set_from_json(d.at("vertices"), n), vertex_set_from_json(d.at("neighborhood"), n)});
    }
    return sep;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("separator JSON: ") + e.what());
  }
}

inline nlohmann::json to_json(const StructureWitness& w) {
  nlohmann::json j = {{"kind", std::string(to_string(w.kind))}, {"vertices", w.vertices}};
  if (!w.parts.empty()) j["parts"] = w.parts;
  return j;
}

inline nlohmann::json to_json(const PreconditionReport& r) {
  auto opt = [](const std::optional<StructureWitness>& w) { return w ? to_json(*w) : nlohmann::json(nullptr); };
  return {{"connected", r.connected},
          {"c4_free", r.c4_free()},
          {"c4_witness", opt(r.c4)},
          {"prism_free", r.prism_free()},
          {"prism_witness", opt(r.prism)},
          {"berge", std::string(to_string(r.berge))},
          {"berge_witness", opt(r.berge_witness)},
          {"max_degree", r.max_degree},
          {"in_class", r.in_class()}};
}

inline nlohmann::json to_json(const SolverResult& r) {
  return {{"weight", r.weight},
          {"solution", to_json(r.solution)},
          {"stats",
           {{"branch", r.stats.branch},
            {"depth", r.stats.depth},
            {"sfm_calls", r.stats.sfm_calls},
            {"oracle_calls", r.stats.oracle_calls},
            {"brute_force_calls", r.stats.brute_force_calls},
            {"separators", r.stats.separators},
            {"table_entries", r.stats.table_entries},
            {"z", r.stats.z}}}};
}

}  // namespace evenmwis
