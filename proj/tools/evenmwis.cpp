// Command-line front end: solve, decompose, verify, oracle, gen.

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "evenmwis/evenmwis.hpp"

using namespace evenmwis;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitWitness = 2;
constexpr int kExitNotPawFriendly = 3;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitNoInput = 66;
constexpr int kExitSoftware = 70;

struct InputMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputMissing("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::int64_t> load_weights(const std::string& path, const Graph& g) {
  if (path.empty()) return std::vector<std::int64_t>(g.size(), 1);
  return parse_weights(slurp(path), g.size());
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string ids(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::LoopOrMultiEdge:
    case ErrorKind::InvalidWeights:
    case ErrorKind::NotConnected:
      return kExitData;
    case ErrorKind::NotPawFriendlyEvidence:
      return kExitNotPawFriendly;
    case ErrorKind::InvalidArgument:
    case ErrorKind::InstanceTooLarge:
    case ErrorKind::RejectionBudgetExceeded:
      return kExitUsage;
    default:
      return kExitSoftware;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum weight independent set via iterated even-set separators"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string weights_path;
  std::string c_text = "3/5";
  bool check = false;
  bool as_json = false;
  std::size_t base_threshold = SolverConfig{}.base_threshold;

  auto* solve_cmd = app.add_subcommand("solve", "maximum weight independent set");
  solve_cmd->add_option("--graph", graph_path, "DIMACS file (stdin when omitted)");
  solve_cmd->add_option("--weights", weights_path, "one nonnegative integer per line (unit weights when omitted)");
  solve_cmd->add_option("--c", c_text, "balance fraction NUM/DEN, strictly between 1/2 and 1");
  solve_cmd->add_option("--base-threshold", base_threshold, "brute force below this many vertices");
  solve_cmd->add_flag("--check", check, "refuse inputs with a C4, prism or odd (anti)hole witness");
  solve_cmd->add_flag("--json", as_json, "print the result as JSON");

  auto* decompose_cmd = app.add_subcommand("decompose", "print the tame even-set separator as JSON");
  decompose_cmd->add_option("--graph", graph_path, "DIMACS file (stdin when omitted)");
  decompose_cmd->add_option("--c", c_text, "balance fraction NUM/DEN in [1/2, 1)");

  auto* verify_cmd = app.add_subcommand("verify", "audit a separator or the class preconditions");
  verify_cmd->require_subcommand(1);
  std::string sep_path;
  bool full_evenness = false;
  std::size_t path_cap = kDefaultPathCap;
  auto* verify_sep = verify_cmd->add_subcommand("separator", "audit a separator dump");
  verify_sep->add_option("--graph", graph_path, "DIMACS file")->required();
  verify_sep->add_option("--sep", sep_path, "separator JSON from decompose")->required();
  verify_sep->add_flag("--full-evenness", full_evenness, "also check every pair of every layer for evenness");
  verify_sep->add_option("--path-cap", path_cap, "induced paths examined per pair before giving up");
  auto* verify_class = verify_cmd->add_subcommand("class", "C4, prism and Berge checks");
  verify_class->add_option("--graph", graph_path, "DIMACS file (stdin when omitted)");

  auto* oracle_cmd = app.add_subcommand("oracle", "branch-and-bound MWIS (at most 30 vertices)");
  oracle_cmd->add_option("--graph", graph_path, "DIMACS file (stdin when omitted)");
  oracle_cmd->add_option("--weights", weights_path, "weight file");
  oracle_cmd->add_flag("--json", as_json, "print the result as JSON");

  std::string kind;
  std::uint64_t seed = 0;
  std::size_t len = 0;
  std::size_t n = 0;
  int d = 3;
  double p = 0.2;
  std::size_t gadgets = 0;
  std::string emit_weights;
  std::int64_t max_weight = 0;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance as DIMACS");
  gen_cmd->add_option("--kind", kind, "cycle, path, subdivided, subdivided-k4, filtered-random or decorated")
      ->required()
      ->check(CLI::IsMember({"cycle", "path", "subdivided", "subdivided-k4", "filtered-random", "decorated"}));
  gen_cmd->add_option("--seed", seed, "random seed");
  gen_cmd->add_option("--len", len, "cycle or path length");
  gen_cmd->add_option("--n", n, "vertex count (base graph vertices for subdivided)");
  gen_cmd->add_option("--d", d, "base degree for subdivided");
  gen_cmd->add_option("--p", p, "edge probability for filtered-random");
  gen_cmd->add_option("--gadgets", gadgets, "pendant gadgets for decorated");
  gen_cmd->add_option("--weights-out", emit_weights, "also write random weights in [0, max] to this file");
  gen_cmd->add_option("--max-weight", max_weight, "largest random weight");
  bool note = false;
  gen_cmd->add_flag("--note", note, "print the provenance note as a DIMACS comment");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      Graph g = parse_dimacs(slurp(graph_path));
      auto w = load_weights(weights_path, g);
      SolverConfig cfg;
      cfg.c = parse_fraction(c_text);
      cfg.base_threshold = base_threshold;
      if (check) {
        auto rep = check_preconditions(g);
        if (!rep.c4_free() || !rep.prism_free() || rep.berge == Tristate::No) {
          std::cerr << "input is outside the class\n";
          print(evenmwis::to_json(rep));
          return kExitWitness;
        }
      }
      auto r = solve(g, w, cfg);
      if (!verify_solution(g, w, r)) throw Error(ErrorKind::InvalidArgument, "solution failed verification");
      if (as_json) {
        print(evenmwis::to_json(r));
      } else {
        std::cout << "weight " << r.weight << "\n";
        std::cout << "solution " << ids(r.solution) << "\n";
        std::cout << "branch " << r.stats.branch << " sfm_calls " << r.stats.sfm_calls << "\n";
      }
      return 0;
    }

    if (*decompose_cmd) {
      Graph g = parse_dimacs(slurp(graph_path));
      if (g.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty graph");
      Weights uniform = Weights::uniform(g.size());
      auto sep = tame_separator(g, uniform, parse_fraction(c_text), g.max_degree());
      print(evenmwis::to_json(sep, evenmwis::to_json(verify_separator(g, uniform, sep))));
      return 0;
    }

    if (*verify_sep) {
      Graph g = parse_dimacs(slurp(graph_path));
      json j;
      try {
        j = json::parse(slurp(sep_path));
      } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("separator JSON: ") + e.what());
      }
      auto sep = separator_from_json(j, g.size());
      auto rep = verify_separator(g, sep, full_evenness, path_cap);
      print(evenmwis::to_json(rep));
      return rep.ok() ? 0 : kExitViolation;
    }

    if (*verify_class) {
      Graph g = parse_dimacs(slurp(graph_path));
      print(evenmwis::to_json(check_preconditions(g)));
      return 0;
    }

    if (*oracle_cmd) {
      Graph g = parse_dimacs(slurp(graph_path));
      auto r = brute_force_mwis(g, load_weights(weights_path, g));
      if (as_json) {
        print(evenmwis::to_json(r));
      } else {
        std::cout << "weight " << r.weight << "\n";
        std::cout << "solution " << ids(r.solution) << "\n";
      }
      return 0;
    }

    if (*gen_cmd) {
      Generated gen;
      if (kind == "cycle") {
        gen = generate_cycle(len);
      } else if (kind == "path") {
        gen = generate_path(len);
      } else if (kind == "subdivided") {
        gen = generate_subdivided(n, d, seed);
      } else if (kind == "subdivided-k4") {
        gen = generate_subdivided_k4();
      } else if (kind == "filtered-random") {
        gen = generate_filtered_random(n, p, seed);
      } else {
        gen = generate_decorated_cycle(len, gadgets, seed);
      }
      if (note) std::cout << "c " << gen.note << "\n";
      std::cout << render_dimacs(gen.graph);
      if (!emit_weights.empty()) {
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        if (max_weight < 0) throw Error(ErrorKind::InvalidArgument, "--max-weight must be nonnegative");
        std::vector<std::int64_t> w(gen.graph.size());
        for (auto& x : w) x = static_cast<std::int64_t>(rng() % (static_cast<std::uint64_t>(max_weight) + 1));
        std::ofstream out(emit_weights);
        out << render_weights(w);
      }
      return 0;
    }
  } catch (const InputMissing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
  return kExitUsage;
}
