// Command-line surface for the fake-weighted-projective-space mutation
// calculus. JSON in, JSON out; stdin/stdout by default so commands pipe.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fwps/corpus.hpp"
#include "fwps/json_io.hpp"
#include "fwps/verify.hpp"

namespace {

using namespace fwps;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << content;
}

Int kappa_scan_bound() {
  if (const char* env = std::getenv("SIMPLEX_MUTATOR_MAX_H")) {
    try {
      return Int(std::string(env));
    } catch (...) {
      throw ParseError("SIMPLEX_MUTATOR_MAX_H is not an integer");
    }
  }
  return Int(1000000);
}

Variant parse_variant(const std::string& s) {
  if (s == "canonical") return Variant::canonical;
  if (s == "terminal") return Variant::terminal;
  throw CLI::ValidationError("--variant", "must be 'canonical' or 'terminal'");
}

int print_suite(const SuiteResult& res) {
  for (const auto& c : res.checks)
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << res.suite << "/" << c.name
              << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  std::cout << (res.all_pass() ? "suite passed" : "suite FAILED") << ": " << res.suite << "\n";
  return res.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mutation calculus for Fano simplices and fake weighted projective spaces"};
  app.require_subcommand(1);

  std::string file = "-", move_file, dot_file, json_file, variant_name = "canonical", suite;
  bool nontrivial = false, weights_input = false;
  std::size_t arg_n = 4, arg_a = 0, arg_depth = 1, arg_m = 3;
  long long classify_max_h = 10000;
  std::vector<long long> kappas;

  auto* cmd_weights = app.add_subcommand("weights", "weights and multiplicity of a simplex");
  cmd_weights->add_option("file", file, "simplex JSON ('-' for stdin)");

  auto* cmd_build = app.add_subcommand("build", "simplex of a weighted projective space");
  cmd_build->add_option("file", file, "weight JSON ('-' for stdin)");

  auto* cmd_degree = app.add_subcommand("degree", "anticanonical degree");
  cmd_degree->add_option("file", file, "simplex JSON, or weight JSON with --weights");
  cmd_degree->add_flag("--weights", weights_input, "input is a weight system");

  auto* cmd_moves = app.add_subcommand("moves", "all simplex mutations of a simplex");
  cmd_moves->add_option("file", file, "simplex JSON ('-' for stdin)");
  cmd_moves->add_flag("--nontrivial", nontrivial, "drop trivial moves");

  auto* cmd_mutate = app.add_subcommand("mutate", "apply a mutation move");
  cmd_mutate->add_option("file", file, "simplex JSON ('-' for stdin)");
  cmd_mutate->add_option("--move", move_file, "move JSON file")->required();

  auto* cmd_classify = app.add_subcommand("classify", "terminal/canonical/Gorenstein report");
  cmd_classify->add_option("file", file, "simplex JSON, or weight JSON with --weights");
  cmd_classify->add_flag("--weights", weights_input, "classify by the weight criterion");
  cmd_classify->add_option("--kappa", kappas, "explicit kappa witnesses for large weight sums");

  auto* cmd_tower = app.add_subcommand("tower", "maximal-degree mutation tower states");
  cmd_tower->add_option("n", arg_n, "dimension")->required();
  cmd_tower->add_option("--variant", variant_name, "canonical|terminal");
  cmd_tower->add_option("--a", arg_a, "tower index in {0,...,n-2}");
  cmd_tower->add_option("--depth", arg_depth, "number of mutation steps");

  auto* cmd_tree = app.add_subcommand("tree", "mutation graph of the maximal-degree space");
  cmd_tree->add_option("n", arg_n, "dimension")->required();
  cmd_tree->add_option("--variant", variant_name, "canonical|terminal");
  cmd_tree->add_option("--depth", arg_depth, "exploration depth (at most 4)");
  cmd_tree->add_option("--dot", dot_file, "write DOT to this file");
  cmd_tree->add_option("--json", json_file, "write JSON to this file instead of stdout");
  cmd_tree->add_option("--classify-max-h", classify_max_h,
                       "classify nodes with weight sum up to this bound");

  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("--suite", suite, "appendix|mutation|singularity")->required();
  cmd_verify->add_option("--n", arg_n, "dimension for the appendix suite");
  cmd_verify->add_option("--m", arg_m, "tower depth for the appendix suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_weights->parsed()) {
      FanoSimplex p = FanoSimplex::validate(parse_simplex_json(read_input(file)));
      std::cout << weights_to_json(p.weights()) << "\n";
    } else if (cmd_build->parsed()) {
      FanoSimplex p = simplex_from_weights(parse_weights_json(read_input(file)));
      std::cout << simplex_to_json(p) << "\n";
    } else if (cmd_degree->parsed()) {
      WeightSystem ws = weights_input
                            ? parse_weights_json(read_input(file))
                            : FanoSimplex::validate(parse_simplex_json(read_input(file))).weights();
      std::cout << degree_to_json(degree(ws)) << "\n";
    } else if (cmd_moves->parsed()) {
      FanoSimplex p = FanoSimplex::validate(parse_simplex_json(read_input(file)));
      std::vector<MutationMove> moves = find_simplex_mutations(p);
      if (nontrivial)
        std::erase_if(moves, [](const MutationMove& m) { return m.trivial; });
      std::cout << moves_to_json(moves) << "\n";
    } else if (cmd_mutate->parsed()) {
      std::vector<LatticeVector> verts = parse_simplex_json(read_input(file));
      MoveSpec spec = parse_move_json(read_input(move_file));
      std::vector<IntVec> raw;
      for (const auto& v : verts) raw.push_back(v.x);
      std::cout << simplex_to_json(mutate(raw, spec.w, spec.factor_vertices)) << "\n";
    } else if (cmd_classify->parsed()) {
      SingularityReport rep;
      if (weights_input) {
        WeightClassifyOptions opts;
        opts.max_h = kappa_scan_bound();
        if (!kappas.empty()) {
          IntVec ks;
          for (long long k : kappas) ks.emplace_back(k);
          opts.kappa_list = std::move(ks);
        }
        rep = classify_weights(parse_weights_json(read_input(file)), opts);
        if (!rep.complete && rep.canonical && rep.terminal)
          throw ResourceLimit("supplied kappas show no violation; result would be inconclusive");
      } else {
        rep = classify_polytope(FanoSimplex::validate(parse_simplex_json(read_input(file))));
      }
      std::cout << report_to_json(rep) << "\n";
    } else if (cmd_tower->parsed()) {
      if (arg_depth > 12) throw ResourceLimit("tower weights grow doubly exponentially; depth <= 12");
      Variant variant = parse_variant(variant_name);
      std::vector<TowerEntry> entries;
      TowerState s = tower_base(arg_n, variant, arg_a);
      entries.push_back({s, std::nullopt});
      for (std::size_t m = 1; m <= arg_depth; ++m) {
        TowerState nxt = tower_step(s);
        entries.push_back({nxt, kappa_witness(s, nxt)});
        s = nxt;
      }
      std::cout << tower_to_json(entries) << "\n";
    } else if (cmd_tree->parsed()) {
      Variant variant = parse_variant(variant_name);
      MutationGraph g = build_mutation_tree(arg_n, variant, arg_depth);
      std::vector<std::optional<SingularityReport>> reports(g.nodes.size());
      for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        WeightSystem ws(g.nodes[i].weights, g.nodes[i].multiplicity);
        Int h = ws.sum();
        if (ws.multiplicity == 1 && h <= Int(classify_max_h) && h <= kappa_scan_bound())
          reports[i] = classify_weights(ws, {kappa_scan_bound(), std::nullopt});
      }
      if (!dot_file.empty()) write_file(dot_file, to_dot(g));
      std::string j = graph_to_json(g, reports);
      if (!json_file.empty())
        write_file(json_file, j + "\n");
      else
        std::cout << j << "\n";
    } else if (cmd_verify->parsed()) {
      SuiteResult res;
      if (suite == "appendix")
        res = run_appendix_suite(arg_n, arg_m);
      else if (suite == "mutation")
        res = run_mutation_suite();
      else if (suite == "singularity")
        res = run_singularity_suite();
      else
        throw ParseError("unknown suite: " + suite);
      return print_suite(res);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
