// densesf: generate, check, solve, verify, reduce and benchmark dense
// Steiner Forest instances.
//
// Exit codes: 0 success, 1 infeasible / no solution, 2 usage error,
// 3 precondition (density) violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "densesf/bench.hpp"
#include "densesf/dense_tree.hpp"
#include "densesf/errors.hpp"
#include "densesf/generators.hpp"
#include "densesf/greedy.hpp"
#include "densesf/half_dense.hpp"
#include "densesf/json_io.hpp"
#include "densesf/oracle.hpp"
#include "densesf/reductions.hpp"
#include "densesf/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw densesf::InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string density_line(const densesf::DensityReport& report) {
  if (!report.delta) return "density: undefined (no cross-set constraint)";
  std::string line = "density: " + report.delta->str();
  if (report.witness) {
    line += " (witness: terminal " + std::to_string(report.witness->terminal) + " vs ";
    line += report.witness->target_set ? "set " + std::to_string(*report.witness->target_set)
                                       : std::string("S");
    line += ")";
  }
  return line;
}

densesf::PackingBackend make_backend(const std::string& name, int swap_size) {
  densesf::PackingBackend backend;
  if (name == "exact") {
    backend.kind = densesf::PackingBackendKind::Exact;
  } else if (name == "local") {
    backend.kind = densesf::PackingBackendKind::LocalSearch;
    backend.swap_size = swap_size;
  } else {
    throw densesf::InputError("unknown backend '" + name + "'");
  }
  return backend;
}

int emit_solution(const densesf::SteinerForestInstance& inst,
                  const std::optional<densesf::SolutionForest>& solution) {
  if (!solution) {
    std::cerr << "no solution\n";
    return kExitInfeasible;
  }
  std::cout << densesf::solution_to_json(*solution) << "\n";
  std::cerr << "value: " << solution->edges.size() << "\n";
  (void)inst;
  return kExitOk;
}

int run_gen(const std::string& kind, int k, const std::string& sizes_csv, int steiner,
            const std::string& delta_str, int half_size, const std::string& cross_csv,
            int n, int m, int max_degree, std::uint64_t seed) {
  using namespace densesf;
  if (kind == "dense") {
    std::vector<int> sizes;
    std::stringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
    if (sizes.empty()) sizes.assign(k, 2);
    std::cout << instance_to_json(gen_dense(k, sizes, steiner, parse_rational(delta_str), seed))
              << "\n";
  } else if (kind == "bicliques") {
    std::vector<std::pair<int, int>> cross;
    std::stringstream ss(cross_csv);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
      auto comma = tok.find(',');
      if (comma == std::string::npos) throw InputError("cross pair must be 'a,b'");
      cross.push_back({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
    }
    std::cout << instance_to_json(gen_parallel_bicliques(k, half_size, cross, seed)) << "\n";
  } else if (kind == "set-cover") {
    std::cout << set_cover_to_json(gen_set_cover(n, m, seed)) << "\n";
  } else if (kind == "graph") {
    std::cout << graph_to_json(gen_bounded_degree_graph(n, max_degree, seed)) << "\n";
  } else {
    throw InputError("unknown kind '" + kind + "'");
  }
  return kExitOk;
}

int run_check(const std::string& path, const std::string& delta_str) {
  using namespace densesf;
  auto inst = instance_from_json(read_file(path));
  auto report = measure_density(inst);
  std::cout << density_line(report) << "\n";

  auto trivials = trivial_sets(inst);
  std::cout << "trivial_sets:";
  for (int i : trivials) std::cout << " " << i;
  std::cout << "\n";
  std::cout << "steiner_nodes: " << inst.steiner_nodes().size() << "\n";

  std::cout << "connected_pairs:";
  for (int i = 0; i < inst.set_count(); ++i)
    for (int j = i + 1; j < inst.set_count(); ++j)
      if (pair_connected(inst, i, j)) std::cout << " (" << i << "," << j << ")";
  std::cout << "\n";
  std::cout << "triplets:";
  for (int i = 0; i < inst.set_count(); ++i)
    for (int j = i + 1; j < inst.set_count(); ++j)
      for (int l = j + 1; l < inst.set_count(); ++l)
        if (is_triplet(inst, i, j, l))
          std::cout << " (" << i << "," << j << "," << l << ")";
  std::cout << "\n";

  if (!delta_str.empty()) {
    Rational want = parse_rational(delta_str);
    if (!is_pairwise_dense(inst, want)) {
      std::cerr << "not pairwise " << want.str() << "-dense; " << density_line(report) << "\n";
      return kExitPrecondition;
    }
    std::cout << "pairwise " << want.str() << "-dense: yes\n";
  }
  return kExitOk;
}

int run_solve(const std::string& path, const std::string& algorithm,
              const std::string& backend_name, int swap_size, double epsilon) {
  using namespace densesf;
  auto inst = instance_from_json(read_file(path));
  auto caps = oracle_caps_from_env();

  std::string algo = algorithm;
  if (algo == "auto") {
    auto report = measure_density(inst);
    bool no_steiner = inst.steiner_nodes().empty();
    if (!report.delta || *report.delta > Rational(1, 2)) {
      algo = "tree";
    } else if (*report.delta == Rational(1, 2) && no_steiner) {
      algo = "packing";
    } else {
      bool in_caps = inst.set_count() <= caps.max_sets &&
                     static_cast<int>(inst.steiner_nodes().size()) <= caps.max_steiner &&
                     inst.graph().node_count() <= caps.max_nodes;
      if (!in_caps) {
        std::cerr << "no approximation guarantee applies (" << density_line(report)
                  << ") and the instance exceeds the exact-solver caps\n";
        return kExitPrecondition;
      }
      algo = "brute";
    }
  }

  if (algo == "greedy") return emit_solution(inst, solve_greedy(inst));
  if (algo == "packing")
    return emit_solution(inst, solve_half_dense(inst, make_backend(backend_name, swap_size)));
  if (algo == "tree") return emit_solution(inst, solve_theorem1(inst, epsilon));
  if (algo == "brute") return emit_solution(inst, oracle_steiner_forest(inst, caps));
  throw InputError("unknown algorithm '" + algo + "'");
}

int run_verify(const std::string& inst_path, const std::string& sol_path) {
  using namespace densesf;
  auto inst = instance_from_json(read_file(inst_path));
  auto sol = solution_from_json(read_file(sol_path));
  auto result = verify_solution(inst, sol);
  if (result.ok()) {
    std::cout << "ok: value " << sol.edges.size() << "\n";
    return kExitOk;
  }
  for (const auto& violation : result.violations)
    std::cout << "violation: " << violation.message << "\n";
  return kExitInfeasible;
}

int run_pack(const std::string& path, const std::string& backend_name, int swap_size) {
  using namespace densesf;
  auto p = packing_instance_from_json(read_file(path));
  auto packing = solve_packing(p, make_backend(backend_name, swap_size));
  std::cout << packing_to_json(packing) << "\n";
  std::cerr << "size: " << packing.chosen.size() << "\n";
  return kExitOk;
}

int run_reduce_set_cover(const std::string& path) {
  using namespace densesf;
  auto sc = set_cover_from_json(read_file(path));
  std::cout << group_steiner_to_json(set_cover_to_group_steiner(sc)) << "\n";
  return kExitOk;
}

int run_reduce_vertex_cover(const std::string& path, bool forest) {
  using namespace densesf;
  auto g = graph_from_json(read_file(path));
  auto inst = forest ? vertex_cover_to_steiner_forest(g) : vertex_cover_to_steiner_tree(g);
  std::cout << instance_to_json(inst) << "\n";
  return kExitOk;
}

int run_bench(const std::string& suite, int count, std::uint64_t seed,
              const std::string& backend_name, int swap_size, double epsilon,
              const std::string& out_path) {
  using namespace densesf;
  BenchConfig config;
  config.suite = suite;
  config.count = count;
  config.seed = seed;
  config.backend = make_backend(backend_name, swap_size);
  config.epsilon = epsilon;
  config.caps = oracle_caps_from_env();
  auto records = run_bench_suite(config);
  std::string csv = bench_records_to_csv(records);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write file: " + out_path);
    out << csv;
  }
  std::cerr << "records: " << records.size() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense Steiner Forest toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance (JSON on stdout)");
  std::string kind = "dense", sizes_csv, delta_str = "0.6", cross_csv;
  int k = 3, steiner = 0, half_size = 1, gen_n = 4, gen_m = 3, max_degree = 3;
  std::uint64_t seed = 0;
  gen->add_option("--kind", kind, "dense|bicliques|set-cover|graph");
  gen->add_option("--k", k, "number of terminal sets");
  gen->add_option("--sizes", sizes_csv, "comma-separated terminal set sizes");
  gen->add_option("--steiner", steiner, "number of Steiner nodes (dense)");
  gen->add_option("--delta", delta_str, "target density, e.g. 0.6 or 2/3");
  gen->add_option("--half-size", half_size, "half size per set (bicliques)");
  gen->add_option("--cross", cross_csv, "cross pairs 'a,b;c,d' (bicliques)");
  gen->add_option("--n", gen_n, "universe / node count (set-cover, graph)");
  gen->add_option("--m", gen_m, "family size (set-cover)");
  gen->add_option("--max-degree", max_degree, "degree bound (graph)");
  gen->add_option("--seed", seed, "RNG seed");

  // check
  auto* check = app.add_subcommand("check", "measure density and structure diagnostics");
  std::string check_path, check_delta;
  check->add_option("instance", check_path, "instance JSON file")->required();
  check->add_option("--delta", check_delta, "required density; exit 3 if not met");

  // solve
  auto* solve = app.add_subcommand("solve", "solve an instance (solution JSON on stdout)");
  std::string solve_path, algorithm = "auto", backend_name = "exact";
  int swap_size = 1;
  double epsilon = 0.0;
  solve->add_option("instance", solve_path, "instance JSON file")->required();
  solve->add_option("--algorithm", algorithm, "auto|greedy|packing|tree|brute");
  solve->add_option("--backend", backend_name, "exact|local (packing)");
  solve->add_option("--swap-size", swap_size, "local search swap size");
  solve->add_option("--epsilon", epsilon, "tree solver epsilon (<= 0: exact finish)");

  // verify
  auto* verify = app.add_subcommand("verify", "check a solution against an instance");
  std::string verify_inst, verify_sol;
  verify->add_option("instance", verify_inst, "instance JSON file")->required();
  verify->add_option("solution", verify_sol, "solution JSON file")->required();

  // pack
  auto* pack = app.add_subcommand("pack", "solve a 3-set packing instance");
  std::string pack_path, pack_backend = "exact";
  int pack_swap = 1;
  pack->add_option("packing", pack_path, "packing JSON file")->required();
  pack->add_option("--backend", pack_backend, "exact|local");
  pack->add_option("--swap-size", pack_swap, "local search swap size");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "build a hardness gadget");
  auto* red_sc = reduce->add_subcommand("set-cover", "Set Cover -> Group Steiner Tree");
  std::string red_sc_path;
  red_sc->add_option("input", red_sc_path, "set cover JSON file")->required();
  auto* red_vc = reduce->add_subcommand("vertex-cover", "Vertex Cover -> Steiner Tree/Forest");
  std::string red_vc_path;
  bool red_forest = false;
  red_vc->add_option("input", red_vc_path, "graph JSON file")->required();
  red_vc->add_flag("--forest", red_forest, "apply the second step (no Steiner nodes)");
  reduce->require_subcommand(1);

  // bench
  auto* bench = app.add_subcommand("bench", "run a benchmark suite, write CSV");
  std::string suite = "dense", bench_backend = "exact", bench_out;
  int bench_count = 100, bench_swap = 1;
  std::uint64_t bench_seed = 0;
  double bench_epsilon = 0.0;
  bench->add_option("--suite", suite, "dense|half-dense|tree");
  bench->add_option("--count", bench_count, "number of instances");
  bench->add_option("--seed", bench_seed, "master seed");
  bench->add_option("--backend", bench_backend, "exact|local (half-dense)");
  bench->add_option("--swap-size", bench_swap, "local search swap size");
  bench->add_option("--epsilon", bench_epsilon, "tree solver epsilon");
  bench->add_option("--out", bench_out, "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed())
      return run_gen(kind, k, sizes_csv, steiner, delta_str, half_size, cross_csv, gen_n,
                     gen_m, max_degree, seed);
    if (check->parsed()) return run_check(check_path, check_delta);
    if (solve->parsed())
      return run_solve(solve_path, algorithm, backend_name, swap_size, epsilon);
    if (verify->parsed()) return run_verify(verify_inst, verify_sol);
    if (pack->parsed()) return run_pack(pack_path, pack_backend, pack_swap);
    if (reduce->parsed()) {
      if (red_sc->parsed()) return run_reduce_set_cover(red_sc_path);
      return run_reduce_vertex_cover(red_vc_path, red_forest);
    }
    if (bench->parsed())
      return run_bench(suite, bench_count, bench_seed, bench_backend, bench_swap,
                       bench_epsilon, bench_out);
  } catch (const densesf::PreconditionError& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const densesf::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const densesf::SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
