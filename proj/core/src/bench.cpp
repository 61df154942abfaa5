#include "densesf/bench.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "densesf/dense_tree.hpp"
#include "densesf/errors.hpp"
#include "densesf/generators.hpp"
#include "densesf/greedy.hpp"
#include "densesf/half_dense.hpp"

namespace densesf {

namespace {

int draw_in(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Instance parameters per suite, drawn from the record's own sub-seed so
// the stream is independent of evaluation order.
SteinerForestInstance make_instance(const std::string& suite, std::uint64_t sub_seed) {
  std::mt19937_64 rng(sub_seed);
  int k = draw_in(rng, 2, 5);
  std::vector<int> sizes;
  for (int i = 0; i < k; ++i) sizes.push_back(draw_in(rng, 1, 3));

  if (suite == "dense") {
    Rational delta(draw_in(rng, 6, 10), 10);  // drawn in (1/2, 1]
    return gen_dense(k, sizes, 0, delta, rng());
  }
  if (suite == "half-dense") {
    if (rng() % 3 == 0) {
      // structured biclique variant, sometimes with a cross pair
      int kk = draw_in(rng, 2, 4);
      std::vector<std::pair<int, int>> cross;
      if (rng() % 2 == 0 && kk >= 3) cross.push_back({0, 2});
      return gen_parallel_bicliques(kk, draw_in(rng, 1, 2), cross, rng());
    }
    for (auto& s : sizes)
      if (s == 1 && rng() % 2 == 0) s = 2;
    return gen_dense(k, sizes, 0, Rational(1, 2), rng());
  }
  if (suite == "tree") {
    Rational delta(draw_in(rng, 6, 10), 10);
    int steiner = draw_in(rng, 1, 4);
    // keep within the oracle caps
    while (true) {
      int total = steiner;
      for (int s : sizes) total += s;
      if (total <= 14) break;
      sizes.pop_back();
      --k;
    }
    return gen_dense(k, sizes, steiner, delta, rng());
  }
  throw InputError("bench: unknown suite '" + suite + "'");
}

}  // namespace

std::vector<BenchRecord> run_bench_suite(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  std::mt19937_64 master(config.seed);
  for (int id = 0; id < config.count; ++id) {
    std::uint64_t sub_seed = master();
    auto inst = make_instance(config.suite, sub_seed);

    BenchRecord rec;
    rec.instance_id = id;
    rec.n = inst.graph().node_count();
    rec.k = inst.set_count();
    auto density = measure_density(inst);
    rec.measured_delta = density.delta ? density.delta->str() : "undefined";

    auto start = std::chrono::steady_clock::now();
    std::optional<SolutionForest> solution;
    if (config.suite == "dense") {
      rec.algorithm = "greedy";
      solution = solve_greedy(inst);
    } else if (config.suite == "half-dense") {
      rec.algorithm = "packing";
      rec.backend = config.backend.kind == PackingBackendKind::Exact
                        ? "exact"
                        : "local" + std::to_string(config.backend.swap_size);
      solution = solve_half_dense(inst, config.backend);
    } else {
      rec.algorithm = "tree";
      solution = solve_theorem1(inst, config.epsilon);
    }
    auto stop = std::chrono::steady_clock::now();
    rec.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

    if (solution) rec.value = static_cast<int>(solution->edges.size());
    try {
      auto oracle = oracle_steiner_forest(inst, config.caps);
      rec.oracle_value = oracle ? std::optional<int>(static_cast<int>(oracle->edges.size()))
                                : std::nullopt;
    } catch (const SizeError&) {
      // oracle skipped; ratio left empty
    }
    if (rec.value && rec.oracle_value && *rec.oracle_value > 0)
      rec.ratio = Rational(*rec.value, *rec.oracle_value);
    records.push_back(std::move(rec));
  }
  return records;
}

std::string bench_records_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "instance_id,n,k,measured_delta,algorithm,backend,value,oracle_value,ratio,"
         "wall_time_ms\n";
  for (const auto& r : records) {
    out << r.instance_id << ',' << r.n << ',' << r.k << ',' << r.measured_delta << ','
        << r.algorithm << ',' << r.backend << ',';
    if (r.value) out << *r.value;
    out << ',';
    if (r.oracle_value) out << *r.oracle_value;
    out << ',';
    if (r.ratio) out << r.ratio->str();
    out << ',' << r.wall_time_ms << '\n';
  }
  return out.str();
}

std::string strip_timing_column(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.rfind(',');
    out << line.substr(0, pos + 1) << '\n';
  }
  return out.str();
}

}  // namespace densesf
