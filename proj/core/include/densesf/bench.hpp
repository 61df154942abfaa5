#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "densesf/oracle.hpp"
#include "densesf/packing.hpp"
#include "densesf/rational.hpp"

namespace densesf {

struct BenchRecord {
  int instance_id = 0;
  int n = 0;
  int k = 0;
  std::string measured_delta;  // "p/q" or "undefined"
  std::string algorithm;
  std::string backend;  // empty unless the packing solver is involved
  std::optional<int> value;  // nullopt: no solution
  std::optional<int> oracle_value;
  std::optional<Rational> ratio;  // value / oracle_value, exact
  std::int64_t wall_time_ms = 0;
};

struct BenchConfig {
  std::string suite;  // "dense", "half-dense", "tree"
  int count = 100;
  std::uint64_t seed = 0;
  PackingBackend backend;  // half-dense suite only
  double epsilon = 0.0;    // tree suite only
  OracleCaps caps;
};

std::vector<BenchRecord> run_bench_suite(const BenchConfig& config);

// Fixed column order, header row first. Records are emitted in instance_id
// order; only wall_time_ms varies between identically seeded runs.
std::string bench_records_to_csv(const std::vector<BenchRecord>& records);

// CSV with the wall_time_ms column blanked, for byte-comparisons.
std::string strip_timing_column(const std::string& csv);

}  // namespace densesf
