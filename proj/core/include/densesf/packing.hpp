#pragma once

#include <vector>

#include "densesf/rational.hpp"

namespace densesf {

// 3-Set Packing over a small universe (terminal-set indices in practice).
// Family members have size 2 or 3 and are deduplicated on construction.
class PackingInstance {
 public:
  PackingInstance() = default;
  PackingInstance(int universe_size, std::vector<std::vector<int>> family);

  int universe_size() const { return universe_size_; }
  const std::vector<std::vector<int>>& family() const { return family_; }

 private:
  int universe_size_ = 0;
  std::vector<std::vector<int>> family_;  // members sorted; list deduplicated
};

struct Packing {
  std::vector<int> chosen;  // indices into the family, ascending
};

bool packing_is_disjoint(const PackingInstance& p, const Packing& packing);

// Maximum packing by branch and bound over family order; among maxima the
// lexicographically smallest chosen index list is returned. Throws SizeError
// when universe_size exceeds the limit.
Packing solve_packing_exact(const PackingInstance& p, int universe_limit = 24);

// Deterministic local search: greedy maximal packing in family order, then
// swaps (remove <= swap_size chosen sets, insert strictly more) in
// lexicographic order until a fixpoint. swap_size >= 1.
Packing solve_packing_local_search(const PackingInstance& p, int swap_size);

enum class PackingBackendKind { Exact, LocalSearch };

struct PackingBackend {
  PackingBackendKind kind = PackingBackendKind::Exact;
  int swap_size = 1;  // LocalSearch only
};

Packing solve_packing(const PackingInstance& p, const PackingBackend& backend);

// Worst-case guarantee beta of a backend: the returned packing size is at
// least beta times the optimum. Exact: 1. Local search: 1/3 for swap_size 1
// (maximality), 1/2 for swap_size >= 2.
Rational packing_guarantee(const PackingBackend& backend);

// Guarantee (3 - eps)/4 of the assumed 3-Set Packing subroutine used in the
// published ratio analysis; kept as data so the ratio bound can be evaluated
// for it without implementing the subroutine.
Rational reference_packing_guarantee(const Rational& eps);

}  // namespace densesf
