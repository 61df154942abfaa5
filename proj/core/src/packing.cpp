#include "densesf/packing.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "densesf/errors.hpp"

namespace densesf {

namespace {

std::uint64_t member_mask(const std::vector<int>& set) {
  std::uint64_t m = 0;
  for (int e : set) m |= std::uint64_t{1} << e;
  return m;
}

}  // namespace

PackingInstance::PackingInstance(int universe_size, std::vector<std::vector<int>> family)
    : universe_size_(universe_size) {
  if (universe_size < 0) throw InputError("PackingInstance: negative universe");
  if (universe_size > 63) throw InputError("PackingInstance: universe too large (max 63)");
  std::vector<std::vector<int>> seen;
  for (auto& set : family) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.size() != 2 && set.size() != 3)
      throw InputError("PackingInstance: family members must have size 2 or 3");
    for (int e : set)
      if (e < 0 || e >= universe_size)
        throw InputError("PackingInstance: element " + std::to_string(e) + " out of range");
    if (std::find(seen.begin(), seen.end(), set) == seen.end())
      seen.push_back(set);
  }
  family_ = std::move(seen);
}

bool packing_is_disjoint(const PackingInstance& p, const Packing& packing) {
  std::uint64_t used = 0;
  for (int idx : packing.chosen) {
    if (idx < 0 || idx >= static_cast<int>(p.family().size())) return false;
    std::uint64_t m = member_mask(p.family()[idx]);
    if (used & m) return false;
    used |= m;
  }
  return true;
}

Packing solve_packing_exact(const PackingInstance& p, int universe_limit) {
  if (p.universe_size() > universe_limit)
    throw SizeError("solve_packing_exact: universe " + std::to_string(p.universe_size()) +
                    " exceeds limit " + std::to_string(universe_limit) +
                    "; use the local search backend");

  const auto& family = p.family();
  std::vector<std::uint64_t> masks(family.size());
  for (size_t i = 0; i < family.size(); ++i) masks[i] = member_mask(family[i]);

  std::vector<int> best, current;
  // Include-first DFS in family order: the first maximum found is the
  // lexicographically smallest chosen list among maxima, and equal-size
  // candidates never replace it.
  auto dfs = [&](auto&& self, size_t idx, std::uint64_t used) -> void {
    if (current.size() + (family.size() - idx) <= best.size()) return;
    if (idx == family.size()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (!(used & masks[idx])) {
      current.push_back(static_cast<int>(idx));
      self(self, idx + 1, used | masks[idx]);
      current.pop_back();
    }
    self(self, idx + 1, used);
  };
  dfs(dfs, 0, 0);
  return Packing{best};
}

namespace {

// Searches for `needed` pairwise-disjoint candidate sets avoiding `used`,
// scanning family indices from `from` upward. Lexicographically first hit.
bool find_insertion(const std::vector<std::uint64_t>& masks, const std::vector<char>& chosen,
                    size_t from, std::uint64_t used, int needed, std::vector<int>* out) {
  if (needed == 0) return true;
  for (size_t i = from; i < masks.size(); ++i) {
    if (chosen[i] || (used & masks[i])) continue;
    out->push_back(static_cast<int>(i));
    if (find_insertion(masks, chosen, i + 1, used | masks[i], needed - 1, out)) return true;
    out->pop_back();
  }
  return false;
}

}  // namespace

Packing solve_packing_local_search(const PackingInstance& p, int swap_size) {
  if (swap_size < 1) throw InputError("solve_packing_local_search: swap_size must be >= 1");
  const auto& family = p.family();
  std::vector<std::uint64_t> masks(family.size());
  for (size_t i = 0; i < family.size(); ++i) masks[i] = member_mask(family[i]);

  std::vector<char> chosen(family.size(), 0);
  std::uint64_t used = 0;
  auto maximalize = [&]() {
    for (size_t i = 0; i < family.size(); ++i)
      if (!chosen[i] && !(used & masks[i])) {
        chosen[i] = 1;
        used |= masks[i];
      }
  };
  maximalize();

  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<int> chosen_list;
    for (size_t i = 0; i < family.size(); ++i)
      if (chosen[i]) chosen_list.push_back(static_cast<int>(i));

    for (int r = 1; r <= swap_size && !improved; ++r) {
      if (r > static_cast<int>(chosen_list.size())) break;
      // Enumerate r-subsets of the chosen list in lexicographic order.
      std::vector<int> pick(r);
      for (int i = 0; i < r; ++i) pick[i] = i;
      while (true) {
        std::uint64_t freed = used;
        for (int i : pick) freed &= ~masks[chosen_list[i]];
        std::vector<char> chosen_after = chosen;
        for (int i : pick) chosen_after[chosen_list[i]] = 0;
        std::vector<int> insert;
        if (find_insertion(masks, chosen_after, 0, freed, r + 1, &insert)) {
          for (int i : pick) {
            chosen[chosen_list[i]] = 0;
            used &= ~masks[chosen_list[i]];
          }
          for (int idx : insert) {
            chosen[idx] = 1;
            used |= masks[idx];
          }
          maximalize();
          improved = true;
          break;
        }
        // next combination
        int pos = r - 1;
        while (pos >= 0 && pick[pos] == static_cast<int>(chosen_list.size()) - r + pos) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int i = pos + 1; i < r; ++i) pick[i] = pick[i - 1] + 1;
      }
    }
  }

  Packing result;
  for (size_t i = 0; i < family.size(); ++i)
    if (chosen[i]) result.chosen.push_back(static_cast<int>(i));
  return result;
}

Packing solve_packing(const PackingInstance& p, const PackingBackend& backend) {
  if (backend.kind == PackingBackendKind::Exact) return solve_packing_exact(p);
  return solve_packing_local_search(p, backend.swap_size);
}

Rational packing_guarantee(const PackingBackend& backend) {
  if (backend.kind == PackingBackendKind::Exact) return Rational(1, 1);
  if (backend.swap_size <= 1) return Rational(1, 3);
  // A swap_size >= 2 local optimum is in particular a 2-swap local optimum,
  // for which the classical bound gives 1/2.
  return Rational(1, 2);
}

Rational reference_packing_guarantee(const Rational& eps) {
  return (Rational(3, 1) - eps) / Rational(4, 1);
}

}  // namespace densesf
