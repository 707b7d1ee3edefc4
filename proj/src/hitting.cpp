#include "rtvd/hitting.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rtvd {

void normalize(HittingInstance& inst) {
  for (auto& s : inst.sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(inst.sets.begin(), inst.sets.end());
  inst.sets.erase(std::unique(inst.sets.begin(), inst.sets.end()), inst.sets.end());
  std::sort(inst.universe.begin(), inst.universe.end());
  inst.universe.erase(std::unique(inst.universe.begin(), inst.universe.end()), inst.universe.end());
}

HittingInstance to_hitting_instance(const Digraph& d, int k) {
  if (!is_in_tournament(d) && !is_out_tournament(d)) {
    throw PreconditionError("to_hitting_instance: digraph is neither an in- nor an out-tournament");
  }
  HittingInstance inst;
  inst.k = k;
  for (Vertex v = 0; v < d.num_vertices(); ++v) inst.universe.push_back(v);
  for (const AcyclicTriangle& t : enumerate_acyclic_triangles(d)) inst.sets.push_back({t.a, t.b, t.c});
  normalize(inst);
  return inst;
}

namespace {

// Bounded-depth branching over elements, identified by their rank in the
// sorted list of elements that occur in some set.
class HittingSearch {
 public:
  explicit HittingSearch(const HittingInstance& inst) {
    for (const auto& s : inst.sets) elements_.insert(elements_.end(), s.begin(), s.end());
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (const auto& s : inst.sets) {
      std::vector<int> ranked;
      for (Vertex v : s) ranked.push_back(rank(v));
      sets_.push_back(std::move(ranked));
    }
    chosen_.assign(elements_.size(), 0);
  }

  int num_elements() const { return static_cast<int>(elements_.size()); }
  Vertex element(int r) const { return elements_[static_cast<std::size_t>(r)]; }

  void choose(int r) { chosen_[static_cast<std::size_t>(r)] = 1; }
  void unchoose(int r) { chosen_[static_cast<std::size_t>(r)] = 0; }

  // Can the sets left unhit be hit with `budget` more elements of rank > floor?
  bool completable(int budget, int floor) {
    int best = -1;
    int best_options = 4;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      const auto& s = sets_[i];
      if (std::any_of(s.begin(), s.end(), [&](int r) { return chosen_[static_cast<std::size_t>(r)] != 0; })) {
        continue;
      }
      int options = static_cast<int>(std::count_if(s.begin(), s.end(), [&](int r) { return r > floor; }));
      if (options < best_options) {
        best_options = options;
        best = static_cast<int>(i);
        if (options == 0) break;
      }
    }
    if (best < 0) return true;
    if (budget == 0 || best_options == 0) return false;
    for (int r : sets_[static_cast<std::size_t>(best)]) {
      if (r <= floor) continue;
      choose(r);
      bool ok = completable(budget - 1, floor);
      unchoose(r);
      if (ok) return true;
    }
    return false;
  }

 private:
  int rank(Vertex v) const {
    return static_cast<int>(std::lower_bound(elements_.begin(), elements_.end(), v) - elements_.begin());
  }

  std::vector<Vertex> elements_;
  std::vector<std::vector<int>> sets_;
  std::vector<char> chosen_;
};

}  // namespace

std::optional<std::vector<Vertex>> solve_hitting(const HittingInstance& inst) {
  if (inst.k < 0) return std::nullopt;
  for (const auto& s : inst.sets) {
    if (s.empty()) return std::nullopt;
  }
  HittingSearch search(inst);
  int size = 0;
  while (size <= inst.k && !search.completable(size, -1)) ++size;
  if (size > inst.k) return std::nullopt;

  // Lexicographically smallest witness of that size, one element at a time.
  std::vector<Vertex> witness;
  int floor = -1;
  for (int slot = 0; slot < size; ++slot) {
    int r = floor + 1;
    for (; r < search.num_elements(); ++r) {
      search.choose(r);
      if (search.completable(size - slot - 1, r)) break;
      search.unchoose(r);
    }
    witness.push_back(search.element(r));
    floor = r;
  }
  return witness;
}

namespace {

bool contains(const ElementSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_subset(const ElementSet& small, const ElementSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void drop_supersets(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ElementSet> kept;
  for (auto& s : sets) {
    bool subsumed = std::any_of(kept.begin(), kept.end(), [&](const ElementSet& t) {
      return t.size() < s.size() && is_subset(t, s);
    });
    if (!subsumed) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  sets = std::move(kept);
}

// Replaces the 3-sets of the first pair found in more than k of them.
bool apply_pair_rule(std::vector<ElementSet>& sets, int k) {
  std::map<std::pair<Vertex, Vertex>, int> count;
  for (const auto& s : sets) {
    if (s.size() != 3) continue;
    ++count[{s[0], s[1]}];
    ++count[{s[0], s[2]}];
    ++count[{s[1], s[2]}];
  }
  for (const auto& [pair, c] : count) {
    if (c <= k) continue;
    auto [u, v] = pair;
    std::erase_if(sets, [&](const ElementSet& s) { return s.size() == 3 && contains(s, u) && contains(s, v); });
    sets.push_back({u, v});
    return true;
  }
  return false;
}

std::optional<Vertex> find_forced_element(const std::vector<ElementSet>& sets, int k) {
  std::map<Vertex, std::pair<int, int>> occurrences;  // (all sets, sets of size <= 2)
  for (const auto& s : sets) {
    for (Vertex v : s) {
      auto& [all, small] = occurrences[v];
      ++all;
      if (s.size() <= 2) ++small;
      if (s.size() == 1) small = k + 1;
    }
  }
  for (const auto& [v, occ] : occurrences) {
    if (occ.second > k || static_cast<long long>(occ.first) > static_cast<long long>(k) * k) return v;
  }
  return std::nullopt;
}

}  // namespace

KernelResult kernelize_hitting(const HittingInstance& inst) {
  KernelResult result;
  result.instance = inst;
  normalize(result.instance);
  auto& sets = result.instance.sets;
  int& k = result.instance.k;

  while (k >= 0) {
    drop_supersets(sets);
    if (apply_pair_rule(sets, k)) continue;
    auto forced = find_forced_element(sets, k);
    if (!forced) break;
    std::erase_if(sets, [&](const ElementSet& s) { return contains(s, *forced); });
    result.forced.push_back(*forced);
    --k;
  }

  std::sort(result.forced.begin(), result.forced.end());
  std::erase_if(result.instance.universe,
                [&](Vertex v) { return std::binary_search(result.forced.begin(), result.forced.end(), v); });
  const long long cube = static_cast<long long>(k) * k * k;
  result.infeasible = k < 0 || (k == 0 && !sets.empty()) || static_cast<long long>(sets.size()) > cube;
  if (result.infeasible) sets.clear();
  return result;
}

std::optional<Solution> tvd_in_tournament(const Digraph& d, int k) {
  HittingInstance inst = to_hitting_instance(d, k);
  KernelResult kernel = kernelize_hitting(inst);
  if (kernel.infeasible) return std::nullopt;
  auto rest = solve_hitting(kernel.instance);
  if (!rest) return std::nullopt;
  std::vector<Vertex> deleted = kernel.forced;
  deleted.insert(deleted.end(), rest->begin(), rest->end());
  Solution sol = make_solution(d, std::move(deleted));
  if (!sol.remaining_transitive.empty()) {
    throw std::logic_error("tvd_in_tournament: hitting set left a transitive arc");
  }
  return sol;
}

}  // namespace rtvd
