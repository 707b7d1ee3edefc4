#include "rtvd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rtvd {

void Instance::validate() const {
  if (k < 0 || ell < 0) throw std::invalid_argument("instance budgets must be non-negative");
  if (k > digraph.num_vertices()) {
    throw std::invalid_argument("deletion budget k = " + std::to_string(k) + " exceeds n = " +
                                std::to_string(digraph.num_vertices()));
  }
}

namespace {

std::vector<Vertex> normalized_set(const Digraph& d, std::span<const Vertex> s) {
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("deletion set contains a repeated vertex");
  }
  for (Vertex v : sorted) {
    if (v < 0 || v >= d.num_vertices()) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the digraph");
    }
  }
  return sorted;
}

}  // namespace

Verification verify_solution(const Instance& inst, std::span<const Vertex> deleted) {
  auto s = normalized_set(inst.digraph, deleted);
  Verification v;
  v.remaining_transitive = transitive_arcs_without(inst.digraph, s);
  v.ok = static_cast<int>(s.size()) <= inst.k &&
         v.remaining_transitive.size() <= static_cast<std::size_t>(inst.ell);
  return v;
}

Solution make_solution(const Digraph& d, std::vector<Vertex> deleted) {
  auto s = normalized_set(d, deleted);
  Solution sol;
  sol.remaining_transitive = transitive_arcs_without(d, s);
  sol.deleted = std::move(s);
  return sol;
}

namespace {

// Deletion sets of size <= max_size by increasing size, then
// lexicographically; the first feasible one wins. Feasibility is checked
// with plain BFS reachability on D - S, sharing nothing with the bitmask
// machinery the solvers use.
std::optional<Solution> first_feasible(const Digraph& d, int ell, int max_size) {
  const int n = d.num_vertices();
  std::vector<Vertex> subset;
  for (int size = 0; size <= std::min(n, max_size); ++size) {
    subset.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
      auto remaining = transitive_arcs_without(d, subset);
      if (remaining.size() <= static_cast<std::size_t>(ell)) {
        return Solution{subset, std::move(remaining)};
      }
      int i = size - 1;
      while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++subset[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

// Number of subsets of an n-set with at most `size` elements.
double subsets_up_to(int n, int size) {
  double total = 0;
  double term = 1;
  for (int i = 0; i <= std::min(n, size); ++i) {
    total += term;
    term = term * (n - i) / (i + 1);
  }
  return total;
}

}  // namespace

Solution min_rtvd_oracle(const Digraph& d, int ell, int cap) {
  const int n = d.num_vertices();
  if (n > cap) {
    throw CapExceededError("min_rtvd_oracle: n = " + std::to_string(n) + " exceeds oracle cap " +
                           std::to_string(cap));
  }
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  // Deleting every vertex leaves no arcs, so a solution always exists.
  return *first_feasible(d, ell, n);
}

Decision decide_rtvd_oracle(const Instance& inst, int cap) {
  inst.validate();
  const int n = inst.digraph.num_vertices();
  // Only sets of size <= k are examined, so the cap bounds their number
  // rather than n.
  if (subsets_up_to(n, inst.k) > std::ldexp(1.0, cap)) {
    throw CapExceededError("decide_rtvd_oracle: more than 2^" + std::to_string(cap) +
                           " candidate deletion sets (n = " + std::to_string(n) + ", k = " +
                           std::to_string(inst.k) + ")");
  }
  Decision decision;
  decision.witness = first_feasible(inst.digraph, inst.ell, inst.k);
  decision.yes = decision.witness.has_value();
  return decision;
}

namespace {

void enumerate_by_pair_mask(int n, bool tournament, const std::function<void(const Digraph&)>& visit) {
  std::vector<Arc> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = tournament ? u + 1 : 0; v < n; ++v) {
      if (u != v) slots.push_back({u, v});
    }
  }
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<Arc> arcs;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    arcs.clear();
    for (std::size_t b = 0; b < slots.size(); ++b) {
      const bool on = (mask >> b) & 1U;
      if (tournament) {
        arcs.push_back(on ? slots[b] : Arc{slots[b].head, slots[b].tail});
      } else if (on) {
        arcs.push_back(slots[b]);
      }
    }
    visit(Digraph(n, arcs));
  }
}

}  // namespace

void for_each_tournament(int n, const std::function<void(const Digraph&)>& visit) {
  if (n < 0 || n > 6) throw CapExceededError("for_each_tournament supports 0 <= n <= 6");
  enumerate_by_pair_mask(n, true, visit);
}

void for_each_digraph(int n, const std::function<void(const Digraph&)>& visit) {
  if (n < 0 || n > 4) throw CapExceededError("for_each_digraph supports 0 <= n <= 4");
  enumerate_by_pair_mask(n, false, visit);
}

std::vector<Digraph> all_tournaments(int n) {
  std::vector<Digraph> out;
  for_each_tournament(n, [&](const Digraph& d) { out.push_back(d); });
  return out;
}

std::vector<Digraph> all_digraphs(int n) {
  std::vector<Digraph> out;
  for_each_digraph(n, [&](const Digraph& d) { out.push_back(d); });
  return out;
}

}  // namespace rtvd
