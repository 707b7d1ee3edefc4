#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rtvd/digraph.hpp"

namespace rtvd {

/// An ℓ-RTVD instance: may at most k vertices be deleted so that at most
/// ell transitive arcs remain?
struct Instance {
  Digraph digraph;
  int k = 0;
  int ell = 0;

  /// Throws std::invalid_argument unless 0 <= k <= n and ell >= 0.
  void validate() const;
};

/// Deleted vertex set (sorted) plus the transitive arcs of D - deleted.
struct Solution {
  std::vector<Vertex> deleted;
  std::vector<Arc> remaining_transitive;

  std::size_t size() const noexcept { return deleted.size(); }
};

struct Verification {
  bool ok = false;
  std::vector<Arc> remaining_transitive;
};

/// True iff |S| <= k and D - S has at most ell transitive arcs. Throws
/// std::invalid_argument when S is not a set of vertices of D.
Verification verify_solution(const Instance& inst, std::span<const Vertex> deleted);

/// Builds a Solution for `deleted` (sorted, with its certificate).
Solution make_solution(const Digraph& d, std::vector<Vertex> deleted);

inline constexpr int kDefaultOracleCap = 14;

/// Brute-force Min ℓ-RTVD: deletion sets by increasing size, then
/// lexicographically; the first feasible one is returned. Throws
/// CapExceededError when n > cap.
Solution min_rtvd_oracle(const Digraph& d, int ell, int cap = kDefaultOracleCap);

struct Decision {
  bool yes = false;
  std::optional<Solution> witness;
};

/// Same enumeration restricted to sets of size <= k; the witness is a
/// minimum solution. Throws CapExceededError when there are more than
/// 2^cap candidate sets.
Decision decide_rtvd_oracle(const Instance& inst, int cap = kDefaultOracleCap);

/// Visits every labelled tournament on n vertices (n <= 6) exactly once.
void for_each_tournament(int n, const std::function<void(const Digraph&)>& visit);
/// Visits every labelled digraph on n vertices (n <= 4); each ordered pair
/// is independently an arc, so there are 2^(n(n-1)) of them.
void for_each_digraph(int n, const std::function<void(const Digraph&)>& visit);

std::vector<Digraph> all_tournaments(int n);
std::vector<Digraph> all_digraphs(int n);

}  // namespace rtvd
