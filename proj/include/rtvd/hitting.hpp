#pragma once

#include <optional>
#include <vector>

#include "rtvd/oracle.hpp"

namespace rtvd {

using ElementSet = std::vector<Vertex>;  // sorted, no repeats

/// 3-Hitting Set: pick at most k elements of `universe` meeting every set.
struct HittingInstance {
  std::vector<Vertex> universe;
  std::vector<ElementSet> sets;  // sizes 2 or 3, sorted, deduplicated
  int k = 0;
};

/// Sorts each set, sorts the family and drops repeats.
void normalize(HittingInstance& inst);

/// Acyclic triangles of an in- or out-tournament as 3-sets over V(D).
/// Throws PreconditionError for any other digraph.
HittingInstance to_hitting_instance(const Digraph& d, int k);

/// Smallest hitting set of size at most k (ties broken lexicographically),
/// or nullopt.
std::optional<std::vector<Vertex>> solve_hitting(const HittingInstance& inst);

struct KernelResult {
  HittingInstance instance;     // reduced instance, budget already decremented
  std::vector<Vertex> forced;   // sorted; in every hitting set of size <= k
  bool infeasible = false;
};

/// Exhaustive reduction rules:
///  - a pair in more than k 3-sets becomes a 2-set;
///  - a set containing another set is dropped;
///  - an element in more than k 2-sets, or in more than k^2 sets, is forced;
///  - repeated sets are dropped.
/// The instance is infeasible once k < 0, once k = 0 with sets left, or
/// once more than k^3 sets remain.
KernelResult kernelize_hitting(const HittingInstance& inst);

/// Min 0-RTVD on an in- or out-tournament with at most k deletions, via the
/// triangle hitting-set formulation. Throws PreconditionError for other
/// digraphs.
std::optional<Solution> tvd_in_tournament(const Digraph& d, int k);

}  // namespace rtvd
