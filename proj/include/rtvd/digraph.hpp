#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rtvd/errors.hpp"

namespace rtvd {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Ordered triple with arcs (a,b), (b,c) and (a,c). The arc (a,c) is the
/// transitive one and b is the midpoint.
struct AcyclicTriangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  Arc transitive_arc() const { return {a, c}; }
  friend auto operator<=>(const AcyclicTriangle&, const AcyclicTriangle&) = default;
};

struct InducedSubgraph;

/// Simple digraph on vertices 0..n-1. Self-loops and parallel arcs are
/// rejected; a 2-cycle (u,v),(v,u) is allowed. Neighbor lists are kept
/// sorted so arcs() and every derived enumeration are deterministic.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::span<const Arc> arcs);

  int num_vertices() const noexcept { return static_cast<int>(out_.size()); }
  std::size_t num_arcs() const noexcept { return num_arcs_; }

  bool has_arc(Vertex tail, Vertex head) const;
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  const std::vector<Vertex>& out_neighbors(Vertex v) const;
  const std::vector<Vertex>& in_neighbors(Vertex v) const;

  /// All arcs in lexicographic (tail, head) order.
  std::vector<Arc> arcs() const;

  /// Throws std::invalid_argument on a self-loop, a duplicate arc or an
  /// out-of-range endpoint.
  void add_arc(Vertex tail, Vertex head);
  /// Returns false when the arc was not present.
  bool remove_arc(Vertex tail, Vertex head);

  Digraph reversed() const;

  /// D[vertices], relabelled 0..|vertices|-1 in the given order.
  InducedSubgraph induced(std::span<const Vertex> vertices) const;

  /// D - removed, relabelled; the survivors keep their relative order.
  InducedSubgraph without(std::span<const Vertex> removed) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t num_arcs_ = 0;
};

struct InducedSubgraph {
  Digraph graph;
  std::vector<Vertex> original;  // original[i] is the parent id of local vertex i
};

// ---------------------------------------------------------------------------
// Transitive arcs

/// True iff head is reachable from tail in D - e. Throws
/// std::invalid_argument when e is not an arc of D.
bool is_transitive_arc(const Digraph& d, Arc e);

/// Every transitive arc, lexicographic order.
std::vector<Arc> transitive_arcs(const Digraph& d);

/// Transitive arcs of D - deleted, reported with the original vertex ids.
std::vector<Arc> transitive_arcs_without(const Digraph& d, std::span<const Vertex> deleted);

/// Number of transitive arcs. When stop_above is given, counting stops as
/// soon as the count exceeds it and stop_above + 1 is returned.
std::size_t count_transitive_arcs(const Digraph& d,
                                  std::optional<std::size_t> stop_above = std::nullopt);

/// All acyclic triangles (a,b,c), sorted lexicographically.
std::vector<AcyclicTriangle> enumerate_acyclic_triangles(const Digraph& d);

// ---------------------------------------------------------------------------
// Class recognition

bool is_tournament(const Digraph& d);
bool is_in_tournament(const Digraph& d);
bool is_out_tournament(const Digraph& d);
bool is_local_tournament(const Digraph& d);
bool is_acyclic(const Digraph& d);
bool is_weakly_connected(const Digraph& d);

/// Topological ordering, smallest available id first. Throws CycleError
/// with a witness cycle when D is not acyclic.
std::vector<Vertex> topological_ordering(const Digraph& d);

/// Unique topological ordering of a connected acyclic local tournament,
/// together with the last out-neighbor position of every vertex.
struct ReachProfile {
  std::vector<Vertex> order;    // order[i] = vertex at position i
  std::vector<int> position;    // position[v] = index of v in order
  std::vector<int> reach_end;   // reach_end[i] = last position j with (order[i], order[j]) an arc, or i

  int size() const noexcept { return static_cast<int>(order.size()); }
};

/// Throws PreconditionError naming the first violated requirement: not
/// acyclic, not connected, not a local tournament, or no Hamiltonian path.
ReachProfile reach_profile(const Digraph& d);

/// At most one directed path between every ordered pair of distinct
/// vertices. Uses a saturating path-count DP on acyclic inputs and bounded
/// simple-path enumeration otherwise.
bool is_singly_connected(const Digraph& d);

inline constexpr int kDefaultIndependenceCap = 30;

/// Exact independence number of the underlying undirected graph. Throws
/// CapExceededError when n > cap; callers must then supply alpha themselves.
int independence_number(const Digraph& d, int cap = kDefaultIndependenceCap);

}  // namespace rtvd
