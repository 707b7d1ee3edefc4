#pragma once

#include <utility>
#include <vector>

#include "rtvd/oracle.hpp"

namespace rtvd {

struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // (u, v) with u < v, sorted

  UndirectedGraph() = default;
  /// Normalizes edge orientation and order. Throws std::invalid_argument on
  /// self-loops, repeated edges or ids outside 0..n-1.
  UndirectedGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges);
};

struct TerminalPair {
  Vertex s = 0;
  Vertex t = 0;
  auto operator<=>(const TerminalPair&) const = default;
};

struct MulticutInstance {
  Digraph dag;
  std::vector<TerminalPair> terminals;
  int k = 0;

  /// Throws PreconditionError unless the digraph is acyclic, every pair has
  /// s != t, (s, t) is not an arc, t is reachable from s, and no pair is
  /// listed twice.
  void validate() const;
};

/// Vertex Cover to ℓ-RTVD. Vertex ids of the result:
///   0..n-1            the vertices of G
///   n + e             x_e for the e-th edge (i, j) of G.edges: arcs (i, x_e), (x_e, j), (i, j)
///   n + m + 3j + 0/1/2  v'_j, x'_j, v*_j for j < ell: arcs (v', v*), (v', x'), (x', v*),
///                     plus (v*, 0) when n > 0
Instance vc_to_rtvd(const UndirectedGraph& g, int k, int ell);

/// Vertex Multicut on DAGs to 0-RTVD. Vertex ids of the result:
///   0..n-1                 the vertices of G
///   n + e                  e_uv for the e-th arc (u, v) of G in lexicographic order
///   n + m + 2(k+1)i + j    s_i^(j+1), j <= k
///   n + m + 2(k+1)i + k+1+j  t_i^(j+1), j <= k
/// Arcs: (s_i, t_i); (u, e_uv), (e_uv, v); (s_i^j, t_i^j') for all j, j';
/// (s_i^j, e) for every subdivision vertex e with s_i -> e, and (e, t_i^j)
/// for every subdivision vertex e with e -> t_i. Budget k, ell = 0.
Instance multicut_to_tvd(const MulticutInstance& mc);

inline constexpr int kReductionOracleCap = 14;

/// Brute force; throws CapExceededError when n > cap.
bool vertex_cover_oracle(const UndirectedGraph& g, int k, int cap = kReductionOracleCap);
/// Brute force over non-terminal vertex sets; throws CapExceededError when n > cap.
bool multicut_oracle(const MulticutInstance& mc, int cap = kReductionOracleCap);

}  // namespace rtvd
