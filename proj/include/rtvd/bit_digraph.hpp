#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "rtvd/digraph.hpp"

namespace rtvd {

using VertexMask = std::uint64_t;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }

/// Dense adjacency bitmasks for digraphs with at most 64 vertices. Used by
/// the subset-enumeration solvers, which evaluate many small induced
/// subgraphs through an alive mask instead of materialising them.
class BitDigraph {
 public:
  static constexpr int kMaxVertices = 64;

  BitDigraph() = default;
  explicit BitDigraph(int n);
  explicit BitDigraph(const Digraph& d);
  static BitDigraph induced(const Digraph& d, std::span<const Vertex> vertices);

  int num_vertices() const noexcept { return static_cast<int>(out_.size()); }
  VertexMask all() const noexcept {
    return num_vertices() == 64 ? ~VertexMask{0} : bit(num_vertices()) - 1;
  }

  VertexMask out(int v) const { return out_[static_cast<std::size_t>(v)]; }
  bool has_arc(int u, int v) const { return (out(u) & bit(v)) != 0; }

  void set_arc(int u, int v) { out_[static_cast<std::size_t>(u)] |= bit(v); }
  void clear_arc(int u, int v) { out_[static_cast<std::size_t>(u)] &= ~bit(v); }
  void set_out(int u, VertexMask mask) { out_[static_cast<std::size_t>(u)] = mask; }

  /// (u,v) must be an arc with both ends alive. True iff v is reachable
  /// from u inside `alive` without using the arc itself.
  bool is_transitive(int u, int v, VertexMask alive) const;

  /// Transitive arcs of the subgraph induced by `alive`; stops once the
  /// count exceeds stop_above and returns stop_above + 1.
  int count_transitive(VertexMask alive, int stop_above) const;

  std::vector<Arc> transitive_arcs(VertexMask alive) const;

 private:
  std::vector<VertexMask> out_;
};

}  // namespace rtvd
