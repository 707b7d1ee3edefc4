#include "rtvd/bit_digraph.hpp"

#include <string>

namespace rtvd {

BitDigraph::BitDigraph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw CapExceededError("BitDigraph supports at most 64 vertices, got " + std::to_string(n));
  }
  out_.assign(static_cast<std::size_t>(n), 0);
}

BitDigraph::BitDigraph(const Digraph& d) : BitDigraph(d.num_vertices()) {
  for (const Arc& a : d.arcs()) set_arc(a.tail, a.head);
}

BitDigraph BitDigraph::induced(const Digraph& d, std::span<const Vertex> vertices) {
  BitDigraph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (i != j && d.has_arc(vertices[i], vertices[j])) {
        g.set_arc(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

bool BitDigraph::is_transitive(int u, int v, VertexMask alive) const {
  const VertexMask blocked = bit(u) | bit(v);
  VertexMask reached = out(u) & alive & ~bit(v);
  VertexMask frontier = reached;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= out(std::countr_zero(f));
    if (next & bit(v)) return true;
    next &= alive & ~reached & ~blocked;
    reached |= next;
    frontier = next;
  }
  return false;
}

int BitDigraph::count_transitive(VertexMask alive, int stop_above) const {
  int count = 0;
  for (VertexMask us = alive; us; us &= us - 1) {
    int u = std::countr_zero(us);
    for (VertexMask vs = out(u) & alive; vs; vs &= vs - 1) {
      int v = std::countr_zero(vs);
      if (is_transitive(u, v, alive) && ++count > stop_above) return count;
    }
  }
  return count;
}

std::vector<Arc> BitDigraph::transitive_arcs(VertexMask alive) const {
  std::vector<Arc> result;
  for (VertexMask us = alive; us; us &= us - 1) {
    int u = std::countr_zero(us);
    for (VertexMask vs = out(u) & alive; vs; vs &= vs - 1) {
      int v = std::countr_zero(vs);
      if (is_transitive(u, v, alive)) result.push_back({u, v});
    }
  }
  return result;
}

}  // namespace rtvd
