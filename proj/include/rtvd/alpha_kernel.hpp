#pragma once

#include <map>
#include <memory>
#include <vector>

#include "rtvd/oracle.hpp"

namespace rtvd {

// Kernelization for ℓ-RTVD on in-tournaments (out-tournaments are handled
// through the reversed digraph). In an in-tournament an arc is transitive
// exactly when it is the long arc of an acyclic triangle, so bounding the
// triangles that matter bounds the instance.

struct TrianglePacking {
  std::vector<AcyclicTriangle> triangles;  // pairwise vertex-disjoint
  bool no_instance = false;                // more than k + ell + 1 triangles

  std::vector<Vertex> vertices() const;    // sorted
};

/// Greedy maximal packing in lexicographic triangle order. Throws
/// PreconditionError unless D is an in-tournament.
TrianglePacking greedy_packing(const Digraph& d, int k, int ell);

struct TriangleCatalog {
  TrianglePacking base;
  // Triangles meeting the packed vertices only in the key vertex.
  std::map<Vertex, std::vector<AcyclicTriangle>> one_point;
  // Triangles meeting the packed vertices exactly in the key arc's ends.
  std::map<Arc, std::vector<AcyclicTriangle>> two_point;

  std::size_t one_point_size() const;
  std::size_t two_point_size() const;
  std::vector<Vertex> vertices() const;  // V(△), sorted
};

/// Each list keeps its k + ell + 1 lexicographically smallest triangles.
TriangleCatalog build_catalog(const Digraph& d, const TrianglePacking& packing, int k, int ell);

/// Supplies a vertex set Z for the pair (x, y) such that x-y paths can be
/// rerouted inside Z.
class CutPreservingProvider {
 public:
  virtual ~CutPreservingProvider() = default;
  virtual std::vector<Vertex> cut_preserving(const Digraph& d, Vertex x, Vertex y, int k) const = 0;
};

/// Always V(D).
class WholeGraphProvider final : public CutPreservingProvider {
 public:
  std::vector<Vertex> cut_preserving(const Digraph& d, Vertex x, Vertex y, int k) const override;
};

/// Union of k + 1 internally vertex-disjoint x-y paths avoiding the arc
/// (x, y) when they exist, V(D) otherwise.
class FlowPathProvider final : public CutPreservingProvider {
 public:
  std::vector<Vertex> cut_preserving(const Digraph& d, Vertex x, Vertex y, int k) const override;

  /// Up to `limit` internally vertex-disjoint x-y paths in D minus the arc
  /// (x, y), each listed from x to y.
  static std::vector<std::vector<Vertex>> disjoint_paths(const Digraph& d, Vertex x, Vertex y, int limit);
};

std::vector<Vertex> cut_preserving_set(const CutPreservingProvider& provider, const Digraph& d, Vertex x,
                                       Vertex y, int k);

struct KernelStats {
  std::size_t packed = 0;
  std::size_t one_point = 0;
  std::size_t two_point = 0;
  std::size_t catalog_vertices = 0;
};

struct AlphaKernel {
  Instance instance;          // D[X] with k clamped to |X|
  std::vector<Vertex> kept;   // X as ids of the input digraph; kept[i] is vertex i of the kernel
  bool no_instance = false;   // packing verdict; instance is then a fixed NO instance
  KernelStats stats;
};

/// D[X] with X = V(△) plus Z(x, y) for every arc (x, y) of D[V(△)].
/// Throws PreconditionError unless D is an in- or out-tournament.
AlphaKernel assemble_kernel(const Digraph& d, int k, int ell, const CutPreservingProvider& provider);

}  // namespace rtvd
