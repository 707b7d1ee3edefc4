#include "rtvd/alpha_kernel.hpp"

#include <algorithm>
#include <queue>

namespace rtvd {

namespace {

void sort_unique(std::vector<Vertex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::size_t budget_cap(int k, int ell) { return static_cast<std::size_t>(k + ell + 1); }

}  // namespace

std::vector<Vertex> TrianglePacking::vertices() const {
  std::vector<Vertex> out;
  for (const auto& t : triangles) out.insert(out.end(), {t.a, t.b, t.c});
  sort_unique(out);
  return out;
}

TrianglePacking greedy_packing(const Digraph& d, int k, int ell) {
  if (!is_in_tournament(d)) throw PreconditionError("greedy_packing: digraph is not an in-tournament");
  TrianglePacking packing;
  std::vector<char> used(static_cast<std::size_t>(d.num_vertices()), 0);
  auto is_used = [&](Vertex v) { return used[static_cast<std::size_t>(v)] != 0; };
  for (const auto& t : enumerate_acyclic_triangles(d)) {
    if (is_used(t.a) || is_used(t.b) || is_used(t.c)) continue;
    packing.triangles.push_back(t);
    for (Vertex v : {t.a, t.b, t.c}) used[static_cast<std::size_t>(v)] = 1;
  }
  packing.no_instance = packing.triangles.size() > budget_cap(k, ell);
  return packing;
}

std::size_t TriangleCatalog::one_point_size() const {
  std::size_t total = 0;
  for (const auto& [v, list] : one_point) total += list.size();
  return total;
}

std::size_t TriangleCatalog::two_point_size() const {
  std::size_t total = 0;
  for (const auto& [e, list] : two_point) total += list.size();
  return total;
}

std::vector<Vertex> TriangleCatalog::vertices() const {
  std::vector<Vertex> out = base.vertices();
  for (const auto& [v, list] : one_point) {
    for (const auto& t : list) out.insert(out.end(), {t.a, t.b, t.c});
  }
  for (const auto& [e, list] : two_point) {
    for (const auto& t : list) out.insert(out.end(), {t.a, t.b, t.c});
  }
  sort_unique(out);
  return out;
}

TriangleCatalog build_catalog(const Digraph& d, const TrianglePacking& packing, int k, int ell) {
  TriangleCatalog catalog;
  catalog.base = packing;
  std::vector<char> packed(static_cast<std::size_t>(d.num_vertices()), 0);
  for (Vertex v : packing.vertices()) packed[static_cast<std::size_t>(v)] = 1;
  const std::size_t cap = budget_cap(k, ell);

  // Triangles arrive in lexicographic order, so appending until a list is
  // full keeps the smallest ones.
  for (const auto& t : enumerate_acyclic_triangles(d)) {
    std::vector<Vertex> hits;
    for (Vertex v : {t.a, t.b, t.c}) {
      if (packed[static_cast<std::size_t>(v)]) hits.push_back(v);
    }
    if (hits.size() == 1) {
      auto& list = catalog.one_point[hits[0]];
      if (list.size() < cap) list.push_back(t);
    } else if (hits.size() == 2) {
      Arc key = d.has_arc(hits[0], hits[1]) ? Arc{hits[0], hits[1]} : Arc{hits[1], hits[0]};
      auto& list = catalog.two_point[key];
      if (list.size() < cap) list.push_back(t);
    }
  }
  return catalog;
}

std::vector<Vertex> WholeGraphProvider::cut_preserving(const Digraph& d, Vertex, Vertex, int) const {
  std::vector<Vertex> all(static_cast<std::size_t>(d.num_vertices()));
  for (Vertex v = 0; v < d.num_vertices(); ++v) all[static_cast<std::size_t>(v)] = v;
  return all;
}

namespace {

// Unit-capacity flow network on the vertex-split digraph: vertex v becomes
// in(v) = 2v and out(v) = 2v + 1.
class SplitNetwork {
 public:
  SplitNetwork(const Digraph& d, Vertex x, Vertex y) : heads_(static_cast<std::size_t>(2 * d.num_vertices())) {
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
      if (v != x && v != y) add_edge(2 * v, 2 * v + 1);
    }
    for (const Arc& a : d.arcs()) {
      if (a.tail == x && a.head == y) continue;
      if (a.head == x || a.tail == y) continue;
      add_edge(2 * a.tail + 1, 2 * a.head);
    }
  }

  bool augment(int source, int sink) {
    std::vector<int> via(heads_.size(), -1);
    std::queue<int> queue;
    queue.push(source);
    via[static_cast<std::size_t>(source)] = -2;
    while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
      int u = queue.front();
      queue.pop();
      for (int e : heads_[static_cast<std::size_t>(u)]) {
        int w = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && via[static_cast<std::size_t>(w)] == -1) {
          via[static_cast<std::size_t>(w)] = e;
          queue.push(w);
        }
      }
    }
    if (via[static_cast<std::size_t>(sink)] == -1) return false;
    for (int w = sink; w != source;) {
      int e = via[static_cast<std::size_t>(w)];
      --cap_[static_cast<std::size_t>(e)];
      ++cap_[static_cast<std::size_t>(e ^ 1)];
      w = to_[static_cast<std::size_t>(e ^ 1)];
    }
    return true;
  }

  // Follows saturated forward edges from source to sink, consuming them.
  std::vector<int> take_path(int source, int sink) {
    std::vector<int> nodes{source};
    int u = source;
    while (u != sink) {
      for (int e : heads_[static_cast<std::size_t>(u)]) {
        if (e % 2 == 0 && cap_[static_cast<std::size_t>(e)] == 0 && !used_[static_cast<std::size_t>(e)]) {
          used_[static_cast<std::size_t>(e)] = 1;
          u = to_[static_cast<std::size_t>(e)];
          break;
        }
      }
      nodes.push_back(u);
    }
    return nodes;
  }

 private:
  void add_edge(int from, int to) {
    heads_[static_cast<std::size_t>(from)].push_back(static_cast<int>(to_.size()));
    to_.push_back(to);
    cap_.push_back(1);
    used_.push_back(0);
    heads_[static_cast<std::size_t>(to)].push_back(static_cast<int>(to_.size()));
    to_.push_back(from);
    cap_.push_back(0);
    used_.push_back(0);
  }

  std::vector<std::vector<int>> heads_;
  std::vector<int> to_;
  std::vector<int> cap_;
  std::vector<char> used_;
};

}  // namespace

std::vector<std::vector<Vertex>> FlowPathProvider::disjoint_paths(const Digraph& d, Vertex x, Vertex y, int limit) {
  if (x == y) throw std::invalid_argument("disjoint_paths: x and y must differ");
  SplitNetwork net(d, x, y);
  const int source = 2 * x + 1;
  const int sink = 2 * y;
  int flow = 0;
  while (flow < limit && net.augment(source, sink)) ++flow;

  std::vector<std::vector<Vertex>> paths;
  for (int i = 0; i < flow; ++i) {
    std::vector<Vertex> path;
    for (int node : net.take_path(source, sink)) {
      Vertex v = node / 2;
      if (path.empty() || path.back() != v) path.push_back(v);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

std::vector<Vertex> FlowPathProvider::cut_preserving(const Digraph& d, Vertex x, Vertex y, int k) const {
  auto paths = disjoint_paths(d, x, y, k + 1);
  if (static_cast<int>(paths.size()) <= k) return WholeGraphProvider{}.cut_preserving(d, x, y, k);
  std::vector<Vertex> z;
  for (const auto& p : paths) z.insert(z.end(), p.begin(), p.end());
  sort_unique(z);
  return z;
}

std::vector<Vertex> cut_preserving_set(const CutPreservingProvider& provider, const Digraph& d, Vertex x,
                                       Vertex y, int k) {
  if (k < 0) throw std::invalid_argument("cut_preserving_set: k must be non-negative");
  return provider.cut_preserving(d, x, y, k);
}

AlphaKernel assemble_kernel(const Digraph& d, int k, int ell, const CutPreservingProvider& provider) {
  if (k < 0 || ell < 0) throw std::invalid_argument("assemble_kernel: budgets must be non-negative");
  const bool in = is_in_tournament(d);
  if (!in && !is_out_tournament(d)) {
    throw PreconditionError("assemble_kernel: digraph is neither an in- nor an out-tournament");
  }
  // Reversal maps out-tournaments to in-tournaments and preserves which
  // arcs are transitive.
  const Digraph work = in ? d : d.reversed();

  AlphaKernel kernel;
  TrianglePacking packing = greedy_packing(work, k, ell);
  kernel.stats.packed = packing.triangles.size();
  if (packing.no_instance) {
    kernel.no_instance = true;
    const Arc triangle[] = {{0, 1}, {0, 2}, {1, 2}};
    kernel.instance = Instance{Digraph(3, triangle), 0, 0};
    return kernel;
  }

  TriangleCatalog catalog = build_catalog(work, packing, k, ell);
  kernel.stats.one_point = catalog.one_point_size();
  kernel.stats.two_point = catalog.two_point_size();
  std::vector<Vertex> core = catalog.vertices();
  kernel.stats.catalog_vertices = core.size();

  std::vector<Vertex> x = core;
  InducedSubgraph core_graph = work.induced(core);
  for (const Arc& a : core_graph.graph.arcs()) {
    Vertex u = core_graph.original[static_cast<std::size_t>(a.tail)];
    Vertex v = core_graph.original[static_cast<std::size_t>(a.head)];
    auto z = cut_preserving_set(provider, work, u, v, k);
    x.insert(x.end(), z.begin(), z.end());
    sort_unique(x);
    if (static_cast<int>(x.size()) == d.num_vertices()) break;
  }
  sort_unique(x);

  InducedSubgraph sub = d.induced(x);
  kernel.kept = sub.original;
  const int n = sub.graph.num_vertices();
  kernel.instance = Instance{std::move(sub.graph), std::min(k, n), ell};
  return kernel;
}

}  // namespace rtvd
