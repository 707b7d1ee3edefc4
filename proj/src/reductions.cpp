#include "rtvd/reductions.hpp"

#include <algorithm>
#include <string>

namespace rtvd {

UndirectedGraph::UndirectedGraph(int n_, std::vector<std::pair<Vertex, Vertex>> edges_) : n(n_) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (auto [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("repeated edge");
  }
}

namespace {

bool reaches(const Digraph& d, Vertex from, Vertex to, const std::vector<char>& removed) {
  std::vector<char> seen(static_cast<std::size_t>(d.num_vertices()), 0);
  std::vector<Vertex> stack{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    if (u == to) return true;
    for (Vertex w : d.out_neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)] && !removed[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return false;
}

// Calls test(removed) for every subset of `pool` with at most k elements;
// returns true as soon as one passes.
template <typename Test>
bool any_subset_up_to(const std::vector<Vertex>& pool, int n, int k, Test&& test) {
  const int p = static_cast<int>(pool.size());
  std::vector<int> idx;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (int size = 0; size <= std::min(k, p); ++size) {
    idx.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::fill(removed.begin(), removed.end(), 0);
      for (int i : idx) removed[static_cast<std::size_t>(pool[static_cast<std::size_t>(i)])] = 1;
      if (test(removed)) return true;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return false;
}

}  // namespace

void MulticutInstance::validate() const {
  if (k < 0) throw PreconditionError("multicut budget must be non-negative");
  if (!is_acyclic(dag)) throw PreconditionError("multicut digraph is not acyclic");
  const int n = dag.num_vertices();
  std::vector<char> none(static_cast<std::size_t>(n), 0);
  std::vector<TerminalPair> sorted = terminals;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("terminal pair listed twice");
  }
  for (const auto& [s, t] : terminals) {
    if (s < 0 || t < 0 || s >= n || t >= n) throw PreconditionError("terminal out of range");
    if (s == t) throw PreconditionError("terminal pair with s = t");
    if (dag.has_arc(s, t)) throw PreconditionError("terminal pair joined by an arc");
    if (!reaches(dag, s, t, none)) throw PreconditionError("terminal t is not reachable from s");
  }
}

Instance vc_to_rtvd(const UndirectedGraph& g, int k, int ell) {
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  const int n = g.n;
  const int m = static_cast<int>(g.edges.size());
  Digraph h(n + m + 3 * ell);
  for (int e = 0; e < m; ++e) {
    auto [i, j] = g.edges[static_cast<std::size_t>(e)];
    const Vertex x = n + e;
    h.add_arc(i, x);
    h.add_arc(x, j);
    h.add_arc(i, j);
  }
  for (int j = 0; j < ell; ++j) {
    const Vertex vp = n + m + 3 * j;
    const Vertex xp = vp + 1;
    const Vertex vs = vp + 2;
    h.add_arc(vp, vs);
    h.add_arc(vp, xp);
    h.add_arc(xp, vs);
    if (n > 0) h.add_arc(vs, 0);
  }
  return Instance{std::move(h), k, ell};
}

Instance multicut_to_tvd(const MulticutInstance& mc) {
  mc.validate();
  const Digraph& g = mc.dag;
  const int n = g.num_vertices();
  const std::vector<Arc> arcs = g.arcs();
  const int m = static_cast<int>(arcs.size());
  const int copies = mc.k + 1;
  const int r = static_cast<int>(mc.terminals.size());
  Digraph d(n + m + 2 * copies * r);

  for (const auto& [s, t] : mc.terminals) d.add_arc(s, t);
  // No arc of G joins a terminal pair (validated), so every arc is subdivided.
  for (int e = 0; e < m; ++e) {
    d.add_arc(arcs[static_cast<std::size_t>(e)].tail, n + e);
    d.add_arc(n + e, arcs[static_cast<std::size_t>(e)].head);
  }
  for (int i = 0; i < r; ++i) {
    const auto [s, t] = mc.terminals[static_cast<std::size_t>(i)];
    const Vertex s_base = n + m + 2 * copies * i;
    const Vertex t_base = s_base + copies;
    for (int a = 0; a < copies; ++a) {
      for (int b = 0; b < copies; ++b) d.add_arc(s_base + a, t_base + b);
    }
    // Neighbourhoods are read among the subdivision vertices; through the
    // terminal arc, t_i itself would make (s_i^j, t_i) transitive.
    for (int e = 0; e < m; ++e) {
      const Arc& a = arcs[static_cast<std::size_t>(e)];
      for (int j = 0; j < copies; ++j) {
        if (a.tail == s) d.add_arc(s_base + j, n + e);
        if (a.head == t) d.add_arc(n + e, t_base + j);
      }
    }
  }
  return Instance{std::move(d), mc.k, 0};
}

bool vertex_cover_oracle(const UndirectedGraph& g, int k, int cap) {
  if (g.n > cap) throw CapExceededError("vertex_cover_oracle: n exceeds cap " + std::to_string(cap));
  std::vector<Vertex> pool(static_cast<std::size_t>(g.n));
  for (Vertex v = 0; v < g.n; ++v) pool[static_cast<std::size_t>(v)] = v;
  return any_subset_up_to(pool, g.n, k, [&](const std::vector<char>& in) {
    return std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
      return in[static_cast<std::size_t>(e.first)] || in[static_cast<std::size_t>(e.second)];
    });
  });
}

bool multicut_oracle(const MulticutInstance& mc, int cap) {
  mc.validate();
  const int n = mc.dag.num_vertices();
  if (n > cap) throw CapExceededError("multicut_oracle: n exceeds cap " + std::to_string(cap));
  std::vector<char> terminal(static_cast<std::size_t>(n), 0);
  for (const auto& [s, t] : mc.terminals) terminal[static_cast<std::size_t>(s)] = terminal[static_cast<std::size_t>(t)] = 1;
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < n; ++v) {
    if (!terminal[static_cast<std::size_t>(v)]) pool.push_back(v);
  }
  return any_subset_up_to(pool, n, mc.k, [&](const std::vector<char>& removed) {
    return std::none_of(mc.terminals.begin(), mc.terminals.end(),
                        [&](const TerminalPair& p) { return reaches(mc.dag, p.s, p.t, removed); });
  });
}

}  // namespace rtvd
