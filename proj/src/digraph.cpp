#include "rtvd/digraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <string>

#include "rtvd/bit_digraph.hpp"

namespace rtvd {

Digraph::Digraph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  out_.resize(static_cast<std::size_t>(n));
  in_.resize(static_cast<std::size_t>(n));
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  for (const Arc& a : arcs) add_arc(a.tail, a.head);
}

void Digraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= num_vertices()) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(num_vertices()) + ")");
  }
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  check_vertex(tail);
  check_vertex(head);
  const auto& nb = out_[static_cast<std::size_t>(tail)];
  return std::binary_search(nb.begin(), nb.end(), head);
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  return out_[static_cast<std::size_t>(v)];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  return in_[static_cast<std::size_t>(v)];
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(num_arcs_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : out_[static_cast<std::size_t>(u)]) result.push_back({u, v});
  }
  return result;
}

void Digraph::add_arc(Vertex tail, Vertex head) {
  check_vertex(tail);
  check_vertex(head);
  if (tail == head) throw std::invalid_argument("self-loop at vertex " + std::to_string(tail));
  auto& out = out_[static_cast<std::size_t>(tail)];
  auto it = std::lower_bound(out.begin(), out.end(), head);
  if (it != out.end() && *it == head) {
    throw std::invalid_argument("duplicate arc (" + std::to_string(tail) + "," +
                                std::to_string(head) + ")");
  }
  out.insert(it, head);
  auto& in = in_[static_cast<std::size_t>(head)];
  in.insert(std::lower_bound(in.begin(), in.end(), tail), tail);
  ++num_arcs_;
}

bool Digraph::remove_arc(Vertex tail, Vertex head) {
  check_vertex(tail);
  check_vertex(head);
  auto& out = out_[static_cast<std::size_t>(tail)];
  auto it = std::lower_bound(out.begin(), out.end(), head);
  if (it == out.end() || *it != head) return false;
  out.erase(it);
  auto& in = in_[static_cast<std::size_t>(head)];
  in.erase(std::lower_bound(in.begin(), in.end(), tail));
  --num_arcs_;
  return true;
}

Digraph Digraph::reversed() const {
  Digraph r;
  r.out_ = in_;
  r.in_ = out_;
  r.num_arcs_ = num_arcs_;
  return r;
}

InducedSubgraph Digraph::induced(std::span<const Vertex> vertices) const {
  std::vector<int> local(static_cast<std::size_t>(num_vertices()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    if (local[static_cast<std::size_t>(vertices[i])] != -1) {
      throw std::invalid_argument("repeated vertex in induced subgraph request");
    }
    local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  }
  InducedSubgraph sub{Digraph(static_cast<int>(vertices.size())),
                      std::vector<Vertex>(vertices.begin(), vertices.end())};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : out_[static_cast<std::size_t>(vertices[i])]) {
      int j = local[static_cast<std::size_t>(w)];
      if (j >= 0) sub.graph.add_arc(static_cast<Vertex>(i), j);
    }
  }
  return sub;
}

InducedSubgraph Digraph::without(std::span<const Vertex> removed) const {
  std::vector<char> gone(static_cast<std::size_t>(num_vertices()), 0);
  for (Vertex v : removed) {
    check_vertex(v);
    gone[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < num_vertices(); ++v) {
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  }
  return induced(keep);
}

// ---------------------------------------------------------------------------

namespace {

// BFS from e.tail over alive vertices, skipping the arc e itself.
class ReachabilityProbe {
 public:
  explicit ReachabilityProbe(const Digraph& d)
      : d_(d), seen_(static_cast<std::size_t>(d.num_vertices()), 0) {}

  bool reaches_without_arc(Arc e, const std::vector<char>* alive) {
    ++stamp_;
    queue_.clear();
    mark(e.tail);
    queue_.push_back(e.tail);
    while (!queue_.empty()) {
      Vertex u = queue_.front();
      queue_.pop_front();
      for (Vertex w : d_.out_neighbors(u)) {
        if (u == e.tail && w == e.head) continue;
        if (alive && !(*alive)[static_cast<std::size_t>(w)]) continue;
        if (w == e.head) return true;
        if (seen(w)) continue;
        mark(w);
        queue_.push_back(w);
      }
    }
    return false;
  }

 private:
  void mark(Vertex v) { seen_[static_cast<std::size_t>(v)] = stamp_; }
  bool seen(Vertex v) const { return seen_[static_cast<std::size_t>(v)] == stamp_; }

  const Digraph& d_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  std::deque<Vertex> queue_;
};

}  // namespace

bool is_transitive_arc(const Digraph& d, Arc e) {
  if (!d.has_arc(e.tail, e.head)) throw std::invalid_argument("arc not present in digraph");
  ReachabilityProbe probe(d);
  return probe.reaches_without_arc(e, nullptr);
}

std::vector<Arc> transitive_arcs(const Digraph& d) {
  ReachabilityProbe probe(d);
  std::vector<Arc> result;
  for (const Arc& e : d.arcs()) {
    if (probe.reaches_without_arc(e, nullptr)) result.push_back(e);
  }
  return result;
}

std::vector<Arc> transitive_arcs_without(const Digraph& d, std::span<const Vertex> deleted) {
  std::vector<char> alive(static_cast<std::size_t>(d.num_vertices()), 1);
  for (Vertex v : deleted) {
    if (v < 0 || v >= d.num_vertices()) throw std::invalid_argument("deleted vertex out of range");
    alive[static_cast<std::size_t>(v)] = 0;
  }
  ReachabilityProbe probe(d);
  std::vector<Arc> result;
  for (const Arc& e : d.arcs()) {
    if (!alive[static_cast<std::size_t>(e.tail)] || !alive[static_cast<std::size_t>(e.head)]) continue;
    if (probe.reaches_without_arc(e, &alive)) result.push_back(e);
  }
  return result;
}

std::size_t count_transitive_arcs(const Digraph& d, std::optional<std::size_t> stop_above) {
  ReachabilityProbe probe(d);
  std::size_t count = 0;
  for (Vertex u = 0; u < d.num_vertices(); ++u) {
    for (Vertex v : d.out_neighbors(u)) {
      if (!probe.reaches_without_arc({u, v}, nullptr)) continue;
      ++count;
      if (stop_above && count > *stop_above) return count;
    }
  }
  return count;
}

std::vector<AcyclicTriangle> enumerate_acyclic_triangles(const Digraph& d) {
  std::vector<AcyclicTriangle> result;
  for (Vertex a = 0; a < d.num_vertices(); ++a) {
    const auto& out_a = d.out_neighbors(a);
    for (Vertex b : out_a) {
      // c ranges over out(a) ∩ out(b); both lists are sorted.
      const auto& out_b = d.out_neighbors(b);
      std::vector<Vertex> common;
      std::set_intersection(out_a.begin(), out_a.end(), out_b.begin(), out_b.end(),
                            std::back_inserter(common));
      for (Vertex c : common) result.push_back({a, b, c});
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

// ---------------------------------------------------------------------------

bool is_tournament(const Digraph& d) {
  const auto n = static_cast<std::size_t>(d.num_vertices());
  if (d.num_arcs() != n * (n - (n > 0 ? 1 : 0)) / 2) return false;
  for (Vertex u = 0; u < d.num_vertices(); ++u) {
    for (Vertex v = u + 1; v < d.num_vertices(); ++v) {
      if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
    }
  }
  return true;
}

namespace {

bool induces_tournament(const Digraph& d, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (d.has_arc(vs[i], vs[j]) == d.has_arc(vs[j], vs[i])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_in_tournament(const Digraph& d) {
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    if (!induces_tournament(d, d.in_neighbors(v))) return false;
  }
  return true;
}

bool is_out_tournament(const Digraph& d) {
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    if (!induces_tournament(d, d.out_neighbors(v))) return false;
  }
  return true;
}

bool is_local_tournament(const Digraph& d) { return is_in_tournament(d) && is_out_tournament(d); }

bool is_acyclic(const Digraph& d) {
  try {
    topological_ordering(d);
    return true;
  } catch (const CycleError&) {
    return false;
  }
}

bool is_weakly_connected(const Digraph& d) {
  const int n = d.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (const auto* nb : {&d.out_neighbors(u), &d.in_neighbors(u)}) {
      for (Vertex w : *nb) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<Vertex> topological_ordering(const Digraph& d) {
  const int n = d.num_vertices();
  std::vector<int> indegree(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) indegree[static_cast<std::size_t>(v)] = static_cast<int>(d.in_neighbors(v).size());

  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!ready.empty()) {
    Vertex u = ready.top();
    ready.pop();
    order.push_back(u);
    for (Vertex w : d.out_neighbors(u)) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) == n) return order;

  // Every leftover vertex keeps an in-neighbor among the leftovers, so
  // walking in-arcs backwards must eventually repeat a vertex.
  Vertex start = 0;
  while (indegree[static_cast<std::size_t>(start)] == 0) ++start;
  std::vector<int> visit_index(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> walk;
  Vertex cur = start;
  while (visit_index[static_cast<std::size_t>(cur)] == -1) {
    visit_index[static_cast<std::size_t>(cur)] = static_cast<int>(walk.size());
    walk.push_back(cur);
    for (Vertex p : d.in_neighbors(cur)) {
      if (indegree[static_cast<std::size_t>(p)] > 0) {
        cur = p;
        break;
      }
    }
  }
  std::vector<Vertex> cycle(walk.begin() + visit_index[static_cast<std::size_t>(cur)], walk.end());
  std::reverse(cycle.begin(), cycle.end());
  throw CycleError(std::move(cycle));
}

ReachProfile reach_profile(const Digraph& d) {
  const int n = d.num_vertices();
  std::vector<Vertex> order;
  try {
    order = topological_ordering(d);
  } catch (const CycleError&) {
    throw PreconditionError("reach_profile: digraph is not acyclic");
  }
  if (!is_weakly_connected(d)) throw PreconditionError("reach_profile: digraph is not connected");

  ReachProfile profile;
  profile.order = std::move(order);
  profile.position.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) profile.position[static_cast<std::size_t>(profile.order[static_cast<std::size_t>(i)])] = i;

  for (int i = 0; i + 1 < n; ++i) {
    if (!d.has_arc(profile.order[static_cast<std::size_t>(i)], profile.order[static_cast<std::size_t>(i + 1)])) {
      if (!is_local_tournament(d)) throw PreconditionError("reach_profile: digraph is not a local tournament");
      throw PreconditionError("reach_profile: topological ordering is not a Hamiltonian path");
    }
  }

  // With a Hamiltonian path in place, D is a local tournament exactly when
  // every out-neighborhood is the contiguous block (i, reach_end(i)] and
  // reach_end is nondecreasing. This avoids the quadratic-per-vertex
  // recognizers on large inputs.
  profile.reach_end.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    Vertex v = profile.order[static_cast<std::size_t>(i)];
    int last = i;
    for (Vertex w : d.out_neighbors(v)) last = std::max(last, profile.position[static_cast<std::size_t>(w)]);
    profile.reach_end[static_cast<std::size_t>(i)] = last;
    bool contiguous = static_cast<int>(d.out_neighbors(v).size()) == last - i;
    bool monotone = i == 0 || profile.reach_end[static_cast<std::size_t>(i - 1)] <= last;
    if (!contiguous || !monotone) throw PreconditionError("reach_profile: digraph is not a local tournament");
  }
  return profile;
}

// ---------------------------------------------------------------------------

namespace {

bool singly_connected_dag(const Digraph& d, const std::vector<Vertex>& order) {
  const int n = d.num_vertices();
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
  std::vector<std::uint8_t> paths(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(paths.begin(), paths.end(), 0);
    paths[static_cast<std::size_t>(s)] = 1;
    for (int i = position[static_cast<std::size_t>(s)]; i < n; ++i) {
      Vertex u = order[static_cast<std::size_t>(i)];
      std::uint8_t pu = paths[static_cast<std::size_t>(u)];
      if (pu == 0) continue;
      if (u != s && pu >= 2) return false;
      for (Vertex w : d.out_neighbors(u)) {
        auto& pw = paths[static_cast<std::size_t>(w)];
        pw = static_cast<std::uint8_t>(std::min(2, pw + pu));
      }
    }
  }
  return true;
}

// Counts simple paths from s to every target; aborts at the second path
// to any target. Singly connected graphs have at most n-1 paths per
// source, so the search stays linear in that case.
class SimplePathCounter {
 public:
  explicit SimplePathCounter(const Digraph& d)
      : d_(d),
        on_path_(static_cast<std::size_t>(d.num_vertices()), 0),
        hits_(static_cast<std::size_t>(d.num_vertices()), 0) {}

  bool at_most_one_path_from(Vertex s) {
    std::fill(hits_.begin(), hits_.end(), 0);
    source_ = s;
    on_path_[static_cast<std::size_t>(s)] = 1;
    bool ok = extend(s);
    on_path_[static_cast<std::size_t>(s)] = 0;
    return ok;
  }

 private:
  bool extend(Vertex u) {
    for (Vertex w : d_.out_neighbors(u)) {
      if (w == source_ || on_path_[static_cast<std::size_t>(w)]) continue;
      if (++hits_[static_cast<std::size_t>(w)] >= 2) return false;
      on_path_[static_cast<std::size_t>(w)] = 1;
      bool ok = extend(w);
      on_path_[static_cast<std::size_t>(w)] = 0;
      if (!ok) return false;
    }
    return true;
  }

  const Digraph& d_;
  std::vector<char> on_path_;
  std::vector<int> hits_;
  Vertex source_ = 0;
};

}  // namespace

bool is_singly_connected(const Digraph& d) {
  try {
    auto order = topological_ordering(d);
    return singly_connected_dag(d, order);
  } catch (const CycleError&) {
  }
  SimplePathCounter counter(d);
  for (Vertex s = 0; s < d.num_vertices(); ++s) {
    if (!counter.at_most_one_path_from(s)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(std::vector<VertexMask> nbr) : nbr_(std::move(nbr)) {}

  int solve(VertexMask all) {
    best_ = 0;
    search(all, 0);
    return best_;
  }

 private:
  void search(VertexMask cand, int size) {
    if (cand == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + std::popcount(cand) <= best_) return;
    // A vertex of degree <= 1 within cand is always safe to take.
    int pick = -1;
    int pick_deg = -1;
    for (VertexMask rest = cand; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int deg = std::popcount(nbr_[static_cast<std::size_t>(v)] & cand);
      if (deg <= 1) {
        search(cand & ~nbr_[static_cast<std::size_t>(v)] & ~bit(v), size + 1);
        return;
      }
      if (deg > pick_deg) {
        pick = v;
        pick_deg = deg;
      }
    }
    search(cand & ~nbr_[static_cast<std::size_t>(pick)] & ~bit(pick), size + 1);
    search(cand & ~bit(pick), size);
  }

  std::vector<VertexMask> nbr_;
  int best_ = 0;
};

}  // namespace

int independence_number(const Digraph& d, int cap) {
  const int n = d.num_vertices();
  if (n > cap || n > BitDigraph::kMaxVertices) {
    throw CapExceededError("independence_number: n = " + std::to_string(n) + " exceeds the exact cap " +
                           std::to_string(std::min(cap, BitDigraph::kMaxVertices)) +
                           "; supply alpha explicitly");
  }
  std::vector<VertexMask> nbr(static_cast<std::size_t>(n), 0);
  for (const Arc& a : d.arcs()) {
    nbr[static_cast<std::size_t>(a.tail)] |= bit(a.head);
    nbr[static_cast<std::size_t>(a.head)] |= bit(a.tail);
  }
  MaxIndependentSet mis(std::move(nbr));
  return mis.solve(n == 64 ? ~VertexMask{0} : bit(n) - 1);
}

}  // namespace rtvd
