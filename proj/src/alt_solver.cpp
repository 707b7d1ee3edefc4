#include "rtvd/alt_solver.hpp"

#include <algorithm>
#include <numeric>

#include "rtvd/bit_digraph.hpp"

namespace rtvd {

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i); }

// Kept positions of an optimal transitive-free subset, first and last
// position included. dp[b*n + c] is the largest kept sequence that starts at
// position 0 and ends with positions b < c; parent holds the kept position
// before b (-1 when b == 0).
std::vector<int> max_kept_positions(const std::vector<int>& reach_end) {
  const int n = static_cast<int>(reach_end.size());
  if (n <= 2) {
    std::vector<int> all(at(n));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  const std::size_t stride = at(n);
  std::vector<int> dp(stride * stride, -1);
  std::vector<int> parent(stride * stride, -1);
  for (int c = 1; c < n; ++c) dp[at(c)] = 2;

  std::vector<int> best_value(stride + 1);
  std::vector<int> best_arg(stride + 1);
  for (int b = 1; b < n - 1; ++b) {
    // Prefix maxima of dp[a][b] over a; a triple (a, b, c) is legal iff
    // c > reach_end(a), and reach_end is nondecreasing, so the legal a for
    // a given c form a prefix that only grows with c.
    best_value[0] = -1;
    best_arg[0] = -1;
    for (int a = 0; a < b; ++a) {
      int v = dp[at(a) * stride + at(b)];
      bool better = v > best_value[at(a)];
      best_value[at(a + 1)] = better ? v : best_value[at(a)];
      best_arg[at(a + 1)] = better ? a : best_arg[at(a)];
    }
    int prefix = 0;
    for (int c = b + 1; c < n; ++c) {
      while (prefix < b && reach_end[at(prefix)] < c) ++prefix;
      if (best_value[at(prefix)] < 0) continue;
      dp[at(b) * stride + at(c)] = best_value[at(prefix)] + 1;
      parent[at(b) * stride + at(c)] = best_arg[at(prefix)];
    }
  }

  int best_b = -1;
  for (int b = 0; b < n - 1; ++b) {
    int v = dp[at(b) * stride + at(n - 1)];
    if (v >= 0 && (best_b < 0 || v > dp[at(best_b) * stride + at(n - 1)])) best_b = b;
  }
  std::vector<int> kept{n - 1};
  int b = best_b;
  int c = n - 1;
  while (b >= 0) {
    kept.push_back(b);
    int a = parent[at(b) * stride + at(c)];
    c = b;
    b = a;
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

bool transitive_free_profile(const ReachProfile& p) {
  for (int i = 0; i < p.size(); ++i) {
    if (p.reach_end[at(i)] > i + 1) return false;
  }
  return true;
}

std::vector<Vertex> solve_tvd_with_profile(const ReachProfile& p) {
  if (transitive_free_profile(p)) return {};
  std::vector<int> kept = max_kept_positions(p.reach_end);
  std::vector<char> keep(at(p.size()), 0);
  for (int pos : kept) keep[at(pos)] = 1;
  std::vector<Vertex> deleted;
  for (int i = 0; i < p.size(); ++i) {
    if (!keep[at(i)]) deleted.push_back(p.order[at(i)]);
  }
  std::sort(deleted.begin(), deleted.end());
  return deleted;
}

std::vector<std::vector<int>> weak_components(const Digraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(at(n), -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (comp[at(s)] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::vector<int> stack{s};
    comp[at(s)] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comps.back().push_back(u);
      for (const auto* nb : {&g.out_neighbors(u), &g.in_neighbors(u)}) {
        for (int w : *nb) {
          if (comp[at(w)] < 0) {
            comp[at(w)] = id;
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

}  // namespace

Solution min_tvd_alt(const Digraph& d) {
  ReachProfile profile = reach_profile(d);
  return make_solution(d, solve_tvd_with_profile(profile));
}

std::vector<Vertex> compute_forced_set(const Digraph& d, const ReachProfile& profile,
                                       const ExtInstance& ext) {
  const int n = profile.size();
  std::vector<char> in_w(at(n), 0);
  std::vector<int> w_pos;
  for (Vertex v : ext.protected_vertices) {
    int pos = profile.position[at(v)];
    if (!in_w[at(pos)]) w_pos.push_back(pos);
    in_w[at(pos)] = 1;
  }
  std::sort(w_pos.begin(), w_pos.end());

  std::vector<char> touches_f(at(n), 0);
  std::vector<Arc> allowed;  // in positions
  for (const Arc& e : ext.allowed_arcs) {
    int i = profile.position[at(e.tail)];
    int j = profile.position[at(e.head)];
    allowed.push_back({i, j});
    touches_f[at(i)] = touches_f[at(j)] = 1;
  }
  std::sort(allowed.begin(), allowed.end());
  auto is_allowed = [&](int i, int j) { return std::binary_search(allowed.begin(), allowed.end(), Arc{i, j}); };
  auto arc = [&](int i, int j) { return i < j && j <= profile.reach_end[at(i)]; };

  std::vector<char> forced(at(n), 0);
  // Interior of an allowed arc.
  for (const Arc& e : allowed) {
    for (int t = e.tail + 1; t < e.head; ++t) {
      if (!in_w[at(t)]) forced[at(t)] = 1;
    }
  }
  // Triangles closed by one unprotected vertex.
  for (std::size_t x = 0; x < w_pos.size(); ++x) {
    for (std::size_t y = x + 1; y < w_pos.size(); ++y) {
      const int p = w_pos[x];
      const int q = w_pos[y];
      for (int t = 0; t < n; ++t) {
        if (in_w[at(t)] || forced[at(t)]) continue;
        int tri[3] = {p, q, t};
        std::sort(std::begin(tri), std::end(tri));
        if (!arc(tri[0], tri[1]) || !arc(tri[1], tri[2]) || !arc(tri[0], tri[2])) continue;
        if (!is_allowed(tri[0], tri[2])) forced[at(t)] = 1;
      }
    }
  }
  // Protected vertices untouched by F must not become the end of a
  // transitive arc.
  for (int p : w_pos) {
    if (touches_f[at(p)]) continue;
    for (int w : w_pos) {
      if (w == p) continue;
      if (p < w && arc(p, w)) {
        for (int t = p + 1; t < w; ++t) {
          if (!in_w[at(t)]) forced[at(t)] = 1;
        }
      } else if (w < p && arc(w, p)) {
        for (int t = w + 1; t < p; ++t) {
          if (!in_w[at(t)]) forced[at(t)] = 1;
        }
      }
    }
  }
  std::vector<Vertex> result;
  for (int t = 0; t < n; ++t) {
    if (forced[at(t)]) result.push_back(profile.order[at(t)]);
  }
  std::sort(result.begin(), result.end());
  (void)d;
  return result;
}

std::vector<IntervalSubinstance> split_intervals(const ReachProfile& profile, const ExtInstance& ext,
                                                 std::span<const Vertex> forced) {
  const int n = profile.size();
  std::vector<char> removed(at(n), 0);
  for (Vertex v : forced) removed[at(profile.position[at(v)])] = 1;
  std::vector<int> w_pos;
  for (Vertex v : ext.protected_vertices) w_pos.push_back(profile.position[at(v)]);
  std::sort(w_pos.begin(), w_pos.end());
  w_pos.erase(std::unique(w_pos.begin(), w_pos.end()), w_pos.end());

  std::vector<std::pair<int, int>> bounds;
  if (n == 0) return {};
  if (w_pos.empty()) {
    bounds.emplace_back(0, n - 1);
  } else {
    if (w_pos.front() > 0) bounds.emplace_back(0, w_pos.front());
    for (std::size_t i = 0; i + 1 < w_pos.size(); ++i) bounds.emplace_back(w_pos[i], w_pos[i + 1]);
    if (w_pos.back() < n - 1) bounds.emplace_back(w_pos.back(), n - 1);
  }

  std::vector<IntervalSubinstance> result;
  for (auto [lo, hi] : bounds) {
    IntervalSubinstance interval{lo, hi, {}};
    for (int t = lo; t <= hi; ++t) {
      if (!removed[at(t)]) interval.vertices.push_back(profile.order[at(t)]);
    }
    result.push_back(std::move(interval));
  }
  return result;
}

std::optional<Solution> solve_ext(const Digraph& d, const ExtInstance& ext) {
  return solve_ext(d, reach_profile(d), ext);
}

std::optional<Solution> solve_ext(const Digraph& d, const ReachProfile& profile, const ExtInstance& ext) {
  std::vector<char> in_w(at(d.num_vertices()), 0);
  for (Vertex v : ext.protected_vertices) {
    if (v < 0 || v >= d.num_vertices()) throw std::invalid_argument("protected vertex out of range");
    in_w[at(v)] = 1;
  }
  for (const Arc& e : ext.allowed_arcs) {
    if (!d.has_arc(e.tail, e.head)) throw std::invalid_argument("allowed arc is not an arc of D");
    if (!in_w[at(e.tail)] || !in_w[at(e.head)]) {
      throw std::invalid_argument("allowed arc endpoint is not protected");
    }
  }

  std::vector<Vertex> deleted = compute_forced_set(d, profile, ext);
  for (const IntervalSubinstance& interval : split_intervals(profile, ext, deleted)) {
    InducedSubgraph sub = d.induced(interval.vertices);
    for (const auto& comp : weak_components(sub.graph)) {
      InducedSubgraph piece = sub.graph.induced(comp);
      for (Vertex v : solve_tvd_with_profile(reach_profile(piece.graph))) {
        deleted.push_back(sub.original[at(piece.original[at(v)])]);
      }
    }
  }
  std::sort(deleted.begin(), deleted.end());
  deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());

  Solution candidate = make_solution(d, std::move(deleted));
  std::vector<Arc> allowed = ext.allowed_arcs;
  std::sort(allowed.begin(), allowed.end());
  for (const Arc& e : candidate.remaining_transitive) {
    if (!std::binary_search(allowed.begin(), allowed.end(), e)) return std::nullopt;
  }
  return candidate;
}

namespace {

// Calls visit(indices) for every k-subset of {0..n-1}, k = 0..max_k, by
// size and then lexicographically. visit returns false to stop.
template <typename Visit>
bool for_each_subset_up_to(int n, int max_k, Visit&& visit) {
  std::vector<int> idx;
  for (int k = 0; k <= std::min(n, max_k); ++k) {
    idx.resize(at(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (!visit(idx)) return false;
      int i = k - 1;
      while (i >= 0 && idx[at(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[at(i)];
      for (int j = i + 1; j < k; ++j) idx[at(j)] = idx[at(j - 1)] + 1;
    }
  }
  return true;
}

}  // namespace

Solution min_rtvd_alt(const Digraph& d, int ell) {
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  ReachProfile profile = reach_profile(d);
  const int n = profile.size();

  // In an ALT, (v_i, v_j) is transitive exactly when j >= i + 2.
  std::vector<Arc> transitive;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j <= profile.reach_end[at(i)]; ++j) {
      transitive.push_back({profile.order[at(i)], profile.order[at(j)]});
    }
  }
  if (transitive.size() <= static_cast<std::size_t>(ell)) return make_solution(d, {});
  std::sort(transitive.begin(), transitive.end());

  std::optional<Solution> best;
  auto consider = [&](Solution&& cand) {
    if (!best || cand.size() < best->size() ||
        (cand.size() == best->size() && cand.deleted < best->deleted)) {
      best = std::move(cand);
    }
  };

  std::vector<Arc> f_arcs;
  for_each_subset_up_to(static_cast<int>(transitive.size()), ell, [&](const std::vector<int>& f_idx) {
    f_arcs.clear();
    std::vector<Vertex> ends;
    for (int i : f_idx) {
      f_arcs.push_back(transitive[at(i)]);
      ends.push_back(f_arcs.back().tail);
      ends.push_back(f_arcs.back().head);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

    // At most one interior vertex per allowed arc survives, and it must be
    // protected; only those vertices are worth guessing.
    std::vector<Vertex> interior;
    for (const Arc& e : f_arcs) {
      for (int t = profile.position[at(e.tail)] + 1; t < profile.position[at(e.head)]; ++t) {
        Vertex v = profile.order[at(t)];
        if (!std::binary_search(ends.begin(), ends.end(), v)) interior.push_back(v);
      }
    }
    std::sort(interior.begin(), interior.end());
    interior.erase(std::unique(interior.begin(), interior.end()), interior.end());

    const int max_x = std::min<int>(ell, static_cast<int>(f_arcs.size()));
    for_each_subset_up_to(static_cast<int>(interior.size()), max_x, [&](const std::vector<int>& x_idx) {
      ExtInstance ext;
      ext.allowed_arcs = f_arcs;
      ext.protected_vertices = ends;
      for (int i : x_idx) ext.protected_vertices.push_back(interior[at(i)]);
      std::sort(ext.protected_vertices.begin(), ext.protected_vertices.end());

      // Every transitive arc among the protected vertices must be allowed.
      InducedSubgraph w_sub = d.induced(ext.protected_vertices);
      for (const Arc& e : transitive_arcs(w_sub.graph)) {
        Arc orig{w_sub.original[at(e.tail)], w_sub.original[at(e.head)]};
        if (std::find(f_arcs.begin(), f_arcs.end(), orig) == f_arcs.end()) return true;
      }
      if (best && compute_forced_set(d, profile, ext).size() > best->size()) return true;
      if (auto cand = solve_ext(d, profile, ext)) consider(std::move(*cand));
      return true;
    });
    return !(best && best->size() == 0);
  });

  // The guess F = X = {} always yields a feasible candidate.
  if (!best) throw std::logic_error("min_rtvd_alt: no feasible guess");
  return std::move(*best);
}

}  // namespace rtvd
