#include "rtvd/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rtvd/errors.hpp"

namespace rtvd {

namespace {

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("arc probability must lie in [0, 1]");
}

void check_count(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

}  // namespace

Digraph gen_tournament(int n, std::uint64_t seed) {
  check_count(n);
  Rng rng(seed);
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng, 0.5)) {
        d.add_arc(u, v);
      } else {
        d.add_arc(v, u);
      }
    }
  }
  return d;
}

Digraph gen_digraph(int n, double p, std::uint64_t seed) {
  check_count(n);
  check_probability(p);
  Rng rng(seed);
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng, p)) d.add_arc(u, v);
    }
  }
  return d;
}

Digraph gen_dag(int n, double p, std::uint64_t seed) {
  check_count(n);
  check_probability(p);
  Rng rng(seed);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Digraph d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng, p)) d.add_arc(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
  }
  return d;
}

void ReachFunction::validate(bool connected) const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const int ri = r[static_cast<std::size_t>(i)];
    if (ri < i || ri >= n) throw std::invalid_argument("reach function: r[" + std::to_string(i) + "] out of range");
    if (i > 0 && r[static_cast<std::size_t>(i - 1)] > ri) {
      throw std::invalid_argument("reach function is not nondecreasing at " + std::to_string(i));
    }
    if (connected && i < n - 1 && ri == i) {
      throw std::invalid_argument("reach function disconnects at " + std::to_string(i));
    }
  }
}

Digraph gen_acyclic_local_tournament(const ReachFunction& reach) {
  reach.validate(false);
  Digraph d(reach.size());
  for (int i = 0; i < reach.size(); ++i) {
    for (int j = i + 1; j <= reach.r[static_cast<std::size_t>(i)]; ++j) d.add_arc(i, j);
  }
  return d;
}

ReachFunction random_reach_function(int n, int max_width, std::uint64_t seed) {
  check_count(n);
  if (max_width < 1) throw std::invalid_argument("max_width must be at least 1");
  Rng rng(seed);
  ReachFunction reach;
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    int lo = std::max(prev, std::min(i + 1, n - 1));
    int hi = std::max(lo, std::min(i + max_width, n - 1));
    int ri = std::uniform_int_distribution<int>(lo, hi)(rng);
    reach.r.push_back(ri);
    prev = ri;
  }
  return reach;
}

void for_each_reach_function(int n, const std::function<void(const ReachFunction&)>& visit) {
  check_count(n);
  ReachFunction reach;
  reach.r.assign(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> fill = [&](int i, int prev) {
    if (i == n) {
      visit(reach);
      return;
    }
    for (int ri = std::max(prev, std::min(i + 1, n - 1)); ri < n; ++ri) {
      reach.r[static_cast<std::size_t>(i)] = ri;
      fill(i + 1, ri);
    }
  };
  fill(0, 0);
}

namespace {

// Adding (u, v) keeps an in-tournament iff u is adjacent to every current
// in-neighbour of v and the pair is not adjacent yet.
bool can_add_keeping_in(const Digraph& d, Vertex u, Vertex v) {
  if (d.adjacent(u, v)) return false;
  for (Vertex x : d.in_neighbors(v)) {
    if (!d.adjacent(u, x)) return false;
  }
  return true;
}

// Removing (u, v) keeps an in-tournament iff no vertex has both u and v as
// in-neighbours.
bool can_remove_keeping_in(const Digraph& d, Vertex u, Vertex v) {
  const auto& a = d.out_neighbors(u);
  const auto& b = d.out_neighbors(v);
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

Digraph in_by_rejection(int n, std::uint64_t seed, const LocalTournamentOptions& o) {
  if (n > kRejectionMaxVertices) {
    throw CapExceededError("rejection sampling supports n <= " + std::to_string(kRejectionMaxVertices));
  }
  check_probability(o.p);
  Rng rng(seed);
  for (int attempt = 0; attempt < o.max_attempts; ++attempt) {
    Digraph d(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!coin(rng, o.p)) continue;
        if (coin(rng, 0.5)) {
          d.add_arc(u, v);
        } else {
          d.add_arc(v, u);
        }
      }
    }
    if (is_in_tournament(d)) return d;
  }
  throw std::runtime_error("rejection sampling budget exhausted");
}

Digraph in_structured(int n, std::uint64_t seed, const LocalTournamentOptions& o) {
  Digraph d = gen_acyclic_local_tournament(random_reach_function(n, o.max_width, seed));
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Arc> backward;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!d.adjacent(i, j)) backward.push_back({j, i});
    }
  }
  std::shuffle(backward.begin(), backward.end(), rng);
  for (const Arc& a : backward) {
    if (coin(rng, o.p) && can_add_keeping_in(d, a.tail, a.head)) d.add_arc(a.tail, a.head);
  }
  return d;
}

Digraph in_thinned(int n, std::uint64_t seed, const LocalTournamentOptions& o) {
  check_probability(o.p);
  Digraph d = gen_tournament(n, seed);
  Rng rng(seed ^ 0x5851f42d4c957f2dULL);
  std::vector<Arc> arcs = d.arcs();
  std::shuffle(arcs.begin(), arcs.end(), rng);
  for (const Arc& a : arcs) {
    if (coin(rng, o.p) && can_remove_keeping_in(d, a.tail, a.head)) d.remove_arc(a.tail, a.head);
  }
  return d;
}

}  // namespace

Digraph gen_in_tournament(int n, std::uint64_t seed, const LocalTournamentOptions& options) {
  check_count(n);
  Digraph d;
  switch (options.mode) {
    case LocalMode::kRejection: d = in_by_rejection(n, seed, options); break;
    case LocalMode::kStructured: d = in_structured(n, seed, options); break;
    case LocalMode::kThinned: d = in_thinned(n, seed, options); break;
  }
  if (!is_in_tournament(d)) throw std::logic_error("generator produced a non-in-tournament");
  return d;
}

Digraph gen_out_tournament(int n, std::uint64_t seed, const LocalTournamentOptions& options) {
  return gen_in_tournament(n, seed, options).reversed();
}

}  // namespace rtvd
