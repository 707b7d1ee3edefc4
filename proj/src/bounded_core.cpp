#include "rtvd/bounded_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rtvd/bit_digraph.hpp"

namespace rtvd {

RetainBound tournament_retain_cap(int ell) {
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  const int linear = 4 * ell + 3;
  const int root = static_cast<int>(std::ceil(4.0 * std::sqrt(static_cast<double>(ell) + 1.0) - 1e-12));
  return {std::min(linear, root)};
}

RetainBound alpha_retain_cap(int alpha, int ell) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  return {alpha * (2 * alpha + 3) * (ell + 1) + ell};
}

namespace {

// Depth-first search over r-subsets of V(D) in lexicographic order. The
// number of transitive arcs never decreases when vertices are added to an
// induced subgraph, so any prefix that already exceeds ell is pruned.
class RetainedCoreSearch {
 public:
  RetainedCoreSearch(const Digraph& d, int ell) : d_(d), ell_(ell) {}

  std::optional<std::vector<Vertex>> first_of_size(int r) {
    if (r > BitDigraph::kMaxVertices) {
      throw CapExceededError("retained-core search limited to 64 retained vertices, requested " +
                             std::to_string(r));
    }
    size_ = r;
    chosen_.assign(static_cast<std::size_t>(r), 0);
    local_ = BitDigraph(r);
    if (extend(0, 0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool extend(int depth, Vertex start) {
    if (depth == size_) return true;
    const int n = d_.num_vertices();
    for (Vertex v = start; v <= n - (size_ - depth); ++v) {
      place(depth, v);
      const VertexMask alive = depth + 1 == 64 ? ~VertexMask{0} : bit(depth + 1) - 1;
      if (local_.count_transitive(alive, ell_) <= ell_ && extend(depth + 1, v + 1)) return true;
      unplace(depth);
    }
    return false;
  }

  void place(int depth, Vertex v) {
    chosen_[static_cast<std::size_t>(depth)] = v;
    VertexMask out = 0;
    for (int i = 0; i < depth; ++i) {
      Vertex u = chosen_[static_cast<std::size_t>(i)];
      if (d_.has_arc(v, u)) out |= bit(i);
      if (d_.has_arc(u, v)) local_.set_arc(i, depth);
    }
    local_.set_out(depth, out);
  }

  void unplace(int depth) {
    for (int i = 0; i < depth; ++i) local_.clear_arc(i, depth);
    local_.set_out(depth, 0);
  }

  const Digraph& d_;
  int ell_;
  int size_ = 0;
  std::vector<Vertex> chosen_;
  BitDigraph local_;
};

std::vector<Vertex> complement(int n, const std::vector<Vertex>& kept) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : kept) in[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

Solution checked_solution(const Digraph& d, std::vector<Vertex> deleted, int ell) {
  Solution sol = make_solution(d, std::move(deleted));
  if (sol.remaining_transitive.size() > static_cast<std::size_t>(ell)) {
    throw std::logic_error("retained-core search produced an infeasible set");
  }
  return sol;
}

}  // namespace

Solution solve_tournament(const Digraph& d, int ell) {
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  if (!is_tournament(d)) throw PreconditionError("solve_tournament: digraph is not a tournament");
  const int n = d.num_vertices();
  if (count_transitive_arcs(d, static_cast<std::size_t>(ell)) <= static_cast<std::size_t>(ell)) {
    return make_solution(d, {});
  }
  RetainedCoreSearch search(d, ell);
  for (int r = std::min(n, tournament_retain_cap(ell).cap); r >= 0; --r) {
    if (auto kept = search.first_of_size(r)) return checked_solution(d, complement(n, *kept), ell);
  }
  throw std::logic_error("solve_tournament: empty retained set rejected");
}

Solution solve_alpha_bounded(const Digraph& d, int alpha, int ell, AlphaSolveOptions options) {
  if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
  if (options.verify_alpha) {
    int actual = independence_number(d);
    if (actual > alpha) {
      throw PreconditionError("solve_alpha_bounded: independence number " + std::to_string(actual) +
                              " exceeds alpha = " + std::to_string(alpha));
    }
  }
  const int n = d.num_vertices();
  if (count_transitive_arcs(d, static_cast<std::size_t>(ell)) <= static_cast<std::size_t>(ell)) {
    return make_solution(d, {});
  }
  RetainedCoreSearch search(d, ell);
  const int cap = std::min(n, alpha_retain_cap(alpha, ell).cap);
  for (int r = cap; r >= 0; --r) {
    auto kept = search.first_of_size(r);
    if (!kept) continue;
    // Feasible retained sets are closed under taking subsets, so once a
    // size fails every larger size fails as well.
    if (r == cap) {
      for (int wider = r + 1; wider <= n; ++wider) {
        auto bigger = search.first_of_size(wider);
        if (!bigger) break;
        kept = std::move(bigger);
      }
    }
    return checked_solution(d, complement(n, *kept), ell);
  }
  throw std::logic_error("solve_alpha_bounded: empty retained set rejected");
}

}  // namespace rtvd
