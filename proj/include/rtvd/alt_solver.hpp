#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rtvd/oracle.hpp"

namespace rtvd {

// Exact solvers for connected acyclic local tournaments (ALTs). Every
// routine here identifies vertices by id, but reasons in terms of their
// positions in the unique topological ordering.

/// Min 0-RTVD. D - S is transitive-free iff the kept positions contain no
/// triple a < b < c with c <= reach_end(a); a DP over the last two kept
/// positions maximises the kept set with the first and last vertex of the
/// ordering always kept. Throws PreconditionError unless D is a connected
/// acyclic local tournament.
Solution min_tvd_alt(const Digraph& d);

/// Extension instance: the protected vertices W may not be deleted and the
/// arcs in F (both ends in W) are allowed to stay transitive.
struct ExtInstance {
  std::vector<Vertex> protected_vertices;  // W
  std::vector<Arc> allowed_arcs;           // F
};

/// Vertices every solution of the extension instance must delete:
///  - interior vertices of an allowed arc that are not protected;
///  - any vertex that closes an acyclic triangle with two protected
///    vertices whose transitive arc is not allowed;
///  - vertices t with a protected p not incident to F and a protected w
///    such that p < t < w with (p,w) an arc, or w < t < p with (w,p) an arc.
/// Returned sorted by vertex id.
std::vector<Vertex> compute_forced_set(const Digraph& d, const ReachProfile& profile,
                                       const ExtInstance& ext);

/// Positions lo..hi delimiting a maximal W-free stretch of the ordering;
/// `vertices` lists the members of that stretch outside the forced set, in
/// ordering order. Its boundary vertices are kept.
struct IntervalSubinstance {
  int lo = 0;
  int hi = 0;
  std::vector<Vertex> vertices;
};

std::vector<IntervalSubinstance> split_intervals(const ReachProfile& profile, const ExtInstance& ext,
                                                 std::span<const Vertex> forced);

/// Forced set plus per-interval (per connected component) min_tvd_alt
/// solutions. Returns nullopt when the assembled candidate leaves a
/// transitive arc outside F. Throws std::invalid_argument when F is not a
/// set of arcs of D[W].
std::optional<Solution> solve_ext(const Digraph& d, const ExtInstance& ext);
std::optional<Solution> solve_ext(const Digraph& d, const ReachProfile& profile, const ExtInstance& ext);

/// Min ℓ-RTVD on a connected ALT by guessing the surviving transitive arcs F
/// (|F| <= ell) and the at most one surviving interior vertex per arc of F,
/// then solving each extension instance. Smallest deletion set wins, ties
/// broken lexicographically.
Solution min_rtvd_alt(const Digraph& d, int ell);

}  // namespace rtvd
