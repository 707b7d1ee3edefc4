#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rtvd/digraph.hpp"

namespace rtvd {

// All generators draw from std::mt19937_64 seeded with the given seed, so a
// (parameters, seed) pair always yields the same digraph.
using Rng = std::mt19937_64;

/// Each pair {u, v}, u < v, is oriented u -> v on a fair coin.
Digraph gen_tournament(int n, std::uint64_t seed);

/// Each ordered pair (u, v), u != v, is an arc with probability p, so
/// digons occur.
Digraph gen_digraph(int n, double p, std::uint64_t seed);

/// Random topological order; each forward pair is an arc with probability p.
Digraph gen_dag(int n, double p, std::uint64_t seed);

/// Reach function of an ALT on positions 0..n-1: r[i] is the last position
/// v_i points to (r[i] = i for none). Nondecreasing, i <= r[i] <= n-1.
struct ReachFunction {
  std::vector<int> r;

  int size() const { return static_cast<int>(r.size()); }
  /// Throws std::invalid_argument when the invariants fail, or when
  /// `connected` is set and some r[i] = i with i < n-1.
  void validate(bool connected) const;
};

/// Arcs (i, j) for i < j <= r[i]; vertex i sits at position i.
Digraph gen_acyclic_local_tournament(const ReachFunction& reach);

/// Connected reach function with out-intervals of length up to max_width.
ReachFunction random_reach_function(int n, int max_width, std::uint64_t seed);

/// Every reach function with r[i] >= i+1 for i < n-1, i.e. every connected
/// ALT on the canonical ordering, in lexicographic order of r.
void for_each_reach_function(int n, const std::function<void(const ReachFunction&)>& visit);

enum class LocalMode {
  kRejection,   // random digraph with arc probability p, resampled until valid; n <= 14
  kStructured,  // random ALT plus backward arcs between non-adjacent pairs
  kThinned,     // random tournament minus arcs, each removal keeping the class
};

struct LocalTournamentOptions {
  LocalMode mode = LocalMode::kStructured;
  double p = 0.5;
  int max_attempts = 200000;
  int max_width = 4;  // structured mode: reach-function width
};

inline constexpr int kRejectionMaxVertices = 14;

/// In-tournament by the chosen mode. Rejection sampling throws
/// CapExceededError for n > 14 and std::runtime_error when the attempt
/// budget runs out.
Digraph gen_in_tournament(int n, std::uint64_t seed, const LocalTournamentOptions& options = {});
/// The reverse of gen_in_tournament(n, seed, options).
Digraph gen_out_tournament(int n, std::uint64_t seed, const LocalTournamentOptions& options = {});

}  // namespace rtvd
