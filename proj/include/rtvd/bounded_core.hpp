#pragma once

#include <optional>

#include "rtvd/oracle.hpp"

namespace rtvd {

/// Largest vertex count a retained set with at most ell transitive arcs can
/// have within a graph class.
struct RetainBound {
  int cap = 0;
};

/// min(4·ell + 3, ceil(4·sqrt(ell + 1))). A tournament on 4·ell + 4
/// vertices has ell + 1 transitive arcs; the square-root bound is evaluated
/// at ell + 1 so the rounding of the non-integer threshold cannot make it
/// unsound.
RetainBound tournament_retain_cap(int ell);

/// alpha·(2·alpha + 3)·(ell + 1) + ell.
RetainBound alpha_retain_cap(int alpha, int ell);

/// Min ℓ-RTVD on a tournament by enumerating retained vertex sets of size
/// at most tournament_retain_cap(ell), largest first; ties go to the
/// lexicographically smallest retained set. Throws PreconditionError when D
/// is not a tournament.
Solution solve_tournament(const Digraph& d, int ell);

struct AlphaSolveOptions {
  /// Recompute the independence number (n <= 30) and reject an alpha below it.
  bool verify_alpha = false;
};

/// Min ℓ-RTVD on a digraph whose independence number is at most alpha.
/// When the best retained set found hits the cap exactly, the search widens
/// one size at a time, so an alpha that is too small still yields an
/// optimal answer, only more slowly.
Solution solve_alpha_bounded(const Digraph& d, int alpha, int ell, AlphaSolveOptions options = {});

}  // namespace rtvd
