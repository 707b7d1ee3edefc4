#include <gtest/gtest.h>

#include <random>

#include "reference.hpp"
#include "rtvd/bit_digraph.hpp"
#include "rtvd/bounded_core.hpp"
#include "rtvd/generators.hpp"

namespace rtvd {
namespace {

TEST(RetainCaps, Tournament) {
  EXPECT_EQ(tournament_retain_cap(0).cap, 3);
  EXPECT_EQ(tournament_retain_cap(1).cap, 6);
  EXPECT_EQ(tournament_retain_cap(3).cap, 8);
  EXPECT_THROW(tournament_retain_cap(-1), std::invalid_argument);
}

TEST(RetainCaps, Alpha) {
  EXPECT_EQ(alpha_retain_cap(1, 0).cap, 5);
  EXPECT_EQ(alpha_retain_cap(2, 0).cap, 14);
  EXPECT_EQ(alpha_retain_cap(2, 1).cap, 29);
  EXPECT_THROW(alpha_retain_cap(0, 0), std::invalid_argument);
}

// The ell = 1 cap of 6 needs every 7-vertex tournament to carry at least two
// transitive arcs; all 2^21 labelled ones are checked on bitmasks.
TEST(RetainCaps, SevenVertexTournamentsExceedOne) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) pairs.emplace_back(u, v);
  BitDigraph g(7);
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    for (int v = 0; v < 7; ++v) g.set_out(v, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto [u, v] = pairs[i];
      if (mask >> i & 1U) {
        g.set_arc(u, v);
      } else {
        g.set_arc(v, u);
      }
    }
    ASSERT_GE(g.count_transitive(g.all(), 1), 2) << "mask " << mask;
  }
}

TEST(RetainCaps, SoundOnExhaustiveTournaments) {
  for (int ell = 0; ell <= 1; ++ell) {
    const int n = tournament_retain_cap(ell).cap + 1;
    if (n > 6) continue;
    for_each_tournament(n, [&](const Digraph& d) {
      EXPECT_GT(count_transitive_arcs(d), static_cast<std::size_t>(ell));
    });
  }
}

TEST(SolveTournament, Examples) {
  EXPECT_TRUE(solve_tournament(ref::three_cycle(), 0).deleted.empty());
  EXPECT_EQ(solve_tournament(ref::transitive_tournament(5), 0).size(), 3u);
  EXPECT_TRUE(solve_tournament(ref::transitive_tournament(4), 3).deleted.empty());
  EXPECT_THROW(solve_tournament(Digraph(3), 0), PreconditionError);
  EXPECT_THROW(solve_tournament(ref::three_cycle(), -1), std::invalid_argument);
}

TEST(SolveAlphaBounded, Examples) {
  EXPECT_TRUE(solve_alpha_bounded(ref::three_cycle(), 1, 0).deleted.empty());
  EXPECT_EQ(solve_alpha_bounded(ref::acyclic_triangle(), 1, 0).size(), 1u);
  Digraph two = ref::from_arcs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(solve_alpha_bounded(two, 2, 1).size(), 1u);
  EXPECT_THROW(solve_alpha_bounded(two, 0, 0), std::invalid_argument);
  EXPECT_THROW(solve_alpha_bounded(two, 1, 0, {true}), PreconditionError);
}

// --- properties ------------------------------------------------------------

TEST(BoundedCoreProperties, TournamentsMatchOracleExhaustively) {
  for (int n = 0; n <= 5; ++n) {
    for_each_tournament(n, [&](const Digraph& d) {
      for (int ell = 0; ell <= 2; ++ell) {
        Solution s = solve_tournament(d, ell);
        EXPECT_EQ(s.size(), min_rtvd_oracle(d, ell).size());
        EXPECT_LE(s.remaining_transitive.size(), static_cast<std::size_t>(ell));
      }
    });
  }
}

TEST(BoundedCoreProperties, RetainedSetWithinCap) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Digraph d = gen_tournament(6 + static_cast<int>(seed % 10), seed);
    for (int ell = 0; ell <= 2; ++ell) {
      Solution s = solve_tournament(d, ell);
      const int kept = d.num_vertices() - static_cast<int>(s.size());
      if (!s.deleted.empty()) EXPECT_LE(kept, tournament_retain_cap(ell).cap);
    }
  }
}

TEST(BoundedCoreProperties, AlphaMatchesOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    double p = 0.3 + 0.1 * static_cast<double>(rng() % 6);
    Digraph d = ref::random_digraph(n, p, rng);
    int alpha = std::max(1, ref::independence_number(d));
    for (int ell = 0; ell <= 1; ++ell) {
      Solution s = solve_alpha_bounded(d, alpha, ell);
      EXPECT_EQ(static_cast<int>(s.size()), ref::min_rtvd_size(d, ell)) << "trial " << trial;
      EXPECT_LE(s.remaining_transitive.size(), static_cast<std::size_t>(ell));
    }
  }
}

TEST(BoundedCoreProperties, UnderstatedAlphaStillOptimal) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    Digraph d = ref::random_digraph(5 + static_cast<int>(rng() % 5), 0.25, rng);
    EXPECT_EQ(static_cast<int>(solve_alpha_bounded(d, 1, 0).size()), ref::min_rtvd_size(d, 0));
  }
}

}  // namespace
}  // namespace rtvd
