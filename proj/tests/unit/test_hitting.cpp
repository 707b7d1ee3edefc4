#include <gtest/gtest.h>

#include <random>

#include "reference.hpp"
#include "rtvd/generators.hpp"
#include "rtvd/hitting.hpp"

namespace rtvd {
namespace {

HittingInstance make(int universe, std::vector<ElementSet> sets, int k) {
  HittingInstance inst;
  for (int v = 0; v < universe; ++v) inst.universe.push_back(v);
  inst.sets = std::move(sets);
  inst.k = k;
  normalize(inst);
  return inst;
}

bool brute_decide(const HittingInstance& inst) {
  int u = inst.universe.empty() ? 0 : inst.universe.back() + 1;
  int best = ref::min_hitting_size(u, inst.sets);
  return best >= 0 && best <= inst.k;
}

bool hits_all(const std::vector<Vertex>& pick, const std::vector<ElementSet>& sets) {
  for (const auto& s : sets) {
    bool hit = false;
    for (Vertex e : s) hit = hit || std::find(pick.begin(), pick.end(), e) != pick.end();
    if (!hit) return false;
  }
  return true;
}

bool kernel_decide(const HittingInstance& inst) {
  KernelResult kr = kernelize_hitting(inst);
  if (kr.infeasible) return false;
  if (!brute_decide(kr.instance)) return false;
  // The forced elements plus a reduced solution must hit the original sets.
  auto rest = solve_hitting(kr.instance);
  std::vector<Vertex> all = kr.forced;
  all.insert(all.end(), rest->begin(), rest->end());
  EXPECT_TRUE(hits_all(all, inst.sets));
  EXPECT_LE(static_cast<int>(all.size()), inst.k);
  return true;
}

TEST(ToHittingInstance, Examples) {
  EXPECT_TRUE(to_hitting_instance(ref::three_cycle(), 0).sets.empty());
  auto tri = to_hitting_instance(ref::acyclic_triangle(), 1);
  EXPECT_EQ(tri.sets, (std::vector<ElementSet>{{0, 1, 2}}));
  EXPECT_EQ(tri.universe, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(to_hitting_instance(ref::transitive_tournament(4), 2).sets.size(), 4u);
}

TEST(ToHittingInstance, RejectsOtherDigraphs) {
  // Two in-neighbours of 2 that are not adjacent, and two out-neighbours of
  // 0 that are not adjacent.
  Digraph d = ref::from_arcs(5, {{0, 2}, {1, 2}, {0, 3}, {0, 4}});
  ASSERT_FALSE(is_in_tournament(d));
  ASSERT_FALSE(is_out_tournament(d));
  EXPECT_THROW(to_hitting_instance(d, 1), PreconditionError);
  EXPECT_THROW(tvd_in_tournament(d, 1), PreconditionError);
}

TEST(SolveHitting, Examples) {
  EXPECT_EQ(solve_hitting(make(0, {}, 0)), std::vector<Vertex>{});
  EXPECT_EQ(solve_hitting(make(3, {{0, 1, 2}}, 1)), std::vector<Vertex>{0});
  EXPECT_FALSE(solve_hitting(make(6, {{0, 1, 2}, {3, 4, 5}}, 1)).has_value());
}

TEST(SolveHitting, SmallestThenLexicographic) {
  auto s = solve_hitting(make(5, {{0, 3, 4}, {1, 3, 4}, {2, 3}}, 3));
  EXPECT_EQ(s, std::vector<Vertex>{3});
  auto t = solve_hitting(make(6, {{1, 2}, {0, 4, 5}, {3, 5}}, 3));
  EXPECT_EQ(t, (std::vector<Vertex>{1, 5}));
}

TEST(KernelizeHitting, Examples) {
  for (int k = 0; k <= 3; ++k) {
    KernelResult kr = kernelize_hitting(make(4, {}, k));
    EXPECT_FALSE(kr.infeasible);
    EXPECT_TRUE(kr.instance.sets.empty());
    EXPECT_TRUE(kr.forced.empty());
    EXPECT_EQ(kr.instance.k, k);
  }

  KernelResult pair = kernelize_hitting(make(4, {{0, 1, 2}, {0, 1, 3}}, 1));
  EXPECT_FALSE(pair.infeasible);
  EXPECT_EQ(pair.instance.sets, (std::vector<ElementSet>{{0, 1}}));
  EXPECT_EQ(pair.instance.k, 1);

  KernelResult forced = kernelize_hitting(make(3, {{0, 1}, {0, 2}}, 1));
  EXPECT_FALSE(forced.infeasible);
  EXPECT_EQ(forced.forced, std::vector<Vertex>{0});
  EXPECT_EQ(forced.instance.k, 0);
  EXPECT_TRUE(forced.instance.sets.empty());
}

TEST(KernelizeHitting, InfeasibleMarkers) {
  EXPECT_TRUE(kernelize_hitting(make(3, {{0, 1, 2}}, 0)).infeasible);
  EXPECT_TRUE(kernelize_hitting(make(3, {{0, 1, 2}}, -1)).infeasible);
  // Three disjoint 2-sets with k = 1.
  EXPECT_TRUE(kernelize_hitting(make(6, {{0, 1}, {2, 3}, {4, 5}}, 1)).infeasible);
}

TEST(KernelizeHitting, SizeBound) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<ElementSet> sets;
    for (int i = 0; i < 60; ++i) {
      ElementSet s{static_cast<int>(rng() % 12), static_cast<int>(rng() % 12), static_cast<int>(rng() % 12)};
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) == s.end()) sets.push_back(s);
    }
    KernelResult kr = kernelize_hitting(make(12, sets, k));
    if (kr.infeasible) continue;
    int kk = kr.instance.k;
    EXPECT_LE(kr.instance.sets.size(), static_cast<std::size_t>(kk * kk * kk));
    for (const auto& s : kr.instance.sets) {
      EXPECT_GE(s.size(), 2u);
      EXPECT_LE(s.size(), 3u);
    }
  }
}

// --- properties ------------------------------------------------------------

std::vector<ElementSet> all_triples(int u) {
  std::vector<ElementSet> out;
  for (int a = 0; a < u; ++a)
    for (int b = a + 1; b < u; ++b)
      for (int c = b + 1; c < u; ++c) out.push_back({a, b, c});
  return out;
}

TEST(HittingProperties, BranchingMatchesBruteForceOnAllSmallTripleFamilies) {
  // Every family of at most 5 triples over 7 elements, every k <= 3.
  const auto triples = all_triples(7);
  const int t = static_cast<int>(triples.size());
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int start) {
    std::vector<ElementSet> sets;
    for (int i : idx) sets.push_back(triples[static_cast<std::size_t>(i)]);
    int best = ref::min_hitting_size(7, sets);
    for (int k = 0; k <= 3; ++k) {
      HittingInstance inst = make(7, sets, k);
      auto got = solve_hitting(inst);
      ASSERT_EQ(got.has_value(), best <= k);
      if (got) {
        ASSERT_EQ(static_cast<int>(got->size()), best);
        ASSERT_TRUE(hits_all(*got, sets));
      }
    }
    if (idx.size() == 5) return;
    for (int i = start; i < t; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

TEST(HittingProperties, BranchingMatchesBruteForceWithPairs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20000; ++trial) {
    int u = 3 + static_cast<int>(rng() % 6);
    int count = static_cast<int>(rng() % 6);
    std::vector<ElementSet> sets;
    for (int i = 0; i < count; ++i) {
      ElementSet s;
      int size = rng() % 3 == 0 ? 2 : 3;
      while (static_cast<int>(s.size()) < size) {
        int e = static_cast<int>(rng() % static_cast<unsigned>(u));
        if (std::find(s.begin(), s.end(), e) == s.end()) s.push_back(e);
      }
      sets.push_back(s);
    }
    int k = static_cast<int>(rng() % 4);
    HittingInstance inst = make(u, sets, k);
    int best = ref::min_hitting_size(u, inst.sets);
    auto got = solve_hitting(inst);
    ASSERT_EQ(got.has_value(), best <= k);
    if (got) EXPECT_EQ(static_cast<int>(got->size()), best);
  }
}

TEST(HittingProperties, KernelPreservesDecisions) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 3000; ++trial) {
    int u = 4 + static_cast<int>(rng() % 7);
    int count = static_cast<int>(rng() % 40);
    std::vector<ElementSet> sets;
    for (int i = 0; i < count; ++i) {
      ElementSet s;
      int size = rng() % 4 == 0 ? 2 : 3;
      // Skewed choice so that popular pairs and elements show up.
      while (static_cast<int>(s.size()) < size) {
        int e = static_cast<int>(rng() % static_cast<unsigned>(rng() % 2 ? 3 : u));
        if (std::find(s.begin(), s.end(), e) == s.end()) s.push_back(e);
      }
      sets.push_back(s);
    }
    HittingInstance inst = make(u, sets, static_cast<int>(rng() % 4));
    ASSERT_EQ(brute_decide(inst), kernel_decide(inst)) << "trial " << trial;
  }
}

TEST(TvdInTournament, Examples) {
  auto cyc = tvd_in_tournament(ref::three_cycle(), 0);
  ASSERT_TRUE(cyc.has_value());
  EXPECT_TRUE(cyc->deleted.empty());

  auto tri = tvd_in_tournament(ref::acyclic_triangle(), 1);
  ASSERT_TRUE(tri.has_value());
  EXPECT_EQ(tri->size(), 1u);
  EXPECT_TRUE(tri->remaining_transitive.empty());

  Digraph two = ref::from_arcs(6, {{0, 1}, {0, 2}, {2, 1}, {3, 4}, {3, 5}, {5, 4}});
  ASSERT_TRUE(is_in_tournament(two));
  EXPECT_FALSE(tvd_in_tournament(two, 1).has_value());
  EXPECT_EQ(tvd_in_tournament(two, 2)->size(), 2u);
}

TEST(TvdInTournament, MatchesOracle) {
  std::mt19937_64 rng(13);
  const LocalMode modes[] = {LocalMode::kRejection, LocalMode::kStructured, LocalMode::kThinned};
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    LocalTournamentOptions opts;
    opts.mode = modes[trial % 3];
    Digraph d = trial % 2 ? gen_out_tournament(n, rng(), opts) : gen_in_tournament(n, rng(), opts);
    int best = ref::min_rtvd_size(d, 0);
    auto got = tvd_in_tournament(d, n);
    ASSERT_TRUE(got.has_value());
    EXPECT_EQ(static_cast<int>(got->size()), best);
    EXPECT_TRUE(got->remaining_transitive.empty());
    if (best > 0) EXPECT_FALSE(tvd_in_tournament(d, best - 1).has_value());
  }
}

TEST(TvdInTournament, LargerInstancesAreTransitiveFreeAfterDeletion) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 11 + static_cast<int>(rng() % 2);
    Digraph d = gen_in_tournament(n, rng(), {LocalMode::kStructured, 0.5, 1000, 3});
    auto got = tvd_in_tournament(d, n);
    ASSERT_TRUE(got.has_value());
    EXPECT_TRUE(transitive_arcs_without(d, got->deleted).empty());
  }
}

}  // namespace
}  // namespace rtvd
