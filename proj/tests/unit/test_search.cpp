#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bridge.hpp"
#include "gswitch/constructions/named.hpp"
#include "gswitch/core/homogenise.hpp"
#include "gswitch/search/classes.hpp"
#include "gswitch/search/orbit.hpp"
#include "gswitch/search/probes.hpp"

using namespace gswitch;
using testing_support::colouring_from_index;
using testing_support::colouring_total;
using testing_support::elements_of;
using testing_support::random_colouring;
using testing_support::to_matrix;

TEST(Orbit, Sizes) {
  EXPECT_EQ(orbit_enumerate(EdgeColouring::monochromatic(2, 2, 0), ColourGroup::cyclic(2)).size(), 2u);
  EXPECT_EQ(orbit_enumerate(EdgeColouring::monochromatic(3, 3, 0), ColourGroup::cyclic(3)).size(), 27u);
  EXPECT_EQ(orbit_enumerate(EdgeColouring::monochromatic(3, 2, 0), ColourGroup::cyclic(2)).size(), 4u);
  EXPECT_EQ(orbit_enumerate(named_construction("paper-k6"), ColourGroup::cyclic(4)).size(), 2048u);
}

TEST(Orbit, MatchesOracleAndPathsReachMembers) {
  std::mt19937_64 rng(41);
  std::vector<ColourGroup> groups{ColourGroup::symmetric(3), ColourGroup::cyclic(3),
                                  ColourGroup::generate(3, {Permutation{1, 0, 2}})};
  for (int trial = 0; trial < 30; ++trial) {
    const auto& grp = groups[trial % groups.size()];
    auto g = random_colouring(rng, 4, 3);
    auto orb = orbit_enumerate(g, grp);
    auto ref = oracle::orbit(to_matrix(g), elements_of(grp));
    ASSERT_EQ(orb.size(), ref.size());
    EXPECT_TRUE(orb.exhaustive());
    for (std::size_t i = 0; i < orb.size(); i += 7) {
      EXPECT_EQ(apply_sequence(g, orb.path_to(i)), orb.members()[i]);
      EXPECT_TRUE(ref.count(oracle::upper_of(to_matrix(orb.members()[i]))));
    }
  }
}

TEST(Orbit, BudgetMarksNonExhaustive) {
  auto orb = orbit_enumerate(EdgeColouring::monochromatic(4, 3, 0), ColourGroup::symmetric(3), 10);
  EXPECT_FALSE(orb.exhaustive());
  EXPECT_LE(orb.size(), 10u);
}

TEST(Orbit, ParallelMatchesSerial) {
  auto g = named_construction("paper-k6");
  auto a = orbit_enumerate(g, ColourGroup::cyclic(4), kDefaultOrbitBudget, {1});
  auto b = orbit_enumerate(g, ColourGroup::cyclic(4), kDefaultOrbitBudget, {4});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.members()[i], b.members()[i]);
}

TEST(Equivalent, Examples) {
  std::mt19937_64 rng(42);
  auto g = random_colouring(rng, 5, 3);
  EXPECT_TRUE(switch_equivalent(g, g, ColourGroup::symmetric(3)));
  auto c4 = ColourGroup::cyclic(4);
  EXPECT_FALSE(switch_equivalent(EdgeColouring::monochromatic(3, 4, 0),
                                 EdgeColouring::monochromatic(3, 4, 1), c4));
  EXPECT_TRUE(switch_equivalent(EdgeColouring::monochromatic(3, 4, 0),
                                EdgeColouring::monochromatic(3, 4, 2), c4));
}

TEST(Equivalent, SequencesAreValidAndAgreeWithOracle) {
  std::mt19937_64 rng(43);
  std::vector<ColourGroup> groups{ColourGroup::cyclic(3), ColourGroup::symmetric(3),
                                  ColourGroup::generate(3, {Permutation{1, 0, 2}})};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& grp = groups[trial % groups.size()];
    auto g = random_colouring(rng, 4, 3);
    auto h = random_colouring(rng, 4, 3);
    if (trial % 2 == 0) {
      // make a guaranteed-equivalent pair half the time
      h = g;
      for (int k = 0; k < 5; ++k) {
        h = switch_at(h, static_cast<int>(rng() % 4), grp.element(rng() % grp.order()));
      }
    }
    auto s = switching_between(g, h, grp);
    bool ref = oracle::orbit(to_matrix(g), elements_of(grp)).count(oracle::upper_of(to_matrix(h))) > 0;
    ASSERT_EQ(s.has_value(), ref);
    if (s) {
      EXPECT_EQ(apply_sequence(g, *s), h);
      for (const auto& st : s->steps) EXPECT_TRUE(grp.contains(st.perm));
    }
  }
}

TEST(Equivalent, ShapeMismatchThrows) {
  EXPECT_THROW(switch_equivalent(EdgeColouring(3, 2), EdgeColouring(4, 2), ColourGroup::cyclic(2)),
               std::invalid_argument);
}

TEST(Equivalent, UniformSwitching) {
  for (int m : {2, 3, 4}) {
    auto grp = ColourGroup::cyclic(m);
    for (int n = 2; n <= 5; ++n) {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          // K_2 is one edge, so any colour is reachable there.
          bool expect = m == 3 || n == 2 || (j - i) % 2 == 0;
          EXPECT_EQ(switch_equivalent(EdgeColouring::monochromatic(n, m, i),
                                      EdgeColouring::monochromatic(n, m, j), grp),
                    expect)
              << "m=" << m << " n=" << n << " i=" << i << " j=" << j;
        }
      }
    }
  }
}

TEST(Generic, Examples) {
  auto r = decide_containment_generic(EdgeColouring::monochromatic(3, 3, 0), ColourGroup::cyclic(3),
                                      RamseyTarget({3, 3, 3}));
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(r.witness->sequence.empty());
  auto k6 = decide_containment_generic(named_construction("paper-k6"), ColourGroup::cyclic(4),
                                       RamseyTarget({3, 4, 3, 4}));
  EXPECT_TRUE(k6.absent());
  EXPECT_EQ(k6.stats.orbit_members, 2048u);
}

TEST(Generic, BudgetGivesUnknown) {
  // S_3 orbit of any K5 colouring is far larger than 5 members.
  EdgeColouring g = EdgeColouring::monochromatic(5, 3, 0);
  auto r = decide_containment_generic(g, ColourGroup::symmetric(3), RamseyTarget({6, 6, 6}), 5);
  EXPECT_EQ(r.status, ContainmentStatus::unknown);
}

TEST(Generic, NonAbelianMatchesOracle) {
  std::mt19937_64 rng(44);
  auto s3 = ColourGroup::symmetric(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_colouring(rng, 4, 3);
    std::vector<int> a{3 + static_cast<int>(rng() % 2), 3 + static_cast<int>(rng() % 2),
                       3 + static_cast<int>(rng() % 2)};
    auto r = decide_containment_generic(g, s3, RamseyTarget(a));
    EXPECT_EQ(r.found(), oracle::orbit_contains(to_matrix(g), elements_of(s3), a));
    if (r.found()) {
      EXPECT_TRUE(witness_holds(g, *r.witness));
    }
  }
}

TEST(Classes, FormulaExamples) {
  EXPECT_EQ(count_classes(3, ColourGroup::cyclic(3), CountMode::formula), 1u);
  EXPECT_EQ(count_classes(3, ColourGroup::cyclic(4), CountMode::formula), 2u);
  EXPECT_EQ(count_classes(4, ColourGroup::cyclic(2), CountMode::formula), 8u);
}

TEST(Classes, BruteMatchesOracle) {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}}) {
    auto grp = ColourGroup::cyclic(m);
    auto brute = count_classes(n, grp, CountMode::brute);
    EXPECT_EQ(brute, oracle::class_count(n, m, elements_of(grp)));
    EXPECT_EQ(brute, count_classes(n, grp, CountMode::formula));
  }
  auto s3 = ColourGroup::symmetric(3);
  EXPECT_EQ(count_classes(4, s3, CountMode::brute), oracle::class_count(4, 3, elements_of(s3)));
}

TEST(Classes, FormulaRefusesNonCyclic) {
  EXPECT_THROW(count_classes(4, ColourGroup::symmetric(3), CountMode::formula), std::invalid_argument);
}

TEST(Sweep, SizesAndShape) {
  EXPECT_EQ(HomogenisedSweep(3, ColourGroup::cyclic(2), 0).size(), 2u);
  HomogenisedSweep sweep(7, ColourGroup::cyclic(2), 0);
  EXPECT_EQ(sweep.size(), 32768u);
  auto g = sweep.at(12345);
  for (int u = 0; u < 6; ++u) EXPECT_EQ(g.colour(u, 6), 0);
}

TEST(Sweep, CoversEveryClass) {
  // Every class of K4 colourings under C_3 and S_3 meets the sweep.
  for (auto grp : {ColourGroup::cyclic(3), ColourGroup::symmetric(3)}) {
    HomogenisedSweep sweep(4, grp, 1);
    std::set<std::vector<int>> covered;
    for (std::uint64_t i = 0; i < sweep.size(); ++i) {
      auto o = oracle::orbit(to_matrix(sweep.at(i)), elements_of(grp));
      covered.insert(o.begin(), o.end());
    }
    EXPECT_EQ(covered.size(), colouring_total(4, 3));
  }
}

TEST(SelfIso, AgreesWithOracle) {
  auto k2 = find_switch_isomorphic(EdgeColouring::monochromatic(2, 2, 0), ColourGroup::cyclic(2));
  EXPECT_EQ(k2.status, ContainmentStatus::absent);
  auto k3 = EdgeColouring::monochromatic(3, 3, 0);
  auto r = find_switch_isomorphic(k3, ColourGroup::cyclic(3));
  EXPECT_EQ(r.status == ContainmentStatus::found,
            oracle::self_isomorphic(to_matrix(k3), elements_of(ColourGroup::cyclic(3))));

  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    auto grp = trial % 2 ? ColourGroup::cyclic(2) : ColourGroup::cyclic(3);
    auto g = random_colouring(rng, 4, grp.degree());
    auto s = find_switch_isomorphic(g, grp);
    ASSERT_EQ(s.status == ContainmentStatus::found,
              oracle::self_isomorphic(to_matrix(g), elements_of(grp)));
    if (s.h) {
      EXPECT_NE(*s.h, g);
      EXPECT_EQ(apply_sequence(g, s.sequence), *s.h);
      for (int u = 0; u < 4; ++u) {
        for (int v = u + 1; v < 4; ++v) {
          EXPECT_EQ(s.h->colour(u, v), g.colour(s.bijection[u], s.bijection[v]));
        }
      }
    }
  }
}

TEST(SelfIso, RefusesLargeGraphs) {
  EXPECT_THROW(find_switch_isomorphic(EdgeColouring(9, 2), ColourGroup::cyclic(2)),
               std::invalid_argument);
}

TEST(CliqueThroughVertex, MatchesOracle) {
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 120; ++trial) {
    bool regular = trial % 2 == 0;
    auto grp = regular ? ColourGroup::cyclic(3) : ColourGroup::symmetric(3);
    int n = regular ? 5 : 4;
    auto g = random_colouring(rng, n, 3);
    int v = static_cast<int>(rng() % static_cast<unsigned>(n));
    int k = 3 + static_cast<int>(rng() % 2);
    bool got = clique_through_vertex(g, grp, v, k);
    EXPECT_EQ(got, oracle::vertex_in_mono(to_matrix(g), elements_of(grp), v, k));
    EXPECT_EQ(got, clique_through_vertex_by_orbit(g, grp, v, k) == ContainmentStatus::found);
  }
}

TEST(CliqueThroughVertex, HomogenisedTestExactForRegularGroup) {
  auto c3 = ColourGroup::cyclic(3);
  for (std::uint64_t i = 0; i < colouring_total(4, 3); ++i) {
    auto g = colouring_from_index(4, 3, i);
    for (int v = 0; v < 4; ++v) {
      auto rest = homogenise(g, c3, v, 0).graph.without_vertex(v);
      for (int k = 3; k <= 4; ++k) {
        bool homog = false;
        for (int c = 0; c < 3; ++c) homog = homog || find_mono_clique(rest, c, k - 1).has_value();
        ASSERT_EQ(homog, oracle::vertex_in_mono(to_matrix(g), elements_of(c3), v, k));
      }
    }
  }
}

TEST(CliqueThroughVertex, HomogenisedTestIncompleteForSymmetricGroup) {
  // Found by the orbit oracle: under S_3 vertex 2 lies in a monochromatic
  // K_4 of some switch, yet no homogenisation at 2 leaves a monochromatic
  // triangle behind.
  EdgeColouring g(5, 3, {1, 1, 0, 1, 0, 0, 0, 0, 2, 2});
  auto s3 = ColourGroup::symmetric(3);
  EXPECT_TRUE(oracle::vertex_in_mono(to_matrix(g), elements_of(s3), 2, 4));
  EXPECT_TRUE(clique_through_vertex(g, s3, 2, 4));
  auto rest = homogenise(g, s3, 2, 0).graph.without_vertex(2);
  for (int c = 0; c < 3; ++c) EXPECT_FALSE(find_mono_clique(rest, c, 3));
}

TEST(Orbit, CyclicSizesFollowKernel) {
  std::mt19937_64 rng(47);
  for (int n = 3; n <= 4; ++n) {
    for (int m = 2; m <= 4; ++m) {
      std::size_t want = 1;
      for (int i = 0; i < n; ++i) want *= static_cast<std::size_t>(m);
      if (m % 2 == 0) want /= 2;
      for (int trial = 0; trial < 5; ++trial) {
        auto g = random_colouring(rng, n, m);
        EXPECT_EQ(orbit_enumerate(g, ColourGroup::cyclic(m)).size(), want) << "n=" << n << " m=" << m;
      }
    }
  }
}

TEST(Equivalent, IsAnEquivalenceRelation) {
  std::mt19937_64 rng(48);
  auto grp = ColourGroup::generate(3, {Permutation{1, 0, 2}});  // small orbits
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_colouring(rng, 4, 3);
    auto b = a;
    auto c = a;
    for (int k = 0; k < 3; ++k) {
      if (rng() % 2) b = switch_at(b, static_cast<int>(rng() % 4), grp.element(1));
      if (rng() % 2) c = switch_at(c, static_cast<int>(rng() % 4), grp.element(1));
    }
    if (rng() % 3 == 0) c = random_colouring(rng, 4, 3);
    bool ab = switch_equivalent(a, b, grp), ba = switch_equivalent(b, a, grp);
    bool bc = switch_equivalent(b, c, grp), ac = switch_equivalent(a, c, grp);
    EXPECT_TRUE(switch_equivalent(a, a, grp));
    EXPECT_EQ(ab, ba);
    if (ab && bc) {
      EXPECT_TRUE(ac);
    }
  }
}
