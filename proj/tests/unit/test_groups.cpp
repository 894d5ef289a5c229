#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bridge.hpp"
#include "gswitch/core/switching.hpp"
#include "gswitch/groups/commutator.hpp"
#include "gswitch/groups/group_spec.hpp"
#include "gswitch/groups/kernel.hpp"

using namespace gswitch;

TEST(Generate, Orders) {
  EXPECT_EQ(ColourGroup::generate(4, {Permutation{1, 2, 3, 0}}).order(), 4u);
  EXPECT_EQ(ColourGroup::generate(3, {Permutation{1, 0, 2}, Permutation{1, 2, 0}}).order(), 6u);
  auto a4 = ColourGroup::generate(
      4, {Permutation::from_cycles(4, {{0, 1, 2}}), Permutation::from_cycles(4, {{0, 1, 3}})});
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_TRUE(a4.same_elements(ColourGroup::alternating(4)));
}

TEST(Generate, ClosureMatchesOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 2 + static_cast<int>(rng() % 4);
    std::vector<Permutation> gens;
    std::vector<oracle::Perm> raw;
    for (int k = 0; k < 2; ++k) {
      std::vector<int> img(static_cast<std::size_t>(m));
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
      raw.push_back(img);
    }
    auto g = ColourGroup::generate(m, gens);
    auto ref = oracle::closure(m, raw);
    ASSERT_EQ(g.order(), ref.size());
    for (const auto& p : ref) EXPECT_TRUE(g.contains(Permutation(p)));
  }
}

TEST(Generate, BfsLayoutOfCyclicGroup) {
  auto c5 = ColourGroup::cyclic(5);
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_EQ(c5.element(k), Permutation::rotation(5, static_cast<int>(k)));
  }
  EXPECT_TRUE(c5.is_standard_cyclic());
}

TEST(ColourOrbits, Examples) {
  EXPECT_EQ(colour_orbits(ColourGroup::cyclic(4)), (std::vector<std::vector<int>>{{0, 1, 2, 3}}));
  auto swap01 = ColourGroup::generate(3, {Permutation{1, 0, 2}});
  EXPECT_EQ(colour_orbits(swap01), (std::vector<std::vector<int>>{{0, 1}, {2}}));
  auto two = ColourGroup::generate(
      4, {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{2, 3}})});
  EXPECT_EQ(colour_orbits(two), (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
}

TEST(ActionProperties, Examples) {
  auto p = action_properties(ColourGroup::cyclic(4));
  EXPECT_TRUE(p.transitive && p.semi_regular && p.abelian);
  p = action_properties(ColourGroup::symmetric(3));
  EXPECT_TRUE(p.transitive);
  EXPECT_FALSE(p.semi_regular);
  EXPECT_FALSE(p.abelian);
  p = action_properties(ColourGroup::generate(3, {Permutation{1, 0, 2}}));
  EXPECT_FALSE(p.transitive);
  EXPECT_FALSE(p.semi_regular);
  EXPECT_TRUE(p.abelian);
}

TEST(Commutator, Examples) {
  EXPECT_EQ(commutator_subgroup(ColourGroup::cyclic(5)).group.order(), 1u);
  auto s3 = commutator_subgroup(ColourGroup::symmetric(3));
  EXPECT_TRUE(s3.group.same_elements(ColourGroup::cyclic(3)));
  auto d4 = commutator_subgroup(ColourGroup::dihedral(4));
  EXPECT_EQ(d4.group.order(), 2u);
  EXPECT_TRUE(d4.group.contains(Permutation::from_cycles(4, {{0, 2}, {1, 3}})));
}

TEST(Commutator, WordsEvaluateToElements) {
  for (auto grp : {ColourGroup::symmetric(4), ColourGroup::alternating(4),
                   ColourGroup::dihedral(6)}) {
    auto cs = commutator_subgroup(grp);
    ASSERT_EQ(cs.words.size(), cs.group.order());
    for (std::size_t i = 0; i < cs.group.order(); ++i) {
      EXPECT_EQ(cs.words[i].evaluate(grp.degree()), cs.group.element(i));
      for (const auto& [a, b] : cs.words[i].factors) {
        EXPECT_TRUE(grp.contains(a));
        EXPECT_TRUE(grp.contains(b));
      }
    }
  }
}

TEST(Commutator, MatchesBruteForceClosure) {
  for (auto grp : {ColourGroup::symmetric(3), ColourGroup::symmetric(4), ColourGroup::dihedral(4),
                   ColourGroup::dihedral(5), ColourGroup::alternating(4)}) {
    std::vector<oracle::Perm> comms;
    for (const auto& a : grp.elements()) {
      for (const auto& b : grp.elements()) {
        comms.push_back((b.inverse() * a.inverse() * b * a).image());
      }
    }
    auto ref = oracle::closure(grp.degree(), comms);
    EXPECT_EQ(commutator_subgroup(grp).group.order(), ref.size()) << grp.name();
  }
}

TEST(Quotient, Examples) {
  auto s3 = quotient_action(ColourGroup::symmetric(3));
  EXPECT_EQ(s3.orbits.size(), 1u);
  EXPECT_EQ(s3.group.order(), 1u);

  auto c4 = quotient_action(ColourGroup::cyclic(4));
  EXPECT_EQ(c4.orbits.size(), 4u);
  EXPECT_EQ(c4.group.order(), 4u);

  auto d4 = quotient_action(ColourGroup::dihedral(4));
  EXPECT_EQ(d4.orbits, (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
  EXPECT_EQ(d4.group.degree(), 2);
  EXPECT_EQ(d4.group.order(), 2u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_of_switch_action(3, 5), (std::vector<std::vector<int>>{{0, 0, 0, 0, 0}}));
  EXPECT_EQ(kernel_of_switch_action(4, 3), (std::vector<std::vector<int>>{{0, 0, 0}, {2, 2, 2}}));
  EXPECT_EQ(kernel_of_switch_action(2, 4),
            (std::vector<std::vector<int>>{{0, 0, 0, 0}, {1, 1, 1, 1}}));
}

TEST(Kernel, MatchesBruteForce) {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 2; m <= 4; ++m) {
      auto got = kernel_of_switch_action(m, n);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, oracle::cyclic_kernel(m, n)) << "n=" << n << " m=" << m;
    }
  }
}

TEST(SingleEdge, AbelianGroupRejected) {
  EXPECT_THROW(single_edge_sequence(ColourGroup::cyclic(4), 0, 1, 0, 1), std::invalid_argument);
}

TEST(SingleEdge, ChangesExactlyOneEdge) {
  std::mt19937_64 rng(22);
  std::vector<ColourGroup> groups{ColourGroup::symmetric(3), ColourGroup::alternating(4),
                                  ColourGroup::symmetric(4)};
  for (int trial = 0; trial < 150; ++trial) {
    const auto& grp = groups[trial % 3];
    int m = grp.degree();
    int n = 3 + static_cast<int>(rng() % 4);
    auto g = testing_support::random_colouring(rng, n, m);
    int u = static_cast<int>(rng() % static_cast<unsigned>(n));
    int v = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    if (v >= u) ++v;
    int from = g.colour(u, v);
    int to = static_cast<int>(rng() % static_cast<unsigned>(m));
    auto s = single_edge_sequence(grp, u, v, from, to);
    for (const auto& st : s.steps) EXPECT_TRUE(grp.contains(st.perm));
    auto h = apply_sequence(g, s);
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        bool target = (x == std::min(u, v) && y == std::max(u, v));
        EXPECT_EQ(h.colour(x, y), target ? to : g.colour(x, y));
      }
    }
  }
}

TEST(GroupSpec, ParsesFamiliesAndCycles) {
  EXPECT_EQ(parse_group_spec("C4").order(), 4u);
  EXPECT_EQ(parse_group_spec("S3").order(), 6u);
  EXPECT_EQ(parse_group_spec("D5").order(), 10u);
  EXPECT_EQ(parse_group_spec("A4").order(), 12u);
  EXPECT_EQ(parse_group_spec("trivial", 3).order(), 1u);
  EXPECT_EQ(parse_group_spec("(1 2),(3 4)", 4).order(), 4u);
  EXPECT_EQ(parse_group_spec("4:(1 2 3 4)").order(), 4u);
  EXPECT_THROW(parse_group_spec("C4", 3), std::invalid_argument);
  EXPECT_THROW(parse_group_spec("(1 2)"), std::invalid_argument);
  EXPECT_THROW(parse_group_spec("Q8"), std::invalid_argument);
}
