#include <gtest/gtest.h>

#include <random>

#include "bridge.hpp"
#include "gswitch/constructions/named.hpp"
#include "gswitch/push_graph/push_graph.hpp"

using namespace gswitch;
using testing_support::colouring_from_index;
using testing_support::colouring_total;
using testing_support::elements_of;
using testing_support::random_colouring;
using testing_support::to_matrix;

namespace {

int defined_edges(const PushGraph& p) {
  int count = 0;
  for (int x = 0; x < p.vertices(); ++x) {
    for (int y = x + 1; y < p.vertices(); ++y) count += p.adjacent(x, y);
  }
  return count;
}

}  // namespace

TEST(BuildPush, K2UnderC2) {
  auto p = build_push(EdgeColouring::monochromatic(2, 2, 0), ColourGroup::cyclic(2));
  EXPECT_EQ(p.vertices(), 4);
  EXPECT_EQ(defined_edges(p), 4);
  EXPECT_EQ(p.colour(p.vertex(0, 0), p.vertex(1, 0)), 0);
  EXPECT_EQ(p.colour(p.vertex(0, 1), p.vertex(1, 1)), 0);
  EXPECT_EQ(p.colour(p.vertex(0, 0), p.vertex(1, 1)), 1);
  EXPECT_EQ(p.colour(p.vertex(0, 1), p.vertex(1, 0)), 1);
  EXPECT_FALSE(p.adjacent(p.vertex(0, 0), p.vertex(0, 1)));
}

TEST(BuildPush, TrivialGroupGivesG) {
  std::mt19937_64 rng(51);
  auto g = random_colouring(rng, 5, 3);
  auto p = build_push(g, ColourGroup::trivial(3));
  ASSERT_EQ(p.vertices(), 5);
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) EXPECT_EQ(p.colour(u, v), g.colour(u, v));
  }
}

TEST(BuildPush, VertexCountAndFormula) {
  auto gg16 = named_construction("gg16");
  auto grp = ColourGroup::cyclic(3);
  auto p = build_push(gg16, grp);
  EXPECT_EQ(p.vertices(), 48);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int u = 0; u < 16; u += 5) {
        for (int v = 0; v < 16; v += 3) {
          if (u == v) continue;
          int want = grp.element(i)(grp.element(j)(gg16.colour(u, v)));
          EXPECT_EQ(p.colour(p.vertex(u, i), p.vertex(v, j)), want);
        }
      }
    }
  }
}

TEST(BuildPush, RejectsNonAbelian) {
  EXPECT_THROW(build_push(EdgeColouring(3, 3), ColourGroup::symmetric(3)), std::invalid_argument);
}

TEST(StarScheme, SmallCases) {
  // C_2: one star edge per base vertex.
  auto p2 = build_push_star(EdgeColouring::monochromatic(3, 2, 1), ColourGroup::cyclic(2));
  for (int k = 0; k < 3; ++k) EXPECT_TRUE(p2.adjacent(p2.vertex(k, 0), p2.vertex(k, 1)));
  // C_3: each star triangle is rainbow.
  auto s3 = star_scheme(3, 3);
  EXPECT_NE(s3[0][1], s3[0][2]);
  EXPECT_NE(s3[0][1], s3[1][2]);
  EXPECT_NE(s3[0][2], s3[1][2]);
  // C_4: (i+j) mod 4 has no monochromatic triangle.
  auto s4 = star_scheme(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      EXPECT_EQ(s4[a][b], (a + b) % 4);
      for (int c = b + 1; c < 4; ++c) {
        EXPECT_FALSE(s4[a][b] == s4[a][c] && s4[a][b] == s4[b][c]);
      }
    }
  }
}

TEST(PushClique, IdentityCopyOfMonochromaticTriangle) {
  auto p = build_push(EdgeColouring::monochromatic(3, 3, 0), ColourGroup::cyclic(3));
  EXPECT_TRUE(push_mono_clique(p, 3));
}

TEST(PushClique, ParityBlocksOddColours) {
  auto k5 = named_construction("paper-k6").without_vertex(5);
  auto p = build_push(k5, ColourGroup::cyclic(4));
  EXPECT_FALSE(push_mono_clique(p, 3, 0));
  EXPECT_FALSE(push_mono_clique(p, 3, 2));
}

TEST(PushClique, BiconditionalWithOrbitSearch) {
  // P(G) has a monochromatic K_t iff some member of [G] does.
  for (int m : {2, 3}) {
    auto grp = ColourGroup::cyclic(m);
    auto elems = elements_of(grp);
    for (int n = 2; n <= 4; ++n) {
      for (std::uint64_t i = 0; i < colouring_total(n, m); ++i) {
        auto g = colouring_from_index(n, m, i);
        auto p = build_push(g, grp);
        auto orb = oracle::orbit(to_matrix(g), elems);
        for (int t = 2; t <= n; ++t) {
          bool ref = false;
          for (const auto& x : orb) {
            auto h = oracle::matrix_of(n, x);
            for (int c = 0; c < m && !ref; ++c) ref = oracle::has_mono(h, c, t);
            if (ref) break;
          }
          ASSERT_EQ(push_mono_clique(p, t).has_value(), ref) << "n=" << n << " m=" << m << " i=" << i;
        }
      }
    }
  }
}

TEST(PushClique, ParallelMatchesSerial) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_colouring(rng, 6, 3);
    auto p = build_push(g, ColourGroup::cyclic(3));
    auto a = push_mono_clique(p, 4, kernels::Parallelism{1});
    auto b = push_mono_clique(p, 4, kernels::Parallelism{4});
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_EQ(a->vertices, b->vertices);
      EXPECT_EQ(a->colour, b->colour);
    }
  }
}

TEST(PushStar, CliquesAvoidStarEdges) {
  // C_2, targets (3,3): 2n >= R(3,3) = 6 from n = 3 on.
  auto c2 = ColourGroup::cyclic(2);
  for (int n = 3; n <= 4; ++n) {
    for (std::uint64_t i = 0; i < colouring_total(n, 2); ++i) {
      auto p = build_push_star(colouring_from_index(n, 2, i), c2);
      auto k = push_mono_clique(p, 3);
      ASSERT_TRUE(k) << "n=" << n << " i=" << i;
      EXPECT_FALSE(uses_star_edge(p, *k));
    }
  }
}

TEST(Extract, DoublingPigeonhole) {
  std::mt19937_64 rng(53);
  auto c2 = ColourGroup::cyclic(2);
  int extracted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_colouring(rng, 6, 2);
    auto p = build_push(g, c2);
    auto k = push_mono_clique(p, 4);  // |Gamma| * a with a = 2
    if (!k) continue;
    auto cc = extract_copy_clique(p, c2, *k, 2);
    ASSERT_EQ(cc.base_vertices.size(), 2u);
    EXPECT_EQ(g.colour(cc.base_vertices[0], cc.base_vertices[1]), cc.colour_in_g);
    ++extracted;
  }
  EXPECT_GT(extracted, 0);

  auto c3 = ColourGroup::cyclic(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_colouring(rng, 7, 3);
    auto p = build_push(g, c3);
    auto k = push_mono_clique(p, 6);
    if (!k) continue;
    auto cc = extract_copy_clique(p, c3, *k, 2);
    EXPECT_EQ(g.colour(cc.base_vertices[0], cc.base_vertices[1]), cc.colour_in_g);
  }
}
