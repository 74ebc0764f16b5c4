#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"

#include "smz/shapes.hpp"

using namespace smz;

TEST(Partition, DropsTrailingZerosAndRejectsIncreasing) {
  EXPECT_EQ(Partition({3, 1, 0, 0}).parts(), (std::vector<int>{3, 1}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
}

TEST(Partition, CountsMatchPartitionNumbers) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(partitions_of(n).size(), p[n]) << n;
}

TEST(Partition, ConjugateIsAnInvolution) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : partitions_of(n)) {
      EXPECT_EQ(conjugate(conjugate(p)), p);
      EXPECT_EQ(conjugate(p).weight(), n);
    }
  EXPECT_EQ(conjugate(Partition{4, 3, 3, 2}), (Partition{4, 4, 3, 1}));
}

TEST(Partition, BoxHoldsBinomialManyShapes) {
  // C(r + c, r)
  EXPECT_EQ(partitions_in_box(2, 3).size(), 10u);
  EXPECT_EQ(partitions_in_box(3, 3).size(), 20u);
}

TEST(Frobenius, RoundTrip) {
  auto f = frobenius(Partition{4, 3, 3, 2});
  EXPECT_EQ(f.arms, (std::vector<int>{4, 2, 1}));
  EXPECT_EQ(f.legs, (std::vector<int>{3, 2, 0}));
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) EXPECT_EQ(from_frobenius(frobenius(p)), p);
}

TEST(SkewShape, CellsAndCorners) {
  SkewShape s{Partition{3, 2}, Partition{1}};
  EXPECT_EQ(s.size(), 4);
  EXPECT_EQ(s.cells().front(), (Cell{1, 2}));
  auto c = s.corners();
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(s.content_range(), (std::pair<int, int>{-1, 2}));
  EXPECT_EQ(s.str(), "3 2 / 1");
  EXPECT_EQ(parse_shape("3 2 / 1"), s);
}

TEST(SkewShape, RibbonDetection) {
  EXPECT_TRUE((SkewShape{Partition{3, 1}}).is_ribbon());
  EXPECT_FALSE((SkewShape{Partition{2, 2}}).is_ribbon());
  EXPECT_TRUE((SkewShape{Partition{3, 3, 2}, Partition{2, 1}}).is_ribbon());
  EXPECT_FALSE((SkewShape{Partition{2, 1}, Partition{1}}).is_ribbon());  // disconnected
}

TEST(AntiTranspose, InvolutionOnEveryShapeInABox) {
  for (const auto& outer : partitions_in_box(3, 3))
    for (const auto& inner : subpartitions(outer)) {
      SkewShape s{outer, inner};
      SkewShape a = anti_transpose(s, 3, 3);
      EXPECT_EQ(a.size(), s.size());
      // the same cells can sit under several (outer, inner) pairs
      auto back = anti_transpose(a, 3, 3).cells(), orig = s.cells();
      std::sort(back.begin(), back.end());
      std::sort(orig.begin(), orig.end());
      EXPECT_EQ(back, orig) << s.str();
    }
}

TEST(AntiTranspose, MovesValuesWithCells) {
  auto t = Tableau<int>::from_rows(SkewShape{Partition{2, 1}}, {{1, 2}, {3}});
  auto a = anti_transpose(t);
  // (1,1)->(2,2), (1,2)->(1,2), (2,1)->(2,1) in a 2x2 box
  EXPECT_EQ(a.shape(), (SkewShape{Partition{2, 2}, Partition{1}}));
  EXPECT_EQ(a.at({2, 2}), 1);
  EXPECT_EQ(a.at({1, 2}), 2);
  EXPECT_EQ(a.at({2, 1}), 3);
}

TEST(Ribbon, SpecRoundTrip) {
  RibbonSpec spec{{{2, 1}, {2, 0}}};
  SkewShape s = ribbon_shape(spec);
  EXPECT_TRUE(s.is_ribbon());
  EXPECT_EQ(s.size(), 5);
  EXPECT_EQ(ribbon_spec(s), spec);
}

TEST(Ribbon, ChainStartsTopRight) {
  auto ch = ribbon_chain(SkewShape{Partition{3, 1}});
  ASSERT_TRUE(ch);
  EXPECT_EQ(ch->cells.front(), (Cell{1, 3}));
  EXPECT_EQ(ch->cells.back(), (Cell{2, 1}));
  EXPECT_EQ(ch->left_step, (std::vector<bool>{true, true, false}));
}

TEST(Diagonal, BuildAndRecover) {
  SkewShape s{Partition{3, 2}};
  std::map<int, int> a{{-1, 5}, {0, 2}, {1, 3}, {2, 4}};
  auto t = diagonal_tableau(s, a);
  EXPECT_EQ(t.values(), (std::vector<int>{2, 3, 4, 5, 2}));
  EXPECT_EQ(*diagonal_values(t), a);
  EXPECT_FALSE(is_diagonal(Tableau<int>::from_rows(s, {{1, 2, 3}, {4, 5}})));
}

TEST(IndexSet, CornersMustBeAtLeastTwo) {
  SkewShape s{Partition{2, 1}};
  EXPECT_TRUE(in_index_set_I(Tableau<int>::from_rows(s, {{1, 2}, {2}})));
  EXPECT_FALSE(in_index_set_I(Tableau<int>::from_rows(s, {{1, 2}, {1}})));
  EXPECT_TRUE(in_region_W(Tableau<double>::from_rows(s, {{1.0, 1.5}, {1.1}})));
}
