#include <gtest/gtest.h>

#include "antiramsey/formulas.hpp"

using namespace antiramsey;

namespace {
PartSizes ones(int r) { return PartSizes(std::vector<int>(static_cast<std::size_t>(r), 1)); }
} // namespace

TEST(ArComplete, Values) {
  EXPECT_EQ(ar_complete(5, 3), 4);
  EXPECT_EQ(ar_complete(6, 4), 7);
  EXPECT_EQ(ar_complete(7, 4), 8);
  EXPECT_EQ(ar_complete(7, 4), 4 * 7 / 3 - 1);
  for (Count n = 3; n <= 40; ++n) {
    EXPECT_EQ(ar_complete(n, 3), n - 1);
    if (n >= 4) {
      EXPECT_EQ(ar_complete(n, 4), 4 * n / 3 - 1);
    }
  }
  EXPECT_THROW(ar_complete(3, 4), InvalidInput);
  EXPECT_THROW(ar_complete(5, 2), InvalidInput);
}

TEST(ArBipartiteEven, Branches) {
  EXPECT_EQ(ar_bipartite_even(3, 3, 2), 5);
  EXPECT_EQ(ar_bipartite_even(1, 5, 2), 5);
  EXPECT_EQ(ar_bipartite_even(1, 4, 3), 4);
  EXPECT_THROW(ar_bipartite_even(4, 3, 2), InvalidInput);
  EXPECT_THROW(ar_bipartite_even(0, 3, 2), InvalidInput);
  EXPECT_THROW(ar_bipartite_even(1, 3, 1), InvalidInput);
  // Boundary agreement is asserted inside; sweep to exercise it.
  for (Count k = 2; k <= 6; ++k)
    for (Count m = 1; m <= 14; ++m)
      for (Count n = m; n <= 16; ++n)
        EXPECT_NO_THROW(ar_bipartite_even(m, n, k));
}

TEST(ArSplit, C3) {
  EXPECT_EQ(ar_split_c3(2, 1), 2);
  EXPECT_EQ(ar_split_c3(4, 4), 7);
  EXPECT_EQ(ar_split_c3(3, 1), 3);
  EXPECT_THROW(ar_split_c3(1, 1), InvalidInput);
  EXPECT_THROW(ar_split_c3(2, 0), InvalidInput);
}

TEST(ArSplit, C4) {
  EXPECT_EQ(ar_split_c4(4, 2), (BoundInterval{7, 7}));
  EXPECT_EQ(ar_split_c4(4, 4), (BoundInterval{9, 9}));
  EXPECT_EQ(split_c4_interval(4, 4).lower, 8);
  EXPECT_FALSE(ar_split_c4(6, 2).has_value());
  EXPECT_THROW(ar_split_c4(3, 2), InvalidInput);
  // Where both results apply the exact value sits inside the interval.
  for (Count n = 4; n <= 20; ++n)
    for (Count s = n; s <= 25; ++s) {
      const auto exact = ar_split_c4(n, s);
      const auto wide = split_c4_interval(n, s);
      ASSERT_TRUE(exact && exact->exact());
      EXPECT_LE(wide.lower, exact->lower);
      EXPECT_GE(wide.upper, exact->lower);
    }
}

TEST(RPartite, ReferenceValues) {
  EXPECT_EQ(ar_rpartite_c3c4({2, 2, 1}), 4);
  EXPECT_EQ(ar_rpartite_c3c4({1, 1, 1}), 2);
  EXPECT_EQ(ar_rpartite_c3c4({3, 2, 2}), 6);
  EXPECT_EQ(ar_rpartite_c3({2, 2, 1}), 5);
  EXPECT_EQ(ar_rpartite_c3({2, 2, 1, 1}), 6);
  EXPECT_EQ(ar_rpartite_c4({2, 2, 2}), 7);
  EXPECT_EQ(ar_rpartite_c4({1, 1, 1, 1}), 4);
  EXPECT_EQ(ar_rpartite_c4({2, 1, 1, 1, 1}), 7);
  EXPECT_EQ(ar_rpartite_c4({2, 1, 1, 1, 1}), ar_split_c4(4, 2)->lower);
  for (auto f : {ar_rpartite_c3c4, ar_rpartite_c3, ar_rpartite_c4})
    EXPECT_THROW(f({2, 1}), InvalidInput);
}

TEST(RPartite, PackingNumber) {
  EXPECT_EQ(max_independent_triangles({2, 2, 2}), 2);
  EXPECT_EQ(max_independent_triangles({5, 1, 1}), 1);
  EXPECT_EQ(max_independent_triangles({3, 3, 1}), 1);
  EXPECT_THROW(max_independent_triangles({3, 3}), InvalidInput);
}

TEST(RPartite, ExtremalBounds) {
  EXPECT_EQ(extremal_edge_bound({2, 2, 1}, Forbidden::multipartite_p3), 4);
  EXPECT_EQ(extremal_edge_bound({2, 2, 1}, Forbidden::multipartite_cycle), 5);
  EXPECT_EQ(extremal_edge_bound({1, 1, 1}, Forbidden::multipartite_cycle), 2);
  EXPECT_EQ(extremal_edge_bound({1, 1, 1}, Forbidden::multipartite_p3), 1);
}

TEST(RPartite, ReductionsOnSingletonParts) {
  for (int r = 3; r <= 12; ++r) {
    EXPECT_EQ(ar_rpartite_c3c4(ones(r)), r - 1);
    EXPECT_EQ(ar_rpartite_c3(ones(r)), r - 1);
    EXPECT_EQ(ar_rpartite_c3(ones(r)), ar_complete(r, 3));
    if (r >= 4) {
      EXPECT_EQ(ar_rpartite_c4(ones(r)), ar_complete(r, 4));
    }
    EXPECT_EQ(ar_rpartite_c4(ones(r)), 4 * r / 3 - 1);
  }
}

TEST(RPartite, SplitGraphAgreement) {
  for (int n = 4; n <= 30; ++n)
    for (int s = 1; n + s <= 30; ++s) {
      if (2 * s < n)
        continue;
      std::vector<int> sizes{s};
      sizes.insert(sizes.end(), static_cast<std::size_t>(n), 1);
      const PartSizes parts(sizes);
      EXPECT_EQ(ar_rpartite_c4(parts), 3 * n / 2 + s - 1) << n << "," << s;
      EXPECT_EQ(ar_rpartite_c4(parts), ar_split_c4(n, s)->lower);
      // t = floor(n/2) in this range
      EXPECT_EQ(max_independent_triangles(parts), n / 2);
    }
}

TEST(RPartite, FamilyMonotonicity) {
  for (const auto &parts : all_part_sizes(15, 3)) {
    EXPECT_GE(ar_rpartite_c3(parts), ar_rpartite_c3c4(parts)) << parts.to_string();
    EXPECT_GE(ar_rpartite_c4(parts), ar_rpartite_c3c4(parts)) << parts.to_string();
    EXPECT_EQ(ar_rpartite_c3(parts), extremal_edge_bound(parts, Forbidden::multipartite_cycle));
  }
}

TEST(ClosedForm, Dispatch) {
  EXPECT_EQ(closed_form_ar({2, 2, 1}, CycleFamily{3}), 5);
  EXPECT_EQ(closed_form_ar({2, 2, 1}, CycleFamily{4, 3}), 4);
  EXPECT_EQ(closed_form_ar({2, 2, 2}, CycleFamily::parse("c4")), 7);
  EXPECT_THROW(closed_form_ar({2, 2, 2}, CycleFamily{5}), InvalidInput);
}
