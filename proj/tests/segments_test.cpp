// Copyright 2026 The multiseg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "multiseg/segment.hpp"
#include "oracles.hpp"

namespace multiseg {
namespace {

TEST(Segment, RejectsEmpty) {
  EXPECT_THROW(Segment(2, 1), RangeError);
  EXPECT_EQ(Segment(3, 3).length(), 1);
  EXPECT_EQ(Segment(-2, 4).length(), 7);
}

TEST(Segment, Shift) {
  EXPECT_EQ(shift(Segment(0, 2), 1), Segment(1, 3));
  EXPECT_EQ(shift(Segment(1, 3), -1), Segment(0, 2));
  EXPECT_EQ(shift(Segment(4, 4), 0), Segment(4, 4));
}

TEST(Segment, Precedes) {
  EXPECT_TRUE(precedes(Segment(0, 1), Segment(1, 2)));
  EXPECT_TRUE(precedes(Segment(0, 1), Segment(2, 3)));
  EXPECT_FALSE(precedes(Segment(0, 0), Segment(2, 3)));
  EXPECT_FALSE(precedes(Segment(0, 1), Segment(0, 1)));
}

TEST(Segment, Linked) {
  EXPECT_TRUE(linked(Segment(0, 1), Segment(1, 2)));
  EXPECT_FALSE(linked(Segment(1, 1), Segment(0, 3)));
  EXPECT_FALSE(linked(Segment(0, 1), Segment(3, 4)));
}

TEST(Segment, RightAligned) {
  EXPECT_EQ(right_aligned(Segment(0, 6), Segment(4, 7), 1), 3);
  EXPECT_EQ(right_aligned(Segment(0, 6), Segment(4, 7), 2), 6);
  EXPECT_EQ(right_aligned(Segment(0, 1), Segment(1, 2), 1), 0);
  EXPECT_EQ(right_aligned(Segment(0, 1), Segment(2, 3), 1), std::nullopt);
  EXPECT_THROW(right_aligned(Segment(0, 1), Segment(1, 2), 0), RangeError);
}

TEST(Segment, IntersectionAndUnion) {
  EXPECT_EQ(intersection_length(Segment(0, 3), Segment(1, 6)), 3);
  EXPECT_EQ(union_if_segment(Segment(0, 3), Segment(1, 6)), Segment(0, 6));
  EXPECT_EQ(intersection_length(Segment(0, 1), Segment(2, 3)), 0);
  EXPECT_EQ(union_if_segment(Segment(0, 1), Segment(2, 3)), Segment(0, 3));
  EXPECT_EQ(intersection_length(Segment(0, 1), Segment(4, 5)), 0);
  EXPECT_EQ(union_if_segment(Segment(0, 1), Segment(4, 5)), std::nullopt);
}

TEST(Segment, OrderIsBeginThenEnd) {
  EXPECT_LT(Segment(0, 3), Segment(1, 1));
  EXPECT_LT(Segment(0, 1), Segment(0, 3));
}

class SegmentPairs : public ::testing::Test {
 protected:
  static const std::vector<Segment>& all() {
    static const auto segments = oracle::segments_in(-20, 20);
    return segments;
  }
};

TEST_F(SegmentPairs, PrecedesIsIrreflexiveAndAsymmetric) {
  for (const auto& x : all()) {
    ASSERT_FALSE(precedes(x, x)) << to_string(x);
    for (const auto& y : all()) {
      if (precedes(x, y)) {
        ASSERT_FALSE(precedes(y, x)) << to_string(x) << to_string(y);
      }
    }
  }
}

TEST_F(SegmentPairs, LinkedIffNoContainmentAndUnionIsSegment) {
  for (const auto& x : all()) {
    for (const auto& y : all()) {
      const bool nested = x.contains(y) || y.contains(x);
      ASSERT_EQ(linked(x, y), !nested && union_if_segment(x, y).has_value())
          << to_string(x) << " " << to_string(y);
    }
  }
}

TEST_F(SegmentPairs, ZeroLabelIffUnitShift) {
  for (const auto& lower : all()) {
    for (const auto& upper : all()) {
      const auto r = right_aligned(lower, upper, 1);
      const bool zero = r.has_value() && *r == 0;
      ASSERT_EQ(zero, upper == shift(lower, 1) && upper.begin() == lower.begin() + 1);
    }
  }
}

TEST(SegmentTranslation, RelationsAreInvariant) {
  const auto segments = oracle::segments_in(-4, 4);
  for (const auto& x : segments) {
    for (const auto& y : segments) {
      for (Int n : {-7, -1, 1, 5}) {
        const auto sx = shift(x, n);
        const auto sy = shift(y, n);
        ASSERT_EQ(precedes(x, y), precedes(sx, sy));
        ASSERT_EQ(linked(x, y), linked(sx, sy));
        ASSERT_EQ(right_aligned(x, y, 2), right_aligned(sx, sy, 2));
        ASSERT_EQ(intersection_length(x, y), intersection_length(sx, sy));
        auto u = union_if_segment(x, y);
        auto su = union_if_segment(sx, sy);
        ASSERT_EQ(u.has_value(), su.has_value());
        if (u) {
          ASSERT_EQ(shift(*u, n), *su);
        }
      }
    }
  }
}

TEST(Segment, MatchesOraclePrecedes) {
  for (const auto& x : oracle::segments_in(-3, 3)) {
    for (const auto& y : oracle::segments_in(-3, 3)) {
      ASSERT_EQ(precedes(x, y), oracle::linked_below(x, y));
    }
  }
}

}  // namespace
}  // namespace multiseg
