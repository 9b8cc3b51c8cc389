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

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "multiseg/multisegment.hpp"
#include "multiseg/text.hpp"
#include "oracles.hpp"

namespace multiseg {
namespace {

Multisegment ms(std::string_view text) { return parse_multisegment(text); }

std::vector<OrderedMultisegment> all_orders(const Multisegment& m) {
  std::vector<OrderedMultisegment> out;
  auto stream = standard_orders(m);
  while (auto o = stream.next()) out.push_back(*o);
  return out;
}

TEST(Multisegment, CountsAndSize) {
  Multisegment m = ms("2*[3,3]+[0,1]");
  EXPECT_EQ(m.size(), 3);
  EXPECT_EQ(m.count(Segment(3, 3)), 2);
  EXPECT_EQ(m.distinct(), 2u);
  EXPECT_FALSE(m.is_set());
  m.remove(Segment(3, 3), 2);
  EXPECT_FALSE(m.contains(Segment(3, 3)));
  EXPECT_THROW(m.remove(Segment(3, 3)), NotPresent);
  EXPECT_THROW(Multisegment{}.min_segment(), EmptyInput);
}

TEST(Multisegment, IterationIsAscending) {
  const auto rows = ms("[2,2]+[0,3]+[0,1]").segments();
  EXPECT_EQ(rows, (std::vector<Segment>{{0, 1}, {0, 3}, {2, 2}}));
}

TEST(Multisegment, SumShiftDual) {
  EXPECT_EQ(dual(ms("[1,2]")), ms("[-2,-1]"));
  const auto m = ms("[0,1]+2*[3,3]");
  EXPECT_EQ(dual(dual(m)), m);
  EXPECT_EQ(sum(ms("[0,1]"), ms("[0,1]")), ms("2*[0,1]"));
  EXPECT_EQ(shift_all(m, 2), ms("[2,3]+2*[5,5]"));
}

TEST(SpehType, Examples) {
  EXPECT_EQ(is_speh_type(Multisegment{}), Multisegment{});
  EXPECT_EQ(is_speh_type(ms("[0,1]+[1,2]")), ms("[0,1]"));
  EXPECT_EQ(is_speh_type(ms("[4,4]+2*[3,3]+[2,2]+[1,2]+[0,1]")),
            ms("[0,1]+[2,2]+[3,3]"));
  EXPECT_EQ(is_speh_type(ms("[0,3]")), std::nullopt);
}

TEST(SpehType, GreedyMatchesBruteForce) {
  std::size_t speh = 0;
  oracle::for_each_multisegment(0, 4, 6, 2, [&](const Multisegment& m) {
    const auto greedy = is_speh_type(m);
    const auto brute = oracle::speh_witness(m);
    ASSERT_EQ(greedy.has_value(), brute.has_value()) << format(m);
    if (greedy) {
      ASSERT_EQ(sum(*greedy, shift_all(*greedy, 1)), m) << format(m);
      ++speh;
    }
  });
  EXPECT_GT(speh, 100u);
}

TEST(SpehType, AlternatingSumIsNecessary) {
  oracle::for_each_multisegment(0, 4, 6, 2, [&](const Multisegment& m) {
    if (is_speh_type(m)) {
      ASSERT_NE(alternating_sum_check(m), std::optional<bool>(false)) << format(m);
    }
  });
}

TEST(SpehType, TransportsToDual) {
  oracle::for_each_multisegment(0, 3, 5, 2, [&](const Multisegment& m) {
    if (auto n = is_speh_type(m)) {
      // m = n + νn gives m^∨ = n' + νn' with n' = ν^{-1} n^∨.
      const auto transported = shift_all(dual(*n), -1);
      ASSERT_EQ(sum(transported, shift_all(transported, 1)), dual(m)) << format(m);
      ASSERT_TRUE(is_speh_type(dual(m)).has_value()) << format(m);
    }
  });
}

TEST(AlternatingSum, Examples) {
  EXPECT_EQ(alternating_sum_check(ms("2*[0,0]+[1,1]+[2,2]")), false);
  EXPECT_EQ(alternating_sum_check(ms("[0,1]+[1,2]")), true);
  EXPECT_EQ(alternating_sum_check(ms("[0,1]+[2,2]")), std::nullopt);
}

TEST(StandardOrders, Examples) {
  auto one = all_orders(ms("[0,1]+[1,2]"));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].rows, (std::vector<Segment>{{1, 2}, {0, 1}}));
  EXPECT_EQ(all_orders(ms("[0,0]+[5,5]")).size(), 2u);
  EXPECT_EQ(all_orders(ms("2*[0,1]")).size(), 1u);
}

TEST(StandardOrders, EqualSegmentsMayInterleave) {
  // Both copies of [0,0] are unrelated to [5,5], so [5,5] can sit between them.
  EXPECT_EQ(all_orders(ms("2*[0,0]+[5,5]")).size(), 3u);
}

TEST(StandardOrders, MatchBruteForce) {
  oracle::for_each_multisegment(0, 3, 5, 2, [&](const Multisegment& m) {
    std::set<std::vector<Segment>> got;
    for (const auto& o : all_orders(m)) {
      ASSERT_TRUE(o.is_standard_form());
      ASSERT_EQ(o.to_multisegment(), m);
      ASSERT_TRUE(got.insert(o.rows).second) << "duplicate order for " << format(m);
    }
    ASSERT_EQ(got, oracle::standard_orders(m)) << format(m);
  });
}

TEST(BlockPartition, Examples) {
  auto blocks = block_partition(ms("[0,1]+[1,2]+[2,2]"));
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[0].end, 2);
  EXPECT_EQ(blocks[0].part, ms("[1,2]+[2,2]"));
  EXPECT_EQ(blocks[1].end, 1);
  EXPECT_EQ(blocks[1].part, ms("[0,1]"));
  EXPECT_EQ(block_partition(ms("[0,3]")).size(), 1u);
  EXPECT_TRUE(block_partition(Multisegment{}).empty());
}

TEST(CanonicalOrder, Examples) {
  EXPECT_EQ(canonical_order(ms("[0,1]+[1,2]+[2,2]")).rows,
            (std::vector<Segment>{{1, 2}, {2, 2}, {0, 1}}));
  EXPECT_EQ(canonical_order(ms("[0,3]")).rows, (std::vector<Segment>{{0, 3}}));
  EXPECT_EQ(canonical_order(ms("[2,3]+[0,1]")).rows,
            (std::vector<Segment>{{2, 3}, {0, 1}}));
}

TEST(CanonicalOrder, IsStandardAndTranslationEquivariant) {
  oracle::for_each_multisegment(0, 4, 6, 2, [&](const Multisegment& m) {
    const auto o = canonical_order(m);
    ASSERT_TRUE(o.is_standard_form()) << format(m);
    ASSERT_EQ(o.to_multisegment(), m);
    ASSERT_EQ(canonical_order(shift_all(m, 3)), shift_all(o, 3)) << format(m);
  });
}

TEST(Predicates, TranslationInvariant) {
  oracle::for_each_multisegment(0, 3, 4, 2, [&](const Multisegment& m) {
    const auto moved = shift_all(m, -5);
    ASSERT_EQ(is_speh_type(m).has_value(), is_speh_type(moved).has_value());
    ASSERT_EQ(alternating_sum_check(m), alternating_sum_check(moved));
    ASSERT_EQ(all_orders(m).size(), all_orders(moved).size());
  });
}

TEST(ElementaryOperation, Examples) {
  EXPECT_EQ(elementary_operation(ms("[0,1]+[1,2]"), {0, 1}, {1, 2}), ms("[0,2]+[1,1]"));
  EXPECT_EQ(elementary_operation(ms("[0,1]+[2,3]"), {0, 1}, {2, 3}), ms("[0,3]"));
  EXPECT_THROW(elementary_operation(ms("[0,1]+[4,5]"), {0, 1}, {4, 5}), NotLinked);
  EXPECT_THROW(elementary_operation(ms("[0,1]"), {0, 1}, {1, 2}), NotPresent);
}

TEST(SubquotientClosure, SmallAndTruncated) {
  auto c = subquotient_closure(ms("[0,1]+[1,2]"), 100);
  EXPECT_FALSE(c.truncated);
  EXPECT_EQ(c.members, (std::set<Multisegment>{ms("[0,1]+[1,2]"), ms("[0,2]+[1,1]")}));

  auto big = subquotient_closure(ms("[0,0]+[1,1]+[2,2]+[3,3]"), 3);
  EXPECT_TRUE(big.truncated);
  EXPECT_EQ(big.members.size(), 3u);
  auto full = subquotient_closure(ms("[0,0]+[1,1]+[2,2]+[3,3]"), 1000);
  EXPECT_FALSE(full.truncated);
  // Compositions of 4 consecutive points into consecutive runs.
  EXPECT_EQ(full.members.size(), 8u);
}

TEST(TotallyDisjoint, Examples) {
  EXPECT_TRUE(totally_disjoint({0, 1}, {3, 4}));
  EXPECT_FALSE(totally_disjoint({0, 1}, {2, 3}));
  EXPECT_TRUE(totally_disjoint({0, 1}, {}));
  EXPECT_TRUE(totally_disjoint({0, 1, 6}, {3, 4}));
  EXPECT_FALSE(totally_disjoint({0, 1, 6}, {3, 4, 5}));
}

}  // namespace
}  // namespace multiseg
