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

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "multiseg/irreducibility.hpp"
#include "multiseg/text.hpp"
#include "oracles.hpp"

namespace multiseg {
namespace {

Multisegment ms(std::string_view text) { return parse_multisegment(text); }
Ladder lad(std::string_view text) { return *as_ladder(ms(text)); }

TEST(Nc, Examples) {
  EXPECT_EQ(nc(lad("[0,1]"), lad("[1,2]")), (NcWitness{1, 1, 0}));
  EXPECT_EQ(nc(lad("[0,0]"), lad("[2,3]")), std::nullopt);
  EXPECT_EQ(nc(lad("[2,3]"), lad("[0,1]")), std::nullopt);
}

TEST(Nc, WitnessesReverifyAndMatchDefinition) {
  std::vector<Ladder> pool;
  for (auto& rows : oracle::ladders(0, 4, 3)) pool.emplace_back(rows);
  std::size_t found = 0;
  for (const auto& m : pool) {
    for (const auto& n : pool) {
      const auto w = nc(m, n);
      ASSERT_EQ(w.has_value(), oracle::nc(m.rows(), n.rows())) << format(m) << format(n);
      if (w) {
        ASSERT_TRUE(nc_holds_at(m, n, *w));
        ++found;
      }
    }
  }
  EXPECT_GT(found, 0u);
}

TEST(ProductIrreducible, Examples) {
  std::vector<Ladder> linked_pair{lad("[0,1]"), lad("[1,2]")};
  EXPECT_FALSE(product_irreducible(linked_pair));
  std::vector<Ladder> apart{lad("[0,0]"), lad("[2,3]")};
  EXPECT_TRUE(product_irreducible(apart));
  std::vector<Ladder> single{lad("[0,3]+[-1,1]")};
  EXPECT_TRUE(product_irreducible(single));
}

TEST(ProductIrreducible, ClassicalTwoSegmentRule) {
  for (const auto& x : oracle::segments_in(0, 6)) {
    for (const auto& y : oracle::segments_in(0, 6)) {
      std::vector<Ladder> pair{Ladder({x}), Ladder({y})};
      ASSERT_EQ(product_irreducible(pair), !linked(x, y)) << to_string(x) << to_string(y);
    }
  }
}

TEST(ProductIrreducible, PermutationAndTranslationInvariant) {
  std::vector<Ladder> pool;
  for (auto& rows : oracle::ladders(0, 3, 2)) pool.emplace_back(rows);
  for (std::size_t a = 0; a < pool.size(); a += 3) {
    for (std::size_t b = 0; b < pool.size(); b += 5) {
      for (std::size_t c = 0; c < pool.size(); c += 7) {
        std::vector<Ladder> v{pool[a], pool[b], pool[c]};
        const bool expected = product_irreducible(v);
        std::sort(v.begin(), v.end(),
                  [](const Ladder& x, const Ladder& y) { return x.rows() < y.rows(); });
        do {
          ASSERT_EQ(product_irreducible(v), expected);
        } while (std::next_permutation(
            v.begin(), v.end(),
            [](const Ladder& x, const Ladder& y) { return x.rows() < y.rows(); }));
        std::vector<Ladder> moved;
        for (const auto& l : v) moved.push_back(*as_ladder(shift_all(l.to_multisegment(), 9)));
        ASSERT_EQ(product_irreducible(moved), expected);
      }
    }
  }
}

TEST(Excision, Examples) {
  std::vector<Multisegment> parts{ms("[1,2]+[0,1]"), ms("[0,1]")};
  auto e = excise_min(parts);
  EXPECT_EQ(e.minimal, Segment(0, 1));
  EXPECT_EQ(e.remainders, (std::vector<Multisegment>{ms("[1,2]"), Multisegment{}}));

  std::vector<Multisegment> apart{ms("[2,3]"), ms("[4,5]")};
  auto f = excise_min(apart);
  EXPECT_EQ(f.minimal, Segment(2, 3));
  EXPECT_EQ(f.remainders, (std::vector<Multisegment>{Multisegment{}, ms("[4,5]")}));

  std::vector<Multisegment> tie{ms("[0,1]+[0,3]")};
  EXPECT_EQ(excise_min(tie).minimal, Segment(0, 1));

  std::vector<Multisegment> empty{Multisegment{}};
  EXPECT_THROW(excise_min(empty), EmptyInput);

  auto [d0, rest] = excise_min(ms("2*[0,1]+[1,2]"));
  EXPECT_EQ(d0, Segment(0, 1));
  EXPECT_EQ(rest, ms("[1,2]"));
}

TEST(Excision, PreservesIrreducibility) {
  std::vector<Ladder> pool;
  for (auto& rows : oracle::ladders(0, 5, 3)) pool.emplace_back(rows);
  std::size_t checked = 0;
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      std::vector<Ladder> pair{a, b};
      if (!product_irreducible(pair)) continue;
      std::vector<Multisegment> parts{a.to_multisegment(), b.to_multisegment()};
      auto e = excise_min(parts);
      std::vector<Ladder> after;
      for (const auto& r : e.remainders) {
        auto l = as_ladder(r);
        ASSERT_TRUE(l);
        after.push_back(*l);
      }
      ASSERT_TRUE(product_irreducible(after)) << format(a) << " x " << format(b);
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(ProductVerdict, Examples) {
  std::vector<Ladder> speh_pairs{lad("[1,2]+[0,1]"), lad("[5,6]+[4,5]")};
  EXPECT_EQ(product_sp_verdict(speh_pairs).kind, ProductVerdict::Kind::distinguished);
  std::vector<Ladder> two{lad("[0,1]"), lad("[4,5]")};
  EXPECT_EQ(product_sp_verdict(two).kind, ProductVerdict::Kind::not_distinguished);
  std::vector<Ladder> three{lad("[0,1]"), lad("[4,5]"), lad("[8,9]")};
  auto v = product_sp_verdict(three);
  EXPECT_EQ(v.kind, ProductVerdict::Kind::hypothesis_dependent);
  EXPECT_EQ(v.reason, "not distinguished if Hypothesis ** holds");
  std::vector<Ladder> reducible{lad("[0,0]"), lad("[1,1]")};
  EXPECT_THROW(product_sp_verdict(reducible), ReducibleProduct);
  EXPECT_STREQ(to_string(ProductVerdict::Kind::hypothesis_dependent), "HypothesisDependent");
}

}  // namespace
}  // namespace multiseg
