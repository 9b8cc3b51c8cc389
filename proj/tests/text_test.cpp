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

#include "multiseg/json.hpp"
#include "multiseg/text.hpp"
#include "oracles.hpp"

namespace multiseg {
namespace {

TEST(Parse, Examples) {
  EXPECT_EQ(parse_multisegment("[0,1]+[1,2]"), (Multisegment{{0, 1}, {1, 2}}));
  Multisegment m = parse_multisegment("2*[3,3]+[0,1]");
  EXPECT_EQ(m.count(Segment(3, 3)), 2);
  EXPECT_EQ(m.count(Segment(0, 1)), 1);
  EXPECT_THROW(parse_multisegment("[2,1]"), RangeError);
}

TEST(Parse, WhitespaceSignsAndEmpty) {
  EXPECT_EQ(parse_multisegment("  2 * [ -3 , -1 ] +\n[0,0] "),
            (Multisegment{{-3, -1}, {-3, -1}, {0, 0}}));
  EXPECT_EQ(parse_multisegment("0"), Multisegment{});
  EXPECT_EQ(parse_multisegment(" 0 \n"), Multisegment{});
  EXPECT_EQ(parse_segment("[4,7]"), Segment(4, 7));
}

TEST(Parse, Errors) {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_multisegment(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 9999;
  };
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("[0,1"), 4u);
  EXPECT_EQ(position_of("[0;1]"), 2u);
  EXPECT_EQ(position_of("[0,1]+"), 6u);
  EXPECT_EQ(position_of("[0,1][1,2]"), 5u);
  EXPECT_EQ(position_of("+[0,1]"), 0u);
  EXPECT_EQ(position_of("[+1,2]"), 1u);
  EXPECT_THROW(parse_multisegment("0*[0,1]"), RangeError);
  EXPECT_THROW(parse_multisegment("00"), RangeError);
  EXPECT_THROW(parse_multisegment("[0,1000001]"), RangeError);
  EXPECT_THROW(parse_multisegment("[-1000001,0]"), RangeError);
  EXPECT_NO_THROW(parse_multisegment("[-1000000,1000000]"));
  EXPECT_THROW(parse_multisegment("[0,99999999999999999999999]"), RangeError);
  EXPECT_THROW(parse_segment("[0,1]+[1,2]"), ParseError);
}

TEST(Format, DescendingWithMultiplicities) {
  EXPECT_EQ(format(parse_multisegment("[0,0]+[1,2]+[3,3]")), "[3,3]+[1,2]+[0,0]");
  EXPECT_EQ(format(parse_multisegment("[0,1]+[3,3]+[3,3]")), "2*[3,3]+[0,1]");
  EXPECT_EQ(format(Multisegment{}), "0");
  EXPECT_EQ(format(OrderedMultisegment{{{1, 2}, {0, 1}}}), "([1,2],[0,1])");
}

TEST(Format, RoundTrip) {
  oracle::for_each_multisegment(-2, 2, 4, 2, [&](const Multisegment& m) {
    ASSERT_EQ(parse_multisegment(format(m)), m) << format(m);
  });
}

TEST(Json, Encodings) {
  EXPECT_EQ(json(Segment(0, 1)).dump(), "\"[0,1]\"");
  EXPECT_EQ(json(parse_multisegment("[0,1]+[1,2]")).dump(), "\"[1,2]+[0,1]\"");
  EXPECT_EQ(json(PieceIndex{0, 2}).dump(), "[1,3]");
  EXPECT_EQ(json(KlyachkoType{4, 3, 11}).dump(), R"({"k":4,"r":3,"n":11})");
  SearchBounds b{2, 3, 1, HypothesisMode::star_star, SearchFilter::blocks_le_2};
  EXPECT_EQ(json(b).dump(),
            R"({"max_end":2,"max_size":3,"max_mult":1,"mode":"star_star","filter":"blocks_le_2"})");
}

}  // namespace
}  // namespace multiseg
