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

// Text form of multisegments:
//
//   msgm := term ("+" term)*  |  "0"
//   term := [uint "*"] "[" int "," int "]"
//
// Whitespace is ignored. "0" is the empty multisegment. Every integer must
// satisfy |value| ≤ 10^6.

#ifndef MULTISEG_TEXT_HPP_
#define MULTISEG_TEXT_HPP_

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "multiseg/errors.hpp"
#include "multiseg/ladder.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/segment.hpp"

namespace multiseg {

inline constexpr Int kMaxAbsValue = 1'000'000;

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Multisegment multisegment() {
    Multisegment out;
    skip_space();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (at_end()) return out;
      pos_ = save;
    }
    term(out);
    skip_space();
    while (!at_end()) {
      expect('+');
      term(out);
      skip_space();
    }
    return out;
  }

  Segment segment_only() {
    Segment s = segment();
    skip_space();
    if (!at_end()) fail("trailing characters");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Int integer(bool allow_sign) {
    skip_space();
    bool negative = false;
    if (allow_sign && peek() == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    Int value = 0;
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (value <= kMaxAbsValue) value = value * 10 + (peek() - '0');
      ++pos_;
    }
    if (value > kMaxAbsValue) {
      throw RangeError("value at position " + std::to_string(start) +
                       " exceeds 10^6 in absolute value");
    }
    return negative ? -value : value;
  }

  Segment segment() {
    expect('[');
    const std::size_t at = pos_;
    Int lo = integer(true);
    expect(',');
    Int hi = integer(true);
    expect(']');
    if (lo > hi) {
      throw RangeError("segment at position " + std::to_string(at) +
                       " has begin > end");
    }
    return Segment(lo, hi);
  }

  void term(Multisegment& out) {
    skip_space();
    Int count = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t at = pos_;
      count = integer(false);
      if (count == 0) {
        throw RangeError("multiplicity at position " + std::to_string(at) +
                         " must be positive");
      }
      expect('*');
    }
    out.add(segment(), count);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Throws ParseError (with position) or RangeError.
inline Multisegment parse_multisegment(std::string_view text) {
  return detail::Parser(text).multisegment();
}

inline Segment parse_segment(std::string_view text) {
  return detail::Parser(text).segment_only();
}

/// Segments listed by descending (begin, end); repeated segments as "c*[a,b]".
inline std::string format(const Multisegment& m) {
  if (m.empty()) return "0";
  std::string out;
  for (auto it = m.counts().rbegin(); it != m.counts().rend(); ++it) {
    if (!out.empty()) out += "+";
    if (it->second > 1) out += std::to_string(it->second) + "*";
    out += to_string(it->first);
  }
  return out;
}

/// Rows in order, e.g. "([1,2],[0,1])".
inline std::string format(const OrderedMultisegment& o) {
  std::string out = "(";
  for (std::size_t i = 0; i < o.rows.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(o.rows[i]);
  }
  return out + ")";
}

inline std::string format(const Ladder& l) {
  return format(OrderedMultisegment{l.rows()});
}

}  // namespace multiseg

#endif  // MULTISEG_TEXT_HPP_
