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

#ifndef MULTISEG_SEGMENT_HPP_
#define MULTISEG_SEGMENT_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "multiseg/errors.hpp"

namespace multiseg {

using Int = std::int64_t;

/// A nonempty interval of integers [begin, end].
///
/// Empty intervals are not representable; operations whose result may be
/// empty return std::optional<Segment>. The defaulted ordering compares
/// (begin, end) lexicographically, which is also the order ≤_b used for
/// minimal-segment excision.
class Segment {
 public:
  constexpr Segment(Int begin, Int end) : begin_(begin), end_(end) {
    if (begin > end) {
      throw RangeError("segment [" + std::to_string(begin) + "," +
                       std::to_string(end) + "] has begin > end");
    }
  }

  constexpr Int begin() const noexcept { return begin_; }
  constexpr Int end() const noexcept { return end_; }
  constexpr Int length() const noexcept { return end_ - begin_ + 1; }

  constexpr bool contains(Int x) const noexcept {
    return begin_ <= x && x <= end_;
  }
  constexpr bool contains(const Segment& other) const noexcept {
    return begin_ <= other.begin_ && other.end_ <= end_;
  }

  friend constexpr bool operator==(const Segment&, const Segment&) = default;
  friend constexpr auto operator<=>(const Segment&, const Segment&) = default;

 private:
  Int begin_;
  Int end_;
};

/// ν^n applied to a segment: [a+n, b+n].
constexpr Segment shift(const Segment& s, Int n) {
  return Segment(s.begin() + n, s.end() + n);
}

/// [a,b] ≺ [a',b'] iff a < a', b < b' and b ≥ a' - 1.
constexpr bool precedes(const Segment& lhs, const Segment& rhs) noexcept {
  return lhs.begin() < rhs.begin() && lhs.end() < rhs.end() &&
         lhs.end() >= rhs.begin() - 1;
}

constexpr bool linked(const Segment& lhs, const Segment& rhs) noexcept {
  return precedes(lhs, rhs) || precedes(rhs, lhs);
}

/// The label r of the right-alignment lower ⊢_r upper, if it holds.
///
/// lower = [a',b'] is right-aligned with upper = [a,b] when a ≥ a'+1 and
/// b = b'+1; the label is d·(a - a' - 1).
constexpr std::optional<Int> right_aligned(const Segment& lower,
                                           const Segment& upper, Int d) {
  if (d < 1) throw RangeError("right_aligned: d must be positive");
  if (upper.begin() >= lower.begin() + 1 && upper.end() == lower.end() + 1) {
    return d * (upper.begin() - lower.begin() - 1);
  }
  return std::nullopt;
}

constexpr std::optional<Segment> intersection(const Segment& lhs,
                                              const Segment& rhs) {
  Int lo = std::max(lhs.begin(), rhs.begin());
  Int hi = std::min(lhs.end(), rhs.end());
  if (lo > hi) return std::nullopt;
  return Segment(lo, hi);
}

constexpr Int intersection_length(const Segment& lhs,
                                  const Segment& rhs) noexcept {
  Int lo = std::max(lhs.begin(), rhs.begin());
  Int hi = std::min(lhs.end(), rhs.end());
  return lo > hi ? 0 : hi - lo + 1;
}

/// The union when it is again an interval (overlapping or adjacent inputs).
constexpr std::optional<Segment> union_if_segment(const Segment& lhs,
                                                  const Segment& rhs) {
  if (lhs.end() + 1 < rhs.begin() || rhs.end() + 1 < lhs.begin()) {
    return std::nullopt;
  }
  return Segment(std::min(lhs.begin(), rhs.begin()),
                 std::max(lhs.end(), rhs.end()));
}

/// [a,b]^∨ = [-b,-a].
constexpr Segment reflect(const Segment& s) { return Segment(-s.end(), -s.begin()); }

/// Drops the end point: [a,b] -> [a,b-1], absent when a == b.
constexpr std::optional<Segment> drop_end(const Segment& s) {
  if (s.length() == 1) return std::nullopt;
  return Segment(s.begin(), s.end() - 1);
}

/// ⁺[a,b] = [a-1,b].
constexpr Segment extend_down(const Segment& s) {
  return Segment(s.begin() - 1, s.end());
}

inline std::string to_string(const Segment& s) {
  return "[" + std::to_string(s.begin()) + "," + std::to_string(s.end()) + "]";
}

}  // namespace multiseg

template <>
struct std::hash<multiseg::Segment> {
  std::size_t operator()(const multiseg::Segment& s) const noexcept {
    auto h = static_cast<std::uint64_t>(s.begin()) * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(h ^ (static_cast<std::uint64_t>(s.end()) +
                                         0x7F4A7C159E3779B9ULL + (h << 6) +
                                         (h >> 2)));
  }
};

#endif  // MULTISEG_SEGMENT_HPP_
