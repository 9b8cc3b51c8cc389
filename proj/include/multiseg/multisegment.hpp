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

#ifndef MULTISEG_MULTISEGMENT_HPP_
#define MULTISEG_MULTISEGMENT_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multiseg/errors.hpp"
#include "multiseg/segment.hpp"

namespace multiseg {

/// A finite multiset of segments, stored as segment -> positive multiplicity.
///
/// Iteration is in ascending (begin, end) order, so the first entry is the
/// ≤_b-minimal segment.
class Multisegment {
 public:
  using Counts = std::map<Segment, Int>;
  using const_iterator = Counts::const_iterator;

  Multisegment() = default;
  Multisegment(std::initializer_list<Segment> segments) {
    for (const auto& s : segments) add(s);
  }
  explicit Multisegment(std::span<const Segment> segments) {
    for (const auto& s : segments) add(s);
  }

  void add(const Segment& s, Int count = 1) {
    if (count < 0) throw RangeError("negative multiplicity");
    if (count == 0) return;
    counts_[s] += count;
    size_ += count;
  }

  /// Removes `count` copies of s; throws NotPresent if fewer are stored.
  void remove(const Segment& s, Int count = 1) {
    auto it = counts_.find(s);
    if (it == counts_.end() || it->second < count) {
      throw NotPresent("segment " + to_string(s) +
                       " not present with multiplicity " +
                       std::to_string(count));
    }
    it->second -= count;
    size_ -= count;
    if (it->second == 0) counts_.erase(it);
  }

  Int count(const Segment& s) const {
    auto it = counts_.find(s);
    return it == counts_.end() ? 0 : it->second;
  }
  bool contains(const Segment& s) const { return counts_.contains(s); }

  Int size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t distinct() const noexcept { return counts_.size(); }

  bool is_set() const {
    return std::all_of(counts_.begin(), counts_.end(),
                       [](const auto& kv) { return kv.second == 1; });
  }

  const Counts& counts() const noexcept { return counts_; }
  const_iterator begin() const noexcept { return counts_.begin(); }
  const_iterator end() const noexcept { return counts_.end(); }

  /// The ≤_b-minimal segment. Requires a nonempty multisegment.
  const Segment& min_segment() const {
    if (empty()) throw EmptyInput("empty multisegment has no minimal segment");
    return counts_.begin()->first;
  }

  /// All segments with repetition, ascending.
  std::vector<Segment> segments() const {
    std::vector<Segment> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (const auto& [s, c] : counts_) out.insert(out.end(), c, s);
    return out;
  }

  friend bool operator==(const Multisegment& a, const Multisegment& b) {
    return a.counts_ == b.counts_;
  }
  friend std::strong_ordering operator<=>(const Multisegment& a,
                                          const Multisegment& b) {
    return std::lexicographical_compare_three_way(
        a.counts_.begin(), a.counts_.end(), b.counts_.begin(), b.counts_.end());
  }

 private:
  Counts counts_;
  Int size_ = 0;
};

inline Multisegment sum(const Multisegment& a, const Multisegment& b) {
  Multisegment out = a;
  for (const auto& [s, c] : b) out.add(s, c);
  return out;
}

inline Multisegment shift_all(const Multisegment& m, Int n) {
  Multisegment out;
  for (const auto& [s, c] : m) out.add(shift(s, n), c);
  return out;
}

/// m^∨(Δ) = m(Δ^∨).
inline Multisegment dual(const Multisegment& m) {
  Multisegment out;
  for (const auto& [s, c] : m) out.add(reflect(s), c);
  return out;
}

/// Pointwise minimum of multiplicity functions.
inline Multisegment pointwise_min(const Multisegment& a,
                                  const Multisegment& b) {
  Multisegment out;
  for (const auto& [s, c] : a) out.add(s, std::min(c, b.count(s)));
  return out;
}

/// a - b; every segment of b must be present in a with enough multiplicity.
inline Multisegment difference(const Multisegment& a, const Multisegment& b) {
  Multisegment out = a;
  for (const auto& [s, c] : b) out.remove(s, c);
  return out;
}

inline std::set<Int> support(const Multisegment& m) {
  std::set<Int> out;
  for (const auto& [s, c] : m) {
    for (Int x = s.begin(); x <= s.end(); ++x) out.insert(x);
  }
  return out;
}

/// Returns n with m = n + νn when m is of Speh type.
///
/// The ≤_b-minimal segment Δ0 cannot be a ν-shift of anything left in m, so
/// all of its copies go into n and must be matched by copies of νΔ0.
inline std::optional<Multisegment> is_speh_type(Multisegment m) {
  Multisegment witness;
  while (!m.empty()) {
    auto [low, c] = *m.begin();
    Segment high = shift(low, 1);
    if (m.count(high) < c) return std::nullopt;
    witness.add(low, c);
    m.remove(low, c);
    m.remove(high, c);
  }
  return witness;
}

/// A multisegment listed in one particular order.
struct OrderedMultisegment {
  std::vector<Segment> rows;

  std::size_t size() const noexcept { return rows.size(); }

  Multisegment to_multisegment() const {
    return Multisegment(std::span<const Segment>(rows));
  }

  /// No earlier row precedes a later one.
  bool is_standard_form() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        if (precedes(rows[i], rows[j])) return false;
      }
    }
    return true;
  }

  friend bool operator==(const OrderedMultisegment&,
                         const OrderedMultisegment&) = default;
  friend auto operator<=>(const OrderedMultisegment&,
                          const OrderedMultisegment&) = default;
};

inline OrderedMultisegment shift_all(const OrderedMultisegment& o, Int n) {
  OrderedMultisegment out;
  out.rows.reserve(o.rows.size());
  for (const auto& s : o.rows) out.rows.push_back(shift(s, n));
  return out;
}

/// Lazily enumerates every standard order of a multisegment.
///
/// Orders are sequences of segment values: permuting equal segments does
/// not produce a new order. Orders come out in lexicographic order of the
/// chosen distinct-value indices.
class StandardOrders {
 public:
  explicit StandardOrders(const Multisegment& m) {
    for (const auto& [s, c] : m) {
      values_.push_back(s);
      remaining_.push_back(c);
    }
    total_ = static_cast<std::size_t>(m.size());
    const std::size_t n = values_.size();
    precedes_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        precedes_[i * n + j] = precedes(values_[i], values_[j]);
      }
    }
  }

  std::optional<OrderedMultisegment> next() {
    if (done_) return std::nullopt;
    if (started_ && !backtrack()) {
      done_ = true;
      return std::nullopt;
    }
    started_ = true;
    while (choice_.size() < total_) {
      if (!extend(0) && !backtrack()) {
        done_ = true;
        return std::nullopt;
      }
    }
    OrderedMultisegment out;
    out.rows.reserve(total_);
    for (std::size_t v : choice_) out.rows.push_back(values_[v]);
    return out;
  }

 private:
  // Placing v now puts it before every remaining segment.
  bool allowed(std::size_t v) const {
    const std::size_t n = values_.size();
    for (std::size_t w = 0; w < n; ++w) {
      if (remaining_[w] > 0 && precedes_[v * n + w]) return false;
    }
    return true;
  }

  bool extend(std::size_t start) {
    for (std::size_t v = start; v < values_.size(); ++v) {
      if (remaining_[v] == 0) continue;
      --remaining_[v];
      if (allowed(v)) {
        choice_.push_back(v);
        return true;
      }
      ++remaining_[v];
    }
    return false;
  }

  bool backtrack() {
    while (!choice_.empty()) {
      std::size_t v = choice_.back();
      choice_.pop_back();
      ++remaining_[v];
      if (extend(v + 1)) return true;
    }
    return false;
  }

  std::vector<Segment> values_;
  std::vector<Int> remaining_;
  std::vector<bool> precedes_;
  std::vector<std::size_t> choice_;
  std::size_t total_ = 0;
  bool started_ = false;
  bool done_ = false;
};

inline StandardOrders standard_orders(const Multisegment& m) {
  return StandardOrders(m);
}

/// m[i]: the segments ending at c_i, with c_1 > ... > c_s.
struct Block {
  Int end;
  Multisegment part;

  friend bool operator==(const Block&, const Block&) = default;
};

inline std::vector<Block> block_partition(const Multisegment& m) {
  std::map<Int, Multisegment, std::greater<>> by_end;
  for (const auto& [s, c] : m) by_end[s.end()].add(s, c);
  std::vector<Block> out;
  out.reserve(by_end.size());
  for (auto& [e, part] : by_end) out.push_back({e, std::move(part)});
  return out;
}

/// The recursively defined standard order built block by block.
///
/// Block 1 is listed by ascending begin. For each later block, the part
/// that pointwise-matches ν^{-1} of the previous block's head goes to the
/// tail (descending begin); the rest is the head (ascending begin) and is
/// carried to the next step.
inline OrderedMultisegment canonical_order(const Multisegment& m) {
  OrderedMultisegment out;
  out.rows.reserve(static_cast<std::size_t>(m.size()));
  Multisegment carried;
  bool first = true;
  for (const auto& block : block_partition(m)) {
    Multisegment tail;
    if (!first) tail = pointwise_min(block.part, shift_all(carried, -1));
    Multisegment head = difference(block.part, tail);
    for (const auto& s : head.segments()) out.rows.push_back(s);
    auto tail_rows = tail.segments();
    out.rows.insert(out.rows.end(), tail_rows.rbegin(), tail_rows.rend());
    carried = std::move(head);
    first = false;
  }
  return out;
}

/// Replaces a linked pair by its union and (when nonempty) its intersection.
inline Multisegment elementary_operation(const Multisegment& m,
                                         const Segment& a, const Segment& b) {
  Int needed_a = (a == b) ? 2 : 1;
  if (m.count(a) < needed_a || m.count(b) < 1) {
    throw NotPresent("elementary operation: " + to_string(a) + " and " +
                     to_string(b) + " are not both in the multisegment");
  }
  if (!linked(a, b)) {
    throw NotLinked("elementary operation: " + to_string(a) + " and " +
                    to_string(b) + " are not linked");
  }
  Multisegment out = m;
  out.remove(a);
  out.remove(b);
  out.add(*union_if_segment(a, b));
  if (auto meet = intersection(a, b)) out.add(*meet);
  return out;
}

struct Closure {
  std::set<Multisegment> members;
  bool truncated = false;
};

/// Everything reachable from m by elementary operations, m included.
/// Stops with truncated = true once more than `cap` members are found.
inline Closure subquotient_closure(const Multisegment& m, std::size_t cap) {
  Closure out;
  std::deque<Multisegment> queue{m};
  out.members.insert(m);
  while (!queue.empty()) {
    Multisegment cur = std::move(queue.front());
    queue.pop_front();
    for (auto i = cur.begin(); i != cur.end(); ++i) {
      for (auto j = i; j != cur.end(); ++j) {
        if (!linked(i->first, j->first)) continue;
        Multisegment next = elementary_operation(cur, i->first, j->first);
        if (out.members.contains(next)) continue;
        if (out.members.size() >= cap) {
          out.truncated = true;
          return out;
        }
        out.members.insert(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

/// Necessary condition for Speh type on a single-length family.
///
/// Absent unless every segment has the same length. Otherwise writes
/// m = Σ a_n {ν^n Δ0} and returns whether every partial alternating sum
/// b_n = Σ_{i≤n} (-1)^{n-i} a_i is nonnegative and the last one vanishes.
inline std::optional<bool> alternating_sum_check(const Multisegment& m) {
  if (m.empty()) return std::nullopt;
  const Segment base = m.min_segment();
  for (const auto& [s, c] : m) {
    if (s.length() != base.length()) return std::nullopt;
  }
  const Int last = std::prev(m.end())->first.begin() - base.begin();
  Int b = 0;
  for (Int n = 0; n <= last; ++n) {
    b = m.count(shift(base, n)) - b;
    if (b < 0) return false;
  }
  return b == 0;
}

/// Maximal runs of consecutive integers.
inline std::vector<Segment> components(const std::set<Int>& v) {
  std::vector<Segment> out;
  for (auto it = v.begin(); it != v.end();) {
    Int lo = *it;
    Int hi = lo;
    for (++it; it != v.end() && *it == hi + 1; ++it) hi = *it;
    out.emplace_back(lo, hi);
  }
  return out;
}

/// Every run of v and every run of w are separated by a gap of at least 2.
inline bool totally_disjoint(const std::set<Int>& v, const std::set<Int>& w) {
  for (const auto& c : components(v)) {
    for (const auto& d : components(w)) {
      bool below = c.end() + 1 < d.begin();
      bool above = d.end() + 1 < c.begin();
      if (!below && !above) return false;
    }
  }
  return true;
}

}  // namespace multiseg

#endif  // MULTISEG_MULTISEGMENT_HPP_
