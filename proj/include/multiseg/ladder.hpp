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

#ifndef MULTISEG_LADDER_HPP_
#define MULTISEG_LADDER_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "multiseg/errors.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/segment.hpp"

namespace multiseg {

/// Rows Δ_1, ..., Δ_k with strictly decreasing begins and strictly
/// decreasing ends. The empty ladder is allowed.
class Ladder {
 public:
  Ladder() = default;

  explicit Ladder(std::vector<Segment> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
      if (!(rows_[i].begin() > rows_[i + 1].begin() &&
            rows_[i].end() > rows_[i + 1].end())) {
        throw NotALadder("rows " + to_string(rows_[i]) + ", " +
                         to_string(rows_[i + 1]) + " do not form a ladder");
      }
    }
  }

  /// The unique ladder ordering of m, if m is a ladder.
  static std::optional<Ladder> from_multisegment(const Multisegment& m) {
    if (!m.is_set()) return std::nullopt;
    std::vector<Segment> rows;
    rows.reserve(m.distinct());
    for (auto it = m.counts().rbegin(); it != m.counts().rend(); ++it) {
      rows.push_back(it->first);
    }
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      if (!(rows[i].begin() > rows[i + 1].begin() &&
            rows[i].end() > rows[i + 1].end())) {
        return std::nullopt;
      }
    }
    return Ladder(std::move(rows));
  }

  const std::vector<Segment>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  const Segment& operator[](std::size_t i) const { return rows_[i]; }

  /// Consecutive rows are linked: Δ_{i+1} ≺ Δ_i.
  bool is_proper() const {
    for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
      if (!precedes(rows_[i + 1], rows_[i])) return false;
    }
    return true;
  }

  Multisegment to_multisegment() const {
    return Multisegment(std::span<const Segment>(rows_));
  }

  friend bool operator==(const Ladder&, const Ladder&) = default;

 private:
  std::vector<Segment> rows_;
};

inline std::optional<Ladder> as_ladder(const Multisegment& m) {
  return Ladder::from_multisegment(m);
}

inline bool is_proper(const Ladder& l) { return l.is_proper(); }

/// Splits a ladder into maximal proper blocks of consecutive rows.
inline std::vector<Ladder> proper_parts(const Ladder& l) {
  std::vector<Ladder> out;
  std::vector<Segment> current;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (!current.empty() && !precedes(l[i], current.back())) {
      out.emplace_back(std::move(current));
      current.clear();
    }
    current.push_back(l[i]);
  }
  if (!current.empty()) out.emplace_back(std::move(current));
  return out;
}

/// L(l) is Sp-distinguished: an even number of rows, Δ_{2i-1} = νΔ_{2i}.
inline bool sp_distinguished_L(const Ladder& l) {
  if (l.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < l.size(); i += 2) {
    if (l[i] != shift(l[i + 1], 1)) return false;
  }
  return true;
}

/// Z(l) is Sp-distinguished: all lengths even, and ℓ(Δ_i ∩ Δ_{i+1}) odd
/// wherever Δ_i ∪ Δ_{i+1} is a segment.
inline bool sp_distinguished_Z(const Ladder& l) {
  for (const auto& s : l.rows()) {
    if (s.length() % 2 != 0) return false;
  }
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    if (union_if_segment(l[i], l[i + 1]) &&
        intersection_length(l[i], l[i + 1]) % 2 == 0) {
      return false;
    }
  }
  return true;
}

/// The model H_{2k,r}: n = 2k + r. r = 0 is symplectic, k = 0 Whittaker.
struct KlyachkoType {
  Int k = 0;
  Int r = 0;
  Int n = 0;

  friend bool operator==(const KlyachkoType&, const KlyachkoType&) = default;
};

/// Klyachko type of a proper ladder, rows paired from the bottom up.
///
/// For i = 0, ..., ⌊t/2⌋-1 the row Δ_{t-2i} must be right-aligned with
/// Δ_{t-2i-1}, contributing its label r_i. When t is odd the top row adds
/// s = d·ℓ(Δ_1).
inline std::optional<KlyachkoType> klyachko_type_proper(const Ladder& l,
                                                        Int d = 1) {
  if (d < 1) throw RangeError("klyachko_type: d must be positive");
  if (!l.is_proper()) throw NotProperLadder("ladder is not proper");
  const std::size_t t = l.size();
  Int r = 0;
  Int total_length = 0;
  for (const auto& s : l.rows()) total_length += s.length();
  for (std::size_t i = 0; i < t / 2; ++i) {
    const Segment& lower = l[t - 1 - 2 * i];
    const Segment& upper = l[t - 2 - 2 * i];
    auto label = right_aligned(lower, upper, d);
    if (!label) return std::nullopt;
    r += *label;
  }
  if (t % 2 == 1) r += d * l[0].length();
  const Int n = d * total_length;
  return KlyachkoType{(n - r) / 2, r, n};
}

/// Klyachko type of a ladder: sum over its proper parts.
inline std::optional<KlyachkoType> klyachko_type(const Ladder& l, Int d = 1) {
  KlyachkoType out;
  for (const auto& part : proper_parts(l)) {
    auto kt = klyachko_type_proper(part, d);
    if (!kt) return std::nullopt;
    out.k += kt->k;
    out.r += kt->r;
    out.n += kt->n;
  }
  return out;
}

/// m = {Δ1, Δ2, Δ3} for some labelling with
///   (1) every ℓ(Δi) even,
///   (2) Δ1 ⊆ νΔ2 and Δ1 ⊆ ν^{-1}Δ2,
///   (3) ℓ(Δ3 ∩ Δ1) and ℓ(Δ3 ∩ Δ2) odd.
inline bool in_family_F(const Multisegment& m) {
  if (m.size() != 3) return false;
  auto rows = m.segments();
  for (const auto& s : rows) {
    if (s.length() % 2 != 0) return false;
  }
  std::array<std::size_t, 3> idx{0, 1, 2};
  do {
    const Segment& d1 = rows[idx[0]];
    const Segment& d2 = rows[idx[1]];
    const Segment& d3 = rows[idx[2]];
    if (shift(d2, 1).contains(d1) && shift(d2, -1).contains(d1) &&
        intersection_length(d3, d1) % 2 == 1 &&
        intersection_length(d3, d2) % 2 == 1) {
      return true;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

}  // namespace multiseg

#endif  // MULTISEG_LADDER_HPP_
