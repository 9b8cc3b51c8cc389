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

// The Zelevinsky involution m ↦ m^t, computed two ways: the general
// Mœglin–Waldspurger chain algorithm, and the row-by-row recursion that
// applies to ladders. The two must agree on every ladder.

#ifndef MULTISEG_INVOLUTION_HPP_
#define MULTISEG_INVOLUTION_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "multiseg/errors.hpp"
#include "multiseg/ladder.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/segment.hpp"

namespace multiseg {

/// Mœglin–Waldspurger algorithm.
///
/// Repeatedly: let e be the largest end. Start a chain at the segment
/// ending at e with the largest begin; extend it by a segment ending one
/// lower that precedes the current link, again taking the largest begin.
/// The chain of length r contributes [e-r+1, e] to m^t, and every link
/// loses its end point.
inline Multisegment zelevinsky_dual(Multisegment m) {
  Multisegment out;
  std::vector<Segment> chain;
  while (!m.empty()) {
    Int e = m.begin()->first.end();
    for (const auto& [s, c] : m) e = std::max(e, s.end());

    chain.clear();
    std::optional<Segment> link;
    for (const auto& [s, c] : m) {
      if (s.end() == e && (!link || s.begin() > link->begin())) link = s;
    }
    while (link) {
      chain.push_back(*link);
      std::optional<Segment> next;
      for (const auto& [s, c] : m) {
        if (s.end() + 1 == link->end() && precedes(s, *link) &&
            (!next || s.begin() > next->begin())) {
          next = s;
        }
      }
      link = next;
    }

    out.add(Segment(chain.back().end(), e));
    for (const auto& s : chain) {
      m.remove(s);
      if (auto shorter = drop_end(s)) m.add(*shorter);
    }
  }
  return out;
}

inline Ladder zelevinsky_dual(const Ladder& l) {
  auto dual = as_ladder(zelevinsky_dual(l.to_multisegment()));
  if (!dual) throw Error("internal: dual of a ladder is not a ladder");
  return *dual;
}

/// Ladder-only recursion for m^t, adding one row at a time.
///
/// {[a,b]}^t is the singletons {b}, ..., {a}. Adding Δ_{k+1} = [a', b']
/// below Δ_k = [a, b]: if b' + 1 < a, append the singletons of Δ_{k+1};
/// otherwise extend the last b' - a + 2 rows of the current dual one step
/// down and append the singletons {a-2}, ..., {a'}.
inline Ladder ladder_dual_recursive(const Ladder& l) {
  std::vector<Segment> dual;
  auto append_singletons = [&](Int hi, Int lo) {
    for (Int x = hi; x >= lo; --x) dual.emplace_back(x, x);
  };
  for (std::size_t k = 0; k < l.size(); ++k) {
    const Segment& row = l[k];
    if (k == 0) {
      append_singletons(row.end(), row.begin());
      continue;
    }
    const Segment& above = l[k - 1];
    if (row.end() + 1 < above.begin()) {
      append_singletons(row.end(), row.begin());
      continue;
    }
    const Int s = static_cast<Int>(dual.size());
    const Int c = s - (row.end() - above.begin() + 2);
    if (c < 0) throw Error("internal: ladder recursion produced c < 0");
    for (Int i = c; i < s; ++i) {
      dual[static_cast<std::size_t>(i)] = extend_down(dual[static_cast<std::size_t>(i)]);
    }
    append_singletons(above.begin() - 2, row.begin());
  }
  return Ladder(std::move(dual));
}

}  // namespace multiseg

#endif  // MULTISEG_INVOLUTION_HPP_
