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

#ifndef MULTISEG_IRREDUCIBILITY_HPP_
#define MULTISEG_IRREDUCIBILITY_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multiseg/errors.hpp"
#include "multiseg/involution.hpp"
#include "multiseg/ladder.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/segment.hpp"

namespace multiseg {

/// 1-based indices (i, j, k) witnessing NC(m, n).
struct NcWitness {
  std::size_t i;
  std::size_t j;
  std::size_t k;

  friend bool operator==(const NcWitness&, const NcWitness&) = default;
};

/// Re-evaluates the three NC conditions for one triple.
///
///   (1) Δ_{i+l} ≺ Δ'_{j+l} for l = 0..k,
///   (2) ν^{-1}Δ_{i-1} ⊀ Δ'_j when i > 1,
///   (3) ν^{-1}Δ_{i+k} ⊀ Δ'_{j+k+1} when j+k+1 ≤ s.
inline bool nc_holds_at(const Ladder& m, const Ladder& n, NcWitness w) {
  const std::size_t t = m.size();
  const std::size_t s = n.size();
  if (w.i < 1 || w.j < 1 || w.i + w.k > t || w.j + w.k > s) return false;
  // 0-based views of the 1-based rows.
  auto row = [&](std::size_t idx) -> const Segment& { return m[idx - 1]; };
  auto col = [&](std::size_t idx) -> const Segment& { return n[idx - 1]; };
  for (std::size_t l = 0; l <= w.k; ++l) {
    if (!precedes(row(w.i + l), col(w.j + l))) return false;
  }
  if (w.i > 1 && precedes(shift(row(w.i - 1), -1), col(w.j))) return false;
  if (w.j + w.k + 1 <= s &&
      precedes(shift(row(w.i + w.k), -1), col(w.j + w.k + 1))) {
    return false;
  }
  return true;
}

/// The first triple (by i, then j, then k) satisfying NC(m, n).
inline std::optional<NcWitness> nc(const Ladder& m, const Ladder& n) {
  const std::size_t t = m.size();
  const std::size_t s = n.size();
  for (std::size_t i = 1; i <= t; ++i) {
    for (std::size_t j = 1; j <= s; ++j) {
      for (std::size_t k = 0; i + k <= t && j + k <= s; ++k) {
        if (!precedes(m[i + k - 1], n[j + k - 1])) break;
        if (nc_holds_at(m, n, {i, j, k})) return NcWitness{i, j, k};
      }
    }
  }
  return std::nullopt;
}

/// Z(m_1) × ... × Z(m_k) is irreducible: no NC in either direction for
/// any pair.
inline bool product_irreducible(std::span<const Ladder> ladders) {
  for (std::size_t a = 0; a < ladders.size(); ++a) {
    for (std::size_t b = a + 1; b < ladders.size(); ++b) {
      if (nc(ladders[a], ladders[b]) || nc(ladders[b], ladders[a])) {
        return false;
      }
    }
  }
  return true;
}

struct Excision {
  Segment minimal;
  std::vector<Multisegment> remainders;
};

/// Removes one copy of the ≤_b-minimal segment Δ0 of m_1 + ... + m_k from
/// every m_i that contains it.
inline Excision excise_min(std::span<const Multisegment> parts) {
  std::optional<Segment> lowest;
  for (const auto& m : parts) {
    if (!m.empty() && (!lowest || m.min_segment() < *lowest)) {
      lowest = m.min_segment();
    }
  }
  if (!lowest) throw EmptyInput("excise_min: total multisegment is empty");
  Excision out{*lowest, {}};
  out.remainders.reserve(parts.size());
  for (const auto& m : parts) {
    Multisegment rest = m;
    if (rest.contains(*lowest)) rest.remove(*lowest);
    out.remainders.push_back(std::move(rest));
  }
  return out;
}

/// m' = m - m(Δ0){Δ0}: every copy of the minimal segment removed.
inline std::pair<Segment, Multisegment> excise_min(const Multisegment& m) {
  if (m.empty()) throw EmptyInput("excise_min: multisegment is empty");
  Segment lowest = m.min_segment();
  Multisegment rest = m;
  rest.remove(lowest, m.count(lowest));
  return {lowest, std::move(rest)};
}

struct ProductVerdict {
  enum class Kind { distinguished, not_distinguished, hypothesis_dependent };

  Kind kind;
  std::string reason;
};

inline const char* to_string(ProductVerdict::Kind kind) {
  switch (kind) {
    case ProductVerdict::Kind::distinguished:
      return "Distinguished";
    case ProductVerdict::Kind::not_distinguished:
      return "NotDistinguished";
    case ProductVerdict::Kind::hypothesis_dependent:
      return "HypothesisDependent";
  }
  return "?";
}

/// Ladders of the factors L(l) of an irreducible product, each given by
/// its Langlands data, mapped to Zelevinsky data.
inline std::vector<Ladder> as_zelevinsky_data(std::span<const Ladder> ladders) {
  std::vector<Ladder> out;
  out.reserve(ladders.size());
  for (const auto& l : ladders) out.push_back(zelevinsky_dual(l));
  return out;
}

/// Sp-distinction of L(l_1) × ... × L(l_k).
///
/// The product must be irreducible; since L(l) = Z(l^t) this is checked
/// with the NC criterion on the duals. Distinguished factors give a
/// distinguished product. Otherwise the answer is unconditional only for
/// at most two factors.
inline ProductVerdict product_sp_verdict(std::span<const Ladder> ladders) {
  auto z_data = as_zelevinsky_data(ladders);
  if (!product_irreducible(z_data)) {
    throw ReducibleProduct("product of the given ladder representations is reducible");
  }
  bool all = std::all_of(ladders.begin(), ladders.end(),
                         [](const Ladder& l) { return sp_distinguished_L(l); });
  if (all) {
    return {ProductVerdict::Kind::distinguished,
            "every factor is Sp-distinguished"};
  }
  if (ladders.size() <= 2) {
    return {ProductVerdict::Kind::not_distinguished,
            "a factor is not Sp-distinguished; at most two factors"};
  }
  return {ProductVerdict::Kind::hypothesis_dependent,
          "not distinguished if Hypothesis ** holds"};
}

}  // namespace multiseg

#endif  // MULTISEG_IRREDUCIBILITY_HPP_
