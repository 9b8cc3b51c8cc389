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

// JSON encodings used by the command-line reports. Segments and
// multisegments are encoded with their text form; piece indices are
// 1-based [row, piece] pairs.

#ifndef MULTISEG_JSON_HPP_
#define MULTISEG_JSON_HPP_

#include <json.hpp>

#include "multiseg/irreducibility.hpp"
#include "multiseg/ladder.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/relevance.hpp"
#include "multiseg/search.hpp"
#include "multiseg/segment.hpp"
#include "multiseg/text.hpp"

namespace multiseg {

using json = nlohmann::ordered_json;

inline void to_json(json& j, const Segment& s) { j = to_string(s); }
inline void to_json(json& j, const Multisegment& m) { j = format(m); }

inline void to_json(json& j, const OrderedMultisegment& o) {
  j = json::array();
  for (const auto& s : o.rows) j.push_back(to_string(s));
}

inline void to_json(json& j, const Ladder& l) {
  to_json(j, OrderedMultisegment{l.rows()});
}

inline void to_json(json& j, const PieceIndex& p) {
  j = json::array({p.row + 1, p.col + 1});
}

inline void to_json(json& j, const Decomposition& d) {
  j = json::array();
  for (const auto& row : d.rows()) {
    json r = json::array();
    for (const auto& s : row) r.push_back(to_string(s));
    j.push_back(std::move(r));
  }
}

inline void to_json(json& j, const Matching& m) {
  j = json::array();
  for (const auto& [a, b] : m.pairs) j.push_back(json::array({a, b}));
}

inline void to_json(json& j, const RelevantDecomposition& r) {
  j = json{{"decomposition", r.decomposition}, {"matching", r.matching}};
}

inline void to_json(json& j, const OrderWitness& w) {
  j = json{{"order", w.order},
           {"decomposition", w.witness.decomposition},
           {"matching", w.witness.matching}};
}

inline void to_json(json& j, const KlyachkoType& t) {
  j = json{{"k", t.k}, {"r", t.r}, {"n", t.n}};
}

inline void to_json(json& j, const NcWitness& w) {
  j = json{{"i", w.i}, {"j", w.j}, {"k", w.k}};
}

inline const char* to_string(HypothesisMode mode) {
  return mode == HypothesisMode::star ? "star" : "star_star";
}

inline const char* to_string(SearchFilter filter) {
  switch (filter) {
    case SearchFilter::all:
      return "all";
    case SearchFilter::sets_only:
      return "sets_only";
    case SearchFilter::blocks_le_2:
      return "blocks_le_2";
  }
  return "?";
}

inline void to_json(json& j, const SearchBounds& b) {
  j = json{{"max_end", b.max_end},   {"max_size", b.max_size},
           {"max_mult", b.max_mult}, {"mode", to_string(b.mode)},
           {"filter", to_string(b.filter)}};
}

inline void to_json(json& j, const Counterexample& c) {
  j = json{{"multisegment", c.m},
           {"dual_of_earlier", c.dual_of_earlier},
           {"witnesses", c.witnesses}};
}

inline void to_json(json& j, const StrongFormViolation& v) {
  j = json{{"multisegment", v.m},
           {"order", v.order},
           {"decomposition", v.witness.decomposition},
           {"matching", v.witness.matching}};
}

/// The result part of a search report; shard count and timing excluded.
inline json search_result_json(const SearchReport& r) {
  return json{{"checked", r.checked},
              {"distinguished", r.distinguished},
              {"speh", r.speh},
              {"counterexample_count", r.counterexamples.size()},
              {"counterexamples", r.counterexamples},
              {"strong_form_violation_count", r.strong_form_violations.size()},
              {"strong_form_violations", r.strong_form_violations}};
}

}  // namespace multiseg

#endif  // MULTISEG_JSON_HPP_
