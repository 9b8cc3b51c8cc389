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

// Bounded exhaustive search for counterexamples to the hypotheses
// "distinguished implies Speh type" (star) and "m and m^∨ distinguished
// implies Speh type" (star_star).
//
// Candidates are translated so that their smallest begin is 0. Each
// candidate is checked independently, so the candidate list is split into
// shards evaluated on separate threads; results are merged in candidate
// order and the report does not depend on the shard count.

#ifndef MULTISEG_SEARCH_HPP_
#define MULTISEG_SEARCH_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "multiseg/errors.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/relevance.hpp"
#include "multiseg/segment.hpp"

namespace multiseg {

enum class SearchFilter { all, sets_only, blocks_le_2 };

struct SearchBounds {
  Int max_end = 0;
  Int max_size = 1;
  Int max_mult = 1;
  HypothesisMode mode = HypothesisMode::star;
  SearchFilter filter = SearchFilter::all;
  unsigned shards = 1;

  void validate() const {
    if (max_end < 0) throw RangeError("max_end must be >= 0");
    if (max_size < 1) throw RangeError("max_size must be >= 1");
    if (max_mult < 1) throw RangeError("max_mult must be >= 1");
    if (shards < 1) throw RangeError("shards must be >= 1");
  }
};

struct Counterexample {
  Multisegment m;
  /// Relevant decompositions, one per standard order.
  std::vector<OrderWitness> witnesses;
  /// The translated dual of m was reported earlier in the list.
  bool dual_of_earlier = false;
};

struct StrongFormViolation {
  Multisegment m;
  OrderedMultisegment order;
  RelevantDecomposition witness;
};

struct SearchReport {
  SearchBounds bounds;
  std::size_t checked = 0;
  std::size_t distinguished = 0;
  std::size_t speh = 0;
  std::vector<Counterexample> counterexamples;
  /// Candidates whose canonical order admits a non-trivial relevant
  /// decomposition.
  std::vector<StrongFormViolation> strong_form_violations;
  double elapsed_ms = 0;
};

/// m translated so that its smallest begin is 0.
inline Multisegment normalize_translation(const Multisegment& m) {
  if (m.empty()) return m;
  return shift_all(m, -m.min_segment().begin());
}

inline bool passes_filter(const Multisegment& m, SearchFilter filter) {
  switch (filter) {
    case SearchFilter::all:
      return true;
    case SearchFilter::sets_only:
      return m.is_set();
    case SearchFilter::blocks_le_2:
      for (const auto& block : block_partition(m)) {
        if (block.part.size() > 2) return false;
      }
      return true;
  }
  return false;
}

/// Nonempty multisegments with segments inside [0, max_end], some segment
/// beginning at 0, size ≤ max_size, multiplicities ≤ max_mult, and passing
/// the filter. Sorted ascending.
inline std::vector<Multisegment> enumerate_candidates(const SearchBounds& b) {
  b.validate();
  std::vector<Segment> universe;
  for (Int lo = 0; lo <= b.max_end; ++lo) {
    for (Int hi = lo; hi <= b.max_end; ++hi) universe.emplace_back(lo, hi);
  }
  const Int mult_cap = b.filter == SearchFilter::sets_only ? 1 : b.max_mult;
  std::vector<Multisegment> out;
  Multisegment current;
  auto recurse = [&](auto&& self, std::size_t idx) -> void {
    if (idx == universe.size()) {
      if (!current.empty() && current.min_segment().begin() == 0 &&
          passes_filter(current, b.filter)) {
        out.push_back(current);
      }
      return;
    }
    self(self, idx + 1);
    for (Int c = 1; c <= mult_cap && current.size() < b.max_size; ++c) {
      current.add(universe[idx]);
      self(self, idx + 1);
    }
    if (Int c = current.count(universe[idx]); c > 0) {
      current.remove(universe[idx], c);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

struct CandidateOutcome {
  bool distinguished = false;
  bool speh = false;
  bool counterexample = false;
  std::optional<StrongFormViolation> violation;
};

inline CandidateOutcome evaluate_candidate(const Multisegment& m,
                                           HypothesisMode mode) {
  CandidateOutcome out;
  auto verdict = check_hypothesis(m, mode);
  out.distinguished = verdict.distinguished;
  out.speh = verdict.speh_witness.has_value();
  out.counterexample = !verdict.holds;
  OrderedMultisegment order = canonical_order(m);
  if (auto rel = nontrivial_relevant_decomposition(order)) {
    out.violation = StrongFormViolation{m, std::move(order), std::move(*rel)};
  }
  return out;
}

}  // namespace detail

inline SearchReport search_counterexamples(const SearchBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport report;
  report.bounds = bounds;
  const auto candidates = enumerate_candidates(bounds);
  std::vector<detail::CandidateOutcome> outcomes(candidates.size());

  const std::size_t shards = std::max<std::size_t>(
      1, std::min<std::size_t>(bounds.shards, candidates.size()));
  auto run_shard = [&](std::size_t shard) {
    for (std::size_t i = shard; i < candidates.size(); i += shards) {
      outcomes[i] = detail::evaluate_candidate(candidates[i], bounds.mode);
    }
  };
  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s) workers.emplace_back(run_shard, s);
  }

  std::set<Multisegment> reported;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& m = candidates[i];
    auto& outcome = outcomes[i];
    ++report.checked;
    if (outcome.distinguished) ++report.distinguished;
    if (outcome.speh) ++report.speh;
    if (outcome.counterexample) {
      Counterexample ce{m, is_distinguished(m, true).witnesses, false};
      ce.dual_of_earlier = reported.contains(normalize_translation(dual(m)));
      reported.insert(m);
      report.counterexamples.push_back(std::move(ce));
    }
    if (outcome.violation) {
      report.strong_form_violations.push_back(std::move(*outcome.violation));
    }
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace multiseg

#endif  // MULTISEG_SEARCH_HPP_
