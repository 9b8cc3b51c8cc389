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

// Decompositions of ordered multisegments and the involutions that make
// them relevant.
//
// A decomposition splits every row Δ_i of an ordered multisegment top-down
// into consecutive pieces Δ_{i,1}, ..., Δ_{i,k_i}. Pieces are indexed by
// pairs (i, j) in lexicographic order. A decomposition is relevant when a
// fixed-point-free involution τ on the pieces exists such that
//
//   (1) the row of τ(i, j+1) is strictly smaller than the row of τ(i, j),
//   (2) τ(ι) ≠ ι,
//   (3) Δ_ι = ν Δ_τ(ι) whenever ι comes before τ(ι).
//
// Indices are 0-based in this API; serialized output is 1-based.

#ifndef MULTISEG_RELEVANCE_HPP_
#define MULTISEG_RELEVANCE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "multiseg/errors.hpp"
#include "multiseg/multisegment.hpp"
#include "multiseg/segment.hpp"

namespace multiseg {

struct PieceIndex {
  std::size_t row;
  std::size_t col;

  friend bool operator==(const PieceIndex&, const PieceIndex&) = default;
  friend auto operator<=>(const PieceIndex&, const PieceIndex&) = default;
};

class Decomposition {
 public:
  using Rows = std::vector<std::vector<Segment>>;

  Decomposition(OrderedMultisegment parent, Rows pieces)
      : parent_(std::move(parent)), pieces_(std::move(pieces)) {
    if (pieces_.size() != parent_.rows.size()) {
      throw RangeError("decomposition: row count mismatch");
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const auto& row = pieces_[i];
      const Segment& whole = parent_.rows[i];
      if (row.empty() || row.front().end() != whole.end() ||
          row.back().begin() != whole.begin()) {
        throw RangeError("decomposition: row " + std::to_string(i + 1) +
                         " does not cover " + to_string(whole));
      }
      for (std::size_t j = 0; j + 1 < row.size(); ++j) {
        if (row[j + 1].end() != row[j].begin() - 1) {
          throw RangeError("decomposition: row " + std::to_string(i + 1) +
                           " pieces are not consecutive");
        }
      }
    }
  }

  static Decomposition trivial(const OrderedMultisegment& o) {
    Rows rows;
    rows.reserve(o.rows.size());
    for (const auto& s : o.rows) rows.push_back({s});
    return Decomposition(o, std::move(rows));
  }

  const OrderedMultisegment& parent() const noexcept { return parent_; }
  const Rows& rows() const noexcept { return pieces_; }
  std::size_t row_count() const noexcept { return pieces_.size(); }
  std::size_t row_size(std::size_t i) const { return pieces_.at(i).size(); }
  const Segment& piece(PieceIndex p) const { return pieces_.at(p.row).at(p.col); }

  std::size_t piece_count() const noexcept {
    std::size_t n = 0;
    for (const auto& row : pieces_) n += row.size();
    return n;
  }

  bool is_trivial() const noexcept {
    return std::all_of(pieces_.begin(), pieces_.end(),
                       [](const auto& row) { return row.size() == 1; });
  }

  /// All pieces in lexicographic index order.
  std::vector<Segment> flattened() const {
    std::vector<Segment> out;
    for (const auto& row : pieces_) out.insert(out.end(), row.begin(), row.end());
    return out;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  OrderedMultisegment parent_;
  Rows pieces_;
};

/// A fixed-point-free involution, stored as pairs (ι, τ(ι)) with ι first
/// in lexicographic order. Pairs are sorted by their first index.
struct Matching {
  std::vector<std::pair<PieceIndex, PieceIndex>> pairs;

  std::optional<PieceIndex> partner(PieceIndex p) const {
    for (const auto& [a, b] : pairs) {
      if (a == p) return b;
      if (b == p) return a;
    }
    return std::nullopt;
  }

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Checks conditions (1)-(3) directly. Independent of the search below.
inline bool verify_matching(const Decomposition& dec, const Matching& tau) {
  std::vector<std::vector<std::optional<PieceIndex>>> image(dec.row_count());
  for (std::size_t i = 0; i < dec.row_count(); ++i) {
    image[i].resize(dec.row_size(i));
  }
  auto in_range = [&](PieceIndex p) {
    return p.row < dec.row_count() && p.col < dec.row_size(p.row);
  };
  for (const auto& [a, b] : tau.pairs) {
    if (!in_range(a) || !in_range(b) || a == b) return false;
    if (image[a.row][a.col] || image[b.row][b.col]) return false;
    image[a.row][a.col] = b;
    image[b.row][b.col] = a;
    const auto& [lo, hi] = a < b ? std::pair{a, b} : std::pair{b, a};
    if (dec.piece(lo) != shift(dec.piece(hi), 1)) return false;
  }
  for (std::size_t i = 0; i < dec.row_count(); ++i) {
    for (std::size_t j = 0; j < dec.row_size(i); ++j) {
      if (!image[i][j]) return false;
      if (j + 1 < dec.row_size(i) && !(image[i][j + 1]->row < image[i][j]->row)) {
        return false;
      }
    }
  }
  return true;
}

/// Lazily enumerates all decompositions of an ordered multisegment:
/// the trivial one first, then by ascending total piece count.
///
/// A decomposition is a choice of cut points; a cut at c inside [a,b]
/// starts a new piece at c (a < c ≤ b).
class Decompositions {
 public:
  explicit Decompositions(OrderedMultisegment o) : parent_(std::move(o)) {
    for (std::size_t i = 0; i < parent_.rows.size(); ++i) {
      const auto& s = parent_.rows[i];
      for (Int c = s.begin() + 1; c <= s.end(); ++c) cuts_.push_back({i, c});
    }
  }

  /// Number of cut positions; there are 2^cut_positions() decompositions.
  std::size_t cut_positions() const noexcept { return cuts_.size(); }

  std::optional<Decomposition> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
    } else if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    return build();
  }

 private:
  struct Cut {
    std::size_t row;
    Int at;
  };

  // Next combination of the same size, or the first of the next size.
  bool advance() {
    const std::size_t n = cuts_.size();
    const std::size_t t = chosen_.size();
    for (std::size_t pos = t; pos-- > 0;) {
      if (chosen_[pos] < n - t + pos) {
        ++chosen_[pos];
        for (std::size_t q = pos + 1; q < t; ++q) chosen_[q] = chosen_[q - 1] + 1;
        return true;
      }
    }
    if (t == n) return false;
    chosen_.resize(t + 1);
    for (std::size_t q = 0; q <= t; ++q) chosen_[q] = q;
    return true;
  }

  Decomposition build() const {
    std::vector<std::vector<Int>> row_cuts(parent_.rows.size());
    for (std::size_t idx : chosen_) row_cuts[cuts_[idx].row].push_back(cuts_[idx].at);
    Decomposition::Rows rows(parent_.rows.size());
    for (std::size_t i = 0; i < parent_.rows.size(); ++i) {
      auto& cuts = row_cuts[i];
      std::sort(cuts.begin(), cuts.end(), std::greater<>());
      Int hi = parent_.rows[i].end();
      for (Int c : cuts) {
        rows[i].emplace_back(c, hi);
        hi = c - 1;
      }
      rows[i].emplace_back(parent_.rows[i].begin(), hi);
    }
    return Decomposition(parent_, std::move(rows));
  }

  OrderedMultisegment parent_;
  std::vector<Cut> cuts_;
  std::vector<std::size_t> chosen_;
  bool started_ = false;
  bool done_ = false;
};

inline Decompositions decompositions(const OrderedMultisegment& o) {
  return Decompositions(o);
}

namespace detail {

// Backtracking over pair assignments in lexicographic index order. The
// smallest unassigned piece ι must pair with a later piece κ, so
// Δ_κ = ν^{-1}Δ_ι. Row-1 pieces may only pair with the last piece of
// their partner row.
class MatchingSearch {
 public:
  explicit MatchingSearch(const Decomposition& dec) {
    for (std::size_t i = 0; i < dec.row_count(); ++i) {
      row_len_.push_back(dec.row_size(i));
      for (std::size_t j = 0; j < dec.row_size(i); ++j) {
        pieces_.push_back(dec.piece({i, j}));
        index_.push_back({i, j});
      }
    }
    partner_.assign(pieces_.size(), kUnassigned);
  }

  std::optional<Matching> run() {
    if (!search(0)) return std::nullopt;
    Matching out;
    for (std::size_t f = 0; f < pieces_.size(); ++f) {
      if (f < partner_[f]) out.pairs.push_back({index_[f], index_[partner_[f]]});
    }
    return out;
  }

 private:
  static constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

  bool consistent(std::size_t x) const {
    const std::size_t col = index_[x].col;
    const std::size_t row_of_image = index_[partner_[x]].row;
    if (col > 0 && partner_[x - 1] != kUnassigned &&
        !(row_of_image < index_[partner_[x - 1]].row)) {
      return false;
    }
    if (col + 1 < row_len_[index_[x].row] && partner_[x + 1] != kUnassigned &&
        !(index_[partner_[x + 1]].row < row_of_image)) {
      return false;
    }
    return true;
  }

  bool search(std::size_t from) {
    std::size_t f = from;
    while (f < pieces_.size() && partner_[f] != kUnassigned) ++f;
    if (f == pieces_.size()) return true;
    const Segment& upper = pieces_[f];
    for (std::size_t g = f + 1; g < pieces_.size(); ++g) {
      if (partner_[g] != kUnassigned || index_[g].row == index_[f].row) continue;
      if (pieces_[g].begin() + 1 != upper.begin() ||
          pieces_[g].end() + 1 != upper.end()) {
        continue;
      }
      if (index_[f].row == 0 && index_[g].col + 1 != row_len_[index_[g].row]) {
        continue;
      }
      partner_[f] = g;
      partner_[g] = f;
      if (consistent(f) && consistent(g) && search(f + 1)) return true;
      partner_[f] = kUnassigned;
      partner_[g] = kUnassigned;
    }
    return false;
  }

  std::vector<Segment> pieces_;
  std::vector<PieceIndex> index_;
  std::vector<std::size_t> row_len_;
  std::vector<std::size_t> partner_;
};

}  // namespace detail

/// Some involution making `dec` relevant, if one exists.
inline std::optional<Matching> find_matching(const Decomposition& dec) {
  const std::size_t rows = dec.row_count();
  // A row's pieces pair with pieces of pairwise distinct other rows.
  for (std::size_t i = 0; i < rows; ++i) {
    if (dec.row_size(i) + 1 > rows) return std::nullopt;
  }
  auto flat = dec.flattened();
  if (flat.size() % 2 != 0) return std::nullopt;
  // Paired pieces form n + νn for the lower halves n.
  if (!is_speh_type(Multisegment(std::span<const Segment>(flat)))) {
    return std::nullopt;
  }
  return detail::MatchingSearch(dec).run();
}

struct RelevantDecomposition {
  Decomposition decomposition;
  Matching matching;
};

namespace detail {

inline std::optional<RelevantDecomposition> first_relevant(
    const OrderedMultisegment& o, bool skip_trivial) {
  if (!o.is_standard_form()) {
    throw NotStandardForm("order is not in standard form");
  }
  Decompositions stream(o);
  if (skip_trivial) stream.next();
  while (auto dec = stream.next()) {
    if (auto tau = find_matching(*dec)) {
      return RelevantDecomposition{std::move(*dec), std::move(*tau)};
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// The first decomposition (trivial first) relevant to o, with its witness.
/// Throws NotStandardForm unless o is in standard form.
inline std::optional<RelevantDecomposition> is_relevant(
    const OrderedMultisegment& o) {
  return detail::first_relevant(o, false);
}

/// Like is_relevant, but skips the trivial decomposition.
inline std::optional<RelevantDecomposition> nontrivial_relevant_decomposition(
    const OrderedMultisegment& o) {
  return detail::first_relevant(o, true);
}

/// Whether the trivial decomposition alone is relevant to o.
inline bool trivial_decomposition_relevant(const OrderedMultisegment& o) {
  return find_matching(Decomposition::trivial(o)).has_value();
}

struct OrderWitness {
  OrderedMultisegment order;
  RelevantDecomposition witness;
};

struct DistinguishedVerdict {
  bool distinguished = false;
  /// Filled only when witnesses were requested.
  std::vector<OrderWitness> witnesses;
  /// The first standard order with no relevant decomposition.
  std::optional<OrderedMultisegment> failing_order;
  std::size_t orders_checked = 0;
};

/// Every standard order of m admits a relevant decomposition.
///
/// The canonical order is tried first, then every other standard order;
/// the check stops at the first failing order.
inline DistinguishedVerdict is_distinguished(const Multisegment& m,
                                             bool collect_witnesses = true) {
  DistinguishedVerdict out;
  auto check = [&](const OrderedMultisegment& o) {
    ++out.orders_checked;
    auto rel = is_relevant(o);
    if (!rel) {
      out.failing_order = o;
      return false;
    }
    if (collect_witnesses) out.witnesses.push_back({o, std::move(*rel)});
    return true;
  };
  const OrderedMultisegment first = canonical_order(m);
  if (!check(first)) return out;
  StandardOrders orders(m);
  while (auto o = orders.next()) {
    if (*o == first) continue;
    if (!check(*o)) return out;
  }
  out.distinguished = true;
  return out;
}

enum class HypothesisMode { star, star_star };

struct HypothesisVerdict {
  bool holds = true;
  bool distinguished = false;
  /// Evaluated only in star_star mode when m itself is distinguished.
  std::optional<bool> dual_distinguished;
  std::optional<Multisegment> speh_witness;
  std::optional<OrderedMultisegment> failing_order;
  std::optional<OrderedMultisegment> dual_failing_order;
};

inline HypothesisVerdict check_hypothesis(const Multisegment& m,
                                          HypothesisMode mode) {
  HypothesisVerdict out;
  out.speh_witness = is_speh_type(m);
  auto verdict = is_distinguished(m, false);
  out.distinguished = verdict.distinguished;
  out.failing_order = std::move(verdict.failing_order);
  bool premise = out.distinguished;
  if (mode == HypothesisMode::star_star && premise) {
    auto dual_verdict = is_distinguished(dual(m), false);
    out.dual_distinguished = dual_verdict.distinguished;
    out.dual_failing_order = std::move(dual_verdict.failing_order);
    premise = dual_verdict.distinguished;
  }
  out.holds = !premise || out.speh_witness.has_value();
  return out;
}

/// Distinguished implies Speh type.
inline HypothesisVerdict check_hypothesis_star(const Multisegment& m) {
  return check_hypothesis(m, HypothesisMode::star);
}

/// m and m^∨ both distinguished implies Speh type.
inline HypothesisVerdict check_hypothesis_star_star(const Multisegment& m) {
  return check_hypothesis(m, HypothesisMode::star_star);
}

/// No non-trivial decomposition is relevant to the canonical order of m.
/// Returns the offending decomposition when the property fails.
inline std::optional<RelevantDecomposition> strong_form_violation(
    const Multisegment& m) {
  return nontrivial_relevant_decomposition(canonical_order(m));
}

}  // namespace multiseg

#endif  // MULTISEG_RELEVANCE_HPP_
