// Copyright 2026 The Authors.
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

// Choice rules: priority orderings and profiles, the lexicographic,
// responsive and capacity-wise lexicographic rules, the four Boston
// walk-zone/open rule builders, and materialization into ChoiceTables.

#ifndef LEXCHOICE_RULES_H_
#define LEXCHOICE_RULES_H_

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "lexchoice/core.h"
#include "lexchoice/parallel.h"

namespace lexchoice {

// A strict total order over a universe, stored as a permutation:
// order()[0] has the highest priority.
class PriorityOrdering {
 public:
  // Throws Error unless `order` is a permutation of 0..n-1.
  explicit PriorityOrdering(std::vector<Alternative> order);
  // 0 > 1 > ... > n-1.
  static PriorityOrdering Identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<Alternative>& order() const { return order_; }
  int position(Alternative a) const { return position_[a]; }
  bool prefers(Alternative a, Alternative b) const { return position_[a] < position_[b]; }

  // Highest-priority member of s, or -1 if s is empty.
  Alternative best(ChoiceSet s) const {
    for (Alternative a : order_) {
      if (s.contains(a)) return a;
    }
    return -1;
  }
  // Members of s in priority order.
  std::vector<Alternative> restricted_to(ChoiceSet s) const;

  bool operator==(const PriorityOrdering& o) const { return order_ == o.order_; }

 private:
  std::vector<Alternative> order_;
  std::vector<int> position_;
};

// Exactly n orderings over an n-alternative universe.
class PriorityProfile {
 public:
  explicit PriorityProfile(std::vector<PriorityOrdering> orderings);
  static PriorityProfile Constant(const PriorityOrdering& ordering);

  int size() const { return static_cast<int>(orderings_.size()); }
  const PriorityOrdering& operator[](std::size_t t) const { return orderings_[t]; }
  const std::vector<PriorityOrdering>& orderings() const { return orderings_; }

  bool operator==(const PriorityProfile&) const = default;

 private:
  std::vector<PriorityOrdering> orderings_;
};

// One list of exactly q orderings for each capacity q = 1..n.
class CapacityWiseLists {
 public:
  explicit CapacityWiseLists(std::vector<std::vector<PriorityOrdering>> per_capacity);

  int universe_size() const { return static_cast<int>(lists_.size()); }
  const std::vector<PriorityOrdering>& for_capacity(Capacity q) const { return lists_.at(q - 1); }
  const std::vector<std::vector<PriorityOrdering>>& lists() const { return lists_; }

  bool operator==(const CapacityWiseLists&) const = default;

 private:
  std::vector<std::vector<PriorityOrdering>> lists_;
};

// Exhaustive materialization of C(S,q) over all (2^n - 1) * n problems.
class ChoiceTable {
 public:
  // entries[universe.problem_index(p)] = C(p). Throws Error unless the table
  // is total and every entry satisfies C(S,q) ⊆ S and |C(S,q)| <= q.
  ChoiceTable(Universe universe, std::vector<ChoiceSet> entries);

  // Builds a table by evaluating `rule` on every problem.
  static ChoiceTable Tabulate(const Universe& universe,
                              const std::function<ChoiceSet(const Problem&)>& rule,
                              RunOptions opts = {});

  const Universe& universe() const { return universe_; }
  int n() const { return universe_.size(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<ChoiceSet>& entries() const { return entries_; }

  // Unchecked lookup; s nonempty, 1 <= q <= n.
  ChoiceSet operator()(ChoiceSet s, Capacity q) const {
    return entries_[(static_cast<std::size_t>(s.bits()) - 1) * static_cast<std::size_t>(n()) +
                    static_cast<std::size_t>(q - 1)];
  }
  // C(S,0) = ∅ by convention; otherwise as operator().
  ChoiceSet chosen_or_empty(ChoiceSet s, Capacity q) const {
    return q == 0 ? ChoiceSet() : (*this)(s, q);
  }
  // Checked lookup; throws Error outside the domain.
  ChoiceSet at(const Problem& p) const;

  bool operator==(const ChoiceTable&) const = default;

 private:
  Universe universe_;
  std::vector<ChoiceSet> entries_;
};

using ChoiceRule = std::variant<PriorityProfile, PriorityOrdering, CapacityWiseLists, ChoiceTable>;

// R(S,q) = S \ C(S,q). Throws Error if p is outside the table's domain.
ChoiceSet rejected(const ChoiceTable& c, const Problem& p);

// Picks the top remaining alternative under list[0], list[1], ... until
// min(|S|, list.size()) alternatives are chosen.
ChoiceSet lexicographic_pass(const std::vector<PriorityOrdering>& list, ChoiceSet s, int steps);

ChoiceSet lex_choose(const PriorityProfile& profile, const Problem& p);
ChoiceSet responsive_choose(const PriorityOrdering& ordering, const Problem& p);
ChoiceSet cwlex_choose(const CapacityWiseLists& lists, const Problem& p);
ChoiceSet choose(const ChoiceRule& rule, const Problem& p);

// Boston rules over a walk-zone ordering w and an open ordering o.
CapacityWiseLists build_walk_open(const PriorityOrdering& w, const PriorityOrdering& o, int n);
CapacityWiseLists build_open_walk(const PriorityOrdering& w, const PriorityOrdering& o, int n);
CapacityWiseLists build_rotating(const PriorityOrdering& w, const PriorityOrdering& o, int n);
CapacityWiseLists build_compromise(const PriorityOrdering& w, const PriorityOrdering& o, int n);

// (w, o, w, o, ...) of length n.
PriorityProfile rotating_profile(const PriorityOrdering& w, const PriorityOrdering& o, int n);

// Every list entry is w or o and the counts differ by at most one.
bool satisfies_boston_requirement(const CapacityWiseLists& lists, const PriorityOrdering& w,
                                  const PriorityOrdering& o);

// Entries are w or o and, for each odd position l, entry l is w iff entry
// l+1 is o (positions 1-based).
bool alternates_in_pairs(const std::vector<PriorityOrdering>& list, const PriorityOrdering& w,
                         const PriorityOrdering& o);

ChoiceTable materialize(const ChoiceRule& rule, const Universe& u, RunOptions opts = {});

}  // namespace lexchoice

#endif  // LEXCHOICE_RULES_H_
