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

// Lexicographic choice under a downward-closed feasibility constraint.
//
// A FeasibilityFamily is kept as its maximal sets; a set is feasible iff it
// is contained in one of them. Every singleton is feasible. Choice rules here
// greedily add, at step t, the best remaining alternative under the t-th
// ordering that keeps the chosen set feasible, and stop early when no
// alternative can be added.

#ifndef LEXCHOICE_FEASIBILITY_H_
#define LEXCHOICE_FEASIBILITY_H_

#include <vector>

#include "lexchoice/axioms.h"
#include "lexchoice/core.h"
#include "lexchoice/identify.h"
#include "lexchoice/rules.h"

namespace lexchoice {

class FeasibilityFamily {
 public:
  // Downward closure of `maximal_sets` plus every singleton of an
  // n-alternative universe. Non-maximal inputs are dropped.
  FeasibilityFamily(int n, const std::vector<ChoiceSet>& maximal_sets);

  int universe_size() const { return n_; }
  // Antichain of maximal feasible sets, ascending by bitmask.
  const std::vector<ChoiceSet>& maximal_sets() const { return maximal_; }
  bool contains(ChoiceSet s) const;

  bool operator==(const FeasibilityFamily& o) const {
    return n_ == o.n_ && maximal_ == o.maximal_;
  }

 private:
  int n_;
  std::vector<ChoiceSet> maximal_;
  // Membership bitmap over all 2^n sets; only built for small universes.
  std::vector<bool> members_;
};

FeasibilityFamily make_family(const Universe& u, const std::vector<ChoiceSet>& maximal_sets);
// Every subset is feasible.
FeasibilityFamily unconstrained_family(const Universe& u);
// Alternatives grouped by agent; a set is feasible iff it holds at most one
// alternative of each group. Groups must partition the universe.
FeasibilityFamily partition_family(const Universe& u, const std::vector<ChoiceSet>& groups);

// A choice table whose entries are feasible and nonempty.
class FChoiceTable {
 public:
  // Throws Error if some entry is empty or infeasible, or if the family is
  // over a different universe.
  FChoiceTable(ChoiceTable table, FeasibilityFamily family);

  const ChoiceTable& table() const { return table_; }
  const FeasibilityFamily& family() const { return family_; }
  const Universe& universe() const { return table_.universe(); }
  int n() const { return table_.n(); }
  ChoiceSet operator()(ChoiceSet s, Capacity q) const { return table_(s, q); }

 private:
  ChoiceTable table_;
  FeasibilityFamily family_;
};

ChoiceSet flex_choose(const PriorityProfile& profile, const FeasibilityFamily& f,
                      const Problem& p);
FChoiceTable materialize_flex(const PriorityProfile& profile, const FeasibilityFamily& f,
                              const Universe& u, RunOptions opts = {});

AxiomReport check_f_capacity_filling(const FChoiceTable& c);
// R_q^F, with C(S,0) = ∅. Throws Error unless 1 <= q <= n.
RevealedPreference f_revealed_pref(const FChoiceTable& c, Capacity q);
AxiomReport check_csarp(const FChoiceTable& c);
inline AxiomReport check_monotonicity(const FChoiceTable& c) {
  return check_monotonicity(c.table());
}

// For each q, a linear extension of the transitive closure of R_q^F, ties
// broken by lowest index; validated by re-materialization.
Extraction<PriorityProfile> extract_flex_profile(const FChoiceTable& c);

// Witness re-validation for f_capacity_filling and csarp; other axioms are
// forwarded to the plain-table overload.
bool witness_reproduces(const FChoiceTable& c, Axiom axiom, const Witness& w);

}  // namespace lexchoice

#endif  // LEXCHOICE_FEASIBILITY_H_
