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

// Exhaustive checkers for properties of choice rules.
//
// Each checker scans the full problem space of a ChoiceTable in a fixed
// order and reports the first violation it meets, so witnesses do not depend
// on the number of worker threads. Every witness can be re-validated against
// the table with witness_reproduces().

#ifndef LEXCHOICE_AXIOMS_H_
#define LEXCHOICE_AXIOMS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexchoice/core.h"
#include "lexchoice/parallel.h"
#include "lexchoice/rules.h"

namespace lexchoice {

enum class Axiom {
  kCapacityFilling,
  kGrossSubstitutes,
  kMonotonicity,
  kIrrelevanceOfAcceptedAlternatives,
  kCwarp,
  kCwarpAlternative,
  kWrarp,
  kCwrarp,
  kPathIndependence,
  kInsertion,
  kFCapacityFilling,
  kCsarp,
};

std::string_view axiom_name(Axiom a);
// Also accepts the short forms cf, gs, mon, pi and f_cf.
std::optional<Axiom> axiom_from_name(std::string_view name);

// Meaning of the fields per axiom (S, S' sets; q, q' capacities):
//   capacity_filling      problems = [(S,q)]
//   gross_substitutes     problems = [(S,q)], alternatives = [a, b]:
//                         a ∈ C(S,q) but a ∉ C(S∖{b},q)
//   monotonicity          problems = [(S,q)], alternatives = [a]:
//                         a ∈ C(S,q) but a ∉ C(S,q+1)
//   iaa                   problems = [(S,q), (S',q)]: R(S,q) = R(S',q) but the
//                         newly accepted sets at q+1 differ
//   cwarp                 problems = [(S,q), (S',q)], alternatives = [a, b]:
//                         S reveals a over b and S' reveals b over a at q
//   cwarp_alt             problems = [(S,q), (T,q)], alternatives = [a, b]
//   wrarp, cwrarp         problems = [(S,q), (S',q')], alternatives = [a, b]:
//                         a ∈ C(S,q), b ∈ C(S',q') ∖ C(S,q), a ∉ C(S',q')
//   path_independence     problems = [(S,q), (T,q)]
//   insertion             capacity = q whose list is not an insertion
//   f_capacity_filling    problems = [(S,q)], alternatives = [a]
//   csarp                 alternatives = cycle a0 → a1 → ... → a0, problems =
//                         one (S,q) per edge revealing it
struct Witness {
  std::vector<Problem> problems;
  std::vector<Alternative> alternatives;
  Capacity capacity = 0;

  bool operator==(const Witness&) const = default;
};

struct AxiomReport {
  Axiom axiom;
  bool passed = true;
  std::optional<Witness> witness;
  std::size_t problems_checked = 0;
};

// Capacity-wise revealed preference at q: a over b when some S has
// a, b ∉ C(S,q-1), a ∈ C(S,q) and b ∈ R(S,q).
class RevealedPreference {
 public:
  RevealedPreference(int n, Capacity q);

  Capacity capacity() const { return capacity_; }
  int size() const { return n_; }
  bool prefers(Alternative a, Alternative b) const { return successors_[a].contains(b); }
  ChoiceSet successors(Alternative a) const { return successors_[a]; }
  // First choice set (in enumeration order) revealing a over b.
  ChoiceSet witness(Alternative a, Alternative b) const {
    return witness_[static_cast<std::size_t>(a) * n_ + b];
  }
  std::size_t edge_count() const;

  // Records a over b, keeping the earliest revealing set.
  void add(Alternative a, Alternative b, ChoiceSet revealing_set);

 private:
  int n_;
  Capacity capacity_;
  std::vector<ChoiceSet> successors_;
  std::vector<ChoiceSet> witness_;
};

AxiomReport check_capacity_filling(const ChoiceTable& c);
AxiomReport check_gross_substitutes(const ChoiceTable& c);
AxiomReport check_monotonicity(const ChoiceTable& c);
AxiomReport check_iaa(const ChoiceTable& c);

// Throws Error when q < 2 or q > n.
RevealedPreference revealed_pref(const ChoiceTable& c, Capacity q);
AxiomReport check_cwarp(const ChoiceTable& c);
// The pairwise formulation over two choice sets S, T. Quadratic in 2^n.
AxiomReport check_cwarp_alt(const ChoiceTable& c, RunOptions opts = {});

AxiomReport check_wrarp(const ChoiceTable& c, RunOptions opts = {});
AxiomReport check_cwrarp(const ChoiceTable& c, RunOptions opts = {});
AxiomReport check_path_independence(const ChoiceTable& c, RunOptions opts = {});

AxiomReport check_insertion(const CapacityWiseLists& lists);
// Whether `longer` arises from `shorter` by inserting one ordering.
bool obtained_by_insertion(const std::vector<PriorityOrdering>& shorter,
                           const std::vector<PriorityOrdering>& longer);

// Runs the checker for `axiom` on a plain table. Throws Error for axioms that
// need other inputs (insertion, feasibility axioms).
AxiomReport check(Axiom axiom, const ChoiceTable& c, RunOptions opts = {});

// Re-evaluates a witness against the raw table. True iff it exhibits a
// violation of `axiom`. Handles every table axiom except the feasibility
// ones (see feasibility.h).
bool witness_reproduces(const ChoiceTable& c, Axiom axiom, const Witness& w);

// C(S,q+1) ∩ R(S,q): alternatives that become accepted when capacity grows.
ChoiceSet newly_accepted(const ChoiceTable& c, ChoiceSet s, Capacity q);

}  // namespace lexchoice

#endif  // LEXCHOICE_AXIOMS_H_
