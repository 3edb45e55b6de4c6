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

// Object allocation with variable capacities: deferred acceptance over a
// per-object choice structure, demand sets, and exhaustive or sampled
// checkers for mechanism-level properties.
//
// Agents are the alternatives of a Universe. Objects are indexed 0..m-1 and
// the null object is kNull. The null object has capacity n and accepts
// everyone.

#ifndef LEXCHOICE_MECHANISM_H_
#define LEXCHOICE_MECHANISM_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexchoice/axioms.h"
#include "lexchoice/core.h"
#include "lexchoice/parallel.h"
#include "lexchoice/rules.h"

namespace lexchoice {

using Object = int;
inline constexpr Object kNull = -1;

class ObjectSpace {
 public:
  // Throws Error on an empty list or duplicate names.
  explicit ObjectSpace(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  // "∅" for kNull.
  std::string name(Object x) const;
  // Accepts "∅" and "null" for the null object; throws Error if unknown.
  Object index_of(std::string_view name) const;

  bool operator==(const ObjectSpace&) const = default;

 private:
  std::vector<std::string> names_;
};

// Strict ranking of the m objects and the null object, best first.
class PreferenceRelation {
 public:
  // Throws Error unless `order` is a permutation of {kNull, 0, ..., m-1}.
  PreferenceRelation(int objects, std::vector<Object> order);

  // Ranks `head` first, then kNull (if absent from head), then the remaining
  // objects in index order.
  static PreferenceRelation Completed(int objects, const std::vector<Object>& head);

  int objects() const { return static_cast<int>(order_.size()) - 1; }
  const std::vector<Object>& order() const { return order_; }
  int rank(Object x) const { return rank_[x + 1]; }
  bool prefers(Object x, Object y) const { return rank(x) < rank(y); }
  bool weakly_prefers(Object x, Object y) const { return rank(x) <= rank(y); }
  bool acceptable(Object x) const { return prefers(x, kNull); }

  bool operator==(const PreferenceRelation& o) const { return order_ == o.order_; }
  bool operator<(const PreferenceRelation& o) const { return order_ < o.order_; }

 private:
  std::vector<Object> order_;
  std::vector<int> rank_;
};

// Every relation over m objects and kNull, in lexicographic order of the
// ranking with kNull encoded as -1.
std::vector<PreferenceRelation> all_relations(int objects);

using PreferenceProfile = std::vector<PreferenceRelation>;
// q_x for each object; the null object's capacity n is implicit.
using CapacityProfile = std::vector<Capacity>;

struct AllocationProblem {
  PreferenceProfile preferences;
  CapacityProfile capacities;

  bool operator==(const AllocationProblem&) const = default;
};

// assignment[i] is the object held by agent i, or kNull.
struct Allocation {
  std::vector<Object> assignment;

  Object operator[](std::size_t i) const { return assignment[i]; }
  std::size_t size() const { return assignment.size(); }
  // Agents holding x.
  ChoiceSet holders(Object x) const;

  bool operator==(const Allocation&) const = default;
};

// q + 1_x.
CapacityProfile with_extra_unit(CapacityProfile q, Object x);
bool feasible(const Allocation& a, const CapacityProfile& q);

class ChoiceStructure {
 public:
  // One rule per object, each over the agent universe.
  ChoiceStructure(Universe agents, ObjectSpace objects, std::vector<ChoiceTable> rules);
  // Materializes every rule over `agents`.
  static ChoiceStructure FromRules(Universe agents, ObjectSpace objects,
                                   const std::vector<ChoiceRule>& rules);
  // The same rule for every object.
  static ChoiceStructure Uniform(Universe agents, ObjectSpace objects, const ChoiceRule& rule);

  const Universe& agents() const { return agents_; }
  const ObjectSpace& objects() const { return objects_; }
  int agent_count() const { return agents_.size(); }
  int object_count() const { return objects_.size(); }
  const ChoiceTable& rule(Object x) const { return rules_.at(x); }

 private:
  Universe agents_;
  ObjectSpace objects_;
  std::vector<ChoiceTable> rules_;
};

// Throws Error unless the problem has one relation per agent over the
// structure's objects and 0 <= q_x <= n.
void validate_problem(const AllocationProblem& p, int agents, int objects);

struct DaRound {
  // S_{x,r}: new applicants plus agents held from the previous round.
  std::vector<ChoiceSet> applicants;
  // Agents held by each object at the end of the round.
  std::vector<ChoiceSet> held;
  // Agents who have reached the null object.
  ChoiceSet unassigned;
  // Position in each agent's ranking proposed to this round.
  std::vector<int> pointer;
};

struct DaTrace {
  std::vector<DaRound> rounds;
};

// Deferred acceptance. Throws Error if the problem is invalid or if the run
// exceeds n * |O| + 1 rounds.
Allocation da_allocate(const ChoiceStructure& cs, const AllocationProblem& prob,
                       DaTrace* trace = nullptr);

// D_x(a,R): agents who strictly prefer x to their assignment.
ChoiceSet demand(const Allocation& a, const PreferenceProfile& r, Object x);

using Mechanism = std::function<Allocation(const AllocationProblem&)>;

Mechanism deferred_acceptance(ChoiceStructure cs);
// Immediate acceptance: agents apply down their lists one rank per round and
// objects permanently admit C_x(applicants, remaining seats).
Mechanism boston_immediate_acceptance(ChoiceStructure cs);

struct MechanismSpace {
  int agents = 0;
  int objects = 0;
  std::vector<PreferenceProfile> profiles;
  std::vector<CapacityProfile> capacities;
  bool exhaustive = false;
  std::string description;
};

// All preference profiles and all capacity profiles in {0..n}^m.
MechanismSpace exhaustive_space(int agents, int objects);
// All preference profiles; capacity profiles with at most one object
// available.
MechanismSpace single_object_space(int agents, int objects);
// `profile_count` profiles drawn uniformly with a seeded generator; all
// capacity profiles when there are at most 256, otherwise 256 sampled ones.
MechanismSpace sampled_space(int agents, int objects, std::size_t profile_count,
                             std::uint64_t seed);

enum class MechanismProperty {
  kUnavailableTypeInvariance,
  kWeakNonWastefulness,
  kResourceMonotonicity,
  kTruncationInvariance,
  kStrategyProofness,
  kIrrelevanceOfSatisfiedDemand,
  kWeakIrrelevanceOfSatisfiedDemand,
};

std::string_view property_name(MechanismProperty p);
std::optional<MechanismProperty> property_from_name(std::string_view name);

// A replayable violation. `problems` holds the one or two problems compared;
// `agent` and `object` are set when the property quantifies over them.
struct MechanismWitness {
  std::vector<AllocationProblem> problems;
  Alternative agent = -1;
  Object object = kNull;

  bool operator==(const MechanismWitness&) const = default;
};

struct MechanismReport {
  MechanismProperty property;
  bool passed = true;
  std::optional<MechanismWitness> witness;
  // Number of implication instances evaluated.
  std::size_t cases_checked = 0;
};

MechanismReport check_unavailable_type_invariance(const Mechanism& m, const MechanismSpace& s,
                                                  RunOptions opts = {});
MechanismReport check_weak_non_wastefulness(const Mechanism& m, const MechanismSpace& s,
                                            RunOptions opts = {});
MechanismReport check_resource_monotonicity(const Mechanism& m, const MechanismSpace& s,
                                            RunOptions opts = {});
// R' qualifies when each R'_i keeps the order of R_i on O and finds
// acceptable only objects acceptable under R_i. An agent whose acceptable set
// shrinks must hold an object under φ(R,q) that stays acceptable under R'_i.
MechanismReport check_truncation_invariance(const Mechanism& m, const MechanismSpace& s,
                                            RunOptions opts = {});
MechanismReport check_strategy_proofness(const Mechanism& m, const MechanismSpace& s,
                                         RunOptions opts = {});
MechanismReport check_isd(const Mechanism& m, const MechanismSpace& s, RunOptions opts = {});
// Only capacity profiles where every object other than x has capacity zero.
MechanismReport check_weak_isd(const Mechanism& m, const MechanismSpace& s,
                               RunOptions opts = {});

MechanismReport check(MechanismProperty p, const Mechanism& m, const MechanismSpace& s,
                      RunOptions opts = {});

// Re-evaluates the mechanism on the witness problems and confirms the
// violation.
bool witness_replays(const Mechanism& m, MechanismProperty p, const MechanismWitness& w);

struct ImpossibilityWitness {
  Alternative i = -1;
  Alternative j = -1;
  Object a = kNull;
  Object b = kNull;
  PreferenceProfile r;
  PreferenceProfile r_prime;
  CapacityProfile q;
  // q + 1_a.
  CapacityProfile q_prime;

  // The pair ((R,q), (R',q)) with object a, as an ISD violation.
  MechanismWitness as_isd_witness() const;
};

// Throws Error unless there are at least two agents and three objects and
// every rule satisfies capacity-filling, gross substitutes and monotonicity.
ImpossibilityWitness find_impossibility_witness(const ChoiceStructure& cs);

// C_x(S,l) = {i in S : m_i(R_S^x, l_x) = x}, where R_S^x puts x then the
// null object first for members of S and the null object first otherwise.
ChoiceStructure recover_choice_structure(const Mechanism& m, const Universe& agents,
                                         const ObjectSpace& objects, RunOptions opts = {});

}  // namespace lexchoice

#endif  // LEXCHOICE_MECHANISM_H_
