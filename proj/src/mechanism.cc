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

#include "lexchoice/mechanism.h"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lexchoice {
namespace {

constexpr std::string_view kNullName = "∅";

std::string null_free_name_error(const std::string& name) {
  return "object name '" + name + "' is reserved for the null object";
}

}  // namespace

ObjectSpace::ObjectSpace(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error("an object space needs at least one object");
  std::set<std::string> seen;
  for (const std::string& name : names_) {
    if (name == kNullName || name == "null") throw Error(null_free_name_error(name));
    if (name.empty()) throw Error("object names must be nonempty");
    if (!seen.insert(name).second) throw Error("duplicate object name '" + name + "'");
  }
}

std::string ObjectSpace::name(Object x) const {
  if (x == kNull) return std::string(kNullName);
  return names_.at(x);
}

Object ObjectSpace::index_of(std::string_view name) const {
  if (name == kNullName || name == "null") return kNull;
  for (int x = 0; x < size(); ++x) {
    if (names_[x] == name) return x;
  }
  throw Error("unknown object '" + std::string(name) + "'");
}

PreferenceRelation::PreferenceRelation(int objects, std::vector<Object> order)
    : order_(std::move(order)), rank_(static_cast<std::size_t>(objects) + 1, -1) {
  if (objects < 1) throw Error("a preference relation needs at least one object");
  if (static_cast<int>(order_.size()) != objects + 1) {
    throw Error("a preference relation must rank every object and the null object");
  }
  for (int pos = 0; pos <= objects; ++pos) {
    const Object x = order_[pos];
    if (x < kNull || x >= objects || rank_[x + 1] != -1) {
      throw Error("a preference relation must be a permutation of the objects and ∅");
    }
    rank_[x + 1] = pos;
  }
}

PreferenceRelation PreferenceRelation::Completed(int objects, const std::vector<Object>& head) {
  std::vector<Object> order = head;
  std::vector<bool> used(static_cast<std::size_t>(objects) + 1, false);
  for (Object x : head) {
    if (x < kNull || x >= objects) throw Error("object index out of range");
    used[x + 1] = true;
  }
  if (!used[0]) order.push_back(kNull);
  for (Object x = 0; x < objects; ++x) {
    if (!used[x + 1]) order.push_back(x);
  }
  return PreferenceRelation(objects, std::move(order));
}

std::vector<PreferenceRelation> all_relations(int objects) {
  std::vector<Object> order(static_cast<std::size_t>(objects) + 1);
  std::iota(order.begin(), order.end(), kNull);
  std::vector<PreferenceRelation> out;
  do {
    out.emplace_back(objects, order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

ChoiceSet Allocation::holders(Object x) const {
  ChoiceSet out;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == x) out = out.with(static_cast<Alternative>(i));
  }
  return out;
}

CapacityProfile with_extra_unit(CapacityProfile q, Object x) {
  q.at(x) += 1;
  return q;
}

bool feasible(const Allocation& a, const CapacityProfile& q) {
  for (std::size_t x = 0; x < q.size(); ++x) {
    if (a.holders(static_cast<Object>(x)).size() > q[x]) return false;
  }
  for (Object x : a.assignment) {
    if (x < kNull || x >= static_cast<Object>(q.size())) return false;
  }
  return true;
}

ChoiceStructure::ChoiceStructure(Universe agents, ObjectSpace objects,
                                 std::vector<ChoiceTable> rules)
    : agents_(std::move(agents)), objects_(std::move(objects)), rules_(std::move(rules)) {
  if (static_cast<int>(rules_.size()) != objects_.size()) {
    throw Error("a choice structure needs exactly one rule per object");
  }
  for (int x = 0; x < objects_.size(); ++x) {
    if (!(rules_[x].universe() == agents_)) {
      throw Error("the rule of object '" + objects_.name(x) + "' is not over the agents");
    }
  }
}

ChoiceStructure ChoiceStructure::FromRules(Universe agents, ObjectSpace objects,
                                           const std::vector<ChoiceRule>& rules) {
  std::vector<ChoiceTable> tables;
  for (const ChoiceRule& rule : rules) tables.push_back(materialize(rule, agents));
  return ChoiceStructure(std::move(agents), std::move(objects), std::move(tables));
}

ChoiceStructure ChoiceStructure::Uniform(Universe agents, ObjectSpace objects,
                                         const ChoiceRule& rule) {
  const ChoiceTable table = materialize(rule, agents);
  std::vector<ChoiceTable> tables(static_cast<std::size_t>(objects.size()), table);
  return ChoiceStructure(std::move(agents), std::move(objects), std::move(tables));
}

void validate_problem(const AllocationProblem& p, int agents, int objects) {
  if (static_cast<int>(p.preferences.size()) != agents) {
    throw Error("expected " + std::to_string(agents) + " preference relations, got " +
                std::to_string(p.preferences.size()));
  }
  for (const PreferenceRelation& r : p.preferences) {
    if (r.objects() != objects) throw Error("preference relation over the wrong objects");
  }
  if (static_cast<int>(p.capacities.size()) != objects) {
    throw Error("expected " + std::to_string(objects) + " capacities, got " +
                std::to_string(p.capacities.size()));
  }
  for (Capacity q : p.capacities) {
    if (q < 0 || q > agents) {
      throw Error("capacity " + std::to_string(q) + " outside 0.." + std::to_string(agents));
    }
  }
}

Allocation da_allocate(const ChoiceStructure& cs, const AllocationProblem& prob,
                       DaTrace* trace) {
  const int n = cs.agent_count();
  const int m = cs.object_count();
  validate_problem(prob, n, m);
  const int max_rounds = n * m + 1;

  std::vector<int> pointer(static_cast<std::size_t>(n), 0);
  std::vector<ChoiceSet> held(static_cast<std::size_t>(m));
  ChoiceSet unassigned;
  ChoiceSet proposing = ChoiceSet::Full(n);
  for (int round = 1; !proposing.empty(); ++round) {
    if (round > max_rounds) {
      throw Error("deferred acceptance exceeded " + std::to_string(max_rounds) + " rounds");
    }
    std::vector<ChoiceSet> applicants = held;
    for (Alternative i : proposing) {
      const Object x = prob.preferences[i].order()[pointer[i]];
      if (x == kNull) {
        unassigned = unassigned.with(i);
      } else {
        applicants[x] = applicants[x].with(i);
      }
    }
    ChoiceSet rejected;
    for (Object x = 0; x < m; ++x) {
      const Capacity q = prob.capacities[x];
      held[x] = (q == 0 || applicants[x].empty()) ? ChoiceSet()
                                                  : cs.rule(x)(applicants[x], q);
      rejected |= applicants[x] - held[x];
    }
    if (trace != nullptr) {
      trace->rounds.push_back(DaRound{applicants, held, unassigned, pointer});
    }
    for (Alternative i : rejected) ++pointer[i];
    proposing = rejected;
  }

  Allocation out{std::vector<Object>(static_cast<std::size_t>(n), kNull)};
  for (Object x = 0; x < m; ++x) {
    for (Alternative i : held[x]) out.assignment[i] = x;
  }
  return out;
}

ChoiceSet demand(const Allocation& a, const PreferenceProfile& r, Object x) {
  if (a.size() != r.size()) throw Error("allocation and profile cover different agents");
  ChoiceSet out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].prefers(x, a[i])) out = out.with(static_cast<Alternative>(i));
  }
  return out;
}

Mechanism deferred_acceptance(ChoiceStructure cs) {
  return [cs = std::move(cs)](const AllocationProblem& p) { return da_allocate(cs, p); };
}

Mechanism boston_immediate_acceptance(ChoiceStructure cs) {
  return [cs = std::move(cs)](const AllocationProblem& p) {
    const int n = cs.agent_count();
    const int m = cs.object_count();
    validate_problem(p, n, m);
    Allocation out{std::vector<Object>(static_cast<std::size_t>(n), kNull)};
    CapacityProfile seats = p.capacities;
    ChoiceSet waiting = ChoiceSet::Full(n);
    for (int rank = 0; rank <= m && !waiting.empty(); ++rank) {
      std::vector<ChoiceSet> applicants(static_cast<std::size_t>(m));
      for (Alternative i : waiting) {
        const Object x = p.preferences[i].order()[rank];
        if (x == kNull) {
          waiting = waiting.without(i);
        } else {
          applicants[x] = applicants[x].with(i);
        }
      }
      for (Object x = 0; x < m; ++x) {
        if (applicants[x].empty() || seats[x] == 0) continue;
        const ChoiceSet admitted = cs.rule(x)(applicants[x], seats[x]);
        seats[x] -= admitted.size();
        for (Alternative i : admitted) out.assignment[i] = x;
        waiting -= admitted;
      }
    }
    return out;
  };
}

namespace {

std::vector<CapacityProfile> all_capacities(int agents, int objects) {
  std::vector<CapacityProfile> out;
  CapacityProfile q(static_cast<std::size_t>(objects), 0);
  while (true) {
    out.push_back(q);
    int k = 0;
    while (k < objects && q[k] == agents) q[k++] = 0;
    if (k == objects) break;
    ++q[k];
  }
  return out;
}

std::vector<PreferenceProfile> all_profiles(int agents, int objects) {
  const std::vector<PreferenceRelation> relations = all_relations(objects);
  std::vector<std::size_t> digits(static_cast<std::size_t>(agents), 0);
  std::vector<PreferenceProfile> out;
  while (true) {
    PreferenceProfile profile;
    for (std::size_t d : digits) profile.push_back(relations[d]);
    out.push_back(std::move(profile));
    int k = agents - 1;
    while (k >= 0 && digits[k] + 1 == relations.size()) digits[k--] = 0;
    if (k < 0) break;
    ++digits[k];
  }
  return out;
}

void check_space_shape(int agents, int objects) {
  if (agents < 1 || agents > kMaxAlternatives) throw Error("agent count out of range");
  if (objects < 1) throw Error("a mechanism space needs at least one object");
}

}  // namespace

MechanismSpace exhaustive_space(int agents, int objects) {
  check_space_shape(agents, objects);
  MechanismSpace s;
  s.agents = agents;
  s.objects = objects;
  s.profiles = all_profiles(agents, objects);
  s.capacities = all_capacities(agents, objects);
  s.exhaustive = true;
  s.description = "exhaustive |N|=" + std::to_string(agents) + " |O|=" + std::to_string(objects);
  return s;
}

MechanismSpace single_object_space(int agents, int objects) {
  check_space_shape(agents, objects);
  MechanismSpace s;
  s.agents = agents;
  s.objects = objects;
  s.profiles = all_profiles(agents, objects);
  s.capacities.push_back(CapacityProfile(static_cast<std::size_t>(objects), 0));
  for (Object x = 0; x < objects; ++x) {
    for (Capacity l = 1; l <= agents; ++l) {
      CapacityProfile q(static_cast<std::size_t>(objects), 0);
      q[x] = l;
      s.capacities.push_back(std::move(q));
    }
  }
  s.exhaustive = true;
  s.description =
      "single-object |N|=" + std::to_string(agents) + " |O|=" + std::to_string(objects);
  return s;
}

MechanismSpace sampled_space(int agents, int objects, std::size_t profile_count,
                             std::uint64_t seed) {
  check_space_shape(agents, objects);
  constexpr std::size_t kCapacitySamples = 256;
  std::mt19937_64 rng(seed);
  const std::vector<PreferenceRelation> relations = all_relations(objects);
  MechanismSpace s;
  s.agents = agents;
  s.objects = objects;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t k = 0; k < profile_count; ++k) {
    std::vector<std::size_t> digits;
    for (int i = 0; i < agents; ++i) digits.push_back(rng() % relations.size());
    if (!seen.insert(digits).second) continue;
    PreferenceProfile profile;
    for (std::size_t d : digits) profile.push_back(relations[d]);
    s.profiles.push_back(std::move(profile));
  }
  double total = 1;
  for (int x = 0; x < objects; ++x) total *= agents + 1;
  if (total <= kCapacitySamples) {
    s.capacities = all_capacities(agents, objects);
  } else {
    std::set<CapacityProfile> caps;
    for (std::size_t k = 0; k < kCapacitySamples; ++k) {
      CapacityProfile q;
      for (int x = 0; x < objects; ++x) {
        q.push_back(static_cast<Capacity>(rng() % static_cast<std::uint64_t>(agents + 1)));
      }
      caps.insert(std::move(q));
    }
    s.capacities.assign(caps.begin(), caps.end());
  }
  s.description = "sampled |N|=" + std::to_string(agents) + " |O|=" + std::to_string(objects) +
                  " profiles=" + std::to_string(s.profiles.size()) +
                  " seed=" + std::to_string(seed);
  return s;
}

std::string_view property_name(MechanismProperty p) {
  switch (p) {
    case MechanismProperty::kUnavailableTypeInvariance:
      return "unavailable_type_invariance";
    case MechanismProperty::kWeakNonWastefulness:
      return "weak_non_wastefulness";
    case MechanismProperty::kResourceMonotonicity:
      return "resource_monotonicity";
    case MechanismProperty::kTruncationInvariance:
      return "truncation_invariance";
    case MechanismProperty::kStrategyProofness:
      return "strategy_proofness";
    case MechanismProperty::kIrrelevanceOfSatisfiedDemand:
      return "isd";
    case MechanismProperty::kWeakIrrelevanceOfSatisfiedDemand:
      return "weak_isd";
  }
  return "unknown";
}

std::optional<MechanismProperty> property_from_name(std::string_view name) {
  for (MechanismProperty p :
       {MechanismProperty::kUnavailableTypeInvariance, MechanismProperty::kWeakNonWastefulness,
        MechanismProperty::kResourceMonotonicity, MechanismProperty::kTruncationInvariance,
        MechanismProperty::kStrategyProofness, MechanismProperty::kIrrelevanceOfSatisfiedDemand,
        MechanismProperty::kWeakIrrelevanceOfSatisfiedDemand}) {
    if (property_name(p) == name) return p;
  }
  return std::nullopt;
}

namespace {

// Order of each agent's ranking restricted to `kept` (indexed by object + 1).
std::vector<Object> restriction_key(const PreferenceProfile& r, const std::vector<bool>& kept) {
  std::vector<Object> key;
  for (const PreferenceRelation& rel : r) {
    for (Object x : rel.order()) {
      if (kept[x + 1]) key.push_back(x);
    }
    key.push_back(-2);
  }
  return key;
}

std::vector<bool> available_with_null(const CapacityProfile& q) {
  std::vector<bool> kept(q.size() + 1, false);
  kept[0] = true;
  for (std::size_t x = 0; x < q.size(); ++x) kept[x + 1] = q[x] > 0;
  return kept;
}

std::vector<bool> objects_only(int objects) {
  std::vector<bool> kept(static_cast<std::size_t>(objects) + 1, true);
  kept[0] = false;
  return kept;
}

bool dominated(const CapacityProfile& q, const CapacityProfile& q2) {
  for (std::size_t x = 0; x < q.size(); ++x) {
    if (q[x] > q2[x]) return false;
  }
  return true;
}

bool single_available(const CapacityProfile& q, Object x) {
  for (std::size_t y = 0; y < q.size(); ++y) {
    if (static_cast<Object>(y) != x && q[y] != 0) return false;
  }
  return true;
}

// Allocations of every (profile, capacity profile) pair in a space, with
// on-demand evaluation for problems outside it.
class Evaluations {
 public:
  Evaluations(const Mechanism& m, const MechanismSpace& s, RunOptions opts)
      : m_(m), s_(s), q_count_(s.capacities.size()) {
    if (s.profiles.empty() || s.capacities.empty()) throw Error("empty mechanism space");
    for (std::size_t k = 0; k < s.profiles.size(); ++k) profile_index_.emplace(s.profiles[k], k);
    for (std::size_t k = 0; k < s.capacities.size(); ++k) {
      capacity_index_.emplace(s.capacities[k], k);
    }
    allocations_.resize(s.profiles.size() * q_count_);
    parallel_for(allocations_.size(), opts, [&](std::size_t k) {
      allocations_[k] = m_({s_.profiles[k / q_count_], s_.capacities[k % q_count_]});
    });
  }

  const Allocation& at(std::size_t pi, std::size_t qi) const {
    return allocations_[pi * q_count_ + qi];
  }

  Allocation get(const PreferenceProfile& r, const CapacityProfile& q) const {
    auto p = profile_index_.find(r);
    auto c = capacity_index_.find(q);
    if (p != profile_index_.end() && c != capacity_index_.end()) return at(p->second, c->second);
    return m_({r, q});
  }

 private:
  const Mechanism& m_;
  const MechanismSpace& s_;
  std::size_t q_count_;
  std::map<PreferenceProfile, std::size_t> profile_index_;
  std::map<CapacityProfile, std::size_t> capacity_index_;
  std::vector<Allocation> allocations_;
};

}  // namespace

namespace {

struct Hit {
  std::optional<MechanismWitness> witness;
  std::size_t cases = 0;
};

// Runs fn over [0, outer) and keeps the violation with the lowest outer
// index. Cases are counted up to and including that index, so the report
// does not depend on the worker count.
template <typename Fn>
MechanismReport scan(MechanismProperty property, std::size_t outer, RunOptions opts, Fn&& fn) {
  std::vector<Hit> hits(outer);
  parallel_for(outer, opts, [&](std::size_t k) { hits[k] = fn(k); });
  MechanismReport report{property, true, std::nullopt, 0};
  for (Hit& h : hits) {
    report.cases_checked += h.cases;
    if (h.witness) {
      report.passed = false;
      report.witness = std::move(h.witness);
      break;
    }
  }
  return report;
}

void check_space(const MechanismSpace& s) {
  for (const PreferenceProfile& r : s.profiles) {
    validate_problem({r, CapacityProfile(static_cast<std::size_t>(s.objects), 0)}, s.agents,
                     s.objects);
  }
  for (const CapacityProfile& q : s.capacities) {
    validate_problem({s.profiles.front(), q}, s.agents, s.objects);
  }
}

MechanismReport check_isd_impl(MechanismProperty property, const Mechanism& m,
                               const MechanismSpace& s, RunOptions opts) {
  check_space(s);
  const Evaluations ev(m, s, opts);
  const std::size_t objects = static_cast<std::size_t>(s.objects);
  const bool weak = property == MechanismProperty::kWeakIrrelevanceOfSatisfiedDemand;
  return scan(property, s.capacities.size() * objects, opts, [&](std::size_t k) {
    Hit hit;
    const CapacityProfile& q = s.capacities[k / objects];
    const Object x = static_cast<Object>(k % objects);
    if (q[x] >= s.agents || (weak && !single_available(q, x))) return hit;
    const CapacityProfile q_up = with_extra_unit(q, x);
    // Demand before the increase -> (first profile, demand after).
    std::map<ChoiceSet, std::pair<std::size_t, ChoiceSet>> first;
    for (std::size_t pi = 0; pi < s.profiles.size(); ++pi) {
      const PreferenceProfile& r = s.profiles[pi];
      const ChoiceSet before = demand(ev.at(pi, k / objects), r, x);
      const ChoiceSet after = demand(ev.get(r, q_up), r, x);
      auto [it, inserted] = first.try_emplace(before, pi, after);
      if (inserted) continue;
      ++hit.cases;
      if (it->second.second != after) {
        hit.witness = MechanismWitness{{{s.profiles[it->second.first], q}, {r, q}}, -1, x};
        return hit;
      }
    }
    return hit;
  });
}

}  // namespace

MechanismReport check_unavailable_type_invariance(const Mechanism& m, const MechanismSpace& s,
                                                  RunOptions opts) {
  check_space(s);
  const Evaluations ev(m, s, opts);
  return scan(MechanismProperty::kUnavailableTypeInvariance, s.capacities.size(), opts,
              [&](std::size_t qi) {
                Hit hit;
                const CapacityProfile& q = s.capacities[qi];
                const std::vector<bool> kept = available_with_null(q);
                std::map<std::vector<Object>, std::size_t> first;
                for (std::size_t pi = 0; pi < s.profiles.size(); ++pi) {
                  auto [it, inserted] =
                      first.try_emplace(restriction_key(s.profiles[pi], kept), pi);
                  if (inserted) continue;
                  ++hit.cases;
                  if (!(ev.at(it->second, qi) == ev.at(pi, qi))) {
                    hit.witness = MechanismWitness{
                        {{s.profiles[it->second], q}, {s.profiles[pi], q}}, -1, kNull};
                    return hit;
                  }
                }
                return hit;
              });
}

MechanismReport check_weak_non_wastefulness(const Mechanism& m, const MechanismSpace& s,
                                            RunOptions opts) {
  check_space(s);
  const Evaluations ev(m, s, opts);
  const std::size_t qn = s.capacities.size();
  return scan(MechanismProperty::kWeakNonWastefulness, s.profiles.size() * qn, opts,
              [&](std::size_t k) {
                Hit hit;
                const PreferenceProfile& r = s.profiles[k / qn];
                const CapacityProfile& q = s.capacities[k % qn];
                const Allocation& a = ev.at(k / qn, k % qn);
                for (Alternative i = 0; i < s.agents; ++i) {
                  if (a[i] != kNull) continue;
                  for (Object x = 0; x < s.objects; ++x) {
                    if (q[x] == 0 || !r[i].acceptable(x)) continue;
                    ++hit.cases;
                    if (a.holders(x).size() != q[x]) {
                      hit.witness = MechanismWitness{{{r, q}}, i, x};
                      return hit;
                    }
                  }
                }
                return hit;
              });
}

MechanismReport check_resource_monotonicity(const Mechanism& m, const MechanismSpace& s,
                                            RunOptions opts) {
  check_space(s);
  const Evaluations ev(m, s, opts);
  return scan(MechanismProperty::kResourceMonotonicity, s.profiles.size(), opts,
              [&](std::size_t pi) {
                Hit hit;
                const PreferenceProfile& r = s.profiles[pi];
                for (std::size_t qi = 0; qi < s.capacities.size(); ++qi) {
                  for (std::size_t qj = 0; qj < s.capacities.size(); ++qj) {
                    if (qi == qj || !dominated(s.capacities[qi], s.capacities[qj])) continue;
                    const Allocation& low = ev.at(pi, qi);
                    const Allocation& high = ev.at(pi, qj);
                    for (Alternative i = 0; i < s.agents; ++i) {
                      ++hit.cases;
                      if (r[i].prefers(low[i], high[i])) {
                        hit.witness = MechanismWitness{
                            {{r, s.capacities[qi]}, {r, s.capacities[qj]}}, i, kNull};
                        return hit;
                      }
                    }
                  }
                }
                return hit;
              });
}

namespace {

// R'_i finds acceptable only objects acceptable under R_i. A strict shrink
// additionally needs `held` to be an object still acceptable under R'_i.
bool truncates(const PreferenceRelation& r, const PreferenceRelation& r2, Object held,
               int objects) {
  bool same = true;
  for (Object x = 0; x < objects; ++x) {
    if (r2.acceptable(x) && !r.acceptable(x)) return false;
    same = same && r2.acceptable(x) == r.acceptable(x);
  }
  return same || (held != kNull && r2.acceptable(held));
}

}  // namespace

MechanismReport check_truncation_invariance(const Mechanism& m, const MechanismSpace& s,
                                            RunOptions opts) {
  check_space(s);
  const Evaluations ev(m, s, opts);
  const std::vector<bool> kept = objects_only(s.objects);
  // Profiles grouped by their rankings of the objects alone.
  std::map<std::vector<Object>, std::vector<std::size_t>> groups;
  std::vector<const std::vector<std::size_t>*> group_of(s.profiles.size());
  for (std::size_t pi = 0; pi < s.profiles.size(); ++pi) {
    groups[restriction_key(s.profiles[pi], kept)].push_back(pi);
  }
  for (const auto& [key, members] : groups) {
    for (std::size_t pi : members) group_of[pi] = &members;
  }
  const std::size_t qn = s.capacities.size();
  return scan(MechanismProperty::kTruncationInvariance, s.profiles.size() * qn, opts,
              [&](std::size_t k) {
                Hit hit;
                const std::size_t pi = k / qn;
                const std::size_t qi = k % qn;
                const Allocation& a = ev.at(pi, qi);
                const PreferenceProfile& r = s.profiles[pi];
                for (std::size_t pj : *group_of[pi]) {
                  if (pj == pi) continue;
                  const PreferenceProfile& r2 = s.profiles[pj];
                  bool applies = true;
                  for (Alternative i = 0; i < s.agents && applies; ++i) {
                    applies = truncates(r[i], r2[i], a[i], s.objects);
                  }
                  if (!applies) continue;
                  ++hit.cases;
                  if (!(ev.at(pj, qi) == a)) {
                    hit.witness = MechanismWitness{
                        {{s.profiles[pi], s.capacities[qi]}, {r2, s.capacities[qi]}}, -1, kNull};
                    return hit;
                  }
                }
                return hit;
              });
}

MechanismReport check_strategy_proofness(const Mechanism& m, const MechanismSpace& s,
                                         RunOptions opts) {
  check_space(s);
  const Evaluations ev(m, s, opts);
  const std::vector<PreferenceRelation> deviations = all_relations(s.objects);
  const std::size_t qn = s.capacities.size();
  return scan(MechanismProperty::kStrategyProofness, s.profiles.size() * qn, opts,
              [&](std::size_t k) {
                Hit hit;
                const PreferenceProfile& r = s.profiles[k / qn];
                const CapacityProfile& q = s.capacities[k % qn];
                const Allocation& truthful = ev.at(k / qn, k % qn);
                for (Alternative i = 0; i < s.agents; ++i) {
                  for (const PreferenceRelation& d : deviations) {
                    if (d == r[i]) continue;
                    PreferenceProfile misreport = r;
                    misreport[i] = d;
                    ++hit.cases;
                    const Allocation lie = ev.get(misreport, q);
                    if (r[i].prefers(lie[i], truthful[i])) {
                      hit.witness = MechanismWitness{{{r, q}, {std::move(misreport), q}}, i, kNull};
                      return hit;
                    }
                  }
                }
                return hit;
              });
}

MechanismReport check_isd(const Mechanism& m, const MechanismSpace& s, RunOptions opts) {
  return check_isd_impl(MechanismProperty::kIrrelevanceOfSatisfiedDemand, m, s, opts);
}

MechanismReport check_weak_isd(const Mechanism& m, const MechanismSpace& s, RunOptions opts) {
  return check_isd_impl(MechanismProperty::kWeakIrrelevanceOfSatisfiedDemand, m, s, opts);
}

MechanismReport check(MechanismProperty p, const Mechanism& m, const MechanismSpace& s,
                      RunOptions opts) {
  switch (p) {
    case MechanismProperty::kUnavailableTypeInvariance:
      return check_unavailable_type_invariance(m, s, opts);
    case MechanismProperty::kWeakNonWastefulness:
      return check_weak_non_wastefulness(m, s, opts);
    case MechanismProperty::kResourceMonotonicity:
      return check_resource_monotonicity(m, s, opts);
    case MechanismProperty::kTruncationInvariance:
      return check_truncation_invariance(m, s, opts);
    case MechanismProperty::kStrategyProofness:
      return check_strategy_proofness(m, s, opts);
    case MechanismProperty::kIrrelevanceOfSatisfiedDemand:
      return check_isd(m, s, opts);
    case MechanismProperty::kWeakIrrelevanceOfSatisfiedDemand:
      return check_weak_isd(m, s, opts);
  }
  throw Error("unknown mechanism property");
}

namespace {

bool replays(const Mechanism& m, MechanismProperty p, const MechanismWitness& w) {
  const auto& ps = w.problems;
  const int agents = ps.empty() ? 0 : static_cast<int>(ps[0].preferences.size());
  const int objects = ps.empty() ? 0 : static_cast<int>(ps[0].capacities.size());
  for (const AllocationProblem& prob : ps) validate_problem(prob, agents, objects);
  const bool pair = ps.size() == 2;
  const bool same_q = pair && ps[0].capacities == ps[1].capacities;
  const bool agent_ok = w.agent >= 0 && w.agent < agents;
  const bool object_ok = w.object >= 0 && w.object < objects;

  switch (p) {
    case MechanismProperty::kUnavailableTypeInvariance: {
      if (!same_q) return false;
      const std::vector<bool> kept = available_with_null(ps[0].capacities);
      return restriction_key(ps[0].preferences, kept) == restriction_key(ps[1].preferences, kept) &&
             !(m(ps[0]) == m(ps[1]));
    }
    case MechanismProperty::kWeakNonWastefulness: {
      if (ps.size() != 1 || !agent_ok || !object_ok) return false;
      const Allocation a = m(ps[0]);
      return a[w.agent] == kNull && ps[0].capacities[w.object] > 0 &&
             ps[0].preferences[w.agent].acceptable(w.object) &&
             a.holders(w.object).size() < ps[0].capacities[w.object];
    }
    case MechanismProperty::kResourceMonotonicity: {
      if (!pair || !agent_ok || !(ps[0].preferences == ps[1].preferences) ||
          !dominated(ps[0].capacities, ps[1].capacities)) {
        return false;
      }
      return ps[0].preferences[w.agent].prefers(m(ps[0])[w.agent], m(ps[1])[w.agent]);
    }
    case MechanismProperty::kTruncationInvariance: {
      if (!same_q) return false;
      const std::vector<bool> kept = objects_only(objects);
      if (restriction_key(ps[0].preferences, kept) != restriction_key(ps[1].preferences, kept)) {
        return false;
      }
      const Allocation a = m(ps[0]);
      for (Alternative i = 0; i < agents; ++i) {
        if (!truncates(ps[0].preferences[i], ps[1].preferences[i], a[i], objects)) return false;
      }
      return !(a == m(ps[1]));
    }
    case MechanismProperty::kStrategyProofness: {
      if (!same_q || !agent_ok) return false;
      for (Alternative i = 0; i < agents; ++i) {
        if (i != w.agent && !(ps[0].preferences[i] == ps[1].preferences[i])) return false;
      }
      return ps[0].preferences[w.agent].prefers(m(ps[1])[w.agent], m(ps[0])[w.agent]);
    }
    case MechanismProperty::kIrrelevanceOfSatisfiedDemand:
    case MechanismProperty::kWeakIrrelevanceOfSatisfiedDemand: {
      if (!same_q || !object_ok || ps[0].capacities[w.object] >= agents) return false;
      if (p == MechanismProperty::kWeakIrrelevanceOfSatisfiedDemand &&
          !single_available(ps[0].capacities, w.object)) {
        return false;
      }
      const CapacityProfile up = with_extra_unit(ps[0].capacities, w.object);
      const auto& r0 = ps[0].preferences;
      const auto& r1 = ps[1].preferences;
      return demand(m(ps[0]), r0, w.object) == demand(m(ps[1]), r1, w.object) &&
             demand(m({r0, up}), r0, w.object) != demand(m({r1, up}), r1, w.object);
    }
  }
  return false;
}

}  // namespace

bool witness_replays(const Mechanism& m, MechanismProperty p, const MechanismWitness& w) {
  try {
    return replays(m, p, w);
  } catch (const Error&) {
    return false;
  }
}

MechanismWitness ImpossibilityWitness::as_isd_witness() const {
  return MechanismWitness{{{r, q}, {r_prime, q}}, -1, a};
}

ImpossibilityWitness find_impossibility_witness(const ChoiceStructure& cs) {
  const int n = cs.agent_count();
  const int m = cs.object_count();
  if (m < 3) throw Error("the impossibility construction needs at least three objects");
  if (n < 2) throw Error("the impossibility construction needs at least two agents");
  for (Object x = 0; x < m; ++x) {
    for (auto checker : {check_capacity_filling, check_gross_substitutes, check_monotonicity}) {
      const AxiomReport report = checker(cs.rule(x));
      if (!report.passed) {
        throw Error("the rule of object '" + cs.objects().name(x) + "' violates " +
                    std::string(axiom_name(report.axiom)));
      }
    }
  }

  ImpossibilityWitness w;
  const ChoiceSet pair = ChoiceSet::Of(0).with(1);
  std::array<Alternative, 3> winner{};
  for (Object x = 0; x < 3; ++x) winner[x] = cs.rule(x)(pair, 1).first();
  constexpr std::array<std::pair<Object, Object>, 3> kPairs = {{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [a, b] : kPairs) {
    if (winner[a] == winner[b]) {
      w.a = a;
      w.b = b;
      w.i = winner[a];
      w.j = 1 - w.i;
      break;
    }
  }

  const PreferenceRelation outside = PreferenceRelation::Completed(m, {});
  w.r.assign(static_cast<std::size_t>(n), outside);
  w.r_prime = w.r;
  w.r[w.i] = PreferenceRelation::Completed(m, {w.a, w.b});
  w.r[w.j] = PreferenceRelation::Completed(m, {w.b, w.a});
  w.r_prime[w.i] = PreferenceRelation::Completed(m, {w.a, w.b});
  w.r_prime[w.j] = PreferenceRelation::Completed(m, {w.a, w.b});
  w.q.assign(static_cast<std::size_t>(m), 0);
  w.q[w.b] = 1;
  w.q_prime = with_extra_unit(w.q, w.a);
  return w;
}

ChoiceStructure recover_choice_structure(const Mechanism& m, const Universe& agents,
                                         const ObjectSpace& objects, RunOptions opts) {
  const int n = agents.size();
  const int k = objects.size();
  const PreferenceRelation outside = PreferenceRelation::Completed(k, {});
  std::vector<ChoiceTable> tables;
  for (Object x = 0; x < k; ++x) {
    const PreferenceRelation top_x = PreferenceRelation::Completed(k, {x});
    tables.push_back(ChoiceTable::Tabulate(
        agents,
        [&](const Problem& p) {
          PreferenceProfile r(static_cast<std::size_t>(n), outside);
          for (Alternative i : p.set) r[i] = top_x;
          CapacityProfile q(static_cast<std::size_t>(k), 0);
          q[x] = p.capacity;
          return m({std::move(r), std::move(q)}).holders(x) & p.set;
        },
        opts));
  }
  return ChoiceStructure(agents, objects, std::move(tables));
}

}  // namespace lexchoice
