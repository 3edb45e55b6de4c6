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

#include "lexchoice/cli/repro.h"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lexchoice/axioms.h"
#include "lexchoice/cli/fixtures.h"
#include "lexchoice/mechanism.h"

namespace lexchoice::cli {
namespace {

// Sorted label array from single-character labels.
Json labels(std::string chars) {
  std::sort(chars.begin(), chars.end());
  Json out = Json::array();
  for (char c : chars) out.push_back(std::string(1, c));
  return out;
}

class Recorder {
 public:
  Recorder(ReproResult& result, RunOptions opts) : result_(result), opts_(opts) {}

  void expect(std::string claim, Json expected, Json actual) {
    result_.checks.push_back({std::move(claim), std::move(expected), std::move(actual)});
  }

  void chosen(const ChoiceTable& c, const std::string& s, Capacity q, const std::string& want) {
    const Universe& u = c.universe();
    expect("C({" + s + "}," + std::to_string(q) + ")", labels(want),
           set_json(u, c(set(u, s), q)));
  }

  void rejected_set(const ChoiceTable& c, const std::string& s, Capacity q,
                    const std::string& want) {
    const Universe& u = c.universe();
    expect("R({" + s + "}," + std::to_string(q) + ")", labels(want),
           set_json(u, rejected(c, {set(u, s), q})));
  }

  void newly(const ChoiceTable& c, const std::string& s, Capacity q, const std::string& want) {
    const Universe& u = c.universe();
    expect("C({" + s + "}," + std::to_string(q + 1) + ") ∩ R({" + s + "}," + std::to_string(q) +
               ")",
           labels(want), set_json(u, newly_accepted(c, set(u, s), q)));
  }

  void axioms(const ChoiceTable& c, const std::vector<std::pair<Axiom, bool>>& verdicts) {
    for (const auto& [axiom, holds] : verdicts) {
      expect(std::string(axiom_name(axiom)) + (holds ? " holds" : " fails"), holds,
             check(axiom, c, opts_).passed);
    }
  }

  // The stated pair (S,q), (S',q) is itself a violation of IAA.
  void iaa_pair(const ChoiceTable& c, const std::string& s, const std::string& s2, Capacity q) {
    const Universe& u = c.universe();
    const Witness w{{{set(u, s), q}, {set(u, s2), q}}, {}, 0};
    expect("({" + s + "}," + std::to_string(q) + ") and ({" + s2 + "}," + std::to_string(q) +
               ") violate iaa",
           true, witness_reproduces(c, Axiom::kIrrelevanceOfAcceptedAlternatives, w));
  }

  RunOptions opts() const { return opts_; }

 private:
  ReproResult& result_;
  RunOptions opts_;
};

constexpr Axiom kCf = Axiom::kCapacityFilling;
constexpr Axiom kGs = Axiom::kGrossSubstitutes;
constexpr Axiom kMon = Axiom::kMonotonicity;
constexpr Axiom kIaa = Axiom::kIrrelevanceOfAcceptedAlternatives;
constexpr Axiom kCwarp = Axiom::kCwarp;

void necessity_capacity_filling(Recorder& r) {
  const ChoiceTable c = cli::necessity_capacity_filling();
  r.axioms(c, {{kCf, false}, {kMon, true}, {kCwarp, true}, {kIaa, false}});
  r.rejected_set(c, "ac", 1, "c");
  r.rejected_set(c, "bc", 1, "c");
  r.newly(c, "ac", 1, "");
  r.newly(c, "bc", 1, "c");
  r.iaa_pair(c, "ac", "bc", 1);
}

void necessity_monotonicity(Recorder& r) {
  const ChoiceTable c = cli::necessity_monotonicity();
  r.axioms(c, {{kCf, true}, {kCwarp, true}, {kMon, false}, {kIaa, false}});
  const Universe& u = c.universe();
  const Alternative a = u.index_of("a");
  r.expect("a ∈ C({abc},1)", true, c(set(u, "abc"), 1).contains(a));
  r.expect("a ∉ C({abc},2)", false, c(set(u, "abc"), 2).contains(a));
  r.rejected_set(c, "acd", 1, "cd");
  r.rejected_set(c, "bcd", 1, "cd");
  r.newly(c, "acd", 1, "cd");
  r.newly(c, "bcd", 1, "c");
  r.iaa_pair(c, "acd", "bcd", 1);
}

void necessity_cwarp(Recorder& r) {
  const ChoiceTable c = cli::necessity_cwarp();
  r.axioms(c, {{kCf, true}, {kMon, true}, {kCwarp, false}, {kIaa, false}});
  r.rejected_set(c, "acd", 1, "cd");
  r.rejected_set(c, "bcd", 1, "cd");
  r.newly(c, "acd", 1, "c");
  r.newly(c, "bcd", 1, "d");
  r.iaa_pair(c, "acd", "bcd", 1);
}

void independence_capacity_filling(Recorder& r) {
  r.axioms(cli::independence_capacity_filling(),
           {{kCf, false}, {kGs, true}, {kMon, true}, {kIaa, true}, {kCwarp, true}});
}

void independence_gross_substitutes(Recorder& r) {
  const ChoiceTable c = cli::independence_gross_substitutes();
  r.axioms(c, {{kCf, true}, {kGs, false}, {kMon, true}, {kIaa, true}, {kCwarp, true}});
  r.chosen(c, "abc", 1, "a");
  r.chosen(c, "ab", 1, "b");
  const Universe& u = c.universe();
  const RevealedPreference rp = revealed_pref(c, 2);
  Json pairs = Json::array();
  for (Alternative a = 0; a < u.size(); ++a) {
    for (Alternative b : rp.successors(a)) pairs.push_back({u.label(a), u.label(b)});
  }
  r.expect("revealed preference at q=2", Json::array({Json::array({"b", "c"})}), pairs);
}

void independence_monotonicity(Recorder& r) {
  const ChoiceTable c = cli::independence_monotonicity();
  r.axioms(c, {{kCf, true}, {kGs, true}, {kMon, false}, {kIaa, true}, {kCwarp, true}});
  const Universe& u = c.universe();
  const Alternative a = u.index_of("a");
  r.expect("a ∈ C({abc},1)", true, c(set(u, "abc"), 1).contains(a));
  r.expect("a ∉ C({abc},2)", false, c(set(u, "abc"), 2).contains(a));
}

void independence_iaa(Recorder& r) {
  const BostonFixture f = walk_open_fixture();
  const ChoiceTable c = materialize(build_walk_open(f.walk, f.open, 5), f.universe, r.opts());
  r.axioms(c, {{kCf, true}, {kGs, true}, {kMon, true}, {kIaa, false}, {kCwarp, false}});
}

void walk_open_satisfied_demand(Recorder& r) {
  const ChoiceStructure cs = walk_open_structure();
  const Universe& agents = cs.agents();
  const Object x = cs.objects().index_of("x");
  const ChoiceTable& cx = cs.rule(x);
  r.chosen(cx, "acde", 2, "ae");
  r.chosen(cx, "abcd", 2, "ab");
  r.chosen(cx, "acde", 3, "ace");
  r.chosen(cx, "abcd", 3, "abd");
  const std::map<std::string, std::string> unwilling = {{"R", "b"}, {"R'", "e"}};
  const std::map<std::string, std::pair<std::string, std::string>> want = {
      {"R", {"cd", "d"}}, {"R'", {"cd", "c"}}};
  for (const auto& [name, agent] : unwilling) {
    for (Capacity q : {2, 3}) {
      const AllocationProblem p = walk_open_problem(cs, agent, q);
      const ChoiceSet d = demand(da_allocate(cs, p), p.preferences, x);
      r.expect("D_x(φ(" + name + ",q_x=" + std::to_string(q) + ")," + name + ")",
               labels(q == 2 ? want.at(name).first : want.at(name).second), set_json(agents, d));
    }
  }
  const MechanismWitness w{
      {walk_open_problem(cs, "b", 2), walk_open_problem(cs, "e", 2)}, -1, x};
  r.expect("(R,q) and (R',q) violate isd", true,
           witness_replays(deferred_acceptance(cs),
                           MechanismProperty::kIrrelevanceOfSatisfiedDemand, w));
}

void cwarp_two_cycle(Recorder& r) {
  const ChoiceTable c = cli::cwarp_two_cycle();
  r.axioms(c, {{kCf, true}, {kMon, true}, {kIaa, true}, {kCwarp, false}});
  r.chosen(c, "abcd", 1, "a");
  r.chosen(c, "abcd", 2, "ab");
  r.chosen(c, "abce", 1, "a");
  r.chosen(c, "abce", 2, "ac");
  const Universe& u = c.universe();
  const RevealedPreference rp = revealed_pref(c, 2);
  const Alternative b = u.index_of("b");
  const Alternative cc = u.index_of("c");
  r.expect("b revealed preferred to c at q=2", true, rp.prefers(b, cc));
  r.expect("c revealed preferred to b at q=2", true, rp.prefers(cc, b));
  const Witness w{{{set(u, "abcd"), 2}, {set(u, "abce"), 2}}, {b, cc}, 0};
  r.expect("({abcd},2) and ({abce},2) violate cwarp", true, witness_reproduces(c, kCwarp, w));
}

void boston_case(Recorder& r, const BostonFixture& f, CapacityWiseLists lists,
                 const std::string& s, const std::string& s2, Capacity q,
                 const std::string& before, const std::string& after1,
                 const std::string& after2) {
  const ChoiceTable c = materialize(lists, f.universe, r.opts());
  r.axioms(c, {{kCf, true}, {kGs, true}, {kMon, true}, {kIaa, false}});
  r.expect("insertion property holds", true, check_insertion(lists).passed);
  r.expect("Boston requirement holds", true, satisfies_boston_requirement(lists, f.walk, f.open));
  r.rejected_set(c, s, q, before);
  r.rejected_set(c, s2, q, before);
  r.rejected_set(c, s, q + 1, after1);
  r.rejected_set(c, s2, q + 1, after2);
  r.iaa_pair(c, s, s2, q);
}

void boston_walk_open(Recorder& r) {
  const BostonFixture f = walk_open_fixture();
  boston_case(r, f, build_walk_open(f.walk, f.open, 5), "acde", "abcd", 2, "cd", "d", "c");
}

void boston_open_walk(Recorder& r) {
  const BostonFixture f = open_walk_fixture();
  boston_case(r, f, build_open_walk(f.walk, f.open, 5), "acde", "abcd", 2, "cd", "d", "c");
}

void boston_compromise(Recorder& r) {
  const BostonFixture f = compromise_fixture();
  boston_case(r, f, build_compromise(f.walk, f.open, 6), "abcxy", "abdxy", 3, "xy", "y", "x");
}

void impossibility_witness_case(Recorder& r) {
  const ChoiceStructure cs = rotating_structure(3);
  const ImpossibilityWitness w = find_impossibility_witness(cs);
  const Universe& agents = cs.agents();
  const std::string i = agents.label(w.i);
  const std::string j = agents.label(w.j);
  const ChoiceSet pair = ChoiceSet::Of(w.i).with(w.j);
  r.expect("i ∈ C_a({i,j},1) ∩ C_b({i,j},1)", true,
           (cs.rule(w.a)(pair, 1) & cs.rule(w.b)(pair, 1)) == ChoiceSet::Of(w.i));
  r.expect("q_b = 1, other capacities 0", true,
           w.q[w.b] == 1 && std::count(w.q.begin(), w.q.end(), 0) == cs.object_count() - 1);
  r.expect("q' = q + 1_a", true, w.q_prime == with_extra_unit(w.q, w.a));
  auto d = [&](const PreferenceProfile& prefs, const CapacityProfile& q) {
    return set_json(agents, demand(da_allocate(cs, {prefs, q}), prefs, w.a));
  };
  r.expect("D_a(φ(R,q),R)", labels(i + j), d(w.r, w.q));
  r.expect("D_a(φ(R',q),R')", labels(i + j), d(w.r_prime, w.q));
  r.expect("D_a(φ(R,q'),R)", labels(""), d(w.r, w.q_prime));
  r.expect("D_a(φ(R',q'),R')", labels(j), d(w.r_prime, w.q_prime));
  r.expect("witness replays as an isd violation", true,
           witness_replays(deferred_acceptance(cs),
                           MechanismProperty::kIrrelevanceOfSatisfiedDemand,
                           w.as_isd_witness()));
}

struct CaseDef {
  const char* id;
  const char* title;
  void (*run)(Recorder&);
};

const std::vector<CaseDef>& cases() {
  static const std::vector<CaseDef> kCases = {
      {"necessity_capacity_filling", "capacity-filling is needed for CF+MON+CWARP => IAA", necessity_capacity_filling},
      {"necessity_monotonicity", "monotonicity is needed for CF+MON+CWARP => IAA", necessity_monotonicity},
      {"necessity_cwarp", "CWARP is needed for CF+MON+CWARP => IAA", necessity_cwarp},
      {"independence_capacity_filling", "violates only capacity-filling", independence_capacity_filling},
      {"independence_gross_substitutes", "violates only gross substitutes", independence_gross_substitutes},
      {"independence_monotonicity", "violates only monotonicity", independence_monotonicity},
      {"independence_iaa", "walk-open violates only IAA (and CWARP)", independence_iaa},
      {"walk_open_satisfied_demand",
       "walk-open deferred acceptance violates satisfied-demand irrelevance",
       walk_open_satisfied_demand},
      {"cwarp_two_cycle", "CF, MON and IAA without CWARP", cwarp_two_cycle},
      {"boston_walk_open", "walk-open rule violates IAA", boston_walk_open},
      {"boston_open_walk", "open-walk rule violates IAA", boston_open_walk},
      {"boston_compromise", "compromise rule violates IAA", boston_compromise},
      {"impossibility_witness", "impossibility witness under rotating deferred acceptance",
       impossibility_witness_case},
  };
  return kCases;
}

}  // namespace

bool ReproResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReproCheck& c) { return c.passed(); });
}

const std::vector<std::string>& repro_case_ids() {
  static const std::vector<std::string> kIds = [] {
    std::vector<std::string> ids;
    for (const CaseDef& c : cases()) ids.emplace_back(c.id);
    return ids;
  }();
  return kIds;
}

ReproResult run_repro_case(const std::string& id, RunOptions opts) {
  for (const CaseDef& c : cases()) {
    if (id != c.id) continue;
    ReproResult result{c.id, c.title, {}};
    Recorder recorder(result, opts);
    c.run(recorder);
    return result;
  }
  throw InputError("unknown repro case \"" + id + "\"");
}

Json repro_json(const ReproResult& r) {
  Json checks = Json::array();
  for (const ReproCheck& c : r.checks) {
    checks.push_back({{"claim", c.claim},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"passed", c.passed()}});
  }
  return {{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

}  // namespace lexchoice::cli
