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

#include "lexchoice/cli/fixtures.h"

#include <string>
#include <vector>

namespace lexchoice::cli {
namespace {

Universe chars_universe(const std::string& chars) {
  std::vector<std::string> labels;
  for (char c : chars) labels.emplace_back(1, c);
  return Universe(std::move(labels));
}

ChoiceSet top(const PriorityOrdering& o, ChoiceSet s, int k) {
  return responsive_choose(o, {s, k});
}

}  // namespace

PriorityOrdering ordering(const Universe& u, const std::string& chars) {
  std::vector<Alternative> order;
  for (char c : chars) order.push_back(u.index_of(std::string(1, c)));
  return PriorityOrdering(std::move(order));
}

ChoiceSet set(const Universe& u, const std::string& chars) {
  ChoiceSet s;
  for (char c : chars) s = s.with(u.index_of(std::string(1, c)));
  return s;
}

ChoiceTable cwarp_two_cycle() {
  const Universe u = chars_universe("abcde");
  const PriorityOrdering with_d = ordering(u, "abcde");
  const PriorityOrdering without_d = ordering(u, "acbde");
  const Alternative d = u.index_of("d");
  return ChoiceTable::Tabulate(u, [&](const Problem& p) {
    return top(p.set.contains(d) ? with_d : without_d, p.set, p.capacity);
  });
}

ChoiceTable necessity_capacity_filling() {
  const Universe u = chars_universe("abc");
  const PriorityOrdering o = ordering(u, "abc");
  const Alternative a = u.index_of("a");
  return ChoiceTable::Tabulate(u, [&](const Problem& p) {
    return p.set.contains(a) ? ChoiceSet::Of(a) : top(o, p.set, p.capacity);
  });
}

ChoiceTable necessity_monotonicity() {
  const Universe u = chars_universe("abcd");
  const PriorityOrdering first = ordering(u, "abcd");
  const PriorityOrdering rest = ordering(u, "bcda");
  return ChoiceTable::Tabulate(u, [&](const Problem& p) {
    return top(p.capacity == 1 ? first : rest, p.set, p.capacity);
  });
}

ChoiceTable necessity_cwarp() {
  const Universe u = chars_universe("abcd");
  const PriorityOrdering with_a = ordering(u, "abcd");
  const PriorityOrdering without_a = ordering(u, "abdc");
  const Alternative a = u.index_of("a");
  return ChoiceTable::Tabulate(u, [&](const Problem& p) {
    return top(p.set.contains(a) ? with_a : without_a, p.set, p.capacity);
  });
}

ChoiceTable independence_capacity_filling() {
  const Universe u = chars_universe("abc");
  const PriorityOrdering o = ordering(u, "abc");
  return ChoiceTable::Tabulate(u, [&](const Problem& p) { return top(o, p.set, 1); });
}

ChoiceTable independence_gross_substitutes() {
  const Universe u = chars_universe("abc");
  const PriorityOrdering o = ordering(u, "abc");
  const PriorityOrdering o2 = ordering(u, "bac");
  const Alternative c = u.index_of("c");
  return ChoiceTable::Tabulate(u, [&](const Problem& p) {
    if (p.capacity == 1 && p.set.contains(c)) return top(o, p.set, 1);
    return top(o2, p.set, p.capacity);
  });
}

ChoiceTable independence_monotonicity() {
  const Universe u = chars_universe("abc");
  const PriorityOrdering o = ordering(u, "abc");
  const ChoiceSet all = u.all();
  return ChoiceTable::Tabulate(u, [&](const Problem& p) {
    if (p.capacity == 1) return top(o, p.set, 1);
    if (p.capacity == 2 && p.set == all) return set(u, "bc");
    return p.set;
  });
}

BostonFixture walk_open_fixture() {
  const Universe u = chars_universe("abcde");
  return {u, ordering(u, "abcde"), ordering(u, "ebdca")};
}

BostonFixture open_walk_fixture() {
  const Universe u = chars_universe("abcde");
  return {u, ordering(u, "ebdca"), ordering(u, "abcde")};
}

BostonFixture compromise_fixture() {
  const Universe u = chars_universe("abcdxy");
  return {u, ordering(u, "abcdxy"), ordering(u, "bcyxda")};
}

ChoiceStructure walk_open_structure() {
  const BostonFixture f = walk_open_fixture();
  return ChoiceStructure::Uniform(f.universe, ObjectSpace({"x"}),
                                  build_walk_open(f.walk, f.open, f.universe.size()));
}

AllocationProblem walk_open_problem(const ChoiceStructure& cs, const std::string& unwilling,
                                     Capacity qx) {
  const int m = cs.object_count();
  const Object x = cs.objects().index_of("x");
  AllocationProblem p;
  for (Alternative i = 0; i < cs.agent_count(); ++i) {
    p.preferences.push_back(cs.agents().label(i) == unwilling
                                ? PreferenceRelation::Completed(m, {})
                                : PreferenceRelation::Completed(m, {x}));
  }
  p.capacities.assign(static_cast<std::size_t>(m), 0);
  p.capacities[x] = qx;
  return p;
}

ChoiceStructure rotating_structure(int objects) {
  const BostonFixture f = walk_open_fixture();
  std::vector<std::string> names;
  const std::string base = "xyzuvw";
  for (int k = 0; k < objects; ++k) names.emplace_back(1, base.at(k));
  return ChoiceStructure::Uniform(f.universe, ObjectSpace(names),
                                  rotating_profile(f.walk, f.open, f.universe.size()));
}

}  // namespace lexchoice::cli
