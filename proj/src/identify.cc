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

#include "lexchoice/identify.h"

#include <string>
#include <utility>
#include <vector>

#include "lexchoice/digraph.h"

namespace lexchoice {
namespace {

std::string position_step(int ordering, int position) {
  return "ordering " + std::to_string(ordering) + ", position " + std::to_string(position);
}

ExtractionFailure not_singleton(const ChoiceTable& c, int ordering, int position, Problem p,
                                ChoiceSet got) {
  return ExtractionFailure{position_step(ordering, position),
                           "expected a single new alternative from C" + c.universe().format(p) +
                               ", got " + c.universe().format(got),
                           p};
}

ExtractionFailure mismatch(const ChoiceTable& c, const Problem& p, ChoiceSet expected) {
  return ExtractionFailure{"validation",
                           "constructed rule chooses " + c.universe().format(expected) +
                               " at " + c.universe().format(p) + " but the table has " +
                               c.universe().format(c(p.set, p.capacity)),
                           p};
}

}  // namespace

std::optional<Problem> first_mismatch(const ChoiceTable& expected, const ChoiceTable& actual) {
  for (Problem p : enumerate_problems(expected.universe())) {
    if (expected(p.set, p.capacity) != actual(p.set, p.capacity)) return p;
  }
  return std::nullopt;
}

ResidualSets residual_sets(const ChoiceTable& c) {
  const int n = c.n();
  const ChoiceSet all = c.universe().all();
  ResidualSets out;
  out.sets.push_back(all);
  for (Capacity t = 1; t <= n; ++t) {
    const ChoiceSet chosen = c(all, t);
    if (chosen.size() != t) {
      throw Error("residual sets need capacity-filling: |C(A," + std::to_string(t) +
                  ")| = " + std::to_string(chosen.size()));
    }
    if (t < n) out.sets.push_back(all - chosen);
  }
  return out;
}

Extraction<PriorityProfile> extract_lex_profile(const ChoiceTable& c) {
  const int n = c.n();
  const ChoiceSet all = c.universe().all();
  std::vector<PriorityOrdering> orderings;

  // First ordering: repeatedly peel C(·,1).
  std::vector<Alternative> first;
  ChoiceSet rest = all;
  for (int j = 0; j < n; ++j) {
    const ChoiceSet top = c(rest, 1);
    if (top.size() != 1) return not_singleton(c, 1, j + 1, {rest, 1}, top);
    first.push_back(top.first());
    rest -= top;
  }
  orderings.emplace_back(first);

  // Ordering i peels at capacity i, ignoring the heads of the earlier
  // orderings, which fill its last i-1 positions in order.
  std::vector<Alternative> heads = {first.front()};
  for (int i = 2; i <= n; ++i) {
    const ChoiceSet prior = ChoiceSet::FromMembers(heads);
    std::vector<Alternative> order;
    ChoiceSet peeled = all;
    for (int j = 1; j <= n - i + 1; ++j) {
      const ChoiceSet fresh = c(peeled, i) - prior;
      if (fresh.size() != 1) return not_singleton(c, i, j, {peeled, i}, fresh);
      order.push_back(fresh.first());
      peeled -= fresh;
    }
    order.insert(order.end(), heads.begin(), heads.end());
    heads.push_back(order.front());
    orderings.emplace_back(std::move(order));
  }

  PriorityProfile profile(std::move(orderings));
  const ChoiceTable rebuilt = materialize(profile, c.universe());
  if (auto p = first_mismatch(c, rebuilt)) return mismatch(c, *p, rebuilt(p->set, p->capacity));
  return profile;
}

bool profiles_equivalent(const ChoiceTable& c, const PriorityProfile& p1,
                         const PriorityProfile& p2) {
  if (p1.size() != c.n() || p2.size() != c.n()) {
    throw Error("profiles must range over the table's universe");
  }
  if (first_mismatch(c, materialize(p1, c.universe()))) {
    throw Error("the choice table is not lexicographic for the reference profile");
  }
  if (!(p1[0] == p2[0])) return false;
  const ResidualSets residual = residual_sets(c);
  for (int t = 1; t <= c.n(); ++t) {
    if (p1[t - 1].restricted_to(residual[t]) != p2[t - 1].restricted_to(residual[t])) {
      return false;
    }
  }
  return true;
}

Extraction<PriorityOrdering> extract_responsive(const ChoiceTable& c) {
  std::vector<Alternative> order;
  ChoiceSet rest = c.universe().all();
  for (int j = 0; j < c.n(); ++j) {
    const ChoiceSet top = c(rest, 1);
    if (top.size() != 1) return not_singleton(c, 1, j + 1, {rest, 1}, top);
    order.push_back(top.first());
    rest -= top;
  }
  PriorityOrdering ordering(std::move(order));
  const ChoiceTable rebuilt = materialize(ordering, c.universe());
  if (auto p = first_mismatch(c, rebuilt)) return mismatch(c, *p, rebuilt(p->set, p->capacity));
  return ordering;
}

Extraction<std::vector<PriorityOrdering>> extract_capacity_wise_responsive(const ChoiceTable& c) {
  const int n = c.n();
  const std::size_t sets = (std::size_t{1} << n) - 1;
  std::vector<PriorityOrdering> out;
  for (Capacity q = 1; q <= n; ++q) {
    // Every chosen alternative must outrank every rejected one.
    Digraph beats(static_cast<std::size_t>(n));
    for (std::size_t i = 1; i <= sets; ++i) {
      const ChoiceSet s(static_cast<ChoiceSet::Bits>(i));
      const ChoiceSet chosen = c(s, q);
      for (Alternative a : chosen) beats[a] |= s - chosen;
    }
    auto order = linear_extension(beats);
    if (!order) {
      return ExtractionFailure{"capacity " + std::to_string(q),
                               "chosen-over-rejected relation has a cycle", std::nullopt};
    }
    PriorityOrdering ordering(std::move(*order));
    for (std::size_t i = 1; i <= sets; ++i) {
      const Problem p{ChoiceSet(static_cast<ChoiceSet::Bits>(i)), q};
      const ChoiceSet expected = responsive_choose(ordering, p);
      if (expected != c(p.set, q)) return mismatch(c, p, expected);
    }
    out.push_back(std::move(ordering));
  }
  return out;
}

}  // namespace lexchoice
