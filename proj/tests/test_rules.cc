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

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "lexchoice/axioms.h"
#include "lexchoice/cli/fixtures.h"
#include "lexchoice/rules.h"
#include "oracles.h"

using namespace lexchoice;
using cli::ordering;
using cli::set;

namespace {

using Builder = CapacityWiseLists (*)(const PriorityOrdering&, const PriorityOrdering&, int);

const std::vector<std::pair<const char*, Builder>>& builders() {
  static const std::vector<std::pair<const char*, Builder>> kBuilders = {
      {"walk_open", build_walk_open},
      {"open_walk", build_open_walk},
      {"rotating", build_rotating},
      {"compromise", build_compromise}};
  return kBuilders;
}

// 'w' or 'o' per list entry.
std::string pattern(const CapacityWiseLists& lists, Capacity q, const PriorityOrdering& w) {
  std::string out;
  for (const PriorityOrdering& o : lists.for_capacity(q)) out += o == w ? 'w' : 'o';
  return out;
}

}  // namespace

TEST_CASE("PriorityOrdering validates permutations") {
  CHECK_THROWS_AS(PriorityOrdering({0, 0, 1}), Error);
  CHECK_THROWS_AS(PriorityOrdering({0, 2}), Error);
  CHECK_THROWS_AS(PriorityOrdering({}), Error);
  const PriorityOrdering o({2, 0, 1});
  CHECK(o.best(ChoiceSet::Of(0).with(1)) == 0);
  CHECK(o.best(ChoiceSet::Full(3)) == 2);
  CHECK(o.prefers(2, 1));
  CHECK(o.restricted_to(ChoiceSet::Of(1).with(2)) == std::vector<Alternative>{2, 1});
}

TEST_CASE("PriorityProfile and lists validate lengths") {
  CHECK_THROWS_AS(PriorityProfile({PriorityOrdering::Identity(2)}), Error);
  CHECK_THROWS_AS(PriorityProfile({PriorityOrdering::Identity(2), PriorityOrdering::Identity(3)}),
                  Error);
  CHECK_THROWS_AS(CapacityWiseLists({{PriorityOrdering::Identity(2)},
                                     {PriorityOrdering::Identity(2)}}),
                  Error);
}

TEST_CASE("lex_choose examples") {
  const cli::BostonFixture f = cli::walk_open_fixture();
  const Universe& u = f.universe;
  const PriorityProfile rot = rotating_profile(f.walk, f.open, 5);
  CHECK(lex_choose(rot, {u.all(), 2}) == set(u, "ae"));
  CHECK(lex_choose(rot, {set(u, "bd"), 4}) == set(u, "bd"));
  const Universe abc = make_universe({"a", "b", "c"});
  const PriorityProfile constant = PriorityProfile::Constant(ordering(abc, "abc"));
  CHECK(lex_choose(constant, {abc.all(), 2}) == set(abc, "ab"));
}

TEST_CASE("responsive_choose examples") {
  const Universe u = make_universe({"a", "b", "c"});
  const PriorityOrdering o = ordering(u, "abc");
  CHECK(responsive_choose(o, {u.all(), 2}) == set(u, "ab"));
  CHECK(responsive_choose(o, {set(u, "bc"), 5}) == set(u, "bc"));
  const cli::BostonFixture f = cli::walk_open_fixture();
  CHECK(responsive_choose(f.walk, {set(f.universe, "acde"), 1}) == set(f.universe, "a"));
}

TEST_CASE("cwlex_choose on the walk-open lists") {
  const cli::BostonFixture f = cli::walk_open_fixture();
  const Universe& u = f.universe;
  const CapacityWiseLists lists = build_walk_open(f.walk, f.open, 5);
  CHECK(cwlex_choose(lists, {set(u, "acde"), 2}) == set(u, "ae"));
  CHECK(cwlex_choose(lists, {set(u, "acde"), 3}) == set(u, "ace"));
  CHECK(cwlex_choose(lists, {set(u, "ce"), 3}) == set(u, "ce"));
}

TEST_CASE("Boston builder patterns") {
  const PriorityOrdering w = PriorityOrdering::Identity(8);
  const PriorityOrdering o({7, 6, 5, 4, 3, 2, 1, 0});
  const CapacityWiseLists wo = build_walk_open(w, o, 8);
  CHECK(pattern(wo, 1, w) == "w");
  CHECK(pattern(wo, 2, w) == "wo");
  CHECK(pattern(wo, 3, w) == "wwo");
  CHECK(pattern(wo, 6, w) == "wwwooo");
  const CapacityWiseLists ow = build_open_walk(w, o, 8);
  CHECK(pattern(ow, 1, w) == "o");
  CHECK(pattern(ow, 2, w) == "ow");
  CHECK(pattern(ow, 3, w) == "oow");
  const CapacityWiseLists rot = build_rotating(w, o, 8);
  CHECK(pattern(rot, 1, w) == "w");
  CHECK(pattern(rot, 3, w) == "wow");
  CHECK(pattern(rot, 4, w) == "wowo");
  const CapacityWiseLists comp = build_compromise(w, o, 8);
  CHECK(pattern(comp, 1, w) == "w");
  CHECK(pattern(comp, 2, w) == "wo");
  CHECK(pattern(comp, 3, w) == "wow");
  CHECK(pattern(comp, 4, w) == "woow");
  CHECK(pattern(comp, 5, w) == "wwoow");
  CHECK(pattern(comp, 6, w) == "wwooow");
  CHECK(pattern(comp, 7, w) == "wwoooww");
  CHECK(pattern(comp, 8, w) == "wwooooww");
}

TEST_CASE("materialize examples") {
  const Universe ab = make_universe({"a", "b"});
  const ChoiceTable r = materialize(ordering(ab, "ab"), ab);
  CHECK(r.size() == 6);
  CHECK(r(ab.all(), 1) == set(ab, "a"));
  const Universe a = make_universe({"a"});
  const ChoiceTable one = materialize(PriorityProfile::Constant(PriorityOrdering::Identity(1)), a);
  CHECK(one.size() == 1);
  CHECK(one(a.all(), 1) == a.all());
  const cli::BostonFixture f = cli::walk_open_fixture();
  const ChoiceTable rot = materialize(build_rotating(f.walk, f.open, 5), f.universe);
  CHECK(rot(f.universe.all(), 2) == set(f.universe, "ae"));
}

TEST_CASE("materialize is identical across worker counts") {
  std::mt19937_64 rng(11);
  const Universe u = letters(6);
  const PriorityProfile p = oracle::to_profile(oracle::random_profile(6, rng));
  CHECK(materialize(p, u, {1}) == materialize(p, u, {4}));
  CHECK(materialize(p, u, {1}) == materialize(p, u, {64}));
}

TEST_CASE("property: lex_choose matches the sequential oracle") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 6; ++n) {
    const Universe u = letters(n);
    for (int trial = 0; trial < 20; ++trial) {
      const auto raw = oracle::random_profile(n, rng);
      const ChoiceTable c = materialize(oracle::to_profile(raw), u);
      for (Problem p : enumerate_problems(u)) {
        REQUIRE(c(p.set, p.capacity).bits() == oracle::lex(raw, p.set.bits(), p.capacity));
      }
    }
  }
}

TEST_CASE("property: a constant profile is responsive") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 6; ++n) {
    const Universe u = letters(n);
    for (int trial = 0; trial < 10; ++trial) {
      const PriorityOrdering o(oracle::random_order(n, rng));
      CHECK(materialize(PriorityProfile::Constant(o), u) == materialize(o, u));
    }
  }
}

TEST_CASE("property: every builder fills capacity") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 6; ++n) {
    const Universe u = letters(n);
    const PriorityOrdering w(oracle::random_order(n, rng));
    const PriorityOrdering o(oracle::random_order(n, rng));
    for (const auto& [name, build] : builders()) {
      CAPTURE(name);
      const ChoiceTable c = materialize(build(w, o, n), u);
      CHECK(oracle::capacity_filling(c));
    }
    CHECK(oracle::capacity_filling(materialize(oracle::to_profile(oracle::random_profile(n, rng)), u)));
  }
}

TEST_CASE("property: rotating lists are prefixes of the rotating profile") {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 8; ++n) {
    const PriorityOrdering w(oracle::random_order(n, rng));
    const PriorityOrdering o(oracle::random_order(n, rng));
    const CapacityWiseLists lists = build_rotating(w, o, n);
    const PriorityProfile profile = rotating_profile(w, o, n);
    for (Capacity q = 1; q <= n; ++q) {
      for (int t = 0; t < q; ++t) {
        CHECK(lists.for_capacity(q)[static_cast<std::size_t>(t)] ==
              profile[static_cast<std::size_t>(t)]);
      }
    }
    const Universe u = letters(n);
    CHECK(materialize(lists, u) == materialize(profile, u));
  }
}

TEST_CASE("property: builders meet the Boston requirement and insertion") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 12; ++n) {
    const PriorityOrdering w(oracle::random_order(n, rng));
    PriorityOrdering o(oracle::random_order(n, rng));
    if (n > 1 && o == w) o = PriorityOrdering(std::vector<Alternative>(w.order().rbegin(), w.order().rend()));
    for (const auto& [name, build] : builders()) {
      CAPTURE(name);
      CAPTURE(n);
      const CapacityWiseLists lists = build(w, o, n);
      CHECK(satisfies_boston_requirement(lists, w, o));
      CHECK(check_insertion(lists).passed);
      for (Capacity q = 1; q <= n; ++q) CHECK(lists.for_capacity(q).size() == static_cast<std::size_t>(q));
    }
  }
}

TEST_CASE("Boston requirement detects unbalanced lists") {
  const PriorityOrdering w = PriorityOrdering::Identity(3);
  const PriorityOrdering o({2, 1, 0});
  const CapacityWiseLists bad({{w}, {w, w}, {w, o, w}});
  CHECK_FALSE(satisfies_boston_requirement(bad, w, o));
  const PriorityOrdering other({1, 0, 2});
  const CapacityWiseLists foreign({{w}, {w, other}, {w, o, w}});
  CHECK_FALSE(satisfies_boston_requirement(foreign, w, o));
  CHECK(alternates_in_pairs(build_rotating(w, o, 3).for_capacity(3), w, o));
  CHECK_FALSE(alternates_in_pairs(build_walk_open(w, o, 3).for_capacity(3), w, o));
}

TEST_CASE("choose dispatches every rule kind") {
  const Universe u = letters(4);
  const PriorityOrdering o({3, 1, 0, 2});
  const Problem p{u.all(), 2};
  CHECK(choose(ChoiceRule(o), p) == responsive_choose(o, p));
  CHECK(choose(ChoiceRule(PriorityProfile::Constant(o)), p) == responsive_choose(o, p));
  const ChoiceTable t = materialize(o, u);
  CHECK(choose(ChoiceRule(t), p) == t(p.set, p.capacity));
  const CapacityWiseLists lists = build_rotating(o, PriorityOrdering::Identity(4), 4);
  CHECK(choose(ChoiceRule(lists), p) == cwlex_choose(lists, p));
}
