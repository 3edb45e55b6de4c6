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

#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "lexchoice/cli/fixtures.h"
#include "lexchoice/core.h"
#include "lexchoice/rules.h"

using namespace lexchoice;
using cli::ordering;
using cli::set;

TEST_CASE("make_universe keeps input order") {
  const Universe u = make_universe({"a", "b", "c"});
  CHECK(u.size() == 3);
  CHECK(u.label(0) == "a");
  CHECK(u.index_of("c") == 2);
  CHECK_FALSE(u.find("z").has_value());
  CHECK_THROWS_AS(u.index_of("z"), Error);
}

TEST_CASE("make_universe rejects bad label lists") {
  CHECK_THROWS_AS(make_universe({"a", "a"}), Error);
  CHECK_THROWS_AS(make_universe({}), Error);
  std::vector<std::string> seventeen;
  for (char c = 'a'; c <= 'q'; ++c) seventeen.emplace_back(1, c);
  CHECK(seventeen.size() == 17);
  CHECK_THROWS_AS(make_universe(seventeen), Error);
  seventeen.pop_back();
  CHECK(make_universe(seventeen).size() == 16);
}

TEST_CASE("enumerate_problems counts") {
  CHECK(enumerate_problems(letters(1)).size() == 1);
  CHECK(enumerate_problems(letters(3)).size() == 21);
  CHECK(enumerate_problems(letters(5)).size() == 155);
  std::size_t n1 = 0;
  for (Problem p : enumerate_problems(letters(1))) {
    CHECK(p.set == ChoiceSet::Of(0));
    CHECK(p.capacity == 1);
    ++n1;
  }
  CHECK(n1 == 1);
}

TEST_CASE("enumeration is canonical, complete and duplicate-free") {
  for (int n = 1; n <= 6; ++n) {
    const Universe u = letters(n);
    std::set<Problem> seen;
    std::size_t index = 0;
    std::optional<Problem> previous;
    for (Problem p : enumerate_problems(u)) {
      CHECK(u.in_domain(p));
      CHECK(u.problem_index(p) == index);
      if (previous) CHECK(*previous < p);
      previous = p;
      seen.insert(p);
      ++index;
    }
    CHECK(index == ((std::size_t{1} << n) - 1) * static_cast<std::size_t>(n));
    CHECK(seen.size() == index);
  }
}

TEST_CASE("ChoiceSet operations") {
  const ChoiceSet s = ChoiceSet::Of(0).with(2).with(3);
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.first() == 0);
  CHECK(s.without(0).first() == 2);
  CHECK(s.members() == std::vector<Alternative>{0, 2, 3});
  CHECK((s - ChoiceSet::Of(2)) == ChoiceSet::Of(0).with(3));
  CHECK((s & ChoiceSet::Full(3)) == ChoiceSet::Of(0).with(2));
  CHECK(ChoiceSet::Of(2).subset_of(s));
  CHECK(ChoiceSet().first() == -1);
  CHECK(ChoiceSet::FromMembers({3, 0, 2}) == s);
}

TEST_CASE("Universe formatting") {
  const Universe u = make_universe({"a", "b", "c"});
  CHECK(u.format(u.set_of({"c", "a"})) == "{a,c}");
  CHECK(u.format(Problem{u.set_of({"b"}), 2}) == "({b},2)");
  CHECK(u.format(ChoiceSet()) == "{}");
}

TEST_CASE("rejected is the set difference") {
  const Universe u = make_universe({"a", "b"});
  const ChoiceTable c = materialize(ordering(u, "ab"), u);
  CHECK(rejected(c, {set(u, "ab"), 1}) == set(u, "b"));
  CHECK(rejected(c, {set(u, "a"), 1}).empty());
}

TEST_CASE("rejected on the walk-open rule") {
  const cli::BostonFixture f = cli::walk_open_fixture();
  const ChoiceTable c = materialize(build_walk_open(f.walk, f.open, 5), f.universe);
  CHECK(rejected(c, {set(f.universe, "acde"), 2}) == set(f.universe, "cd"));
  CHECK(rejected(c, {set(f.universe, "abcd"), 2}) == set(f.universe, "cd"));
}

TEST_CASE("chosen and rejected partition S") {
  const cli::BostonFixture f = cli::walk_open_fixture();
  const ChoiceTable c = materialize(build_rotating(f.walk, f.open, 5), f.universe);
  for (Problem p : enumerate_problems(f.universe)) {
    const ChoiceSet chosen = c(p.set, p.capacity);
    const ChoiceSet r = rejected(c, p);
    CHECK((chosen & r).empty());
    CHECK((chosen | r) == p.set);
  }
}

TEST_CASE("checked lookup rejects problems outside the domain") {
  const Universe u = letters(3);
  const ChoiceTable c = materialize(PriorityOrdering::Identity(3), u);
  CHECK_THROWS_AS(c.at({ChoiceSet(), 1}), Error);
  CHECK_THROWS_AS(c.at({ChoiceSet::Of(0), 0}), Error);
  CHECK_THROWS_AS(c.at({ChoiceSet::Of(0), 4}), Error);
  CHECK_THROWS_AS(c.at({ChoiceSet::Of(5), 1}), Error);
  CHECK(c.at({ChoiceSet::Full(3), 2}) == ChoiceSet::Of(0).with(1));
}

TEST_CASE("ChoiceTable validates its entries") {
  const Universe u = letters(2);
  std::vector<ChoiceSet> ok(u.problem_count(), ChoiceSet());
  CHECK_NOTHROW(ChoiceTable(u, ok));
  std::vector<ChoiceSet> short_table(u.problem_count() - 1);
  CHECK_THROWS_AS(ChoiceTable(u, short_table), Error);
  std::vector<ChoiceSet> outside = ok;
  outside[u.problem_index({ChoiceSet::Of(0), 1})] = ChoiceSet::Of(1);
  CHECK_THROWS_AS(ChoiceTable(u, outside), Error);
  std::vector<ChoiceSet> too_many = ok;
  too_many[u.problem_index({ChoiceSet::Full(2), 1})] = ChoiceSet::Full(2);
  CHECK_THROWS_AS(ChoiceTable(u, too_many), Error);
}
